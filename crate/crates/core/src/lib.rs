//! Galois-theoretic invariants of hyperbolic torus-bundle monodromies.
//!
//! Given an integer unimodular matrix, the crate computes its characteristic
//! polynomial, eigenvalue location relative to the unit circle, tightness,
//! the Galois group of the characteristic polynomial (degrees 2 to 4), the
//! exact Jacobi-Perron expansion of its contracting eigendirection and the
//! stationary incidence matrix that expansion produces. On top of that sits
//! a divisibility test that rules out continuous maps between torus bundles
//! of different dimensions.
//!
//! All arithmetic is exact: arbitrary-precision rationals, integer
//! polynomials, and number-field elements with a fixed real embedding.

pub mod error;
pub mod exactmath;
pub mod galois;
pub mod jacobiperron;
pub mod matrixcore;
pub mod obstruction;
pub mod serde_util;

pub use error::{Error, Result};
pub use exactmath::{
    discriminant, is_perfect_square, real_roots, resultant, IntPolynomial, NumberField, NumberFieldElement,
    QPolynomial, Rational, RealAlgebraicNumber,
};
pub use galois::{GaloisGroupTag, GroupOrderTable};
pub use jacobiperron::{FundamentalAFAlgebra, JPAExpansion, JPAState, PFData};
pub use matrixcore::{CirclePartition, IntMatrix};
pub use obstruction::{BundleAnalysis, ObstructionReport, TargetProfile, Verdict};
