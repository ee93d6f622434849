//! Exact rational, polynomial and real-algebraic arithmetic.
//!
//! Everything here is immutable once built. Refinement of isolating
//! intervals produces new values.

mod algebraic;
mod factor;
mod field;
pub mod linalg;
mod poly;
mod qpoly;
mod roots;

pub use algebraic::{RationalInterval, RealAlgebraicNumber};
pub use factor::{divisors, factor, quadratic_pair, rational_roots, Factorization};
pub use field::{field_floor, NumberField, NumberFieldElement};
pub use poly::IntPolynomial;
pub use qpoly::QPolynomial;
pub use roots::{
    discriminant, is_perfect_square, real_roots, resultant, root_bound, squarefree_kernel, sylvester_matrix,
    SturmSequence,
};

/// Reduced fraction of arbitrary-precision integers with positive
/// denominator.
pub type Rational = num_rational::BigRational;
