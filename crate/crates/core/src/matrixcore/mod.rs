//! Integer-matrix analysis: characteristic polynomials, eigenvalue location
//! relative to the unit circle, hyperbolicity, tightness and similarity over
//! the rationals.

mod circle;
mod frobenius;
mod matrix;

pub use circle::{unit_circle_partition, CirclePartition};
pub use frobenius::{similar_over_rationals, FrobeniusForm};
pub use matrix::IntMatrix;

use crate::error::{Error, Result};
use crate::exactmath::IntPolynomial;

pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    m.char_poly()
}

/// Partition of the eigenvalues of a unimodular matrix.
pub fn eigenvalue_partition(m: &IntMatrix) -> Result<CirclePartition> {
    let det = m.determinant();
    if !m.is_unimodular() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    unit_circle_partition(&m.char_poly())
}

/// No eigenvalue on the unit circle. Non-unimodular input is an error.
pub fn is_hyperbolic(m: &IntMatrix) -> Result<bool> {
    Ok(eigenvalue_partition(m)?.on == 0)
}

/// Exactly one eigenvalue inside, or exactly one outside, the unit circle.
/// Fails on non-hyperbolic input.
pub fn is_tight(m: &IntMatrix) -> Result<bool> {
    let p = eigenvalue_partition(m)?;
    if p.on != 0 {
        return Err(Error::NotHyperbolic(p.on));
    }
    Ok(p.inside == 1 || p.outside == 1)
}

/// Smallest `s <= max_exp` with `M^s` entrywise positive.
pub fn eventually_positive_power(m: &IntMatrix, max_exp: u32) -> Option<u32> {
    let mut power = m.clone();
    for s in 1..=max_exp {
        if power.is_positive() {
            return Some(s);
        }
        power = &power * m;
    }
    None
}
