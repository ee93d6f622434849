//! Jacobi-Perron expansion of the contracting eigendirection of a tight
//! matrix and the stationary incidence matrix it produces.
//!
//! The pipeline is [`pf_data`] (exact eigenvector in `Q(c)`, made positive
//! by a unimodular change of basis), then [`jpa_expand`] on the projective
//! coordinates of that vector, then [`fundamental_af`], which multiplies the
//! digit matrices over one detected period.

mod bratteli;
mod eigen;
mod expansion;

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{IntPolynomial, NumberFieldElement, RealAlgebraicNumber};
use crate::matrixcore::IntMatrix;
use crate::serde_util;

pub use bratteli::{export_bratteli, BratteliDiagram, BratteliEdge};
pub use eigen::{pf_data, positivize, PFData};
pub use expansion::{digit_matrix, jpa_expand, jpa_step, ConvergenceProfile, JPAExpansion, JPAState};

/// Default step budget for expansions.
pub const DEFAULT_MAX_STEPS: usize = 256;

/// Stationary data read off a periodic expansion.
///
/// `incidence` is the product of the digit matrices over one period and
/// `pf_multiplier` is the product of the last state coordinates over the
/// same steps, so that `incidence * (1, theta) = pf_multiplier * (1, theta)`
/// at the state where the period starts.
#[derive(Clone, Debug)]
pub struct FundamentalAFAlgebra {
    pub source: IntMatrix,
    pub pf: PFData,
    pub expansion: JPAExpansion,
    pub incidence: IntMatrix,
    pub period_digits: Vec<Vec<BigInt>>,
    pub preperiod: usize,
    pub period: usize,
    pub pf_multiplier: NumberFieldElement,
    pub pf_eigenvalue: RealAlgebraicNumber,
}

/// Builds the expansion of the positive contracting eigenvector of `m` and
/// the incidence matrix over its first detected period. A missing period
/// within `max_steps` is reported as [`Error::NoPeriod`].
pub fn fundamental_af(m: &IntMatrix, max_steps: usize) -> Result<FundamentalAFAlgebra> {
    let pf = pf_data(m)?;
    let s0 = JPAState::from_vector(&pf.eigenvector)?;
    let expansion = jpa_expand(&s0, max_steps)?;
    FundamentalAFAlgebra::from_expansion(pf, expansion, max_steps)
}

impl FundamentalAFAlgebra {
    /// Reads the stationary data off an expansion of `pf`'s eigenvector.
    /// `max_steps` only labels the error when no period was found.
    pub fn from_expansion(pf: PFData, expansion: JPAExpansion, max_steps: usize) -> Result<Self> {
        let period = expansion.period.ok_or(Error::NoPeriod(max_steps))?;
        let pre = expansion.preperiod;
        let mats = expansion.digit_matrices();
        let incidence = mats[pre..pre + period].iter().fold(IntMatrix::identity(pf.dim()), |acc, b| &acc * b);
        let field = pf.field.clone();
        let pf_multiplier = expansion.states[pre + 1..=pre + period]
            .iter()
            .fold(NumberFieldElement::one(&field), |acc, s| &acc * s.theta.last().unwrap());
        let pf_eigenvalue = pf_multiplier.to_real_algebraic();
        Ok(FundamentalAFAlgebra {
            source: pf.source.clone(),
            period_digits: expansion.period_digits(),
            preperiod: pre,
            period,
            incidence,
            pf_multiplier,
            pf_eigenvalue,
            expansion,
            pf,
        })
    }
}

/// Smallest `b >= 1` with `base^b = target` exactly, for real `base > 1`.
fn exact_log(base: &NumberFieldElement, target: &NumberFieldElement) -> Option<u32> {
    let mut power = base.clone();
    let mut b = 1;
    loop {
        match power.cmp_real(target) {
            Ordering::Less => {}
            Ordering::Equal => return (power == *target).then_some(b),
            Ordering::Greater => return None,
        }
        power = &power * base;
        b += 1;
    }
}

impl FundamentalAFAlgebra {
    pub fn dim(&self) -> usize {
        self.incidence.dim()
    }

    pub fn squared(&self) -> bool {
        self.pf.squared
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod == 0
    }

    /// The state where the period starts.
    pub fn period_start(&self) -> &JPAState {
        &self.expansion.states[self.preperiod]
    }

    /// `incidence * (1, theta) = pf_multiplier * (1, theta)` exactly at the
    /// period start.
    pub fn is_eigen_collinear(&self) -> bool {
        let v = self.period_start().homogeneous();
        let field = self.pf.field.clone();
        (0..self.dim()).all(|r| {
            let lhs = (0..self.dim()).fold(NumberFieldElement::zero(&field), |acc, c| {
                let entry = NumberFieldElement::from_rational(&field, self.incidence.get(r, c).clone().into());
                &acc + &(&entry * &v[c])
            });
            lhs == &self.pf_multiplier * &v[r]
        })
    }

    /// `1/c` for the contracting eigenvalue `c`.
    pub fn expansion_factor(&self) -> NumberFieldElement {
        self.pf.contracting.inverse().expect("contracting eigenvalue is nonzero")
    }

    /// `s` with `pf_multiplier = (1/c)^s`, if there is one.
    pub fn power_of_expansion_factor(&self) -> Option<u32> {
        exact_log(&self.expansion_factor(), &self.pf_multiplier)
    }

    /// Smallest `(a, b)` with `a <= max_a` and `pf_multiplier^a = (1/c)^b`.
    pub fn multiplicative_relation(&self, max_a: u32) -> Option<(u32, u32)> {
        let base = self.expansion_factor();
        let mut target = self.pf_multiplier.clone();
        for a in 1..=max_a {
            if let Some(b) = exact_log(&base, &target) {
                return Some((a, b));
            }
            target = &target * &self.pf_multiplier;
        }
        None
    }

    /// Whether the PF eigenvalue generates the whole field `Q(c)`.
    pub fn multiplier_generates_field(&self) -> bool {
        self.pf_multiplier.minimal_polynomial().degree() == Some(self.pf.field.degree())
    }

    /// Summary in the documented JSON shape.
    pub fn summary(&self) -> AlgebraSummary {
        AlgebraSummary {
            incidence: self.incidence.clone(),
            period_digits: self.period_digits.clone(),
            preperiod: self.preperiod,
            period: self.period,
            squared: self.pf.squared,
            inverted: self.pf.inverted,
            pf_eigenvalue: self.pf_eigenvalue.to_f64(),
            pf_eigenvalue_minpoly: self.pf_eigenvalue.minimal_polynomial().clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub incidence: IntMatrix,
    #[serde(with = "serde_util::bigint_rows")]
    pub period_digits: Vec<Vec<BigInt>>,
    pub preperiod: usize,
    pub period: usize,
    pub squared: bool,
    pub inverted: bool,
    pub pf_eigenvalue: f64,
    pub pf_eigenvalue_minpoly: IntPolynomial,
}

/// How the characteristic polynomial of the incidence matrix relates to the
/// source matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "s", rename_all = "snake_case")]
pub enum SimilarityRelation {
    /// Same characteristic polynomial as the source; for an irreducible
    /// polynomial this means similar over Q.
    SameCharPoly,
    PowerOfSource(u32),
    PowerOfInverse(u32),
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimilarityReport {
    pub source_char: IntPolynomial,
    pub incidence_char: IntPolynomial,
    pub relation: SimilarityRelation,
    pub squared: bool,
    pub inverted: bool,
}

/// Largest exponent tried by [`incidence_similarity`].
pub const MAX_POWER_CHECK: u32 = 8;

/// Compares `char(incidence)` with `char(M^s)` and `char(M^-s)` for
/// `1 <= s <= MAX_POWER_CHECK`, reporting only what was computed.
pub fn incidence_similarity(m: &IntMatrix, a: &FundamentalAFAlgebra) -> SimilarityReport {
    let source_char = m.char_poly();
    let incidence_char = a.incidence.char_poly();
    let inverse = m.inverse().ok();
    let mut relation = SimilarityRelation::Neither;
    if incidence_char == source_char {
        relation = SimilarityRelation::SameCharPoly;
    } else {
        for s in 1..=MAX_POWER_CHECK {
            if m.pow(s).char_poly() == incidence_char {
                relation = SimilarityRelation::PowerOfSource(s);
                break;
            }
            if inverse.as_ref().is_some_and(|inv| inv.pow(s).char_poly() == incidence_char) {
                relation = SimilarityRelation::PowerOfInverse(s);
                break;
            }
        }
    }
    SimilarityReport { source_char, incidence_char, relation, squared: a.pf.squared, inverted: a.pf.inverted }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn robust_cubics() -> Vec<IntMatrix> {
        [(0, -3), (-1, -2), (-2, -1), (-3, 0)]
            .iter()
            .map(|&(b, c)| IntMatrix::from_i64(&[&[-b, 1, 0], &[-c, 0, 1], &[-1, 0, 0]]))
            .collect()
    }

    #[test]
    fn golden_algebra() {
        let m = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        let a = fundamental_af(&m, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(a.period, 1);
        assert_eq!(a.period_digits, vec![vec![BigInt::from(1)]]);
        assert_eq!(a.incidence, IntMatrix::from_i64(&[&[0, 1], &[1, 1]]));
        assert!(a.is_eigen_collinear());
        assert!(a.squared());
        // the multiplier is phi while 1/c = phi^2
        assert_eq!(a.power_of_expansion_factor(), None);
        assert_eq!(a.multiplicative_relation(4), Some((2, 1)));
        let r = incidence_similarity(&m, &a);
        assert_eq!(r.relation, SimilarityRelation::SameCharPoly);
        assert_eq!(r.incidence_char.to_string(), "x^2 - x - 1");
    }

    #[test]
    fn robust_cubic_algebras_are_stationary() {
        for m in robust_cubics() {
            let a = fundamental_af(&m, DEFAULT_MAX_STEPS).unwrap();
            assert!(a.is_eigen_collinear(), "{m}");
            assert!(a.incidence.is_nonnegative());
            assert!(a.expansion.all_steps_consistent());
            assert!(a.expansion.digits_nonnegative());
            assert!(a.multiplier_generates_field());
            assert!(a.pf_multiplier.cmp_real(&NumberFieldElement::one(&a.pf.field)).is_gt());
        }
    }

    #[test]
    fn summary_json_shape() {
        let a = fundamental_af(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]]), 16).unwrap();
        let v = serde_json::to_value(a.summary()).unwrap();
        assert_eq!(v["incidence"], serde_json::json!([[0, 1], [1, 1]]));
        assert_eq!(v["period_digits"], serde_json::json!([[1]]));
        assert_eq!(v["period"], 1);
        assert_eq!(v["squared"], true);
    }

    #[test]
    fn non_tight_rejected() {
        let q = IntMatrix::companion(&IntPolynomial::from_i64s(&[1, 4, 5, 2, 1])).unwrap();
        assert!(matches!(fundamental_af(&q, 16), Err(Error::NotTight(..))));
    }
}
