//! Assembly of the per-matrix invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::{discriminant, factor, IntPolynomial};
use crate::galois::{aut_order_of_pf_field, galois_group, is_irreducible, GaloisGroupTag};
use crate::matrixcore::{unit_circle_partition, CirclePartition, IntMatrix};
use crate::serde_util;

/// Hypothesis checks recorded for a matrix. `irreducible` is `None` when
/// the characteristic polynomial has degree above 4 and does not visibly
/// factor, so irreducibility could not be certified either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleFlags {
    pub unimodular: bool,
    pub hyperbolic: bool,
    pub tight: bool,
    pub irreducible: Option<bool>,
}

/// Everything the obstruction test needs to know about one monodromy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleAnalysis {
    pub matrix: IntMatrix,
    #[serde(rename = "char")]
    pub char_poly: IntPolynomial,
    pub flags: BundleFlags,
    pub partition: CirclePartition,
    #[serde(with = "serde_util::bigint")]
    pub discriminant: BigInt,
    pub galois: Option<GaloisGroupTag>,
    pub k: Option<u64>,
    pub aut_order: Option<usize>,
}

impl BundleAnalysis {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_irreducible(&self) -> bool {
        self.flags.irreducible == Some(true)
    }
}

/// Partition with the roots at zero of a singular matrix counted inside.
fn partition_with_zero_roots(p: &IntPolynomial) -> Result<CirclePartition> {
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let rest = IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    let mut part = if rest.is_constant() {
        CirclePartition { inside: 0, on: 0, outside: 0 }
    } else {
        unit_circle_partition(&rest)?
    };
    part.inside += zeros;
    Ok(part)
}

fn irreducibility(p: &IntPolynomial) -> Result<Option<bool>> {
    if p.degree().unwrap() <= 4 {
        return is_irreducible(p).map(Some);
    }
    let f = factor(p);
    let single = f.factors.len() == 1 && f.factors[0].1 == 1;
    Ok(match (single, f.complete) {
        (false, _) => Some(false),
        (true, true) => Some(true),
        (true, false) => None,
    })
}

/// Computes every invariant of `m`. Failed hypotheses are recorded in the
/// flags rather than raised; only internal arithmetic errors propagate.
pub fn analyze(m: &IntMatrix) -> Result<BundleAnalysis> {
    let char_poly = m.char_poly();
    let n = m.dim();
    let unimodular = m.is_unimodular();
    let partition = partition_with_zero_roots(&char_poly)?;
    let hyperbolic = unimodular && partition.on == 0;
    let tight = hyperbolic && (partition.inside == 1 || partition.outside == 1);
    let irreducible = irreducibility(&char_poly)?;
    let (galois, aut_order) = if irreducible == Some(true) && (2..=4).contains(&n) {
        (Some(galois_group(&char_poly)?), Some(aut_order_of_pf_field(&char_poly)?))
    } else {
        (None, None)
    };
    Ok(BundleAnalysis {
        matrix: m.clone(),
        discriminant: discriminant(&char_poly),
        char_poly,
        flags: BundleFlags { unimodular, hyperbolic, tight, irreducible },
        partition,
        k: galois.map(|g| g.order()),
        galois,
        aut_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn robust_cubics_first_matrix() {
        let a = analyze(&IntMatrix::from_i64(&[&[0, 1, 0], &[3, 0, 1], &[-1, 0, 0]])).unwrap();
        assert!(a.flags.tight && a.is_irreducible());
        assert_eq!(a.discriminant, BigInt::from(81));
        assert_eq!(a.galois, Some(GaloisGroupTag::C3));
        assert_eq!(a.k, Some(3));
        assert_eq!(a.aut_order, Some(3));
    }

    #[test]
    fn robust_cubics_fourth_matrix() {
        let a = analyze(&IntMatrix::from_i64(&[&[3, 1, 0], &[0, 0, 1], &[-1, 0, 0]])).unwrap();
        assert_eq!(a.char_poly.to_string(), "x^3 - 3x^2 + 1");
        assert_eq!(a.discriminant, BigInt::from(81));
        assert_eq!(a.galois, Some(GaloisGroupTag::C3));
    }

    #[test]
    fn reducible_family_member() {
        let m = IntMatrix::from_i64(&[&[-2, 1, 0, 0], &[-2, 0, 1, 0], &[-2, 0, 0, 1], &[-1, 0, 0, 0]]);
        let a = analyze(&m).unwrap();
        assert_eq!(a.flags.irreducible, Some(false));
        assert_eq!(a.galois, None);
        assert_eq!(a.k, None);
    }

    #[test]
    fn singular_and_large_inputs() {
        let a = analyze(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]])).unwrap();
        assert!(!a.flags.unimodular && !a.flags.hyperbolic);
        assert_eq!(a.partition, CirclePartition { inside: 1, on: 0, outside: 1 });
        // 5x5 companion of the irreducible x^5 - x - 1
        let c = IntMatrix::companion(&IntPolynomial::from_i64s(&[-1, -1, 0, 0, 0, 1])).unwrap();
        let a = analyze(&c).unwrap();
        assert_eq!(a.galois, None);
        assert_eq!(a.flags.irreducible, None);
        assert!(a.flags.unimodular);
    }

    #[test]
    fn json_round_trip() {
        let a = analyze(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]])).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"char\":\"x^2 - x - 1\""));
        assert!(s.contains("\"galois\":\"C2\""));
        let back: BundleAnalysis = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
