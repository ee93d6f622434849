//! The cubic and quartic matrix families and their scanners.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactmath::{is_perfect_square, IntPolynomial};
use crate::galois::{auxiliary_quadratics, resolvent_cubic};
use crate::matrixcore::IntMatrix;

use super::analysis::{analyze, BundleAnalysis};

/// `[[-b, 1, 0], [-c, 0, 1], [-1, 0, 0]]`, with characteristic polynomial
/// `x^3 + b x^2 + c x + 1`.
pub fn cubic_family_matrix(b: i64, c: i64) -> IntMatrix {
    IntMatrix::from_i64(&[&[-b, 1, 0], &[-c, 0, 1], &[-1, 0, 0]])
}

/// `[[-2a, 1, 0, 0], [-a^2-c^2, 0, 1, 0], [-2c, 0, 0, 1], [-1, 0, 0, 0]]`.
pub fn quartic_family_matrix(a: i64, c: i64) -> IntMatrix {
    IntMatrix::from_i64(&[&[-2 * a, 1, 0, 0], &[-(a * a + c * c), 0, 1, 0], &[-2 * c, 0, 0, 1], &[-1, 0, 0, 0]])
}

fn cubic_hit(b: i64, c: i64) -> Result<Option<BundleAnalysis>> {
    let a = analyze(&cubic_family_matrix(b, c))?;
    Ok((a.is_irreducible() && is_perfect_square(&a.discriminant)).then_some(a))
}

fn sort_by_matrix(mut v: Vec<BundleAnalysis>) -> Vec<BundleAnalysis> {
    v.sort_by(|x, y| x.matrix.cmp(&y.matrix));
    v
}

/// Members of the cubic family with irreducible characteristic polynomial
/// and square discriminant, sorted by matrix entries. Runs on the current
/// rayon pool.
pub fn scan_cubic_family(b: RangeInclusive<i64>, c: RangeInclusive<i64>) -> Result<Vec<BundleAnalysis>> {
    let grid: Vec<(i64, i64)> = b.flat_map(|x| c.clone().map(move |y| (x, y))).collect();
    let hits = grid.into_par_iter().map(|(x, y)| cubic_hit(x, y)).collect::<Result<Vec<_>>>()?;
    Ok(sort_by_matrix(hits.into_iter().flatten().collect()))
}

/// Single-threaded [`scan_cubic_family`].
pub fn scan_cubic_family_sequential(b: RangeInclusive<i64>, c: RangeInclusive<i64>) -> Result<Vec<BundleAnalysis>> {
    let mut hits = Vec::new();
    for x in b {
        for y in c.clone() {
            hits.extend(cubic_hit(x, y)?);
        }
    }
    Ok(sort_by_matrix(hits))
}

/// One member of the quartic family with the symbolic identities checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticFamilyMember {
    pub a: i64,
    pub c: i64,
    pub analysis: BundleAnalysis,
    pub resolvent: IntPolynomial,
    pub expected_resolvent: IntPolynomial,
    pub resolvent_matches: bool,
    pub h: IntPolynomial,
    pub expected_h: IntPolynomial,
    pub h_matches: bool,
    /// `char = (x^2 + a x)^2 + (c x + 1)^2`.
    pub sum_of_squares: bool,
    /// Reducible characteristic polynomial.
    pub non_generic: bool,
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

pub fn quartic_family(a: i64, c: i64) -> Result<QuarticFamilyMember> {
    let analysis = analyze(&quartic_family_matrix(a, c))?;
    let p = &analysis.char_poly;
    let s = a * a + c * c;
    let resolvent = resolvent_cubic(p)?;
    let expected_resolvent = &poly(&[0, 1]) * &poly(&[4 * (a * c - 1), -s, 1]);
    // the resolvent always vanishes at 0, which gives t = 0
    let (h1, h2) = auxiliary_quadratics(p, &BigInt::from(0));
    let h = &h1 * &h2;
    let expected_h = &poly(&[1, 0, 1]) * &poly(&[s, 2 * a, 1]);
    let squares = &poly(&[0, a, 1]).pow(2) + &poly(&[1, c]).pow(2);
    Ok(QuarticFamilyMember {
        a,
        c,
        resolvent_matches: resolvent == expected_resolvent,
        h_matches: h == expected_h,
        sum_of_squares: &squares == p,
        non_generic: !analysis.is_irreducible(),
        analysis,
        resolvent,
        expected_resolvent,
        h,
        expected_h,
    })
}

/// [`quartic_family`] over a grid, sorted by matrix entries.
pub fn scan_quartic_family(a: RangeInclusive<i64>, c: RangeInclusive<i64>) -> Result<Vec<QuarticFamilyMember>> {
    let grid: Vec<(i64, i64)> = a.flat_map(|x| c.clone().map(move |y| (x, y))).collect();
    let mut out = grid.into_par_iter().map(|(x, y)| quartic_family(x, y)).collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| x.analysis.matrix.cmp(&y.analysis.matrix));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_scan_contains_robust_cubics() {
        let hits = scan_cubic_family(-3..=3, -3..=3).unwrap();
        for (b, c, d) in [(0, -3, 81), (-1, -2, 49), (-2, -1, 49), (-3, 0, 81)] {
            let h = hits.iter().find(|h| h.matrix == cubic_family_matrix(b, c)).expect("hit");
            assert_eq!(h.discriminant, BigInt::from(d));
        }
        #[allow(clippy::reversed_empty_ranges)]
        let empty = scan_cubic_family(1..=0, -3..=3).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(scan_cubic_family(-6..=6, -6..=6).unwrap(), scan_cubic_family_sequential(-6..=6, -6..=6).unwrap());
    }

    #[test]
    fn quartic_examples() {
        let m = quartic_family(1, 2).unwrap();
        assert_eq!(m.analysis.char_poly, poly(&[1, 4, 5, 2, 1]));
        assert!(m.analysis.is_irreducible());
        assert_eq!(m.resolvent, &(&poly(&[0, 1]) * &poly(&[-1, 1])) * &poly(&[-4, 1]));
        assert!(m.resolvent_matches && m.h_matches && m.sum_of_squares);
        assert!(!m.analysis.flags.tight);
        let r = quartic_family(1, 1).unwrap();
        assert!(r.non_generic);
        assert!(r.analysis.char_poly.sign_at(&(-num_rational::BigRational::from(BigInt::from(1)))).is_eq());
    }
}
