//! Irreducibility and Galois groups of monic integer polynomials of degree
//! 2 to 4, with subgroup-order tables for the divisibility obstruction.

mod automorphisms;
mod tables;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{
    discriminant, factor, is_perfect_square, rational_roots, squarefree_kernel, IntPolynomial, Rational,
};

pub use automorphisms::{aut_order_of_pf_field, complex_roots, field_automorphisms};
pub use tables::{group_table, GaloisGroupTag, GroupOrderTable};

/// How the resolvent cubic of a quartic factors over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolventCase {
    SplitsOverQ,
    UniqueRationalRoot,
    Irreducible,
}

/// Resolvent cubic of a monic quartic together with its rational roots and,
/// when it has exactly one, the square-free `D` with splitting field
/// `Q(sqrt D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticResolventAnalysis {
    pub resolvent: IntPolynomial,
    pub rational_roots: Vec<Rational>,
    pub case: ResolventCase,
    pub splitting_field_disc: Option<BigInt>,
}

fn check_monic(p: &IntPolynomial) -> Result<usize> {
    if !p.is_monic() {
        return Err(Error::InvalidPolynomial(format!("{p} is not monic")));
    }
    Ok(p.degree().unwrap())
}

/// Irreducibility over Q of a monic polynomial of degree 1 to 4.
pub fn is_irreducible(p: &IntPolynomial) -> Result<bool> {
    match check_monic(p)? {
        0 => Err(Error::InvalidPolynomial(format!("{p} is constant"))),
        1 => Ok(true),
        2..=4 => {
            let f = factor(p);
            Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
        }
        n => Err(Error::DegreeOutOfScope(n, "1 to 4")),
    }
}

/// `x^3 - b x^2 + (ac - 4d) x + (4bd - a^2 d - c^2)` for
/// `p = x^4 + a x^3 + b x^2 + c x + d`.
pub fn resolvent_cubic(p: &IntPolynomial) -> Result<IntPolynomial> {
    if check_monic(p)? != 4 {
        return Err(Error::InvalidPolynomial(format!("{p} is not a quartic")));
    }
    let (a, b, c, d) = (p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    let four = BigInt::from(4);
    Ok(IntPolynomial::new(vec![&four * &b * &d - &a * &a * &d - &c * &c, &a * &c - &four * &d, -b, BigInt::one()]))
}

/// Resolvent cubic and its factorization pattern for a monic quartic with
/// nonzero discriminant.
pub fn analyze_resolvent(p: &IntPolynomial) -> Result<QuarticResolventAnalysis> {
    let resolvent = resolvent_cubic(p)?;
    let roots = rational_roots(&resolvent);
    let (case, splitting_field_disc) = match roots.len() {
        0 => (ResolventCase::Irreducible, None),
        1 => {
            let lin = IntPolynomial::linear_with_root(&roots[0]);
            let cofactor = resolvent.div_exact(&lin).expect("rational root divides");
            let disc = discriminant(&cofactor);
            if disc.is_zero() {
                return Err(Error::InvalidPolynomial(format!("{p} has a repeated root")));
            }
            (ResolventCase::UniqueRationalRoot, Some(squarefree_kernel(&disc)))
        }
        3 => (ResolventCase::SplitsOverQ, None),
        _ => return Err(Error::InvalidPolynomial(format!("{p} has a repeated root"))),
    };
    Ok(QuarticResolventAnalysis { resolvent, rational_roots: roots, case, splitting_field_disc })
}

/// True iff the monic quadratic `q` splits over `Q(sqrt D)`, where `None`
/// stands for Q itself.
pub fn splits_over_quadratic(q: &IntPolynomial, d: Option<&BigInt>) -> bool {
    assert_eq!(q.degree(), Some(2), "quadratic expected");
    let disc = discriminant(q);
    if is_perfect_square(&disc) {
        return true;
    }
    match d {
        // disc = D u^2 with u rational iff disc * D is an integer square
        Some(d) => is_perfect_square(&(&disc * d)),
        None => false,
    }
}

/// The two quadratic factors `x^2 - t x + d` and `x^2 + a x + (b - t)` of the
/// auxiliary polynomial attached to a rational resolvent root `t`.
pub fn auxiliary_quadratics(p: &IntPolynomial, t: &BigInt) -> (IntPolynomial, IntPolynomial) {
    let (a, b, d) = (p.coeff(3), p.coeff(2), p.coeff(0));
    (IntPolynomial::new(vec![d, -t.clone(), BigInt::one()]), IntPolynomial::new(vec![b - t, a, BigInt::one()]))
}

/// Galois group of a monic irreducible polynomial of degree 2 to 4.
pub fn galois_group(p: &IntPolynomial) -> Result<GaloisGroupTag> {
    let n = check_monic(p)?;
    if !(2..=4).contains(&n) {
        return Err(Error::DegreeOutOfScope(n, "2 to 4"));
    }
    if !is_irreducible(p)? {
        return Err(Error::Reducible(p.to_string()));
    }
    let disc = discriminant(p);
    Ok(match n {
        2 => GaloisGroupTag::C2,
        3 if is_perfect_square(&disc) => GaloisGroupTag::C3,
        3 => GaloisGroupTag::S3,
        _ => {
            let res = analyze_resolvent(p)?;
            match res.case {
                ResolventCase::SplitsOverQ => GaloisGroupTag::V4,
                ResolventCase::Irreducible if is_perfect_square(&disc) => GaloisGroupTag::A4,
                ResolventCase::Irreducible => GaloisGroupTag::S4,
                ResolventCase::UniqueRationalRoot => {
                    // monic integer cubic, so the rational root is an integer
                    let t = res.rational_roots[0].to_integer();
                    let (h1, h2) = auxiliary_quadratics(p, &t);
                    let d = res.splitting_field_disc.as_ref();
                    if splits_over_quadratic(&h1, d) && splits_over_quadratic(&h2, d) {
                        GaloisGroupTag::C4
                    } else {
                        GaloisGroupTag::D4
                    }
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p(&[1, -3, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[1, 2, 2, 2, 1])).unwrap());
        assert!(is_irreducible(&p(&[-1, -1, 1])).unwrap());
        // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
        assert!(!is_irreducible(&p(&[4, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[1, -2, 1])).unwrap());
        assert!(matches!(is_irreducible(&p(&[1, 0, 0, 0, 0, 1])), Err(Error::DegreeOutOfScope(5, _))));
    }

    #[test]
    fn resolvent_examples() {
        assert_eq!(resolvent_cubic(&p(&[1, -1, -1, -1, 1])).unwrap(), p(&[-6, -3, 1, 1]));
        assert_eq!(resolvent_cubic(&p(&[1, 0, 0, 0, 1])).unwrap(), p(&[0, -4, 0, 1]));
        assert!(resolvent_cubic(&p(&[1, -3, 0, 1])).is_err());
    }

    #[test]
    fn resolvent_of_bundle_family() {
        // x^4 + 2a x^3 + (a^2+c^2) x^2 + 2c x + 1 -> x (x^2 - (a^2+c^2) x + 4(ac-1))
        for (a, c) in [(1i64, 2i64), (2, 3), (-1, 4), (3, -2)] {
            let q = p(&[1, 2 * c, a * a + c * c, 2 * a, 1]);
            let want = p(&[0, 4 * (a * c - 1), -(a * a + c * c), 1]);
            assert_eq!(resolvent_cubic(&q).unwrap(), want);
        }
    }

    #[test]
    fn galois_examples() {
        use GaloisGroupTag::*;
        assert_eq!(galois_group(&p(&[-1, -1, 1])).unwrap(), C2);
        assert_eq!(galois_group(&p(&[1, -3, 0, 1])).unwrap(), C3);
        assert_eq!(galois_group(&p(&[-1, -1, 0, 1])).unwrap(), S3);
        assert_eq!(galois_group(&p(&[1, -1, -1, -1, 1])).unwrap(), D4);
        // cyclotomic x^4 + x^3 + x^2 + x + 1
        assert_eq!(galois_group(&p(&[1, 1, 1, 1, 1])).unwrap(), C4);
        // x^4 + 1 and x^4 - 10x^2 + 1 (sqrt2 + sqrt3)
        assert_eq!(galois_group(&p(&[1, 0, 0, 0, 1])).unwrap(), V4);
        assert_eq!(galois_group(&p(&[1, 0, -10, 0, 1])).unwrap(), V4);
        assert_eq!(galois_group(&p(&[-2, 0, 0, 0, 1])).unwrap(), D4);
        assert_eq!(galois_group(&p(&[-1, -1, 0, 0, 1])).unwrap(), S4);
        // x^4 + 8x + 12 has square discriminant 2^12 3^4
        assert_eq!(galois_group(&p(&[12, 8, 0, 0, 1])).unwrap(), A4);
    }

    #[test]
    fn galois_rejects() {
        assert!(matches!(galois_group(&p(&[1, 2, 2, 2, 1])), Err(Error::Reducible(_))));
        assert!(matches!(galois_group(&p(&[1, 1])), Err(Error::DegreeOutOfScope(1, _))));
        assert!(galois_group(&IntPolynomial::new(vec![1.into(), 0.into(), 2.into()])).is_err());
    }

    #[test]
    fn unique_root_resolvent_data() {
        let r = analyze_resolvent(&p(&[1, -1, -1, -1, 1])).unwrap();
        assert_eq!(r.case, ResolventCase::UniqueRationalRoot);
        assert_eq!(r.rational_roots, vec![Rational::from(BigInt::from(2))]);
        assert_eq!(r.splitting_field_disc, Some(BigInt::from(-3)));
        let (h1, h2) = auxiliary_quadratics(&p(&[1, -1, -1, -1, 1]), &BigInt::from(2));
        assert_eq!(&h1 * &h2, &p(&[-1, 1]).pow(2) * &p(&[-3, -1, 1]));
    }

    #[test]
    fn quadratic_split_test() {
        let d = BigInt::from(-3);
        assert!(splits_over_quadratic(&p(&[1, -2, 1]), Some(&d)));
        assert!(!splits_over_quadratic(&p(&[-3, -1, 1]), Some(&d)));
        // x^2 + x + 1 has disc -3
        assert!(splits_over_quadratic(&p(&[1, 1, 1]), Some(&d)));
        assert!(!splits_over_quadratic(&p(&[1, 1, 1]), None));
        // disc 12 = 3 * 2^2 over Q(sqrt 3)
        assert!(splits_over_quadratic(&p(&[-3, 0, 1]), Some(&BigInt::from(3))));
    }
}
