use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;
use super::qpoly::QPolynomial;
use super::roots::{split_point, SturmSequence};
use super::Rational;
use crate::error::{Error, Result};

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RationalInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RationalInterval::new(lo, hi)
    }

    /// Horner evaluation of `q` over the interval `x`.
    pub fn eval(q: &QPolynomial, x: &Self) -> Self {
        q.coeffs().iter().rev().fold(Self::point(Rational::zero()), |acc, c| acc.mul(x).add(&Self::point(c.clone())))
    }

    /// Sign if the interval excludes zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

/// A real root of an integer polynomial, pinned by an open isolating
/// interval `(lo, hi)` whose endpoints are not roots.
#[derive(Clone, PartialEq, Eq)]
pub struct RealAlgebraicNumber {
    poly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

impl RealAlgebraicNumber {
    /// Checks that `poly` is square-free with exactly one root in `(lo, hi)`
    /// and that neither endpoint is a root.
    pub fn from_isolating_interval(poly: IntPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::InvalidPolynomial("constant defining polynomial".into()));
        }
        if lo >= hi {
            return Err(Error::InvalidArgument("empty isolating interval".into()));
        }
        let poly = poly.primitive_part();
        if poly.sign_at(&lo).is_eq() || poly.sign_at(&hi).is_eq() {
            return Err(Error::InvalidArgument("interval endpoint is a root".into()));
        }
        if poly.square_free_part() != poly {
            return Err(Error::InvalidPolynomial(format!("{poly} is not square-free")));
        }
        if SturmSequence::new(&poly).count_in(&lo, &hi) != 1 {
            return Err(Error::InvalidArgument(format!(
                "interval ({lo}, {hi}) does not isolate a single root of {poly}"
            )));
        }
        Ok(RealAlgebraicNumber { poly, lo, hi })
    }

    pub fn from_rational(r: &Rational) -> Self {
        let one = Rational::one();
        RealAlgebraicNumber { poly: IntPolynomial::linear_with_root(r), lo: r - &one, hi: r + &one }
    }

    pub fn minimal_polynomial(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn interval(&self) -> RationalInterval {
        RationalInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.poly.degree() == Some(1)).then(|| Rational::new(-self.poly.coeff(0), self.poly.coeff(1)))
    }

    /// One bisection step.
    pub fn refine(&self) -> Self {
        if let Some(r) = self.as_rational() {
            let quarter = self.width() / Rational::from(BigInt::from(4));
            return RealAlgebraicNumber { poly: self.poly.clone(), lo: &r - &quarter, hi: &r + &quarter };
        }
        let mid = (&self.lo + &self.hi) / Rational::from(BigInt::from(2));
        let s_mid = self.poly.sign_at(&mid);
        if s_mid.is_eq() {
            // rational root of a reducible square-free defining polynomial
            let quarter = self.width() / Rational::from(BigInt::from(4));
            return RealAlgebraicNumber {
                poly: IntPolynomial::linear_with_root(&mid),
                lo: &mid - &quarter,
                hi: &mid + &quarter,
            };
        }
        if s_mid == self.poly.sign_at(&self.lo) {
            RealAlgebraicNumber { poly: self.poly.clone(), lo: mid, hi: self.hi.clone() }
        } else {
            RealAlgebraicNumber { poly: self.poly.clone(), lo: self.lo.clone(), hi: mid }
        }
    }

    pub fn refine_to(&self, width: &Rational) -> Self {
        let mut x = self.clone();
        while &x.width() > width {
            x = x.refine();
        }
        x
    }

    /// Refines until the width is below `2^-bits`.
    pub fn refine_bits(&self, bits: u32) -> Self {
        let w = Rational::new(BigInt::one(), BigInt::one() << bits);
        self.refine_to(&w)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s.is_eq() {
            // r is a root inside the isolating interval, hence this number
            return Ordering::Equal;
        }
        // the root lies on the side of r where the sign differs from p(r)
        if s == self.poly.sign_at(&self.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        // common roots are roots of the gcd; interval endpoints are never
        // roots of either polynomial, so never roots of the gcd
        let g = self.poly.gcd(&other.poly);
        let sturm = (!g.is_constant()).then(|| SturmSequence::new(&g));
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(s) = &sturm {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if s.count_in(lo, hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a = a.refine();
            b = b.refine();
        }
    }

    /// Floating-point approximation (refines to 2^-60 first).
    pub fn to_f64(&self) -> f64 {
        let x = self.refine_bits(60);
        let mid = (&x.lo + &x.hi) / Rational::from(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// A rational strictly inside the isolating interval that is not a root.
    pub fn sample_point(&self) -> Rational {
        split_point(&self.poly, &self.lo, &self.hi)
    }
}

impl fmt::Display for RealAlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {}) ~ {:.12}", self.poly, self.lo, self.hi, self.to_f64())
    }
}

impl fmt::Debug for RealAlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealAlgebraicNumber({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::roots::real_roots;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rejects_bad_intervals() {
        let f = p(&[-2, 0, 1]);
        assert!(RealAlgebraicNumber::from_isolating_interval(f.clone(), rat(-2, 1), rat(2, 1)).is_err());
        assert!(RealAlgebraicNumber::from_isolating_interval(f.clone(), rat(1, 1), rat(2, 1)).is_ok());
        assert!(RealAlgebraicNumber::from_isolating_interval(f, rat(2, 1), rat(3, 1)).is_err());
    }

    #[test]
    fn refinement_shrinks_and_keeps_root() {
        let x = RealAlgebraicNumber::from_isolating_interval(p(&[-2, 0, 1]), rat(1, 1), rat(2, 1)).unwrap();
        let y = x.refine_bits(40);
        assert!(y.width() <= rat(1, 1 << 40));
        assert_eq!(y.cmp_rational(&rat(141421, 100000)), Ordering::Greater);
        assert_eq!(y.cmp_rational(&rat(141422, 100000)), Ordering::Less);
    }

    #[test]
    fn compare_roots() {
        let r = real_roots(&p(&[1, -3, 0, 1]));
        assert_eq!(r[0].cmp_exact(&r[1]), Ordering::Less);
        assert_eq!(r[2].cmp_exact(&r[2].refine_bits(10)), Ordering::Equal);
        let s = real_roots(&p(&[-2, 0, 1]));
        assert_eq!(r[2].cmp_exact(&s[1]), Ordering::Greater); // 1.532 > 1.414
    }

    #[test]
    fn interval_eval_encloses() {
        let q = p(&[1, -3, 0, 1]).to_qpoly();
        let x = RationalInterval::new(rat(1, 3), rat(1, 2));
        let y = RationalInterval::eval(&q, &x);
        for t in [rat(1, 3), rat(2, 5), rat(1, 2)] {
            assert!(y.contains(&q.eval(&t)));
        }
    }
}
