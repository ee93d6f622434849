use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qpoly::QPolynomial;
use super::Rational;

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. Trailing zero coefficients are never stored, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Builds a polynomial from machine integers, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - r` scaled to integer coefficients: `den*x - num`.
    pub fn linear_with_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from(c.clone()))
    }

    /// Sign of `p(x)` computed without building the rational value: the
    /// numerator of `den^n * p(num/den)` has the same sign.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let n = match self.degree() {
            Some(n) => n,
            None => return Ordering::Equal,
        };
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut terms = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            terms.push(den_pow.clone());
            den_pow *= den;
        }
        // sum c_i num^i den^(n-i)
        let mut num_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * &terms[n - i];
            num_pow *= num;
        }
        acc.sign().cmp_zero()
    }

    /// Sign of the polynomial as `x -> +inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match (self.leading_coeff(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = lc.sign().cmp_zero();
                if positive || d % 2 == 0 {
                    s
                } else {
                    s.reverse()
                }
            }
            _ => Ordering::Equal,
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// A positive multiple of the remainder of `self` by `divisor` over Q,
    /// reduced to primitive form. Positivity of the multiplier keeps signs
    /// intact, which is what Sturm-type sequences need.
    pub fn positive_remainder(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading_coeff().unwrap().clone();
        let lc_abs = lc.abs();
        let lc_sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading_coeff().unwrap().clone();
            let shift = Self::monomial(lr * &lc_sign, dr - dd);
            r = &r.scale(&lc_abs) - &(&shift * divisor);
        }
        let g = r.content();
        if g.is_zero() {
            r
        } else {
            Self::new(r.coeffs.iter().map(|c| c / &g).collect())
        }
    }

    /// Exact quotient over Q if it has integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.to_qpoly().div_rem(&divisor.to_qpoly());
        if !r.is_zero() {
            return None;
        }
        q.to_integer_exact()
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        while !b.is_zero() {
            let r = a.positive_remainder(&b);
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides polynomial").primitive_part()
    }

    /// Yun's square-free decomposition of the primitive part: returns pairs
    /// `(f_i, i)` with `primitive(self) = prod f_i^i` up to sign, each `f_i`
    /// square-free, pairwise coprime and nonconstant.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.primitive_part();
        if p.is_constant() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let pq = p.to_qpoly();
        let dq = pq.derivative();
        let a = pq.gcd(&dq);
        let mut b = pq.div_rem(&a).0;
        let mut c = dq.div_rem(&a).0 - b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let d = b.gcd(&c);
            let bn = b.div_rem(&d).0;
            let cn = c.div_rem(&d).0 - bn.derivative();
            if !d.is_constant() {
                out.push((d.to_primitive_integer(), i));
            }
            b = bn;
            c = cn;
            i += 1;
        }
        out
    }

    /// `x^n p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_qpoly(&self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().cloned().map(Rational::from).collect())
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses the display form, e.g. `x^3 - 3x + 1` or `-2x^2+x`. Whitespace and
/// an optional `*` between coefficient and `x` are accepted.
impl FromStr for IntPolynomial {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let neg = rest.starts_with('-');
            if rest.starts_with('-') || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (mag, exp) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let exp = match &term[pos + 1..] {
                        "" => 1,
                        e => e
                            .strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| format!("bad exponent in term {term:?}"))?,
                    };
                    (&term[..pos], exp)
                }
            };
            let mut c: BigInt = match (mag, exp) {
                ("", e) if e > 0 => BigInt::one(),
                _ => mag.parse().map_err(|_| format!("bad coefficient in term {term:?}"))?,
            };
            if neg {
                c = -c;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
