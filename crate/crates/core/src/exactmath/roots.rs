//! Resultants, discriminants, Sturm sequences and real-root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebraic::RealAlgebraicNumber;
use super::factor::factor;
use super::linalg::bareiss_determinant;
use super::poly::IntPolynomial;
use super::Rational;

/// Sylvester matrix of `p` (deg m) and `q` (deg n), `(m+n) x (m+n)`, row-major.
pub fn sylvester_matrix(p: &IntPolynomial, q: &IntPolynomial) -> Vec<BigInt> {
    let m = p.degree().expect("nonzero p");
    let n = q.degree().expect("nonzero q");
    let size = m + n;
    let mut out = vec![BigInt::zero(); size * size];
    for row in 0..n {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            out[row * size + row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            out[(n + row) * size + row + k] = c.clone();
        }
    }
    out
}

/// Resultant `res(p, q)` as the Sylvester determinant, computed fraction-free.
pub fn resultant(p: &IntPolynomial, q: &IntPolynomial) -> BigInt {
    assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    if m + n == 0 {
        return BigInt::one();
    }
    bareiss_determinant(m + n, &sylvester_matrix(p, q))
}

/// `(-1)^(n(n-1)/2) res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPolynomial) -> BigInt {
    let n = p.degree().expect("nonzero polynomial");
    assert!(n >= 1, "discriminant needs degree >= 1");
    if n == 1 {
        return BigInt::one();
    }
    let r = resultant(p, &p.derivative());
    let r = r / p.leading_coeff().unwrap();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// True iff `n >= 0` and `n` is the square of an integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Square-free kernel of a nonzero integer, keeping the sign (`-12 -> -3`).
pub fn squarefree_kernel(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut d = BigInt::from(2u32);
    while &d * &d <= m {
        let mut e = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &d;
        }
        d += 1u32;
    }
    sign * out * m
}

/// Canonical Sturm sequence `p, p', -rem(p, p'), ...` with every member
/// replaced by a positive multiple to stay in Z[x].
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        Self::from_pair(p.clone(), p.derivative())
    }

    /// Generalized sequence starting from an arbitrary pair; used for Cauchy
    /// indices.
    pub fn from_pair(a: IntPolynomial, b: IntPolynomial) -> Self {
        let mut seq = vec![a, b];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].positive_remainder(&seq[n - 1]);
            seq.push(-&r);
        }
        SturmSequence { seq }
    }

    pub fn polynomials(&self) -> &[IntPolynomial] {
        &self.seq
    }

    fn count(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::count(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count(self.seq.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Cauchy index over the real line of `seq[1]/seq[0]`.
    pub fn cauchy_index(&self) -> i64 {
        self.variations_at_infinity(false) as i64 - self.variations_at_infinity(true) as i64
    }
}

/// Power of two strictly above every root modulus (Cauchy bound).
pub fn root_bound(p: &IntPolynomial) -> Rational {
    let lc = p.leading_coeff().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = Rational::new(max, lc) + Rational::one();
    let mut b = Rational::one();
    while b <= bound {
        b *= Rational::from(BigInt::from(2));
    }
    b
}

/// Split point inside `(lo, hi)` that is not a root of `p`: the midpoint when
/// possible, otherwise another dyadic point.
pub(crate) fn split_point(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut den = BigInt::from(2);
    loop {
        let mut k = BigInt::one();
        while k < den {
            let x = lo + &width * Rational::new(k.clone(), den.clone());
            if p.sign_at(&x) != Ordering::Equal {
                return x;
            }
            k += 2;
        }
        den *= 2;
    }
}

/// Isolating intervals for the distinct real roots of a nonzero polynomial,
/// sorted ascending. Each returned number carries an irreducible defining
/// polynomial when the square-free part factors completely by the
/// small-degree factorizer (always for degree <= 4); otherwise the defining
/// polynomial is the square-free factor that owns the root.
pub fn real_roots(p: &IntPolynomial) -> Vec<RealAlgebraicNumber> {
    assert!(!p.is_zero(), "real_roots of the zero polynomial");
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.square_free_part();
    let sturm = SturmSequence::new(&sf);
    let b = root_bound(&sf);
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count_in(&lo, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(&sf, &lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    let factors: Vec<IntPolynomial> = factor(&sf).factors.into_iter().map(|(f, _)| f).collect();
    out.into_iter()
        .map(|(lo, hi)| {
            let owner = factors
                .iter()
                .find(|f| SturmSequence::new(f).count_in(&lo, &hi) == 1)
                .cloned()
                .unwrap_or_else(|| sf.clone());
            RealAlgebraicNumber::from_isolating_interval(owner, lo, hi)
                .expect("isolating interval from Sturm bisection")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 1])), int(2));
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), int(1));
        let f = p(&[1, -3, 0, 1]);
        assert_eq!(resultant(&f, &f), int(0));
    }

    #[test]
    fn resultant_by_root_products() {
        // res(x^2-2, x^2-3) = prod over roots a of x^2-2 of (a^2-3) = (-1)(-1)
        // and res(x-2, x^2+1) = 5
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[1, 0, 1])), int(5));
        // constant operand: res(p, c) = c^deg p
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[3])), int(9));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, -3, 0, 1])), int(81));
        assert_eq!(discriminant(&p(&[1, -2, -1, 1])), int(49));
        assert_eq!(discriminant(&p(&[1, -2, 1, 1])), int(-31));
        assert_eq!(discriminant(&p(&[-1, -1, 1])), int(5));
        assert_eq!(discriminant(&p(&[-1, -1, 0, 1])), int(-23));
    }

    #[test]
    fn perfect_squares() {
        assert!(is_perfect_square(&int(81)));
        assert!(is_perfect_square(&int(49)));
        assert!(is_perfect_square(&int(0)));
        assert!(!is_perfect_square(&int(-27)));
        assert!(!is_perfect_square(&int(50)));
    }

    #[test]
    fn squarefree_kernels() {
        assert_eq!(squarefree_kernel(&int(-12)), int(-3));
        assert_eq!(squarefree_kernel(&int(72)), int(2));
        assert_eq!(squarefree_kernel(&int(13)), int(13));
        assert_eq!(squarefree_kernel(&int(-1)), int(-1));
    }

    #[test]
    fn real_root_examples() {
        let r = real_roots(&p(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!((r[0].to_f64() + std::f64::consts::SQRT_2).abs() < 1e-9);
        assert!((r[1].to_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
        assert_eq!(real_roots(&p(&[1, -3, 0, 1])).len(), 3);
        assert!(real_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn real_roots_of_reducible_input() {
        // (x-1)^2 (x^2-2)(2x+3): distinct roots -3/2, -sqrt2, 1, sqrt2
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[-2, 0, 1])) * &p(&[3, 2]);
        let r = real_roots(&f);
        let vals: Vec<f64> = r.iter().map(|x| x.to_f64()).collect();
        assert_eq!(vals.len(), 4);
        let want = [-1.5, -std::f64::consts::SQRT_2, 1.0, std::f64::consts::SQRT_2];
        for (v, w) in vals.iter().zip(want) {
            assert!((v - w).abs() < 1e-6, "{v} vs {w}");
        }
        assert_eq!(r[0].minimal_polynomial(), &p(&[3, 2]));
        assert_eq!(r[2].minimal_polynomial(), &p(&[-1, 1]));
        assert_eq!(r[3].minimal_polynomial(), &p(&[-2, 0, 1]));
    }
}
