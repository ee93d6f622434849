//! Factorization over Z for small degrees: rational-root extraction plus an
//! exhaustive quadratic-pair search for quartic cofactors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use super::roots::is_perfect_square;
use super::Rational;

/// Irreducible factors with multiplicities. `complete` is false when some
/// factor of degree >= 5 could not be certified irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(IntPolynomial, usize)>,
    pub complete: bool,
}

/// Positive divisors of `|n|` for `n != 0`, ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots of a nonzero integer polynomial, ascending.
pub fn rational_roots(p: &IntPolynomial) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut q = p.primitive_part();
    if q.is_constant() {
        return roots;
    }
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        let shift = q.coeffs().iter().take_while(|c| c.is_zero()).count();
        q = IntPolynomial::new(q.coeffs()[shift..].to_vec());
    }
    if q.is_constant() {
        return roots;
    }
    let lc = q.leading_coeff().unwrap().clone();
    let c0 = q.coeff(0);
    for num in divisors(&c0) {
        for den in divisors(&lc) {
            if !num.gcd(&den).is_one() {
                continue;
            }
            for s in [num.clone(), -num.clone()] {
                let r = Rational::new(s, den.clone());
                if q.sign_at(&r).is_eq() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Splits a monic quartic with nonzero constant term and no rational roots
/// into two monic integer quadratics, if possible.
pub fn quadratic_pair(p: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
    assert!(p.degree() == Some(4) && p.is_monic());
    let (a, b, c, d) = (p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    assert!(!d.is_zero());
    let quad = |lin: &BigInt, cst: &BigInt| IntPolynomial::new(vec![cst.clone(), lin.clone(), BigInt::one()]);
    for pos in divisors(&d) {
        for q in [pos.clone(), -pos] {
            let s = &d / &q;
            if q != s {
                let num = &c - &q * &a;
                let den = &s - &q;
                if !(&num % &den).is_zero() {
                    continue;
                }
                let pp = num / den;
                let r = &a - &pp;
                if &q + &s + &pp * &r == b && &pp * &s + &q * &r == c {
                    return Some((quad(&pp, &q), quad(&r, &s)));
                }
            } else {
                if &q * &a != c {
                    continue;
                }
                // p + r = a, p r = b - 2q
                let disc = &a * &a - BigInt::from(4) * (&b - BigInt::from(2) * &q);
                if !is_perfect_square(&disc) {
                    continue;
                }
                let root = disc.sqrt();
                let two = BigInt::from(2);
                if !((&a + &root) % &two).is_zero() {
                    continue;
                }
                let pp = (&a + &root) / &two;
                let r = &a - &pp;
                return Some((quad(&pp, &q), quad(&r, &s)));
            }
        }
    }
    None
}

/// Monic transform `y^n + a_{n-1} y^{n-1} + a_{n-2} l y^{n-2} + ... + a_0 l^{n-1}`
/// of a polynomial with leading coefficient `l`, i.e. `l^{n-1} p(y/l)`.
fn monic_transform(p: &IntPolynomial) -> IntPolynomial {
    let n = p.degree().unwrap();
    let l = p.leading_coeff().unwrap().clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        coeffs.push(p.coeff(i) * num_traits::pow(l.clone(), n - 1 - i.min(n - 1)));
    }
    coeffs[n] = BigInt::one();
    IntPolynomial::new(coeffs)
}

fn split_square_free(p: &IntPolynomial) -> (Vec<IntPolynomial>, bool) {
    let mut out = Vec::new();
    let mut rest = p.primitive_part();
    for r in rational_roots(&rest) {
        let lin = IntPolynomial::linear_with_root(&r);
        rest = rest.div_exact(&lin).expect("root divides").primitive_part();
        out.push(lin);
    }
    let mut complete = true;
    match rest.degree() {
        None | Some(0) => {}
        Some(1..=3) => out.push(rest),
        Some(4) => {
            let l = rest.leading_coeff().unwrap().clone();
            let monic = monic_transform(&rest);
            match quadratic_pair(&monic) {
                Some((f, g)) => {
                    // y = l x
                    let back = IntPolynomial::new(vec![BigInt::zero(), l]);
                    out.push(f.compose(&back).primitive_part());
                    out.push(g.compose(&back).primitive_part());
                }
                None => out.push(rest),
            }
        }
        Some(_) => {
            complete = false;
            out.push(rest);
        }
    }
    (out, complete)
}

/// Factors a nonzero polynomial into irreducibles (primitive, positive
/// leading coefficient), complete whenever every square-free part has degree
/// <= 4 after rational roots are removed. The content is discarded.
pub fn factor(p: &IntPolynomial) -> Factorization {
    let mut factors = Vec::new();
    let mut complete = true;
    for (part, mult) in p.square_free_decomposition() {
        let (fs, c) = split_square_free(&part);
        complete &= c;
        factors.extend(fs.into_iter().map(|f| (f, mult)));
    }
    factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    Factorization { factors, complete }
}
