//! Small dense exact linear algebra used by the polynomial and field code.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::qpoly::QPolynomial;
use super::Rational;

/// Determinant of an `n x n` integer matrix (row-major) by fraction-free
/// Bareiss elimination. Every intermediate division is exact.
pub fn bareiss_determinant(n: usize, entries: &[BigInt]) -> BigInt {
    assert_eq!(entries.len(), n * n, "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = entries.chunks(n).map(|r| r.to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Characteristic polynomial `det(xI - A)` of a rational matrix by the
/// Faddeev-LeVerrier recurrence. Returned polynomial is monic of degree `n`.
pub fn faddeev_leverrier(n: usize, entries: &[Rational]) -> QPolynomial {
    assert_eq!(entries.len(), n * n, "matrix must be square");
    let mul = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = &x[i * n + k];
                if xik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += xik * &y[k * n + j];
                }
            }
        }
        out
    };
    // coefficients c_n = 1, c_{n-1}, ..., c_0 of x^n + c_{n-1} x^{n-1} + ...
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = vec![Rational::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(entries, &m);
        for i in 0..n {
            next[i * n + i] += &coeffs[n - k + 1];
        }
        let am = mul(entries, &next);
        let trace: Rational = (0..n).map(|i| am[i * n + i].clone()).sum();
        coeffs[n - k] = -trace / Rational::from(BigInt::from(k));
        m = next;
    }
    QPolynomial::new(coeffs)
}
