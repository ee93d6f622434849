//! Rational canonical (Frobenius) form via the Smith form of `xI - M` over
//! Q[x].

// row operations index two rows at once
#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::exactmath::{QPolynomial, Rational};

use super::IntMatrix;

/// Invariant factors `f_1 | f_2 | ... | f_r` (monic, nonconstant) of a
/// matrix over Q. Two matrices are similar over Q iff these agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub invariant_factors: Vec<QPolynomial>,
}

impl FrobeniusForm {
    pub fn of(m: &IntMatrix) -> Self {
        FrobeniusForm { invariant_factors: invariant_factors(m) }
    }

    /// Block-diagonal companion matrix (subdiagonal ones, last column
    /// `-coefficients`), row-major.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n: usize = self.invariant_factors.iter().map(|f| f.degree().unwrap()).sum();
        let mut out = vec![vec![Rational::zero(); n]; n];
        let mut off = 0;
        for f in &self.invariant_factors {
            let d = f.degree().unwrap();
            for i in 0..d {
                if i + 1 < d {
                    out[off + i + 1][off + i] = Rational::one();
                }
                out[off + i][off + d - 1] = -f.coeff(i);
            }
            off += d;
        }
        out
    }
}

fn invariant_factors(m: &IntMatrix) -> Vec<QPolynomial> {
    let n = m.dim();
    let mut a: Vec<Vec<QPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = QPolynomial::constant(-Rational::from(m.get(i, j).clone()));
                    if i == j {
                        &c + &QPolynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();

    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if let Some(d) = e.degree() {
                        if best.is_none_or(|b| d < b.2) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                // remaining block is zero (singular xI - M cannot happen)
                diag.extend((k..n).map(|_| QPolynomial::zero()));
                return finish(diag);
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = a[k][k].clone();
            let mut dirty = false;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].div_rem(&pivot);
                for j in k..n {
                    let v = &a[i][j] - &(&q * &a[k][j]);
                    a[i][j] = v;
                }
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].div_rem(&pivot);
                for row in a.iter_mut().skip(k) {
                    let v = &row[j] - &(&q * &row[k]);
                    row[j] = v;
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !a[i][j].rem(&pivot).is_zero()));
            match bad {
                Some(i) => {
                    for j in k..n {
                        let v = &a[k][j] + &a[i][j];
                        a[k][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[k][k].monic());
    }
    finish(diag)
}

fn finish(diag: Vec<QPolynomial>) -> Vec<QPolynomial> {
    diag.into_iter().filter(|f| !f.is_constant()).collect()
}

/// Similarity over Q, decided by comparing Frobenius forms.
pub fn similar_over_rationals(m: &IntMatrix, n: &IntMatrix) -> bool {
    m.dim() == n.dim() && FrobeniusForm::of(m) == FrobeniusForm::of(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::IntPolynomial;

    #[test]
    fn identity_has_linear_factors() {
        let f = FrobeniusForm::of(&IntMatrix::identity(3));
        assert_eq!(f.invariant_factors.len(), 3);
        assert!(f.invariant_factors.iter().all(|g| *g == IntPolynomial::from_i64s(&[-1, 1]).to_qpoly()));
    }

    #[test]
    fn jordan_block_vs_identity() {
        let j = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert!(!similar_over_rationals(&j, &IntMatrix::identity(2)));
        let f = FrobeniusForm::of(&j);
        assert_eq!(f.invariant_factors, vec![IntPolynomial::from_i64s(&[1, -2, 1]).to_qpoly()]);
    }

    #[test]
    fn cyclic_matrix_single_factor() {
        let a = IntMatrix::from_i64(&[&[0, 1, 0], &[3, 0, 1], &[-1, 0, 0]]);
        let f = FrobeniusForm::of(&a);
        assert_eq!(f.invariant_factors, vec![a.char_poly().to_qpoly()]);
    }

    #[test]
    fn fibonacci_and_transpose() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, 0]]);
        let b = IntMatrix::from_i64(&[&[0, 1], &[1, 1]]);
        assert!(similar_over_rationals(&a, &b));
    }

    #[test]
    fn block_diag_divisibility_chain() {
        // diag(2, 2, 3): invariant factors (x-2), (x-2)(x-3)
        let m = IntMatrix::from_i64(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let f = FrobeniusForm::of(&m);
        assert_eq!(
            f.invariant_factors,
            vec![IntPolynomial::from_i64s(&[-2, 1]).to_qpoly(), IntPolynomial::from_i64s(&[6, -5, 1]).to_qpoly()]
        );
        assert_eq!(f.matrix().len(), 3);
    }
}
