// row operations index two rows at once
#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::linalg::{bareiss_determinant, faddeev_leverrier};
use crate::exactmath::{IntPolynomial, Rational};
use crate::serde_util;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::NotSquare("empty matrix".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::NotSquare(format!("row {i} has {} entries, expected {dim}", r.len())));
            }
        }
        Ok(IntMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Panicking convenience for literals in code and tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_i64_rows(rows).expect("square matrix literal")
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        IntMatrix { dim, entries }
    }

    /// Companion matrix with the coefficients down the first column:
    /// rows `[-a_{n-1}, 1, 0, ..], [-a_{n-2}, 0, 1, ..], .., [-a_0, 0, .., 0]`
    /// for monic `p = x^n + a_{n-1} x^{n-1} + ... + a_0`. Its characteristic
    /// polynomial is `p`.
    pub fn companion(p: &IntPolynomial) -> Result<Self> {
        if !p.is_monic() || p.is_constant() {
            return Err(Error::InvalidPolynomial(format!("{p} is not monic of degree >= 1")));
        }
        let n = p.degree().unwrap();
        let mut m = IntMatrix { dim: n, entries: vec![BigInt::zero(); n * n] };
        for i in 0..n {
            m.entries[i * n] = -p.coeff(n - 1 - i);
            if i + 1 < n {
                m.entries[i * n + i + 1] = BigInt::one();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        IntMatrix { dim: n, entries }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.dim, &self.entries)
    }

    /// `|det| = 1`.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(Signed::is_positive)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    pub fn neg(&self) -> Self {
        IntMatrix { dim: self.dim, entries: self.entries.iter().map(|x| -x).collect() }
    }

    /// Integer inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| Rational::from(self.get(i, j).clone())).collect();
                row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
            a.swap(piv, col);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let v = &f * &a[col][c];
                        a[r][c] -= v;
                    }
                }
            }
        }
        let entries = a.into_iter().flat_map(|row| row.into_iter().skip(n).map(|x| x.to_integer())).collect();
        Ok(IntMatrix { dim: n, entries })
    }

    /// `det(xI - M)`, monic of degree `dim`, via Faddeev-LeVerrier.
    pub fn char_poly(&self) -> IntPolynomial {
        let q: Vec<Rational> = self.entries.iter().cloned().map(Rational::from).collect();
        faddeev_leverrier(self.dim, &q)
            .to_integer_exact()
            .expect("integer matrix has integer characteristic polynomial")
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &IntPolynomial) -> Self {
        let n = self.dim;
        let mut acc = IntMatrix { dim: n, entries: vec![BigInt::zero(); n * n] };
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc.entries[i * n + i] += c;
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        self.entries.chunks(self.dim).map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * &rhs.entries[k * n + j];
                }
            }
        }
        IntMatrix { dim: n, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.dim)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({self})")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_util::bigint_rows::serialize(&self.rows(), s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = serde_util::bigint_rows::deserialize(d)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
