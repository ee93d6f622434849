//! Exact counting of polynomial roots inside, on and outside the unit circle.
//!
//! The circle is sent to the imaginary axis by `x = (1+w)/(1-w)`. Roots of
//! the transformed polynomial that come in `{w, -w}` pairs are split off as
//! `gcd(Q(w), Q(-w))`; the imaginary-axis roots among them are the negative
//! real roots of that even factor viewed as a polynomial in `w^2`. The rest
//! is counted by a Cauchy index along the imaginary axis.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{IntPolynomial, Rational, SturmSequence};

/// Root counts relative to the unit circle, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirclePartition {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

impl CirclePartition {
    pub fn total(&self) -> usize {
        self.inside + self.on + self.outside
    }

    fn scaled(self, k: usize) -> Self {
        CirclePartition { inside: self.inside * k, on: self.on * k, outside: self.outside * k }
    }

    fn plus(self, o: Self) -> Self {
        CirclePartition { inside: self.inside + o.inside, on: self.on + o.on, outside: self.outside + o.outside }
    }
}

/// `(1-w)^d q((1+w)/(1-w))` for `d = deg q`.
fn mobius_transform(q: &IntPolynomial) -> IntPolynomial {
    let d = q.degree().unwrap();
    let plus = IntPolynomial::from_i64s(&[1, 1]);
    let minus = IntPolynomial::from_i64s(&[1, -1]);
    let mut acc = IntPolynomial::zero();
    for (i, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &plus.pow(i) * &minus.pow(d - i);
        acc = &acc + &term.scale(c);
    }
    acc
}

/// Left/right half-plane counts for a polynomial with no roots on the
/// imaginary axis, from the Cauchy index of `Q(iy) = R(y) + i I(y)`.
fn half_plane_counts(q: &IntPolynomial) -> (usize, usize) {
    let d = match q.degree() {
        None | Some(0) => return (0, 0),
        Some(d) => d,
    };
    let mut re = vec![BigInt::zero(); d + 1];
    let mut im = vec![BigInt::zero(); d + 1];
    for (k, c) in q.coeffs().iter().enumerate() {
        match k % 4 {
            0 => re[k] += c,
            1 => im[k] += c,
            2 => re[k] -= c,
            _ => im[k] -= c,
        }
    }
    let (re, im) = (IntPolynomial::new(re), IntPolynomial::new(im));
    // left - right = -Ind(I/R) if deg I <= deg R, else Ind(R/I)
    let diff = if im.degree() <= re.degree() {
        -SturmSequence::from_pair(re, im).cauchy_index()
    } else {
        SturmSequence::from_pair(im, re).cauchy_index()
    };
    let d = d as i64;
    debug_assert!((d + diff) % 2 == 0);
    (((d + diff) / 2) as usize, ((d - diff) / 2) as usize)
}

fn partition_square_free(f: &IntPolynomial) -> CirclePartition {
    let mut part = CirclePartition { inside: 0, on: 0, outside: 0 };
    let mut q = f.clone();
    for r in [1i64, -1] {
        let r = Rational::from(BigInt::from(r));
        if q.sign_at(&r).is_eq() {
            part.on += 1;
            q = q.div_exact(&IntPolynomial::linear_with_root(&r)).expect("root divides");
        }
    }
    if q.is_constant() {
        return part;
    }
    let big_q = mobius_transform(&q);
    let paired = big_q.gcd(&big_q.negate_variable());
    if !paired.is_constant() {
        // paired(w) = E(w^2)
        let even = IntPolynomial::new(paired.coeffs().iter().step_by(2).cloned().collect());
        let sturm = SturmSequence::new(&even);
        let negative = sturm.variations_at_infinity(false) - sturm.variations_at(&Rational::zero());
        let pd = paired.degree().unwrap();
        part.on += 2 * negative;
        part.inside += (pd - 2 * negative) / 2;
        part.outside += (pd - 2 * negative) / 2;
    }
    let rest = big_q.div_exact(&paired).expect("gcd divides");
    let (left, right) = half_plane_counts(&rest);
    part.inside += left;
    part.outside += right;
    part
}

/// Exact `(inside, on, outside)` root counts for `p` with `p(0) != 0`,
/// multiplicities included.
pub fn unit_circle_partition(p: &IntPolynomial) -> Result<CirclePartition> {
    if p.is_zero() {
        return Err(Error::InvalidPolynomial("zero polynomial".into()));
    }
    if p.coeff(0).is_zero() {
        return Err(Error::InvalidPolynomial(format!("{p} vanishes at 0")));
    }
    let mut total = CirclePartition { inside: 0, on: 0, outside: 0 };
    for (f, mult) in p.square_free_decomposition() {
        total = total.plus(partition_square_free(&f).scaled(mult));
    }
    debug_assert_eq!(total.total(), p.degree().unwrap());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(c: &[i64]) -> (usize, usize, usize) {
        let p = unit_circle_partition(&IntPolynomial::from_i64s(c)).unwrap();
        (p.inside, p.on, p.outside)
    }

    #[test]
    fn examples() {
        assert_eq!(part(&[1, -3, 1]), (1, 0, 1));
        assert_eq!(part(&[1, -3, 0, 1]), (1, 0, 2));
        assert_eq!(part(&[1, -1, 1]), (0, 2, 0));
    }

    #[test]
    fn roots_at_plus_minus_one() {
        assert_eq!(part(&[-1, 1]), (0, 1, 0));
        assert_eq!(part(&[1, 1]), (0, 1, 0));
        // (x-1)(x+1)(x-3)(2x-1)
        let f = &(&IntPolynomial::from_i64s(&[-1, 0, 1]) * &IntPolynomial::from_i64s(&[-3, 1]))
            * &IntPolynomial::from_i64s(&[-1, 2]);
        let p = unit_circle_partition(&f).unwrap();
        assert_eq!((p.inside, p.on, p.outside), (1, 2, 1));
    }

    #[test]
    fn multiplicities() {
        // (x-2)^2 (x^2+1)^3
        let f = &IntPolynomial::from_i64s(&[-2, 1]).pow(2) * &IntPolynomial::from_i64s(&[1, 0, 1]).pow(3);
        let p = unit_circle_partition(&f).unwrap();
        assert_eq!((p.inside, p.on, p.outside), (0, 6, 2));
    }

    #[test]
    fn reciprocal_pairs_off_circle() {
        // x^4 - 3x^2 + 1 has roots +-phi, +-1/phi; reciprocal pairs become {w,-w}
        assert_eq!(part(&[1, 0, -3, 0, 1]), (2, 0, 2));
        // palindromic with two roots on the circle
        assert_eq!(part(&[1, -1, -1, -1, 1]), (1, 2, 1));
    }

    #[test]
    fn sum_of_squares_quartic() {
        // x^4 + 2x^3 + 5x^2 + 4x + 1 = (x^2+x)^2 + (2x+1)^2
        assert_eq!(part(&[1, 4, 5, 2, 1]), (2, 0, 2));
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert!(unit_circle_partition(&IntPolynomial::from_i64s(&[0, 1, 1])).is_err());
    }
}
