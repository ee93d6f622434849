//! The Jacobi-Perron map on positive vectors of a number field.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{NumberFieldElement, Rational};
use crate::matrixcore::IntMatrix;

/// Point `theta` of the open positive cone, `m - 1` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JPAState {
    pub theta: Vec<NumberFieldElement>,
}

impl JPAState {
    pub fn new(theta: Vec<NumberFieldElement>) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::InvalidArgument("state needs at least one coordinate".into()));
        }
        if let Some(i) = theta.iter().position(|t| !t.is_positive()) {
            return Err(Error::InvalidArgument(format!("coordinate {i} is not positive")));
        }
        Ok(JPAState { theta })
    }

    /// `(w_2/w_1, ..., w_m/w_1)` for a positive vector `w`.
    pub fn from_vector(w: &[NumberFieldElement]) -> Result<Self> {
        if w.len() < 2 {
            return Err(Error::InvalidArgument("vector needs at least two coordinates".into()));
        }
        let theta = w[1..].iter().map(|x| x.checked_div(&w[0])).collect::<Result<Vec<_>>>()?;
        Self::new(theta)
    }

    pub fn dim(&self) -> usize {
        self.theta.len() + 1
    }

    /// `(1, theta_1, ..., theta_{m-1})`.
    pub fn homogeneous(&self) -> Vec<NumberFieldElement> {
        let mut v = vec![NumberFieldElement::one(self.theta[0].field())];
        v.extend(self.theta.iter().cloned());
        v
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.theta.iter().map(|t| t.to_f64()).collect()
    }
}

/// `m x m` matrix with first row `(0, .., 0, 1)` and rows `2..m` equal to
/// `[I | b]`. Its determinant is `(-1)^(m-1)`.
pub fn digit_matrix(b: &[BigInt]) -> IntMatrix {
    let m = b.len() + 1;
    let mut rows = vec![vec![BigInt::zero(); m]; m];
    rows[0][m - 1] = BigInt::one();
    for i in 1..m {
        rows[i][i - 1] = BigInt::one();
        rows[i][m - 1] = b[i - 1].clone();
    }
    IntMatrix::from_rows(rows).expect("square")
}

fn step(s: &JPAState) -> Option<(Vec<BigInt>, JPAState)> {
    let digits: Vec<BigInt> = s.theta.iter().map(|t| t.floor()).collect();
    let frac: Vec<NumberFieldElement> = s
        .theta
        .iter()
        .zip(&digits)
        .map(|(t, b)| t - &NumberFieldElement::from_rational(t.field(), Rational::from(b.clone())))
        .collect();
    if frac.iter().any(|z| z.is_zero()) {
        return None;
    }
    let inv = frac[0].inverse().ok()?;
    let mut theta: Vec<NumberFieldElement> = frac[1..].iter().map(|z| z * &inv).collect();
    theta.push(inv);
    Some((digits, JPAState { theta }))
}

/// One step: digits `b_i = floor(theta_i)`, fractional parts
/// `z_i = theta_i - b_i`, next state `(z_2/z_1, .., z_{m-1}/z_1, 1/z_1)`.
///
/// A vanishing fractional part means some coordinate of the direction is
/// rationally dependent on the others and the expansion stops there.
pub fn jpa_step(s: &JPAState) -> Result<(Vec<BigInt>, JPAState)> {
    step(s).ok_or(Error::DegenerateExpansion { step: 0 })
}

/// Digits, exact states and the first detected repetition of a Jacobi-Perron
/// expansion.
#[derive(Clone, Debug)]
pub struct JPAExpansion {
    pub digits: Vec<Vec<BigInt>>,
    pub preperiod: usize,
    pub period: Option<usize>,
    /// `states[i]` is the state before step `i`; with a period `p`, the last
    /// state equals `states[preperiod]`.
    pub states: Vec<JPAState>,
}

/// Expands for at most `max_steps` steps, stopping at the first state seen
/// before. States are compared exactly; hashing only narrows the lookup.
pub fn jpa_expand(s0: &JPAState, max_steps: usize) -> Result<JPAExpansion> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("max_steps must be at least 1".into()));
    }
    let mut states = vec![s0.clone()];
    let mut seen: HashMap<JPAState, usize> = HashMap::from([(s0.clone(), 0)]);
    let mut digits = Vec::new();
    for i in 0..max_steps {
        let (d, next) = step(&states[i]).ok_or(Error::DegenerateExpansion { step: i })?;
        digits.push(d);
        if let Some(&start) = seen.get(&next) {
            states.push(next);
            return Ok(JPAExpansion { digits, preperiod: start, period: Some(i + 1 - start), states });
        }
        seen.insert(next.clone(), i + 1);
        states.push(next);
    }
    Ok(JPAExpansion { digits, preperiod: 0, period: None, states })
}

impl JPAExpansion {
    pub fn digit_matrices(&self) -> Vec<IntMatrix> {
        self.digits.iter().map(|b| digit_matrix(b)).collect()
    }

    pub fn period_digits(&self) -> Vec<Vec<BigInt>> {
        match self.period {
            Some(p) => self.digits[self.preperiod..self.preperiod + p].to_vec(),
            None => Vec::new(),
        }
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.period.is_some() && self.preperiod == 0
    }

    /// `B_i (1, theta^(i+1)) = theta^(i+1)_last * (1, theta^(i))` exactly.
    pub fn step_consistent(&self, i: usize) -> bool {
        let b = digit_matrix(&self.digits[i]);
        let next = self.states[i + 1].homogeneous();
        let cur = self.states[i].homogeneous();
        let scale = next.last().unwrap().clone();
        let field = scale.field().clone();
        (0..b.dim()).all(|r| {
            let lhs = (0..b.dim()).fold(NumberFieldElement::zero(&field), |acc, c| {
                &acc + &(&NumberFieldElement::from_rational(&field, Rational::from(b.get(r, c).clone())) * &next[c])
            });
            lhs == &scale * &cur[r]
        })
    }

    pub fn all_steps_consistent(&self) -> bool {
        (0..self.digits.len()).all(|i| self.step_consistent(i))
    }

    pub fn digits_nonnegative(&self) -> bool {
        self.digits.iter().flatten().all(|d| !d.is_negative())
    }

    /// Convergence diagnostic over the first `horizon` steps; see
    /// [`ConvergenceProfile`].
    pub fn convergence_profile(&self, horizon: usize) -> ConvergenceProfile {
        let s0 = &self.states[0];
        let m = s0.dim();
        let width = Rational::new(BigInt::one(), BigInt::one() << 300u32);
        let enclosures: Vec<_> = s0.theta.iter().map(|t| t.enclosure(&width)).collect();
        let horizon = horizon.min(self.digits.len());
        let mut product = IntMatrix::identity(m);
        let mut distances = Vec::with_capacity(horizon);
        for b in self.digits.iter().take(horizon) {
            product = &product * &digit_matrix(b);
            let head = Rational::from(product.get(0, m - 1).clone());
            if head.is_zero() {
                distances.push(f64::INFINITY);
                continue;
            }
            let d = enclosures
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    let approx = Rational::from(product.get(i + 1, m - 1).clone()) / &head;
                    let a = (&approx - &iv.lo).abs();
                    let b = (&approx - &iv.hi).abs();
                    if a > b {
                        a
                    } else {
                        b
                    }
                })
                .max()
                .unwrap_or_default();
            distances.push(d.to_f64().unwrap_or(f64::INFINITY));
        }
        let halving = (m..distances.len()).all(|k| distances[k] <= distances[k - m] / 2.0 || distances[k] < 1e-60);
        ConvergenceProfile { block: m, distances, halves_every_block: halving }
    }
}

/// Distances between the normalized last column of `B_1 ... B_k` and
/// `(1, theta)`, with a check that they at least halve every `block = m`
/// steps. This rate is an engineering proxy, not a theorem.
#[derive(Clone, Debug)]
pub struct ConvergenceProfile {
    pub block: usize,
    pub distances: Vec<f64>,
    pub halves_every_block: bool,
}
