//! Contracting eigendata of a tight matrix and positivization of its
//! eigenvector.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{real_roots, NumberField, NumberFieldElement, Rational, RealAlgebraicNumber};
use crate::galois::is_irreducible;
use crate::matrixcore::{eigenvalue_partition, IntMatrix};

/// Contracting eigenvalue `0 < c < 1` and a positive eigenvector, all in the
/// field `Q(c)`.
///
/// `base_matrix` is the matrix whose contracting eigenvalue is `c`: the input,
/// its inverse when the unique off-circle eigenvalue lies outside, and the
/// square of either when that eigenvalue is negative. `matrix` is
/// `base_matrix` conjugated by the unimodular `change_of_basis` that made the
/// eigenvector positive, so `matrix * eigenvector = c * eigenvector`.
#[derive(Clone, Debug)]
pub struct PFData {
    pub source: IntMatrix,
    pub base_matrix: IntMatrix,
    pub matrix: IntMatrix,
    pub change_of_basis: IntMatrix,
    pub field: Arc<NumberField>,
    pub contracting: NumberFieldElement,
    pub contracting_eigenvalue: RealAlgebraicNumber,
    pub eigenvector: Vec<NumberFieldElement>,
    pub squared: bool,
    pub inverted: bool,
}

fn to_field_matrix(field: &Arc<NumberField>, m: &IntMatrix) -> Vec<Vec<NumberFieldElement>> {
    m.rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| NumberFieldElement::from_rational(field, Rational::from(x))).collect())
        .collect()
}

/// A nonzero vector in the kernel of a square matrix over a number field
/// whose kernel is one-dimensional.
fn kernel_vector(mut a: Vec<Vec<NumberFieldElement>>) -> Option<Vec<NumberFieldElement>> {
    let n = a.len();
    let field = a[0][0].field().clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inverse().ok()?;
        a[row] = a[row].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let next: Vec<_> = (0..n).map(|c| &a[r][c] - &(&f * &a[row][c])).collect();
                a[r] = next;
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![NumberFieldElement::zero(&field); n];
    v[free] = NumberFieldElement::one(&field);
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -&a[r][free];
    }
    Some(v)
}

/// Unimodular `S` with `S v` entrywise positive, by greedy row shears.
///
/// A global sign flip is applied first when no coordinate is positive. Then
/// each nonpositive coordinate receives `ceil(|w_j| / w_k) + 1` copies of the
/// largest coordinate `w_k`. At most `10 m^2` shears are performed.
pub fn positivize(v: &[NumberFieldElement]) -> Result<(IntMatrix, Vec<NumberFieldElement>)> {
    let m = v.len();
    let budget = 10 * m * m;
    let mut s: Vec<Vec<BigInt>> = IntMatrix::identity(m).rows();
    let mut w = v.to_vec();
    if w.iter().all(|x| x.sign() != Ordering::Greater) {
        w = w.iter().map(|x| -x).collect();
        s = s.into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    }
    let mut ops = 0;
    while let Some(j) = w.iter().position(|x| !x.is_positive()) {
        if ops == budget {
            return Err(Error::PositivizationBudget(budget));
        }
        let k = (0..m)
            .filter(|&i| w[i].is_positive())
            .max_by(|&a, &b| w[a].cmp_real(&w[b]))
            .ok_or(Error::PositivizationBudget(budget))?;
        let ratio = (-&w[j]).checked_div(&w[k])?;
        let t = ratio.ceil() + BigInt::one();
        let tf = NumberFieldElement::from_rational(w[k].field(), Rational::from(t.clone()));
        w[j] = &w[j] + &(&tf * &w[k]);
        let shifted: Vec<BigInt> = s[k].iter().map(|x| x * &t).collect();
        for (a, b) in s[j].iter_mut().zip(shifted) {
            *a += b;
        }
        ops += 1;
    }
    Ok((IntMatrix::from_rows(s).expect("square"), w))
}

/// Contracting eigendata of a unimodular, hyperbolic, tight matrix with
/// irreducible characteristic polynomial.
pub fn pf_data(m: &IntMatrix) -> Result<PFData> {
    let part = eigenvalue_partition(m)?;
    if part.on != 0 {
        return Err(Error::NotHyperbolic(part.on));
    }
    let inverted = match (part.inside, part.outside) {
        (1, _) => false,
        (_, 1) => true,
        _ => return Err(Error::NotTight(part.inside, part.on, part.outside)),
    };
    let base = if inverted { m.inverse()? } else { m.clone() };
    let cp = base.char_poly();
    let n = cp.degree().unwrap();
    if n > 4 {
        return Err(Error::DegreeOutOfScope(n, "2 to 4"));
    }
    if !is_irreducible(&cp)? {
        return Err(Error::Reducible(cp.to_string()));
    }
    let one = Rational::one();
    let lambda = real_roots(&cp)
        .into_iter()
        .find(|r| r.cmp_rational(&-one.clone()).is_gt() && r.cmp_rational(&one).is_lt())
        .expect("unique contracting eigenvalue is real");
    let field = NumberField::new(cp, lambda.clone())?;
    let gen = NumberFieldElement::generator(&field);
    let squared = lambda.cmp_rational(&Rational::zero()).is_lt();

    // (base - lambda I) v = 0
    let mut a = to_field_matrix(&field, &base);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = &row[i] - &gen;
    }
    let v = kernel_vector(a).ok_or_else(|| Error::InvalidArgument("eigenspace is not one-dimensional".into()))?;
    let (s, w) = positivize(&v)?;

    let (base_matrix, contracting) = if squared { (base.pow(2), &gen * &gen) } else { (base, gen) };
    let matrix = &(&s * &base_matrix) * &s.inverse()?;
    let contracting_eigenvalue = contracting.to_real_algebraic();
    Ok(PFData {
        source: m.clone(),
        base_matrix,
        matrix,
        change_of_basis: s,
        field,
        contracting,
        contracting_eigenvalue,
        eigenvector: w,
        squared,
        inverted,
    })
}

impl PFData {
    /// Checks `matrix * eigenvector = c * eigenvector` exactly.
    pub fn is_eigenpair(&self) -> bool {
        let a = to_field_matrix(&self.field, &self.matrix);
        a.iter().zip(&self.eigenvector).all(|(row, vi)| {
            let lhs = row
                .iter()
                .zip(&self.eigenvector)
                .fold(NumberFieldElement::zero(&self.field), |acc, (x, y)| &acc + &(x * y));
            lhs == &self.contracting * vi
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvector.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::IntPolynomial;

    #[test]
    fn golden_case_is_squared() {
        let pf = pf_data(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]])).unwrap();
        assert!(pf.squared && !pf.inverted);
        assert_eq!(pf.contracting_eigenvalue.minimal_polynomial(), &IntPolynomial::from_i64s(&[1, -3, 1]));
        let c = pf.contracting_eigenvalue.to_f64();
        assert!((c - 0.381966011250105).abs() < 1e-12);
        assert!(pf.is_eigenpair());
        assert!(pf.eigenvector.iter().all(|x| x.is_positive()));
        assert!(pf.change_of_basis.is_unimodular());
    }

    #[test]
    fn robust_cubics_cubic() {
        let pf = pf_data(&IntMatrix::from_i64(&[&[0, 1, 0], &[3, 0, 1], &[-1, 0, 0]])).unwrap();
        assert!(!pf.squared && !pf.inverted);
        assert_eq!(pf.contracting_eigenvalue.minimal_polynomial(), &IntPolynomial::from_i64s(&[1, -3, 0, 1]));
        assert!((pf.contracting_eigenvalue.to_f64() - 0.3472963553).abs() < 1e-9);
        assert!(pf.is_eigenpair());
        assert!(pf.eigenvector.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn outside_tight_uses_inverse() {
        // x^3 - 3x^2 + 1 has partition (2, 0, 1)
        let pf = pf_data(&IntMatrix::from_i64(&[&[3, 1, 0], &[0, 0, 1], &[-1, 0, 0]])).unwrap();
        assert!(pf.inverted);
        assert!(pf.is_eigenpair());
        let c = pf.contracting_eigenvalue.to_f64();
        assert!(c > 0.0 && c < 1.0);
    }

    #[test]
    fn rejects_non_tight_and_reducible() {
        assert!(matches!(pf_data(&IntMatrix::identity(2)), Err(Error::NotHyperbolic(_))));
        let q = IntMatrix::companion(&IntPolynomial::from_i64s(&[1, 4, 5, 2, 1])).unwrap();
        assert!(matches!(pf_data(&q), Err(Error::NotTight(2, 0, 2))));
        // diag blocks: [[2,1],[1,1]] (+) [[2,1],[1,1]] has reducible char poly
        let r = IntMatrix::from_i64(&[&[2, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 2, 1], &[0, 0, 1, 1]]);
        assert!(pf_data(&r).is_err());
    }

    #[test]
    fn positivize_examples() {
        let field = NumberField::from_real_root(IntPolynomial::from_i64s(&[-1, -1, 1]), 1).unwrap();
        let phi = NumberFieldElement::generator(&field);
        let one = NumberFieldElement::one(&field);
        let (s, w) = positivize(&[phi.clone(), -&one]).unwrap();
        assert!(s.is_unimodular());
        assert!(w.iter().all(|x| x.is_positive()));
        let (s, _) = positivize(&[phi.clone(), one.clone()]).unwrap();
        assert_eq!(s, IntMatrix::identity(2));
        let (s, w) = positivize(&[-&phi, -&one]).unwrap();
        assert_eq!(s, IntMatrix::identity(2).neg());
        assert_eq!(w, vec![phi, one]);
    }
}
