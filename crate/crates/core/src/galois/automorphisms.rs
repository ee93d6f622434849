//! Automorphisms of `Q[x]/(p)` found by numeric interpolation and certified
//! by exact reduction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{discriminant, IntPolynomial, QPolynomial, Rational};

use super::{galois_group, is_irreducible, GaloisGroupTag};

/// All complex roots of a nonzero integer polynomial by Aberth iteration in
/// double precision. Multiple roots converge slowly and come back with
/// reduced accuracy.
pub fn complex_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let n = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let lc = coeffs[n];
    let radius = 1.0 + coeffs[..n].iter().map(|c| (c / lc).abs()).fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut v = Complex64::zero();
        let mut d = Complex64::zero();
        for c in coeffs.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v == Complex64::zero() {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            worst = worst.max(step.norm() / z[i].norm().max(1.0));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..n {
            let mut next = perm.clone();
            next.insert(pos, n - 1);
            out.push(next);
        }
    }
    out
}

/// Complex coefficients of the interpolant of `(x_i, y_i)`, lowest first.
fn lagrange(xs: &[Complex64], ys: &[Complex64]) -> Vec<Complex64> {
    let n = xs.len();
    let mut out = vec![Complex64::zero(); n];
    for i in 0..n {
        let mut basis = vec![Complex64::new(1.0, 0.0)];
        let mut denom = Complex64::new(1.0, 0.0);
        for j in (0..n).filter(|&j| j != i) {
            let mut next = vec![Complex64::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xs[j];
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        let scale = ys[i] / denom;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * scale;
        }
    }
    out
}

/// Polynomials `g` of degree below `deg p` with `p(g(x)) = 0 mod p`, one per
/// automorphism of `Q[x]/(p)`, for monic irreducible `p` of degree 1 to 4.
///
/// Candidates come from interpolating root permutations. Since `disc(p)`
/// times any algebraic integer of the field lies in `Z[x]/(p)`, each
/// candidate is rounded on the lattice `Z / disc(p)` and kept only if the
/// exact reduction vanishes. A candidate lost to floating-point error would
/// make the count too small, never too large.
pub fn field_automorphisms(p: &IntPolynomial) -> Result<Vec<QPolynomial>> {
    if !is_irreducible(p)? {
        return Err(Error::Reducible(p.to_string()));
    }
    let n = p.degree().unwrap();
    if n == 1 {
        return Ok(vec![QPolynomial::x()]);
    }
    let disc = discriminant(p);
    let disc_f = disc.to_f64().unwrap_or(f64::INFINITY);
    let roots = complex_roots(p);
    let pq = p.to_qpoly();
    let mut found = BTreeSet::new();
    for perm in permutations(n) {
        let ys: Vec<Complex64> = perm.iter().map(|&k| roots[k]).collect();
        let approx = lagrange(&roots, &ys);
        let mut coeffs = Vec::with_capacity(n);
        let mut ok = true;
        for c in &approx {
            let scaled = c * disc_f;
            let tol = 1e-6 * scaled.norm().max(1.0);
            if scaled.im.abs() > tol || (scaled.re - scaled.re.round()).abs() > tol {
                ok = false;
                break;
            }
            let num = BigInt::from(scaled.re.round() as i128);
            coeffs.push(Rational::new(num, disc.clone()));
        }
        if !ok {
            continue;
        }
        let g = QPolynomial::new(coeffs);
        let image = pq
            .coeffs()
            .iter()
            .rev()
            .fold(QPolynomial::zero(), |acc, c| (&(&acc * &g) + &QPolynomial::constant(c.clone())).rem(&pq));
        if image.is_zero() {
            found.insert(g.coeffs().to_vec());
        }
    }
    Ok(found.into_iter().map(QPolynomial::new).collect())
}

/// Number of roots of `p` lying in the field generated by one of them, i.e.
/// the order of that field's automorphism group.
///
/// Degree 2 always gives 2 and degree 3 gives 3 exactly for cyclic cubics.
/// Degree 4 counts certified automorphisms from [`field_automorphisms`].
pub fn aut_order_of_pf_field(p: &IntPolynomial) -> Result<usize> {
    match p.degree() {
        Some(2) => galois_group(p).map(|_| 2),
        Some(3) => galois_group(p).map(|g| if g == GaloisGroupTag::C3 { 3 } else { 1 }),
        Some(1) | Some(4) => field_automorphisms(p).map(|v| v.len()),
        Some(n) => Err(Error::DegreeOutOfScope(n, "1 to 4")),
        None => Err(Error::InvalidPolynomial("zero polynomial".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn aberth_finds_roots() {
        let r = complex_roots(&p(&[1, 0, 1]));
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z * z + 1.0).norm() < 1e-12);
        }
        let r = complex_roots(&p(&[-6, 11, -6, 1]));
        let mut re: Vec<f64> = r.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (got, want) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(aut_order_of_pf_field(&p(&[1, -3, 0, 1])).unwrap(), 3);
        assert_eq!(aut_order_of_pf_field(&p(&[-1, -1, 0, 1])).unwrap(), 1);
        assert_eq!(aut_order_of_pf_field(&p(&[-1, -1, 1])).unwrap(), 2);
    }

    #[test]
    fn search_agrees_with_cubic_rule() {
        assert_eq!(field_automorphisms(&p(&[1, -3, 0, 1])).unwrap().len(), 3);
        assert_eq!(field_automorphisms(&p(&[-1, -1, 0, 1])).unwrap().len(), 1);
        assert_eq!(field_automorphisms(&p(&[-1, -1, 1])).unwrap().len(), 2);
    }

    #[test]
    fn quartic_automorphism_counts() {
        // C4 and V4 fields are normal, D4 fields have two automorphisms,
        // A4 and S4 fields only the identity.
        assert_eq!(aut_order_of_pf_field(&p(&[1, 1, 1, 1, 1])).unwrap(), 4);
        assert_eq!(aut_order_of_pf_field(&p(&[1, 0, -10, 0, 1])).unwrap(), 4);
        assert_eq!(aut_order_of_pf_field(&p(&[1, -1, -1, -1, 1])).unwrap(), 2);
        assert_eq!(aut_order_of_pf_field(&p(&[-2, 0, 0, 0, 1])).unwrap(), 2);
        assert_eq!(aut_order_of_pf_field(&p(&[12, 8, 0, 0, 1])).unwrap(), 1);
        assert_eq!(aut_order_of_pf_field(&p(&[-1, -1, 0, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn identity_always_present() {
        let auts = field_automorphisms(&p(&[1, -1, -1, -1, 1])).unwrap();
        assert!(auts.contains(&QPolynomial::x()));
    }
}
