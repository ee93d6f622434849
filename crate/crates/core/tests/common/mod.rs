//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the algorithms under test beyond plain data
//! conversion.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use torusaf::IntPolynomial;

/// Float coefficients, constant term first.
pub fn float_coeffs(p: &IntPolynomial) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Durand-Kerner iteration for a monic polynomial given low-to-high.
pub fn durand_kerner(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = horner(c, z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Roots together with inclusion radii: for monic `p` of degree `n`, the
/// disk of radius `n |W_i|` around `z_i`, with Weierstrass correction
/// `W_i = p(z_i) / prod_{j != i} (z_i - z_j)`, contains a root, and when the
/// disks are pairwise disjoint each holds exactly one.
pub fn certified_roots(p: &IntPolynomial) -> Option<Vec<(Complex64, f64)>> {
    let c = float_coeffs(p);
    let n = c.len() - 1;
    let z = durand_kerner(&c);
    let disks: Vec<(Complex64, f64)> = (0..n)
        .map(|i| {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            // slack for rounding in evaluating p(z_i)
            let w = horner(&c, z[i]).norm() / denom.norm() + 1e-12;
            (z[i], n as f64 * w)
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            if (disks[i].0 - disks[j].0).norm() <= disks[i].1 + disks[j].1 {
                return None;
            }
        }
    }
    Some(disks)
}

/// Inside/on/outside counts from certified disks, provided every disk stays
/// at least `margin` away from the unit circle.
pub fn numeric_partition(p: &IntPolynomial, margin: f64) -> Option<(usize, usize, usize)> {
    let disks = certified_roots(p)?;
    let mut inside = 0;
    let mut outside = 0;
    for (z, r) in disks {
        let gap = z.norm() - 1.0;
        if gap.abs() < margin + r {
            return None;
        }
        if gap < 0.0 {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    Some((inside, 0, outside))
}

/// Deterministic corpus of 50 monic integer polynomials of degree 2 to 4,
/// with nonzero constant term, whose roots all sit at least `1e-3` from the
/// unit circle and are certified.
pub fn circle_corpus() -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut per_degree = [0usize; 5];
    while out.len() < 50 {
        let deg = 2 + (next() % 3) as usize;
        if per_degree[deg] >= 17 {
            continue;
        }
        let mut coeffs: Vec<i64> = (0..deg).map(|_| (next() % 11) as i64 - 5).collect();
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let p = IntPolynomial::from_i64s(&coeffs);
        if numeric_partition(&p, 1e-3).is_some() && !out.contains(&p) {
            per_degree[deg] += 1;
            out.push(p);
        }
    }
    out
}

/// A permutation of `0..n` as the image list.
pub type Perm = Vec<usize>;

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn closure(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut group: BTreeSet<Perm> = BTreeSet::from([(0..n).collect()]);
    let mut frontier: Vec<Perm> = group.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for h in gens {
            let prod = compose(&g, h);
            if group.insert(prod.clone()) {
                frontier.push(prod);
            }
        }
    }
    group
}

pub fn cycle(n: usize, cycles: &[&[usize]]) -> Perm {
    let mut p: Perm = (0..n).collect();
    for c in cycles {
        for k in 0..c.len() {
            p[c[k]] = c[(k + 1) % c.len()];
        }
    }
    p
}

/// Every subgroup of `group`. Starting from the trivial group, each known
/// subgroup is joined with each single element until nothing new appears;
/// any subgroup is reached by adding its generators one at a time.
pub fn all_subgroups(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<BTreeSet<Perm>> {
    let trivial: BTreeSet<Perm> = BTreeSet::from([(0..n).collect()]);
    let mut subs = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in group.iter().filter(|g| !h.contains(*g)) {
            let mut gens: Vec<Perm> = h.iter().cloned().collect();
            gens.push(g.clone());
            let joined = closure(n, &gens);
            if subs.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    subs
}

pub fn is_normal(sub: &BTreeSet<Perm>, group: &BTreeSet<Perm>) -> bool {
    group.iter().all(|g| {
        let gi = inverse(g);
        sub.iter().all(|h| sub.contains(&compose(&compose(g, h), &gi)))
    })
}

/// Permutation models of the eight groups.
pub fn permutation_model(name: &str) -> (usize, BTreeSet<Perm>) {
    let (n, gens): (usize, Vec<Perm>) = match name {
        "C2" => (2, vec![cycle(2, &[&[0, 1]])]),
        "C3" => (3, vec![cycle(3, &[&[0, 1, 2]])]),
        "S3" => (3, vec![cycle(3, &[&[0, 1, 2]]), cycle(3, &[&[0, 1]])]),
        "C4" => (4, vec![cycle(4, &[&[0, 1, 2, 3]])]),
        "V4" => (4, vec![cycle(4, &[&[0, 1], &[2, 3]]), cycle(4, &[&[0, 2], &[1, 3]])]),
        "D4" => (4, vec![cycle(4, &[&[0, 1, 2, 3]]), cycle(4, &[&[0, 2]])]),
        "A4" => (4, vec![cycle(4, &[&[0, 1, 2]]), cycle(4, &[&[0, 1], &[2, 3]])]),
        "S4" => (4, vec![cycle(4, &[&[0, 1, 2, 3]]), cycle(4, &[&[0, 1]])]),
        other => panic!("no model for {other}"),
    };
    (n, closure(n, &gens))
}

/// Subgroup orders and normal-subgroup orders by enumeration.
pub fn enumerated_orders(name: &str) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let (n, g) = permutation_model(name);
    let subs = all_subgroups(n, &g);
    let orders = subs.iter().map(|s| s.len() as u64).collect();
    let normal = subs.iter().filter(|s| is_normal(s, &g)).map(|s| s.len() as u64).collect();
    (orders, normal)
}

/// Subgroups of the symmetric group on `n <= 4` letters, computed once.
fn symmetric_subgroups(n: usize) -> &'static [BTreeSet<Perm>] {
    static CACHE: [OnceLock<Vec<BTreeSet<Perm>>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n].get_or_init(|| {
        let sym = closure(n, &[cycle(n, &[&(0..n).collect::<Vec<_>>()]), cycle(n, &[&[0, 1]])]);
        all_subgroups(n, &sym).into_iter().collect()
    })
}

fn is_integer(z: Complex64) -> bool {
    let tol = 1e-6 * (1.0 + z.norm());
    z.im.abs() < tol && (z.re - z.re.round()).abs() < tol
}

/// Order of the Galois group of an irreducible monic `p` of degree at most 4.
///
/// For a subgroup `H` of the symmetric group on the roots, the orbit sum
/// `F_H = sum_{s in H} prod_i r_{s(i)}^(e_i)` is an algebraic integer that is
/// fixed by the Galois group whenever the group lies in `H`, hence then a
/// rational integer. Conversely a generic `F_H` is only fixed by `H`. The
/// smallest `H` for which three independent orbit sums are integers has the
/// order of the Galois group.
pub fn galois_order_by_invariants(p: &IntPolynomial) -> u64 {
    let roots = durand_kerner(&float_coeffs(p));
    let n = roots.len();
    // shifting the roots by an integer keeps them algebraic integers and
    // breaks the accidental symmetries of very special polynomials
    let patterns: [(f64, [u32; 4]); 3] = [(0.0, [0, 1, 2, 3]), (2.0, [1, 2, 3, 5]), (3.0, [4, 1, 0, 2])];
    let orbit_sum = |h: &BTreeSet<Perm>, (shift, exps): (f64, [u32; 4])| -> Complex64 {
        h.iter()
            .map(|s| (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (roots[s[i]] + shift).powu(exps[i])))
            .sum()
    };
    symmetric_subgroups(n)
        .iter()
        .filter(|h| patterns.iter().all(|&pat| is_integer(orbit_sum(h, pat))))
        .map(|h| h.len() as u64)
        .min()
        .expect("the full symmetric group always qualifies")
}
