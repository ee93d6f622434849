//! The divisibility test and the robustness verdict built on it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrixcore::IntMatrix;

use super::analysis::{analyze, BundleAnalysis};

/// Possible nontrivial automorphism-group orders of the PF field of a target
/// bundle of the given dimension. An inapplicable profile carries no orders
/// and blocks any verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetProfile {
    pub dimension: usize,
    pub candidate_orders: BTreeSet<u64>,
    pub assumptions: String,
    pub applicable: bool,
}

impl TargetProfile {
    /// User-supplied profile; order 1 is dropped since it divides everything.
    pub fn custom(dimension: usize, orders: impl IntoIterator<Item = u64>, assumptions: &str) -> Self {
        TargetProfile {
            dimension,
            candidate_orders: orders.into_iter().filter(|&t| t > 1).collect(),
            assumptions: assumptions.to_string(),
            applicable: true,
        }
    }
}

/// Built-in profiles: dimension 2 gives `{2}`; dimension 3 gives `{3, 6}`
/// when every target is assumed to have positive discriminant and is
/// inapplicable otherwise, because a cubic with negative discriminant has a
/// PF field without nontrivial automorphisms.
pub fn target_profile(dimension: usize, assume_d_positive: bool) -> Result<TargetProfile> {
    match (dimension, assume_d_positive) {
        (2, _) => Ok(TargetProfile::custom(2, [2], "none")),
        (3, true) => Ok(TargetProfile::custom(3, [3, 6], "D>0")),
        (3, false) => Ok(TargetProfile {
            dimension: 3,
            candidate_orders: BTreeSet::new(),
            assumptions: "none (targets with D<0 have trivial automorphism group)".into(),
            applicable: false,
        }),
        (d, _) => Err(Error::InvalidArgument(format!("target dimension {d} is not supported (use 2 or 3)"))),
    }
}

/// True iff no candidate order divides `k`.
pub fn no_map_test(k: u64, profile: &TargetProfile) -> bool {
    profile.candidate_orders.iter().all(|t| !k.is_multiple_of(*t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Robust,
    NotObstructed,
    Inapplicable,
}

impl Verdict {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Robust => 0,
            Verdict::NotObstructed => 1,
            Verdict::Inapplicable => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    #[serde(flatten)]
    pub source: BundleAnalysis,
    pub target: TargetProfile,
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

/// Reason the divisibility test cannot be run, if any.
fn blocker(a: &BundleAnalysis, profile: &TargetProfile) -> Option<String> {
    let f = &a.flags;
    if !f.unimodular {
        return Some(format!(
            "det = {} is not +-1, so the matrix is not a torus-bundle monodromy",
            a.matrix.determinant()
        ));
    }
    if !f.hyperbolic {
        return Some(format!(
            "{} eigenvalue(s) lie on the unit circle, so the matrix is not hyperbolic",
            a.partition.on
        ));
    }
    if !f.tight {
        return Some(format!(
            "partition (inside, on, outside) = ({}, {}, {}) has no isolated eigenvalue, so the matrix is not tight",
            a.partition.inside, a.partition.on, a.partition.outside
        ));
    }
    match f.irreducible {
        Some(false) => return Some(format!("characteristic polynomial {} is reducible", a.char_poly)),
        None => return Some(format!("irreducibility of {} is not decided in degree {}", a.char_poly, a.dim())),
        Some(true) => {}
    }
    if a.galois.is_none() {
        return Some(format!("Galois data is only computed for degree 2 to 4, not {}", a.dim()));
    }
    if !profile.applicable {
        return Some(format!(
            "target profile for dimension {} is inapplicable: {}",
            profile.dimension, profile.assumptions
        ));
    }
    None
}

/// Runs the divisibility test of the analysis of `m` against `profile`,
/// recording every step.
pub fn report_for(a: BundleAnalysis, profile: TargetProfile) -> ObstructionReport {
    let mut trace = vec![format!("char = {}, discriminant = {}", a.char_poly, a.discriminant)];
    if let (Some(g), Some(k)) = (a.galois, a.k) {
        trace.push(format!("Galois group {g}, k = {k}"));
    }
    let verdict = if let Some(why) = blocker(&a, &profile) {
        trace.push(why);
        Verdict::Inapplicable
    } else if a.dim() == 2 {
        trace.push("no torus bundle of dimension below 2 exists, so the bundle is robust formally (vacuous)".into());
        Verdict::Robust
    } else if profile.dimension >= a.dim() {
        trace.push(format!("target dimension {} is not smaller than source dimension {}", profile.dimension, a.dim()));
        Verdict::Inapplicable
    } else {
        let k = a.k.expect("galois data checked");
        for t in &profile.candidate_orders {
            let rel = if k.is_multiple_of(*t) { "divides" } else { "does not divide" };
            trace.push(format!("t' = {t} {rel} k = {k}"));
        }
        if no_map_test(k, &profile) {
            trace.push(format!("no continuous map to a {}-dimensional target of this profile", profile.dimension));
            Verdict::Robust
        } else {
            trace.push("some candidate order divides k; no obstruction".into());
            Verdict::NotObstructed
        }
    };
    ObstructionReport { source: a, target: profile, verdict, trace }
}

/// Analysis of `m` plus the verdict against the built-in profile for the
/// given target dimension.
pub fn robustness_report(m: &IntMatrix, dimension: usize, assume_d_positive: bool) -> Result<ObstructionReport> {
    let profile = target_profile(dimension, assume_d_positive)?;
    Ok(report_for(analyze(m)?, profile))
}
