//! Finite truncations of the stationary Bratteli diagram.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{AlgebraSummary, FundamentalAFAlgebra};
use crate::serde_util;

/// `multiplicity` edges from vertex `from` on `level` to vertex `to` on
/// `level + 1`, taken from `incidence[from][to]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BratteliEdge {
    pub level: usize,
    pub from: usize,
    pub to: usize,
    #[serde(with = "serde_util::bigint")]
    pub multiplicity: BigInt,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BratteliDiagram {
    #[serde(flatten)]
    pub algebra: AlgebraSummary,
    pub depth: usize,
    /// Vertex count per level.
    pub levels: Vec<usize>,
    pub edges: Vec<BratteliEdge>,
}

/// The first `depth` levels of the diagram in which every pair of adjacent
/// levels is joined according to the incidence matrix.
pub fn export_bratteli(a: &FundamentalAFAlgebra, depth: usize) -> BratteliDiagram {
    let depth = depth.max(1);
    let n = a.dim();
    let mut edges = Vec::new();
    for level in 0..depth - 1 {
        for from in 0..n {
            for to in 0..n {
                let mult = a.incidence.get(from, to);
                if !mult.is_zero() {
                    edges.push(BratteliEdge { level, from, to, multiplicity: mult.clone() });
                }
            }
        }
    }
    BratteliDiagram { algebra: a.summary(), depth, levels: vec![n; depth], edges }
}

impl BratteliDiagram {
    /// Graphviz text with vertices `v{level}_{index}`. Multiplicities above
    /// one become edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=TB;\n  node [shape=circle, label=\"\"];\n");
        for (level, &count) in self.levels.iter().enumerate() {
            let names: Vec<String> = (0..count).map(|i| format!("v{level}_{i}")).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
        for e in &self.edges {
            let _ = write!(out, "  v{}_{} -> v{}_{}", e.level, e.from, e.level + 1, e.to);
            if e.multiplicity > BigInt::from(1) {
                let _ = write!(out, " [label=\"{}\"]", e.multiplicity);
            }
            out.push_str(";\n");
        }
        out.push_str("}\n");
        out
    }
}
