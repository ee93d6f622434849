use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Transitive Galois groups of irreducible polynomials of degree 2 to 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GaloisGroupTag {
    C2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl GaloisGroupTag {
    pub const ALL: [GaloisGroupTag; 8] = [
        GaloisGroupTag::C2,
        GaloisGroupTag::C3,
        GaloisGroupTag::S3,
        GaloisGroupTag::C4,
        GaloisGroupTag::V4,
        GaloisGroupTag::D4,
        GaloisGroupTag::A4,
        GaloisGroupTag::S4,
    ];

    pub fn order(self) -> u64 {
        match self {
            GaloisGroupTag::C2 => 2,
            GaloisGroupTag::C3 => 3,
            GaloisGroupTag::S3 => 6,
            GaloisGroupTag::C4 | GaloisGroupTag::V4 => 4,
            GaloisGroupTag::D4 => 8,
            GaloisGroupTag::A4 => 12,
            GaloisGroupTag::S4 => 24,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GaloisGroupTag::C2 => "C2",
            GaloisGroupTag::C3 => "C3",
            GaloisGroupTag::S3 => "S3",
            GaloisGroupTag::C4 => "C4",
            GaloisGroupTag::V4 => "V4",
            GaloisGroupTag::D4 => "D4",
            GaloisGroupTag::A4 => "A4",
            GaloisGroupTag::S4 => "S4",
        }
    }
}

impl fmt::Display for GaloisGroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GaloisGroupTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        GaloisGroupTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Galois group tag {s:?}"))
    }
}

/// Orders of all subgroups and of all normal subgroups of a tagged group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOrderTable {
    pub tag: GaloisGroupTag,
    pub subgroup_orders: BTreeSet<u64>,
    pub normal_subgroup_orders: BTreeSet<u64>,
}

// Frozen from a brute-force subgroup enumeration over permutation
// representations (see tests/group_tables.rs).
const TABLES: [(GaloisGroupTag, &[u64], &[u64]); 8] = [
    (GaloisGroupTag::C2, &[1, 2], &[1, 2]),
    (GaloisGroupTag::C3, &[1, 3], &[1, 3]),
    (GaloisGroupTag::S3, &[1, 2, 3, 6], &[1, 3, 6]),
    (GaloisGroupTag::C4, &[1, 2, 4], &[1, 2, 4]),
    (GaloisGroupTag::V4, &[1, 2, 4], &[1, 2, 4]),
    (GaloisGroupTag::D4, &[1, 2, 4, 8], &[1, 2, 4, 8]),
    (GaloisGroupTag::A4, &[1, 2, 3, 4, 12], &[1, 4, 12]),
    (GaloisGroupTag::S4, &[1, 2, 3, 4, 6, 8, 12, 24], &[1, 4, 12, 24]),
];

pub fn group_table(tag: GaloisGroupTag) -> GroupOrderTable {
    let (_, subs, normals) = TABLES.iter().find(|(t, _, _)| *t == tag).expect("all tags tabled");
    GroupOrderTable {
        tag,
        subgroup_orders: subs.iter().copied().collect(),
        normal_subgroup_orders: normals.iter().copied().collect(),
    }
}
