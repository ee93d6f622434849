//! Parsing of matrix arguments and integer ranges.

use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use torusaf::IntMatrix;

/// Inline JSON (`[[0,1],[1,1]]`) when the argument starts with `[`,
/// otherwise a path to a file holding the same JSON.
pub fn parse_matrix(arg: &str) -> Result<IntMatrix, String> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(Path::new(arg)).map_err(|e| format!("cannot read matrix file {arg:?}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed matrix {:?}: {e}", text.trim()))
}

/// `lo..hi` (inclusive) or a single integer. `lo > hi` is an empty range.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected an integer or lo..hi, got {s:?}");
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}
