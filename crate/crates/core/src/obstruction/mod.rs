//! From a monodromy matrix to a robustness verdict, and scanners for the two
//! matrix families with known robust members.

mod analysis;
mod families;
mod report;

pub use analysis::{analyze, BundleAnalysis, BundleFlags};
pub use families::{
    cubic_family_matrix, quartic_family, quartic_family_matrix, scan_cubic_family, scan_cubic_family_sequential,
    scan_quartic_family, QuarticFamilyMember,
};
pub use report::{
    no_map_test, report_for, robustness_report, target_profile, ObstructionReport, TargetProfile, Verdict,
};
