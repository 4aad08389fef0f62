//! Line-delimited, tab-separated records. Each stream opens with a header
//! line starting with `#` that names the fields in order.

use pdom_core::conjecture::{ScanReport, ScanSummary};
use pdom_core::VertexSet;

pub const GAMMA_HEADER: &str = "# order\tp\tgamma_p\twitness\tcovered\ttarget";
pub const INFLUENCE_HEADER: &str = "# kind\tp\tset";
pub const ENUMERATE_HEADER: &str = "# size\tset";
pub const SCAN_HEADER: &str = "# g6_g\tg6_h\tp\tgp_g\tgp_h\tgp_prod\tholds\twitness";

/// Comma-separated members, `-` for the empty set.
pub fn set_field(s: VertexSet) -> String {
    if s.is_empty() {
        return "-".into();
    }
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn scan_record(r: &ScanReport) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.g6_g,
        r.g6_h,
        r.p,
        r.gp_g,
        r.gp_h,
        r.gp_product,
        r.holds,
        r.witness.map_or("-".into(), set_field)
    )
}

pub fn summary_line(s: &ScanSummary) -> String {
    format!(
        "pairs={}, failures={}, regime={}, p={}",
        s.pairs,
        s.failures.len(),
        s.regime,
        s.p
    )
}
