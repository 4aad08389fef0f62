//! Parallel product-inequality scans over graph families.

use pdom_core::conjecture::{
    check_family_cap, check_product_inequality, enumerate_graphs, scan_order, unordered_pairs,
    Regime, ScanSummary,
};
use pdom_core::{graph6, Error, Graph, Position, Proportion, Result};
use rayon::prelude::*;

/// Same result as the sequential scan: pairs are checked in parallel and
/// failures are collected in pair order.
pub fn scan_family(graphs: Vec<Graph>, p: Proportion, regime: Regime) -> Result<ScanSummary> {
    let family = scan_order(graphs);
    check_family_cap(&family)?;
    let pairs: Vec<(usize, usize)> = unordered_pairs(family.len()).collect();
    let reports = pairs
        .par_iter()
        .map(|&(i, j)| check_product_inequality(&family[i].1, &family[j].1, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSummary {
        regime,
        p,
        pairs: pairs.len(),
        failures: reports.into_iter().filter(|r| !r.holds).collect(),
    })
}

/// All graphs (or connected graphs) of order `1..=max_order`.
pub fn scan_enumerated(
    max_order: usize,
    p: Proportion,
    connected_only: bool,
) -> Result<ScanSummary> {
    let product_order = max_order * max_order;
    if product_order > pdom_core::MAX_VERTICES {
        return Err(Error::CapExceeded {
            order: product_order,
            cap: pdom_core::MAX_VERTICES,
        });
    }
    let regime = if connected_only {
        Regime::Connected
    } else {
        Regime::AllGraphs
    };
    scan_family(enumerate_graphs(max_order, connected_only)?, p, regime)
}

/// One graph6 string per line; blank lines and `#` lines are skipped.
pub fn read_graph6_family(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_text = line.trim();
        if line_text.is_empty() || line_text.starts_with('#') {
            continue;
        }
        out.push(graph6::decode(line_text).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::parse(Position::Line(i + 1), reason),
            other => other,
        })?);
    }
    Ok(out)
}
