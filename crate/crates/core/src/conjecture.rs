//! Exhaustive checks of `γ_p(G □ H) >= γ_p(G) γ_p(H)` and of the lower
//! bounds for products with paths, over all small graphs up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::domination::gamma_p;
use crate::error::{Error, Result};
use crate::formulas::conjectured_lower_bound;
use crate::generators::path;
use crate::graph::Graph;
use crate::graph6;
use crate::proportion::Proportion;
use crate::set::VertexSet;
use crate::MAX_VERTICES;

/// Largest order the permutation-based canonical form is used for.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Canonical form: the minimum, over all vertex permutations, of the
/// upper-triangle adjacency bit string read in graph6 order (most
/// significant bit first), together with a permutation achieving it.
///
/// `position[i]` is the vertex placed at position `i`.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    assert!(n <= 11, "canonical form is only for small graphs");
    let mut search = CanonSearch {
        adj: (0..n).map(|v| g.neighbors(v).bits()).collect(),
        total: n * n.saturating_sub(1) / 2,
        best: None,
        best_position: Vec::new(),
        position: Vec::with_capacity(n),
    };
    search.descend(0, 0);
    let code = search.best.unwrap_or(0);
    let position = if n == 0 {
        Vec::new()
    } else {
        search.best_position
    };
    (code, position)
}

struct CanonSearch {
    adj: Vec<u64>,
    total: usize,
    best: Option<u64>,
    best_position: Vec<usize>,
    position: Vec<usize>,
}

impl CanonSearch {
    fn descend(&mut self, used: u64, prefix: u64) {
        let j = self.position.len();
        let n = self.adj.len();
        if j == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_position.clone_from(&self.position);
            }
            return;
        }
        let len = j * (j + 1) / 2;
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut column = 0u64;
            for &u in &self.position {
                column = column << 1 | (self.adj[u] >> v & 1);
            }
            let next = prefix << j | column;
            if let Some(b) = self.best {
                if next > b >> (self.total - len) {
                    continue;
                }
            }
            self.position.push(v);
            self.descend(used | 1 << v, next);
            self.position.pop();
        }
    }
}

/// Relabels `g` into its canonical labelling.
pub fn canonical_graph(g: &Graph) -> (u64, Graph) {
    let (code, position) = canonical_form(g);
    let mut perm = alloc::vec![0; g.order()];
    for (i, &v) in position.iter().enumerate() {
        perm[v] = i;
    }
    (
        code,
        g.relabel(&perm)
            .expect("canonical position is a permutation"),
    )
}

/// Which graphs a scan ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Connected,
    AllGraphs,
    /// A family supplied by the caller.
    Supplied,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Connected => "connected",
            Regime::AllGraphs => "all",
            Regime::Supplied => "supplied",
        })
    }
}

/// Every graph of order `1..=max_order` up to isomorphism, in canonical
/// labelling, ordered by order and then canonical code.
///
/// Order `n` is grown from the order `n - 1` representatives by adding one
/// vertex with every possible neighbourhood (nonempty when only connected
/// graphs are wanted; deleting a non-cut vertex shows that suffices), and
/// isomorphic copies are merged by canonical form.
pub fn enumerate_graphs(max_order: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if max_order == 0 || max_order > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {max_order}"
        )));
    }
    let mut level = alloc::vec![Graph::empty(1)?];
    let mut out = level.clone();
    for n in 2..=max_order {
        let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
        let first_mask = if connected_only { 1u64 } else { 0 };
        for base in &level {
            let edges: Vec<(usize, usize)> = base.edges().collect();
            for mask in first_mask..1u64 << (n - 1) {
                let extra = VertexSet::from_bits(mask).iter().map(|u| (u, n - 1));
                let g = Graph::from_edges(n, edges.iter().copied().chain(extra))?;
                let (code, canon) = canonical_graph(&g);
                seen.entry(code).or_insert(canon);
            }
        }
        level = seen.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// All connected graphs of order `1..=max_order` up to isomorphism.
pub fn enumerate_connected_graphs(max_order: usize) -> Result<Vec<Graph>> {
    enumerate_graphs(max_order, true)
}

/// One checked pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub g6_g: String,
    pub g6_h: String,
    pub p: Proportion,
    pub gp_g: usize,
    pub gp_h: usize,
    pub gp_product: usize,
    pub holds: bool,
    /// A minimum p-dominating set of the product, kept when the inequality
    /// fails.
    pub witness: Option<VertexSet>,
}

impl ScanReport {
    pub fn is_consistent(&self) -> bool {
        self.holds == (self.gp_product >= conjectured_lower_bound(self.gp_g, self.gp_h))
            && self.witness.is_some() != self.holds
    }
}

fn check_cap(g: &Graph, h: &Graph) -> Result<()> {
    let order = g.order() * h.order();
    if order > MAX_VERTICES {
        Err(Error::CapExceeded {
            order,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Computes `γ_p(G)`, `γ_p(H)` and `γ_p(G □ H)` exactly and compares.
pub fn check_product_inequality(g: &Graph, h: &Graph, p: Proportion) -> Result<ScanReport> {
    check_cap(g, h)?;
    let product = g.cartesian_product(h)?;
    let gp_g = gamma_p(g, p).gamma_p;
    let gp_h = gamma_p(h, p).gamma_p;
    let prod = gamma_p(&product, p);
    let holds = prod.gamma_p >= conjectured_lower_bound(gp_g, gp_h);
    Ok(ScanReport {
        g6_g: graph6::encode(g),
        g6_h: graph6::encode(h),
        p,
        gp_g,
        gp_h,
        gp_product: prod.gamma_p,
        holds,
        witness: (!holds).then_some(prod.witness),
    })
}

/// Sorts a family by graph6 string, the order scans report in.
pub fn scan_order(graphs: Vec<Graph>) -> Vec<(String, Graph)> {
    let mut v: Vec<(String, Graph)> = graphs
        .into_iter()
        .map(|g| (graph6::encode(&g), g))
        .collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

/// Index pairs `(i, j)`, `i <= j < n`, in lexicographic order.
pub fn unordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)))
}

/// Fails with [`Error::CapExceeded`] if some pair's product is too large.
pub fn check_family_cap(family: &[(String, Graph)]) -> Result<()> {
    let largest = family.iter().map(|(_, g)| g.order()).max().unwrap_or(0);
    let graph = Graph::empty(largest)?;
    check_cap(&graph, &graph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub regime: Regime,
    pub p: Proportion,
    pub pairs: usize,
    pub failures: Vec<ScanReport>,
}

/// Checks every unordered pair (including `G` with itself) of the family.
pub fn scan_family(graphs: Vec<Graph>, p: Proportion, regime: Regime) -> Result<ScanSummary> {
    let family = scan_order(graphs);
    check_family_cap(&family)?;
    let mut pairs = 0;
    let mut failures = Vec::new();
    for (i, j) in unordered_pairs(family.len()) {
        pairs += 1;
        let report = check_product_inequality(&family[i].1, &family[j].1, p)?;
        if !report.holds {
            failures.push(report);
        }
    }
    Ok(ScanSummary {
        regime,
        p,
        pairs,
        failures,
    })
}

/// Scans all pairs of connected graphs of order at most `max_order`.
pub fn scan_conjecture(max_order: usize, p: Proportion) -> Result<ScanSummary> {
    if max_order * max_order > MAX_VERTICES {
        return Err(Error::CapExceeded {
            order: max_order * max_order,
            cap: MAX_VERTICES,
        });
    }
    scan_family(enumerate_connected_graphs(max_order)?, p, Regime::Connected)
}

/// Outcome of a product-with-path lower bound check at `p = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathProductCheck {
    /// `false` when `γ_{1/2}(G)` is outside the values the bound covers;
    /// `holds` is then vacuously true.
    pub applicable: bool,
    pub path_order: usize,
    pub gp_g: usize,
    pub gp_path: usize,
    pub gp_product: usize,
    /// The required lower bound on `gp_product`.
    pub bound: usize,
    pub holds: bool,
    /// For `γ_{1/2}(G) = 2` (resp. 3): whether `n >= 7` (resp. `n >= 13`),
    /// as the argument for the bound asserts.
    pub order_claim: Option<bool>,
}

/// `γ_{1/2}(G □ P_2) >= γ_{1/2}(G)`.
pub fn check_product_with_edge(g: &Graph) -> Result<PathProductCheck> {
    let p2 = path(2)?;
    check_cap(g, &p2)?;
    let gp_g = gamma_p(g, Proportion::HALF).gamma_p;
    let gp_product = gamma_p(&g.cartesian_product(&p2)?, Proportion::HALF).gamma_p;
    Ok(PathProductCheck {
        applicable: true,
        path_order: 2,
        gp_g,
        gp_path: 1,
        gp_product,
        bound: gp_g,
        holds: gp_product >= gp_g,
        order_claim: None,
    })
}

/// When `γ_{1/2}(G) = c` for `c` in `1..=3`:
/// `γ_{1/2}(G □ P_m) >= c · γ_{1/2}(P_m)`.
pub fn check_product_with_path(g: &Graph, m: usize) -> Result<PathProductCheck> {
    let pm = path(m)?;
    check_cap(g, &pm)?;
    let gp_g = gamma_p(g, Proportion::HALF).gamma_p;
    let gp_path = gamma_p(&pm, Proportion::HALF).gamma_p;
    let applicable = (1..=3).contains(&gp_g);
    let order_claim = match gp_g {
        2 => Some(g.order() >= 7),
        3 => Some(g.order() >= 13),
        _ => None,
    };
    if !applicable {
        return Ok(PathProductCheck {
            applicable,
            path_order: m,
            gp_g,
            gp_path,
            gp_product: 0,
            bound: 0,
            holds: true,
            order_claim,
        });
    }
    let gp_product = gamma_p(&g.cartesian_product(&pm)?, Proportion::HALF).gamma_p;
    let bound = gp_g * gp_path;
    Ok(PathProductCheck {
        applicable,
        path_order: m,
        gp_g,
        gp_path,
        gp_product,
        bound,
        holds: gp_product >= bound,
        order_claim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn canonical_form_is_invariant() {
        let g = figure2_graph();
        let (code, _) = canonical_form(&g);
        let perm = [3, 8, 0, 7, 1, 2, 6, 4, 5];
        assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).0, code);
        assert_ne!(canonical_form(&figure3_graph()).0, code);
        assert_eq!(canonical_form(&complete(4).unwrap()).0, 0b111111);
        assert_eq!(canonical_form(&Graph::empty(4).unwrap()).0, 0);
        // P_3 minimises to the two ends first: 0-1 absent, then 0-2, 1-2.
        assert_eq!(canonical_form(&path(3).unwrap()).0, 0b011);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_connected_graphs(4).unwrap().len(), 10);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 1 + 2 + 4 + 11);
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn product_inequality_examples() {
        let r = check_product_inequality(&path(2).unwrap(), &path(4).unwrap(), Proportion::HALF)
            .unwrap();
        assert_eq!((r.gp_g, r.gp_h, r.gp_product, r.holds), (1, 1, 1, true));
        assert!(r.is_consistent());

        let k3 = complete(3).unwrap();
        let r = check_product_inequality(&k3, &k3, Proportion::HALF).unwrap();
        assert_eq!((r.gp_g, r.gp_h, r.gp_product, r.holds), (1, 1, 1, true));

        let p7 = path(7).unwrap();
        let r = check_product_inequality(&p7, &p7, Proportion::HALF).unwrap();
        assert_eq!((r.gp_g, r.gp_h, r.gp_product, r.holds), (2, 2, 5, true));

        let p9 = path(9).unwrap();
        assert!(matches!(
            check_product_inequality(&p9, &p9, Proportion::HALF),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn small_scans() {
        let s = scan_conjecture(4, Proportion::HALF).unwrap();
        assert_eq!((s.pairs, s.failures.len()), (55, 0));
        let s = scan_conjecture(2, Proportion::ONE).unwrap();
        assert_eq!((s.pairs, s.failures.len()), (3, 0));
        assert!(matches!(
            scan_conjecture(9, Proportion::HALF),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn product_with_path_examples() {
        let c = check_product_with_edge(&star(5).unwrap()).unwrap();
        assert!(c.holds && c.gp_g == 1);

        let c = check_product_with_path(&path(7).unwrap(), 6).unwrap();
        assert_eq!((c.gp_g, c.gp_path, c.gp_product, c.bound), (2, 1, 5, 2));
        assert!(c.holds && c.applicable);
        assert_eq!(c.order_claim, Some(true));

        let c = check_product_with_path(&path(13).unwrap(), 2).unwrap();
        assert_eq!((c.gp_g, c.gp_path, c.bound), (3, 1, 3));
        assert!(c.holds && c.gp_product >= 3);
        assert_eq!(c.order_claim, Some(true));

        // Eight isolated vertices need four at p = 1/2.
        let g = Graph::empty(8).unwrap();
        let c = check_product_with_path(&g, 2).unwrap();
        assert!(!c.applicable && c.holds);

        // Three disjoint edges: γ_{1/2} = 2 on only six vertices.
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let c = check_product_with_path(&g, 3).unwrap();
        assert_eq!((c.gp_g, c.order_claim), (2, Some(false)));
    }
}
