//! Closed forms for partial domination on paths, grids, complete products
//! and complete bipartite graphs, plus characterisations of influencing sets.
//!
//! These are reference values. The `check_*` functions compare each one
//! against the exact solver and return a [`Discrepancy`] on mismatch.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::domination::{gamma_p, influencing_set};
use crate::error::{Error, Result};
use crate::generators::{complete, complete_bipartite, grid, path};
use crate::graph::Graph;
use crate::graph6;
use crate::proportion::Proportion;
use crate::report::{Claim, Finding};
use crate::set::VertexSet;

/// `γ_{1/2}(P_n) = ⌈n/6⌉`.
pub fn gamma_half_path(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("path needs n >= 1"));
    }
    Ok(n.div_ceil(6))
}

/// `γ_{1/2}(P_m □ P_n)`: `⌈n/4⌉` when `m = 2`, otherwise `⌈mn/10⌉`.
pub fn gamma_half_grid(m: usize, n: usize) -> Result<usize> {
    if m < 2 || m > n {
        return Err(Error::invalid(format!(
            "grid formula needs 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    Ok(if m == 2 {
        n.div_ceil(4)
    } else {
        (m * n).div_ceil(10)
    })
}

/// `γ_{1/2}(K_m □ K_n)`: the least `k >= 1` with `k(m+n) - k² >= mn/2`,
/// searched in integers as `2k(m+n) - 2k² >= mn`.
pub fn gamma_half_complete_product(m: usize, n: usize) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("complete product needs m, n >= 1"));
    }
    let (m, n) = (m as u64, n as u64);
    let k = (1..)
        .find(|&k: &u64| 2 * k * (m + n) >= m * n + 2 * k * k)
        .expect("k = min(m, n) always satisfies the inequality");
    Ok(k as usize)
}

/// `⌈(m + n - √(m² + n²)) / 2⌉` evaluated exactly: the least `k` with
/// `m + n - 2k <= ⌊√(m² + n²)⌋`.
pub fn gamma_half_complete_product_closed_form(m: usize, n: usize) -> Result<usize> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("complete product needs m, n >= 1"));
    }
    let (m, n) = (m as u64, n as u64);
    let root = isqrt(m * m + n * n);
    Ok(((m + n).saturating_sub(root)).div_ceil(2) as usize)
}

fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    // Newton's iteration from above converges to the floor.
    let mut r = x;
    let mut next = (r + x / r) / 2;
    while next < r {
        r = next;
        next = (r + x / r) / 2;
    }
    r
}

/// `γ_{1/2}(P_n □ K_m) = ⌈mn / (2(m+2))⌉`.
pub fn gamma_half_path_complete(n: usize, m: usize) -> Result<usize> {
    if n < 2 || m < 2 {
        return Err(Error::invalid("path-complete formula needs n, m >= 2"));
    }
    Ok((m * n).div_ceil(2 * (m + 2)))
}

/// Lower bound `γ_p(G) γ_p(H)` for `γ_p(G □ H)`.
pub fn conjectured_lower_bound(gp_g: usize, gp_h: usize) -> usize {
    gp_g * gp_h
}

/// Influencing set of `K_{m,n}` in terms of its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteInfluence {
    /// `V_1 ∪ V_2`.
    Both,
    /// `V_2`, the side with `n` vertices.
    SmallSide,
}

impl BipartiteInfluence {
    /// As a vertex set under the [`complete_bipartite`] labelling.
    pub fn to_vertex_set(self, m: usize, n: usize) -> VertexSet {
        match self {
            BipartiteInfluence::Both => VertexSet::full(m + n),
            BipartiteInfluence::SmallSide => (m..m + n).collect(),
        }
    }
}

/// The p-influencing set of `K_{m,n}`, `m >= n >= 1`, for `p = k/(m+n)`:
/// both sides when `k <= n+1` or `k >= m+2`, the `n`-side when
/// `n+2 <= k <= m+1`; both sides for every `p > 0` when `m = n`.
pub fn influencing_complete_bipartite(
    m: usize,
    n: usize,
    p: Proportion,
) -> Result<BipartiteInfluence> {
    if n == 0 || m < n {
        return Err(Error::invalid(format!(
            "need m >= n >= 1, got m={m}, n={n}"
        )));
    }
    if p.is_zero() {
        return Err(Error::invalid("p must be positive"));
    }
    let Some(k) = p.as_fraction_of(m + n) else {
        return Err(Error::invalid(format!("p = {p} is not k/{}", m + n)));
    };
    if m == n {
        return Ok(BipartiteInfluence::Both);
    }
    let both = k <= n + 1 || k >= m + 2;
    let small = (n + 2..=m + 1).contains(&k);
    debug_assert!(both != small);
    Ok(if small {
        BipartiteInfluence::SmallSide
    } else {
        BipartiteInfluence::Both
    })
}

/// Which row of the path table applies, by residue of `n` mod 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCase {
    /// `p = (3k+1)/n` or `(3k+2)/n`, with the residue's qualifiers: all of `V`.
    Everything,
    /// `p = 3k/n` with the residue's qualifiers: all but the two ends.
    Interior,
    /// The residue's final row (`p = 1` or `p = (n-1)/n`).
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathInfluenceSpec {
    pub residue: usize,
    pub case: PathCase,
    /// 0-based: `v_i` is index `i - 1`.
    pub members: VertexSet,
}

/// Vertices `v_i` (1-based) for `i` in `first, first+3, ...` up to `last`.
fn every_third(first: usize, last: usize) -> VertexSet {
    (first..=last).step_by(3).map(|i| i - 1).collect()
}

/// p-influencing set of `P_n` for `p = j/n`, `1 <= j <= n`, from the case
/// table keyed on `n mod 3` and `j mod 3`.
pub fn influencing_path(n: usize, p: Proportion) -> Result<PathInfluenceSpec> {
    if n < 2 {
        return Err(Error::invalid("path table needs n >= 2"));
    }
    let j = match p.as_fraction_of(n) {
        Some(j) if j >= 1 => j,
        _ => return Err(Error::invalid(format!("p = {p} is not j/{n} with j >= 1"))),
    };
    let all = VertexSet::full(n);
    let interior = all.difference(VertexSet::singleton(0).with(n - 1));
    let residue = n % 3;
    let jr = j % 3;
    // One guard per row, in row order: everything, interior, boundary.
    let guards = match residue {
        0 => [jr != 0, jr == 0 && j < n, j == n],
        1 => [jr != 0, jr == 0 && j != n - 1, j == n - 1],
        _ => [jr == 1 || (jr == 2 && j < n), jr == 0, j == n],
    };
    assert_eq!(
        guards.iter().filter(|&&g| g).count(),
        1,
        "exactly one row applies for n={n}, j={j}"
    );
    let (case, members) = if guards[0] {
        (PathCase::Everything, all)
    } else if guards[1] {
        (PathCase::Interior, interior)
    } else {
        let m = match residue {
            // {v_2, v_5, ..., v_{n-1}}
            0 => every_third(2, n - 1),
            // V minus {v_1, v_4, ..., v_n}
            1 => all.difference(every_third(1, n)),
            // V minus {v_3, v_6, ..., v_{n-2}}
            _ => all.difference(every_third(3, n - 2)),
        };
        (PathCase::Boundary, m)
    };
    Ok(PathInfluenceSpec {
        residue,
        case,
        members,
    })
}

/// Intersection of all p-influencing sets (`p > 0`) of `P_n`, `n >= 3`.
pub fn influencing_intersection_path(n: usize) -> Result<VertexSet> {
    if n < 3 {
        return Err(Error::invalid("path intersection needs n >= 3"));
    }
    // Indices below are 1-based path labels.
    let label = |i: usize| i - 1;
    let set = match n % 3 {
        // {v_{2+3k} | 0 <= k <= (n-3)/3}
        0 => (0..=(n - 3) / 3).map(|k| label(2 + 3 * k)).collect(),
        // {v_{2+3k}, v_{3+3k} | 0 <= k <= (n-4)/3}
        1 => (0..=(n - 4) / 3)
            .flat_map(|k| [label(2 + 3 * k), label(3 + 3 * k)])
            .collect(),
        // {v_{1+3k}, v_{2+3j} | 0 < k <= (n-2)/3, 0 <= j < (n-2)/3}
        _ => {
            let top = (n - 2) / 3;
            (1..=top)
                .map(|k| label(1 + 3 * k))
                .chain((0..top).map(|j| label(2 + 3 * j)))
                .collect()
        }
    };
    Ok(set)
}

/// `(δ(G) + 1) / n`: at or below this proportion every vertex is in the
/// influencing set.
pub fn influencing_full_threshold(g: &Graph) -> Result<Proportion> {
    let d = g.min_degree()?;
    Proportion::of_order(d + 1, g.order())
}

/// A formula value or characterised set that disagrees with the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub family: &'static str,
    pub params: Vec<usize>,
    pub p: Proportion,
    pub formula: Value,
    pub solver: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Value {
    Count(usize),
    Set(VertexSet),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Count(c) => write!(f, "{c}"),
            Value::Set(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, x) in self.params.iter().enumerate() {
            f.write_str(if i == 0 { "(" } else { "," })?;
            write!(f, "{x}")?;
        }
        if !self.params.is_empty() {
            f.write_str(")")?;
        }
        write!(
            f,
            " p={} formula={} solver={}",
            self.p, self.formula, self.solver
        )
    }
}

fn compare(
    family: &'static str,
    params: &[usize],
    p: Proportion,
    formula: Value,
    solver: Value,
) -> Option<Discrepancy> {
    (formula != solver).then(|| Discrepancy {
        family,
        params: params.to_vec(),
        p,
        formula,
        solver,
    })
}

fn half_count(g: &Graph) -> Value {
    Value::Count(gamma_p(g, Proportion::HALF).gamma_p)
}

pub fn check_path_half(n: usize) -> Result<Option<Discrepancy>> {
    let f = gamma_half_path(n)?;
    Ok(compare(
        "path",
        &[n],
        Proportion::HALF,
        Value::Count(f),
        half_count(&path(n)?),
    ))
}

pub fn check_grid_half(m: usize, n: usize) -> Result<Option<Discrepancy>> {
    let f = gamma_half_grid(m, n)?;
    Ok(compare(
        "grid",
        &[m, n],
        Proportion::HALF,
        Value::Count(f),
        half_count(&grid(m, n)?),
    ))
}

pub fn check_complete_product_half(m: usize, n: usize) -> Result<Option<Discrepancy>> {
    let f = gamma_half_complete_product(m, n)?;
    let g = complete(m)?.cartesian_product(&complete(n)?)?;
    Ok(compare(
        "complete-product",
        &[m, n],
        Proportion::HALF,
        Value::Count(f),
        half_count(&g),
    ))
}

pub fn check_path_complete_half(n: usize, m: usize) -> Result<Option<Discrepancy>> {
    let f = gamma_half_path_complete(n, m)?;
    let g = path(n)?.cartesian_product(&complete(m)?)?;
    Ok(compare(
        "path-complete",
        &[n, m],
        Proportion::HALF,
        Value::Count(f),
        half_count(&g),
    ))
}

pub fn check_path_influence(n: usize, p: Proportion) -> Result<Option<Discrepancy>> {
    let f = influencing_path(n, p)?.members;
    let s = influencing_set(&path(n)?, p);
    Ok(compare(
        "path-influence",
        &[n],
        p,
        Value::Set(f),
        Value::Set(s),
    ))
}

pub fn check_bipartite_influence(m: usize, n: usize, p: Proportion) -> Result<Option<Discrepancy>> {
    let f = influencing_complete_bipartite(m, n, p)?.to_vertex_set(m, n);
    let s = influencing_set(&complete_bipartite(m, n)?, p);
    Ok(compare(
        "bipartite-influence",
        &[m, n],
        p,
        Value::Set(f),
        Value::Set(s),
    ))
}

/// Checks the influencing-set characterisations at small proportions, the
/// minimum-degree threshold and the maximum-degree threshold over every
/// `p = k/n`, `k >= 1`. Returns the violations.
pub fn influencing_lemma_findings(g: &Graph) -> Vec<Finding> {
    let n = g.order();
    let (Ok(min), Ok(max)) = (g.min_degree(), g.max_degree()) else {
        return Vec::new();
    };
    let id = graph6::encode(g);
    let all = g.vertices();
    let top: VertexSet = (0..n).filter(|&v| g.neighbors(v).len() == max).collect();
    let mut out = Vec::new();
    let mut report = |claim, p, expected: VertexSet, got: VertexSet| {
        if expected != got {
            out.push(Finding {
                claim,
                graph: id.clone(),
                p: Some(p),
                vertex: None,
                witness: Some(got),
                detail: format!("expected {expected}"),
            });
        }
    };
    for k in 1..=n {
        let p = Proportion::of_order(k, n).expect("k <= n");
        let infl = influencing_set(g, p);
        if k == 1 || (k == 2 && g.is_connected()) {
            report(Claim::SmallProportionsInfluenceAll, p, all, infl);
        }
        if k <= min + 1 {
            report(Claim::MinDegreeThreshold, p, all, infl);
        }
        if k == max + 1 {
            report(Claim::MaxDegreeThreshold, p, top, infl);
        }
    }
    out
}
