//! Exact p-domination: the p-domination number, every minimum p-dominating
//! set, and influencing sets.
//!
//! The search is a branch and bound over candidate sizes `k = 0, 1, 2, ...`.
//! A partial selection `S` with `r` picks left is abandoned as soon as
//! `|N[S]| + r * max_remaining |N[v]|` falls short of the coverage target.

use core::ops::ControlFlow;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::locating::greedy_high_degree;
use crate::proportion::Proportion;
use crate::set::VertexSet;

/// The p-domination number together with the lexicographically smallest
/// minimum p-dominating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma_p: usize,
    pub witness: VertexSet,
}

/// Every minimum p-dominating set, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPSetFamily {
    pub size: usize,
    pub sets: Vec<VertexSet>,
}

impl GammaPSetFamily {
    /// Union of all members: the p-influencing set.
    pub fn union(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }
}

/// Least `c` with `c / n >= p`, in integer arithmetic.
pub fn coverage_target(n: usize, p: Proportion) -> usize {
    p.ceil_of(n)
}

/// Whether `|N[S]|` reaches the coverage target. Members of `s` outside the
/// graph are ignored.
pub fn is_p_dominating(g: &Graph, s: VertexSet, p: Proportion) -> bool {
    g.cover(s.intersection(g.vertices())).len() >= coverage_target(g.order(), p)
}

/// Candidate vertices in a fixed visiting order, with their closed
/// neighbourhoods and the suffix maxima of the neighbourhood sizes.
struct Candidates {
    vertex: Vec<usize>,
    closed: Vec<VertexSet>,
    suffix_max: Vec<usize>,
}

impl Candidates {
    fn new(g: &Graph, order: Vec<usize>) -> Self {
        let closed: Vec<VertexSet> = order.iter().map(|&v| g.closed(v)).collect();
        let mut suffix_max = alloc::vec![0; order.len() + 1];
        for i in (0..order.len()).rev() {
            suffix_max[i] = suffix_max[i + 1].max(closed[i].len());
        }
        Candidates {
            vertex: order,
            closed,
            suffix_max,
        }
    }

    fn ascending(g: &Graph) -> Self {
        Self::new(g, (0..g.order()).collect())
    }

    fn by_descending_coverage(g: &Graph) -> Self {
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(g.closed(v).len()));
        Self::new(g, order)
    }

    fn len(&self) -> usize {
        self.vertex.len()
    }

    #[inline]
    fn hopeless(&self, start: usize, picks: usize, covered: VertexSet, target: usize) -> bool {
        covered.len() + picks * self.suffix_max[start] < target
    }

    /// Whether some set of at most `picks` further candidates from `start`
    /// on reaches the target.
    fn reachable(&self, start: usize, picks: usize, covered: VertexSet, target: usize) -> bool {
        if covered.len() >= target {
            return true;
        }
        if picks == 0 {
            return false;
        }
        for i in start..self.len() {
            if self.hopeless(i, picks, covered, target) {
                break;
            }
            if self.reachable(i + 1, picks - 1, covered.union(self.closed[i]), target) {
                return true;
            }
        }
        false
    }

    /// Visits every set of exactly `picks` further candidates from `start`
    /// on that reaches the target, in candidate order.
    fn visit<F>(
        &self,
        start: usize,
        picks: usize,
        chosen: VertexSet,
        covered: VertexSet,
        target: usize,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        if picks == 0 {
            return if covered.len() >= target {
                f(chosen)
            } else {
                ControlFlow::Continue(())
            };
        }
        if self.len() < picks {
            return ControlFlow::Continue(());
        }
        for i in start..=self.len() - picks {
            if self.hopeless(i, picks, covered, target) {
                break;
            }
            self.visit(
                i + 1,
                picks - 1,
                chosen.with(self.vertex[i]),
                covered.union(self.closed[i]),
                target,
                f,
            )?;
        }
        ControlFlow::Continue(())
    }
}

/// The p-domination number `γ_p(G)` with the lexicographically smallest
/// minimum p-dominating set as witness.
///
/// The empty graph and `p = 0` both give `γ_p = 0` with the empty witness.
pub fn gamma_p(g: &Graph, p: Proportion) -> SolveResult {
    let target = coverage_target(g.order(), p);
    if target == 0 {
        return SolveResult {
            gamma_p: 0,
            witness: VertexSet::EMPTY,
        };
    }
    let upper = greedy_high_degree(g, p).len();
    let by_size = Candidates::by_descending_coverage(g);
    let lower = target.div_ceil(by_size.suffix_max[0]);
    let size = (lower..upper)
        .find(|&k| by_size.reachable(0, k, VertexSet::EMPTY, target))
        .unwrap_or(upper);

    let mut witness = None;
    let _ = Candidates::ascending(g).visit(
        0,
        size,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        target,
        &mut |s| {
            witness = Some(s);
            ControlFlow::Break(())
        },
    );
    SolveResult {
        gamma_p: size,
        witness: witness.expect("a set of the optimal size reaches the target"),
    }
}

/// Domination number `γ(G) = γ_1(G)`.
pub fn gamma(g: &Graph) -> SolveResult {
    gamma_p(g, Proportion::ONE)
}

/// All minimum p-dominating sets (the `γ_p`-sets), in lexicographic order.
pub fn all_gamma_p_sets(g: &Graph, p: Proportion) -> GammaPSetFamily {
    let size = gamma_p(g, p).gamma_p;
    let target = coverage_target(g.order(), p);
    let mut sets = Vec::new();
    let _ = Candidates::ascending(g).visit(
        0,
        size,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        target,
        &mut |s| {
            sets.push(s);
            ControlFlow::Continue(())
        },
    );
    debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
    GammaPSetFamily { size, sets }
}

/// The p-influencing set: the union of every minimum p-dominating set.
pub fn influencing_set(g: &Graph, p: Proportion) -> VertexSet {
    all_gamma_p_sets(g, p).union()
}

/// Intersection of the influencing sets for `p = 1/n, 2/n, ..., 1`.
pub fn influencing_intersection(g: &Graph) -> Result<VertexSet> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut acc = g.vertices();
    for k in 1..=n {
        acc = acc.intersection(influencing_set(g, Proportion::of_order(k, n)?));
    }
    Ok(acc)
}
