//! Where minimum p-dominating sets sit relative to highest-degree vertices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::domination::{all_gamma_p_sets, coverage_target, GammaPSetFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::proportion::Proportion;
use crate::report::{Claim, Finding};
use crate::set::VertexSet;

/// Greedy max-coverage: repeatedly take the vertex covering the most
/// not-yet-covered vertices (lowest index on ties) until the coverage
/// target is met. Always p-dominating, not always minimum.
pub fn greedy_high_degree(g: &Graph, p: Proportion) -> VertexSet {
    let target = coverage_target(g.order(), p);
    let mut chosen = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while covered.len() < target {
        let (best, _) = (0..g.order())
            .map(|v| (v, g.closed(v).difference(covered).len()))
            .fold(
                (usize::MAX, 0),
                |acc, (v, gain)| if gain > acc.1 { (v, gain) } else { acc },
            );
        chosen.insert(best);
        covered = covered.union(g.closed(best));
    }
    chosen
}

/// Which of the three locations around `vertex` some minimum p-dominating
/// set reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocatingVerdict {
    pub vertex: usize,
    /// Some minimum set contains `vertex`.
    pub contains_vertex: bool,
    /// Some minimum set meets `N(vertex)`.
    pub meets_neighbors: bool,
    /// Some minimum set meets `N(N[vertex])`, the vertices at distance two.
    pub meets_distance_two: bool,
    pub family_size: usize,
}

impl LocatingVerdict {
    pub fn any(&self) -> bool {
        self.contains_vertex || self.meets_neighbors || self.meets_distance_two
    }
}

fn require_max_degree(g: &Graph, v: usize) -> Result<()> {
    let d = g.degree(v)?;
    let max = g.max_degree()?;
    if d != max {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} has degree {d}, not the maximum {max}"
        )));
    }
    Ok(())
}

fn verdict_from(g: &Graph, family: &GammaPSetFamily, v: usize) -> LocatingVerdict {
    let nb = g.neighbors(v);
    let d2 = g.cover(g.closed(v)).difference(g.closed(v));
    let meets = |t: VertexSet| family.sets.iter().any(|s| !s.is_disjoint(t));
    LocatingVerdict {
        vertex: v,
        contains_vertex: meets(VertexSet::singleton(v)),
        meets_neighbors: meets(nb),
        meets_distance_two: meets(d2),
        family_size: family.len(),
    }
}

/// Raw verdict for a highest-degree vertex `v`. Nothing is forced: at
/// `p = 0` the only minimum set is empty and all three cases are false.
pub fn max_degree_verdict(g: &Graph, p: Proportion, v: usize) -> Result<LocatingVerdict> {
    require_max_degree(g, v)?;
    Ok(verdict_from(g, &all_gamma_p_sets(g, p), v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceTwoOutcome {
    /// `v` belongs to some minimum set, so there is nothing to check.
    NotApplicable,
    Holds,
    /// A minimum set with fewer than two members within distance two of `v`.
    Violated {
        set: VertexSet,
    },
}

impl DistanceTwoOutcome {
    /// `true` unless violated.
    pub fn ok(self) -> bool {
        !matches!(self, DistanceTwoOutcome::Violated { .. })
    }
}

fn distance_two_outcome(g: &Graph, family: &GammaPSetFamily, v: usize) -> DistanceTwoOutcome {
    if family.sets.iter().any(|s| s.contains(v)) {
        return DistanceTwoOutcome::NotApplicable;
    }
    let ball = g.cover(g.closed(v));
    match family.sets.iter().find(|s| s.intersection(ball).len() < 2) {
        Some(&set) => DistanceTwoOutcome::Violated { set },
        None => DistanceTwoOutcome::Holds,
    }
}

/// For a highest-degree `v` in no minimum p-dominating set, checks that
/// every minimum set has at least two members in `N[N[v]]`.
pub fn check_distance_two(g: &Graph, p: Proportion, v: usize) -> Result<DistanceTwoOutcome> {
    require_max_degree(g, v)?;
    Ok(distance_two_outcome(g, &all_gamma_p_sets(g, p), v))
}

/// Checks both locating statements for every highest-degree vertex and every
/// `p = k/n`, `k >= 1`. Returns the violations.
pub fn lemma_findings(g: &Graph) -> Vec<Finding> {
    let n = g.order();
    let Ok(max) = g.max_degree() else {
        return Vec::new();
    };
    let id = graph6::encode(g);
    let tops: Vec<usize> = (0..n).filter(|&v| g.neighbors(v).len() == max).collect();
    let mut out = Vec::new();
    for k in 1..=n {
        let p = Proportion::of_order(k, n).expect("k <= n");
        let family = all_gamma_p_sets(g, p);
        for &v in &tops {
            let verdict = verdict_from(g, &family, v);
            if !verdict.any() {
                out.push(finding(
                    Claim::MaxDegreeNearby,
                    &id,
                    p,
                    v,
                    None,
                    String::new(),
                ));
            }
            if let DistanceTwoOutcome::Violated { set } = distance_two_outcome(g, &family, v) {
                out.push(finding(
                    Claim::TwoWithinDistanceTwo,
                    &id,
                    p,
                    v,
                    Some(set),
                    format!(
                        "{} member(s) within distance two",
                        set.intersection(g.cover(g.closed(v))).len()
                    ),
                ));
            }
        }
    }
    out
}

fn finding(
    claim: Claim,
    id: &str,
    p: Proportion,
    v: usize,
    witness: Option<VertexSet>,
    detail: String,
) -> Finding {
    Finding {
        claim,
        graph: id.into(),
        p: Some(p),
        vertex: Some(v),
        witness,
        detail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{gamma_p, is_p_dominating};
    use crate::generators::*;

    fn p(num: u64, den: u64) -> Proportion {
        Proportion::new(num, den).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let s = subdivided_star(8).unwrap();
        assert_eq!(
            greedy_high_degree(&s, Proportion::HALF),
            VertexSet::singleton(SUBDIVIDED_STAR_CENTER)
        );

        let f2 = figure2_graph();
        let greedy = greedy_high_degree(&f2, p(8, 9));
        assert!(greedy.contains(FIG2_APEX));
        assert_eq!(greedy.len(), 3);
        assert!(is_p_dominating(&f2, greedy, p(8, 9)));
        assert!(greedy.len() > gamma_p(&f2, p(8, 9)).gamma_p);

        let k5 = complete(5).unwrap();
        for k in 1..=5 {
            assert_eq!(greedy_high_degree(&k5, p(k, 5)).len(), 1);
        }
        assert_eq!(greedy_high_degree(&k5, Proportion::ZERO), VertexSet::EMPTY);
    }

    #[test]
    fn verdicts_on_fixtures() {
        let v = max_degree_verdict(&figure2_graph(), p(8, 9), FIG2_APEX).unwrap();
        assert_eq!(
            (v.contains_vertex, v.meets_neighbors, v.meets_distance_two),
            (false, false, true)
        );
        assert_eq!(v.family_size, 1);

        let v = max_degree_verdict(&figure3_graph(), p(7, 9), FIG3_HUB).unwrap();
        assert!(!v.contains_vertex && v.meets_neighbors);

        let v = max_degree_verdict(&figure4_tree(), p(9, 11), FIG4_ROOT).unwrap();
        assert!(!v.contains_vertex && v.meets_neighbors);

        let v = max_degree_verdict(&figure2_graph(), Proportion::ZERO, FIG2_APEX).unwrap();
        assert!(!v.any());
    }

    #[test]
    fn verdict_requires_max_degree() {
        assert!(matches!(
            max_degree_verdict(&figure2_graph(), p(8, 9), 7),
            Err(Error::InvalidArgument(_))
        ));
        assert!(check_distance_two(&figure2_graph(), p(8, 9), 1).is_err());
        assert!(max_degree_verdict(&figure2_graph(), p(8, 9), 9).is_err());
    }

    #[test]
    fn distance_two_examples() {
        assert_eq!(
            check_distance_two(&figure2_graph(), p(8, 9), FIG2_APEX).unwrap(),
            DistanceTwoOutcome::Holds
        );
        assert_eq!(
            check_distance_two(&figure4_tree(), p(9, 11), FIG4_ROOT).unwrap(),
            DistanceTwoOutcome::Holds
        );
        assert_eq!(
            check_distance_two(&star(4).unwrap(), Proportion::HALF, 0).unwrap(),
            DistanceTwoOutcome::NotApplicable
        );
    }

    #[test]
    fn fixtures_have_no_findings() {
        for g in [figure2_graph(), figure3_graph(), figure4_tree()] {
            assert!(lemma_findings(&g).is_empty());
        }
    }
}
