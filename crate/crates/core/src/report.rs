use alloc::string::String;
use core::fmt;

use crate::proportion::Proportion;
use crate::set::VertexSet;

/// A statement checked by the exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Some minimum p-dominating set meets `v`, `N(v)` or `N(N[v])` for a
    /// highest-degree vertex `v`.
    MaxDegreeNearby,
    /// If a highest-degree `v` lies in no minimum p-dominating set, every
    /// such set has two members within distance two of `v`.
    TwoWithinDistanceTwo,
    /// Influencing sets at `p = 1/n`, and at `p = 2/n` for connected graphs,
    /// are all of `V`.
    SmallProportionsInfluenceAll,
    /// For `p <= (δ+1)/n` the influencing set is all of `V`.
    MinDegreeThreshold,
    /// At `p = (Δ+1)/n` the influencing set is exactly the vertices of
    /// degree `Δ`.
    MaxDegreeThreshold,
    /// `γ_{1/2}(G □ P_2) >= γ_{1/2}(G)`.
    ProductWithEdge,
    /// `γ_{1/2}(G □ P_m) >= c γ_{1/2}(P_m)` when `γ_{1/2}(G) = c`, `c <= 3`.
    ProductWithPath,
    /// `γ_p(G □ H) >= γ_p(G) γ_p(H)`.
    ProductInequality,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::MaxDegreeNearby => "max-degree-nearby",
            Claim::TwoWithinDistanceTwo => "two-within-distance-two",
            Claim::SmallProportionsInfluenceAll => "small-proportions-influence-all",
            Claim::MinDegreeThreshold => "min-degree-threshold",
            Claim::MaxDegreeThreshold => "max-degree-threshold",
            Claim::ProductWithEdge => "product-with-edge",
            Claim::ProductWithPath => "product-with-path",
            Claim::ProductInequality => "product-inequality",
        })
    }
}

/// A violation found by a sweep, with enough data to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub claim: Claim,
    /// graph6 of the graph examined.
    pub graph: String,
    pub p: Option<Proportion>,
    pub vertex: Option<usize>,
    pub witness: Option<VertexSet>,
    pub detail: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} graph={}", self.claim, self.graph)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        if let Some(v) = self.vertex {
            write!(f, " v={v}")?;
        }
        if let Some(w) = self.witness {
            write!(f, " witness={w}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}
