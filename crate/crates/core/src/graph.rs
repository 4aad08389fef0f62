use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::MAX_VERTICES;

/// A simple undirected graph stored as one open-neighbourhood bitset per
/// vertex.
///
/// Graphs are immutable once built; every constructor checks symmetry, the
/// absence of loops and the vertex cap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

fn check_cap(order: usize) -> Result<()> {
    if order > MAX_VERTICES {
        Err(Error::CapExceeded {
            order,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_cap(order)?;
        Ok(Graph {
            adj: alloc::vec![VertexSet::EMPTY; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_cap(order)?;
        let mut adj = alloc::vec![VertexSet::EMPTY; order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from open neighbourhoods, rejecting asymmetric input,
    /// loops and bits at or beyond the order.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let order = adj.len();
        check_cap(order)?;
        let all = VertexSet::full(order);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                let bad = nb.difference(all).min().unwrap_or(order);
                return Err(Error::VertexOutOfRange { vertex: bad, order });
            }
            if nb.contains(v) {
                return Err(Error::invalid(format!("self-loop at vertex {v}")));
            }
            if let Some(u) = nb.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::invalid(format!(
                    "adjacency not symmetric between {v} and {u}"
                )));
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighbourhood `N(v)`.
    ///
    /// Panics when `v` is not a vertex, like slice indexing.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
        }
    }

    /// Closed neighbourhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// `N[S]`, the union of the closed neighbourhoods of the members of `s`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.cover(s))
    }

    #[inline]
    pub(crate) fn cover(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.closed(v)))
    }

    /// Vertices at distance exactly two from `v`, written `N(N[v])`.
    pub fn distance_two(&self, v: usize) -> Result<VertexSet> {
        Ok(self.ball_two(v)?.difference(self.closed(v)))
    }

    /// Vertices within distance two of `v`, written `N[N[v]]`.
    pub fn ball_two(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.cover(self.closed(v)))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Highest degree, `Δ(G)`.
    pub fn max_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|n| n.len())
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// Smallest degree, `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(|n| n.len())
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.cover(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == self.vertices()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n || perm.iter().copied().collect::<VertexSet>() != self.vertices() {
            return Err(Error::invalid(
                "relabeling is not a permutation of the vertices",
            ));
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { adj })
    }

    /// Cartesian product `self □ other`.
    ///
    /// Vertex `(i, j)` gets index `i * other.order() + j`; see
    /// [`Graph::product_index`].
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let (g, h) = (self.order(), other.order());
        if g == 0 || h == 0 {
            return Err(Error::EmptyGraph);
        }
        check_cap(g * h)?;
        let mut adj = alloc::vec![VertexSet::EMPTY; g * h];
        for i in 0..g {
            for j in 0..h {
                let nb = &mut adj[i * h + j];
                for k in self.adj[i] {
                    nb.insert(k * h + j);
                }
                for l in other.adj[j] {
                    nb.insert(i * h + l);
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Linear index of `(i, j)` in a product whose second factor has
    /// `second_order` vertices.
    #[inline]
    pub fn product_index(i: usize, j: usize, second_order: usize) -> usize {
        i * second_order + j
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
