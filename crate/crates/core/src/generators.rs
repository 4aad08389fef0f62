//! Standard graph families and the hand-drawn fixture graphs.
//!
//! Paths are labelled `v_1..v_n` in the literature; here `v_i` is index
//! `i - 1`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidArgument(format!(
            "{name} needs size >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with the `m`-side at indices `0..m` and the `n`-side at
/// `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    at_least("complete-bipartite", m, 1)?;
    at_least("complete-bipartite", n, 1)?;
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Star with `k` leaves; the centre is vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    at_least("star", k, 1)?;
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
}

pub const SUBDIVIDED_STAR_CENTER: usize = 0;

/// Star with `k` legs, each subdivided once: centre 0, inner vertices
/// `1..=k`, and inner vertex `i` carries the leaf `i + k`.
pub fn subdivided_star(k: usize) -> Result<Graph> {
    at_least("subdivided-star", k, 1)?;
    Graph::from_edges(
        2 * k + 1,
        (1..=k).flat_map(|i| [(SUBDIVIDED_STAR_CENTER, i), (i, i + k)]),
    )
}

pub const FIG2_APEX: usize = 0;
pub const FIG2_HUBS: [usize; 2] = [5, 6];

/// Nine vertices: an apex (0) joined to four middle vertices (1..=4); the
/// middles 1, 2 meet at hub 5 and 3, 4 at hub 6; hub 5 has pendant 7 and
/// hub 6 has pendant 8.
///
/// The two hubs form the only minimum 8/9-dominating set, and the apex is
/// the unique highest-degree vertex.
pub fn figure2_graph() -> Graph {
    fixture(
        9,
        &[
            (0, 1), // apex - middles
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 5), // middles - hubs
            (2, 5),
            (3, 6),
            (4, 6),
            (5, 7), // hub pendants
            (6, 8),
        ],
    )
}

pub const FIG3_HUB: usize = 0;
pub const FIG3_RING: [usize; 4] = [1, 2, 3, 4];

/// Nine vertices: a hub (0) joined to a 4-cycle `1-2-3-4-1`, and ring
/// vertex `i` carries the pendant `i + 4`.
///
/// Every vertex of the ring also has degree 4.
pub fn figure3_graph() -> Graph {
    fixture(
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2), // ring
            (2, 3),
            (3, 4),
            (4, 1),
            (1, 5), // pendants
            (2, 6),
            (3, 7),
            (4, 8),
        ],
    )
}

pub const FIG4_ROOT: usize = 0;
pub const FIG4_HUBS: [usize; 2] = [2, 3];

/// Tree on eleven vertices: root 0 with children 1 and 4 (leaves) and hubs
/// 2 and 3; hub 2 carries leaves 5, 6, 7 and hub 3 carries leaves 8, 9, 10.
///
/// Root and both hubs have degree 4.
pub fn figure4_tree() -> Graph {
    fixture(
        11,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 8),
            (3, 9),
            (3, 10),
        ],
    )
}

fn fixture(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixture adjacency is valid")
}

/// Grid `P_m □ P_n`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    path(m)?.cartesian_product(&path(n)?)
}

/// Index pairs `(u, v)` of every possible edge on `n` vertices, in the
/// order used by graph6 (`v` ascending, then `u` ascending).
pub(crate) fn upper_triangle(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}
