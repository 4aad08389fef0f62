//! Exact partial domination on small simple graphs.
//!
//! A set `S` is *p-dominating* when its closed neighbourhood `N[S]` covers at
//! least a proportion `p` of the vertices. This crate computes the
//! p-domination number, enumerates every minimum p-dominating set, derives
//! influencing sets (the union of all minimum p-dominating sets), builds
//! Cartesian products, and checks closed-form results and product
//! inequalities exhaustively over small graph families.
//!
//! Graphs are capped at [`MAX_VERTICES`] vertices so that every vertex set is
//! a single machine word. The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod conjecture;
pub mod domination;
mod error;
pub mod formulas;
pub mod generators;
mod graph;
pub mod graph6;
pub mod locating;
mod proportion;
mod report;
mod set;

pub use domination::{
    all_gamma_p_sets, coverage_target, gamma, gamma_p, influencing_intersection, influencing_set,
    is_p_dominating, GammaPSetFamily, SolveResult,
};
pub use error::{Error, Position, Result};
pub use graph::Graph;
pub use proportion::Proportion;
pub use report::{Claim, Finding};
pub use set::VertexSet;

/// Largest supported graph order.
pub const MAX_VERTICES: usize = 64;
