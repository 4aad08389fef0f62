//! Generator specs: `name` or `name:a,b,...`.
//!
//! `path:n`, `cycle:n`, `complete:n`, `complete-bipartite:m,n`, `star:k`,
//! `subdivided-star:k`, `grid:m,n`, and the fixtures `fig2`, `fig3`, `fig4`.

use pdom_core::generators::*;
use pdom_core::{Error, Graph, Position, Result};

fn args(spec: &str, start: usize, text: &str) -> Result<Vec<usize>> {
    let mut offset = start;
    let mut out = Vec::new();
    for part in text.split(',') {
        let n = part.trim().parse().map_err(|_| {
            Error::parse(
                Position::Byte(offset),
                format!("expected a count in {spec:?}, found {part:?}"),
            )
        })?;
        out.push(n);
        offset += part.len() + 1;
    }
    Ok(out)
}

pub fn generate(spec: &str) -> Result<Graph> {
    let (name, params) = match spec.split_once(':') {
        Some((name, rest)) => (name, args(spec, name.len() + 1, rest)?),
        None => (spec, Vec::new()),
    };
    match (name, params.as_slice()) {
        ("path", &[n]) => path(n),
        ("cycle", &[n]) => cycle(n),
        ("complete", &[n]) => complete(n),
        ("complete-bipartite", &[m, n]) => complete_bipartite(m, n),
        ("star", &[k]) => star(k),
        ("subdivided-star", &[k]) => subdivided_star(k),
        ("grid", &[m, n]) => grid(m, n),
        ("fig2", &[]) => Ok(figure2_graph()),
        ("fig3", &[]) => Ok(figure3_graph()),
        ("fig4", &[]) => Ok(figure4_tree()),
        _ => Err(Error::parse(
            Position::Byte(0),
            format!("unknown generator or wrong argument count: {spec:?}"),
        )),
    }
}
