//! Plain-text edge lists.
//!
//! One `u v` pair of 0-based labels per line. Blank lines and text after `#`
//! are ignored. An optional `n <order>` line before the first edge fixes the
//! order; without it the order is one more than the largest label.

use pdom_core::{Error, Graph, Position, Result};

fn label(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| {
        Error::parse(
            Position::Line(line),
            format!("expected a vertex label, found {token:?}"),
        )
    })
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[..] {
            ["n", count] if edges.is_empty() && order.is_none() => {
                order = Some(label(count, line)?)
            }
            [a, b] => {
                let (u, v) = (label(a, line)?, label(b, line)?);
                if u == v {
                    return Err(Error::parse(
                        Position::Line(line),
                        format!("self-loop at vertex {u}"),
                    ));
                }
                if let Some(n) = order.filter(|&n| u.max(v) >= n) {
                    return Err(Error::parse(
                        Position::Line(line),
                        format!("vertex {} out of range for order {n}", u.max(v)),
                    ));
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::parse(
                    Position::Line(line),
                    format!("expected `u v` or `n <order>`, found {content:?}"),
                ))
            }
        }
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

/// Writes `g` with an order line, so isolated vertices survive a round trip.
pub fn write(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pdom_core::generators::figure2_graph;

    #[test]
    fn parses_with_and_without_header() {
        let g = parse("0 1\n1 2 # path\n\n").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 2));
        let g = parse("n 5\n0 1\n").unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 1));
        assert_eq!(parse("").unwrap().order(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let at = |text: &str| match parse(text) {
            Err(Error::Parse { at, .. }) => at,
            other => panic!("{other:?}"),
        };
        assert_eq!(at("0 1\n2 2\n"), Position::Line(2));
        assert_eq!(at("0 1\n\nx 1\n"), Position::Line(3));
        assert_eq!(at("n 3\n0 3\n"), Position::Line(2));
        assert_eq!(at("0 1 2\n"), Position::Line(1));
    }

    #[test]
    fn round_trip() {
        let g = figure2_graph();
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(parse("0 64\n"), Err(Error::CapExceeded { .. })));
    }
}
