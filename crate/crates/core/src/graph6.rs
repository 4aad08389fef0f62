//! The graph6 ASCII encoding.
//!
//! A graph6 string is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte and offset
//! by 63.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Position, Result};
use crate::generators::upper_triangle;
use crate::graph::Graph;
use crate::MAX_VERTICES;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in upper_triangle(n) {
        acc = acc << 1 | g.has_edge(u, v) as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + OFFSET);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let (skip, text) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let at = |i: usize| Position::Byte(skip + i);
    let sextet = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (OFFSET..=126).contains(&b) => Ok((b - OFFSET) as usize),
            Some(&b) => Err(Error::parse(
                at(i),
                format!("byte 0x{b:02x} outside graph6 range"),
            )),
            None => Err(Error::parse(at(i), "unexpected end of input")),
        }
    };

    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(at(0), "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0usize;
            for i in 2..8 {
                n = n << 6 | sextet(i)?;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0usize;
            for i in 1..4 {
                n = n << 6 | sextet(i)?;
            }
            (n, 4)
        }
        Some(_) => (sextet(0)?, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::CapExceeded {
            order: n,
            cap: MAX_VERTICES,
        });
    }

    let pairs = upper_triangle(n);
    let needed = pairs.len().div_ceil(6);
    if bytes.len() != pos + needed {
        return Err(Error::parse(
            at(bytes.len().min(pos + needed)),
            format!(
                "expected {needed} data bytes for order {n}, found {}",
                bytes.len().saturating_sub(pos)
            ),
        ));
    }
    let mut edges = Vec::new();
    for chunk in pairs.chunks(6) {
        let bits = sextet(pos)?;
        for (k, &pair) in chunk.iter().enumerate() {
            if bits >> (5 - k) & 1 == 1 {
                edges.push(pair);
            }
        }
        if chunk.len() < 6 && bits & ((1 << (6 - chunk.len())) - 1) != 0 {
            return Err(Error::parse(at(pos), "nonzero padding bits"));
        }
        pos += 1;
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // Five vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&complete(4).unwrap()), "C~");
        assert_eq!(encode(&path(1).unwrap()), "@");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(decode("?").unwrap().order(), 0);
    }

    #[test]
    fn round_trip_byte_identical() {
        let g = decode("D?{").unwrap();
        assert_eq!(encode(&g), "D?{");
        assert_eq!(decode(">>graph6<<D?{\n").unwrap(), g);
    }

    #[test]
    fn large_orders_use_long_header() {
        let g = path(64).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode(&s).unwrap(), g);
        let g = cycle(63).unwrap();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(decode(""), Err(Error::Parse { .. })));
        assert!(matches!(decode("D?"), Err(Error::Parse { .. })));
        assert!(matches!(decode("D?{{"), Err(Error::Parse { .. })));
        assert!(matches!(
            decode("D {"),
            Err(Error::Parse {
                at: Position::Byte(1),
                ..
            })
        ));
        // Order 2 has a single data bit; the other five must be zero.
        assert!(decode("A_").is_ok());
        assert!(matches!(
            decode("A`"),
            Err(Error::Parse {
                at: Position::Byte(1),
                ..
            })
        ));
        assert!(matches!(
            decode("~?@@"),
            Err(Error::CapExceeded { order: 65, .. })
        ));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let edges = upper_triangle(n)
                        .into_iter()
                        .zip(bits)
                        .filter_map(|(e, b)| b.then_some(e));
                    Graph::from_edges(n, edges).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = encode(&g);
            let back = decode(&s).unwrap();
            prop_assert_eq!(encode(&back), s);
            prop_assert_eq!(back, g);
        }
    }
}
