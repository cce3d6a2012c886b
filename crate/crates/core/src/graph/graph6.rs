//! graph6 reading and writing.

use super::SimpleGraph;
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside [63,126]")]
    BadChar { offset: usize, byte: u8 },
    #[error("malformed length prefix")]
    BadPrefix,
    #[error("order {0} exceeds the supported maximum of 258047")]
    TooLarge(usize),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    TrailingBits,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<SimpleGraph, Graph6Error> {
    let text = text.trim_end();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadChar {
            offset,
            byte: bytes[offset],
        });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadPrefix);
        }
        if bytes[1] == 126 {
            // 8-byte form, only meaningful for n > 258047
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = data_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total_bits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::from_edges(n, pairs).expect("decoded pairs are simple"))
}

/// Canonical graph6 encoding (no header, no newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a multi-line graph6 document. Blank lines are skipped; each item
/// carries its 1-based line number.
pub fn read_graph6_lines(
    text: &str,
) -> impl Iterator<Item = (usize, &str, Result<SimpleGraph, Graph6Error>)> + '_ {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body, from_graph6(body)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn small_cases() {
        let g = from_graph6("D??").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&SimpleGraph::empty(1)), "@");
        assert_eq!(to_graph6(&SimpleGraph::empty(0)), "?");
        let c5 = cycle(5).unwrap();
        assert_eq!(from_graph6(&to_graph6(&c5)).unwrap(), c5);
    }

    #[test]
    fn dqc_known_edges() {
        let g = from_graph6("DQc").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn errors() {
        // n=3 uses 3 of the 6 bits; '@' sets the last padding bit
        assert_eq!(from_graph6("B@"), Err(Graph6Error::TrailingBits));
        assert_eq!(from_graph6("A@"), Err(Graph6Error::TrailingBits));
        assert_eq!(from_graph6("B?"), Ok(SimpleGraph::empty(3)));
        assert!(matches!(from_graph6("D?"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(from_graph6("D? ?"), Err(Graph6Error::BadChar { .. })));
        assert_eq!(from_graph6("~?"), Err(Graph6Error::BadPrefix));
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
    }

    #[test]
    fn header_and_long_form() {
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), complete(2));
        let k63 = complete(63);
        let s = to_graph6(&k63);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), k63);
    }

    #[test]
    fn lines_iterator_isolates_errors() {
        let doc = ">>graph6<<A_\nB@\n\nD??\n";
        let items: Vec<_> = read_graph6_lines(doc).collect();
        assert_eq!(items.len(), 3);
        assert!(items[0].2.is_ok());
        assert_eq!(items[1].0, 2);
        assert!(items[1].2.is_err());
        assert_eq!(items[2].0, 4);
    }
}
