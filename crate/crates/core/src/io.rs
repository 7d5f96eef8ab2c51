//! Edge-list text format and graph6 decoding.
//!
//! Edge lists: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based endpoints. Lines starting with `#` and blank lines are
//! ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut field = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("bad {what} {tok:?}")))
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than the {m} declared edges")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        Graph::from_edges(n, [(u, v)]).map_err(|e| parse_err(line_no, e.to_string()))?;
        edges.push((u, v));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical emission: `n m` header, then edges `u v` with `u < v` in
/// lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("byte {pos} is outside the graph6 range")));
    }
    let chunk = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| parse_err(1, "truncated graph6 vertex count"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(1, "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | chunk(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = n << 6 | chunk(i)?;
            }
            (n, 4)
        }
        Some(&b) => (u64::from(b - 63), 1),
    };
    let n = usize::try_from(n).map_err(|_| parse_err(1, "vertex count overflow"))?;

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(parse_err(
            1,
            format!("expected {needed} adjacency bytes for n={n}, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = u64::from(bytes[pos + bit / 6] - 63);
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

/// graph6 encoding, the inverse of [`parse_graph6`].
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_round_trip_and_comments() {
        let text = "# a path\n4 3\n0 1\n\n# middle\n1 2\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("# c\nfour 3\n"),
            Err(Error::Parse {
                line: 2,
                msg: "bad first field \"four\"".into()
            })
        );
        assert!(matches!(parse_edge_list("3 1\n0 7\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn graph6_known_vectors() {
        // A-C, A-E, B-D, D-E on five vertices
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g), "DQc");
        let petersen = parse_graph6(">>graph6<<IheA@GUAo\n").unwrap();
        assert_eq!((petersen.order(), petersen.size()), (10, 15));
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert!(parse_graph6("DQ").is_err());
        assert!(parse_graph6("D Qc").is_err());
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::from_edges(70, [(0, 69), (5, 6)]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 1usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let g = Graph::from_edges(n, pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap();
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
