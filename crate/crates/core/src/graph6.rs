//! graph6 encoding (the published bit-level format) and DOT export.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column order
//! x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups offset by 63, after
//! a size header N(n). The optional `>>graph6<<` prefix is accepted on parse
//! and never emitted.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed size header: {0}")]
    MalformedHeader(String),
    #[error("character {0:?} out of graph6 range at byte {1}")]
    OutOfRangeCharacter(char, usize),
    #[error("truncated bit stream: need {need} adjacency bits, got {got}")]
    TruncatedBitStream { need: usize, got: usize },
    #[error("trailing data after {0} adjacency characters")]
    TrailingData(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("graph too large for graph6 ({0} vertices)")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn sextet_count(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line (an optional format header is tolerated).
pub fn graph6_parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRangeCharacter(b as char, i));
        }
    }
    let (n, mut pos) = parse_size(bytes)?;
    let need = sextet_count(n);
    let got = bytes.len() - pos;
    if got < need {
        return Err(Graph6Error::TruncatedBitStream { need, got });
    }
    if got > need {
        return Err(Graph6Error::TrailingData(need));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    'outer: for j in 1..n {
        for i in 0..j {
            let c = (bytes[pos + bit / 6] - 63) as u32;
            if c >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == total_bits {
                break 'outer;
            }
        }
    }
    // remaining bits in the last sextet must be zero padding
    while !bit.is_multiple_of(6) {
        let c = (bytes[pos + bit / 6] - 63) as u32;
        if c >> (5 - bit % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        bit += 1;
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader(
                "8-byte size header truncated".into(),
            ));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader(
                "4-byte size header truncated".into(),
            ));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as usize;
        }
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader(format!(
                "long form used for small n={n}"
            )));
        }
        Ok((n, 4))
    }
}

/// Emits the canonical graph6 encoding of `g`.
pub fn graph6_emit(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// DOT export; uses stored labels when present unless overridden.
pub fn dot_emit(g: &Graph, labels: Option<&[String]>) -> String {
    let labels = labels.or_else(|| g.labels());
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labels {
            Some(ls) => out.push_str(&format!("  v{} [label=\"{}\"];\n", v, ls[v])),
            None => out.push_str(&format!("  v{};\n", v)),
        }
    }
    for (u, v) in g.edge_list() {
        out.push_str(&format!("  v{} -- v{};\n", u, v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parse_star_on_five_vertices() {
        // decoding "D?{" by the published bit-packing rule: 5 vertices,
        // upper-triangle bits 000000 111100 = edges {04,14,24,34}
        let g = graph6_parse("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        for v in 0..4 {
            assert!(g.has_edge(v, 4));
        }
    }

    #[test]
    fn emit_known_values() {
        assert_eq!(
            graph6_emit(&generators::gen_complete(1).unwrap()).unwrap(),
            "@"
        );
        assert_eq!(
            graph6_emit(&generators::gen_complete(4).unwrap()).unwrap(),
            "C~"
        );
        assert_eq!(
            graph6_emit(&generators::gen_complete(5).unwrap()).unwrap(),
            "D~{"
        );
        assert_eq!(
            graph6_emit(&generators::gen_cycle(5).unwrap()).unwrap(),
            "Dhc"
        );
        assert_eq!(
            graph6_emit(&generators::gen_biclique(3, 3).unwrap()).unwrap(),
            "EFz_"
        );
        assert_eq!(
            graph6_emit(&generators::gen_pd(3).unwrap().0).unwrap(),
            "KCSkAC`_A?c@"
        );
    }

    #[test]
    fn round_trip_pd3() {
        let (pd3, _) = generators::gen_pd(3).unwrap();
        let enc = graph6_emit(&pd3).unwrap();
        let back = graph6_parse(&enc).unwrap();
        assert_eq!(back, pd3);
        assert_eq!(back.fingerprint(), pd3.fingerprint());
    }

    #[test]
    fn header_prefix_tolerated() {
        let g = graph6_parse(">>graph6<<D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
    }

    #[test]
    fn distinct_parse_errors() {
        assert!(matches!(
            graph6_parse(""),
            Err(Graph6Error::MalformedHeader(_))
        ));
        assert!(matches!(
            graph6_parse("D?\x1b"),
            Err(Graph6Error::OutOfRangeCharacter('\x1b', 2))
        ));
        assert!(matches!(
            graph6_parse("D?"),
            Err(Graph6Error::TruncatedBitStream { need: 2, got: 1 })
        ));
        assert!(matches!(
            graph6_parse("D?{{"),
            Err(Graph6Error::TrailingData(2))
        ));
        assert!(matches!(
            graph6_parse("~??"),
            Err(Graph6Error::MalformedHeader(_))
        ));
    }

    #[test]
    fn multibyte_size_round_trip() {
        let g = generators::gen_cycle(70).unwrap();
        let enc = graph6_emit(&g).unwrap();
        assert!(enc.starts_with('~'));
        assert_eq!(graph6_parse(&enc).unwrap(), g);
    }

    #[test]
    fn dot_contains_edges() {
        let g = generators::gen_path(3).unwrap();
        let dot = dot_emit(&g, None);
        assert!(dot.contains("v0 -- v1"));
        assert!(dot.contains("v1 -- v2"));
    }
}
