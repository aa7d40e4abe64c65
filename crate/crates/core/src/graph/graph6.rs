//! The graph6 text encoding (undirected graphs only).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(k) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(base + k, format!("byte {:#04x} outside the graph6 range 63..=126", body[k])));
    }
    let (n, header_len) = match body {
        [] => return Err(err(base, "missing vertex count")),
        [126, 126, rest @ ..] => (read_sextets(rest, 6).ok_or_else(|| err(base + 2, "truncated vertex count"))?, 8),
        [126, rest @ ..] => (read_sextets(rest, 3).ok_or_else(|| err(base + 1, "truncated vertex count"))?, 4),
        [b, ..] => ((*b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(err(base, "vertex count must be positive"));
    }
    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != bytes_needed {
        return Err(err(
            base + header_len + data.len().min(bytes_needed),
            format!("expected {bytes_needed} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if let Some(k) = (bits_needed..bytes_needed * 6).find(|&k| bit(k)) {
        return Err(err(base + header_len + k / 6, "nonzero padding bits"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.insert(i + 1, j + 1);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_sextets(bytes: &[u8], count: usize) -> Option<usize> {
    let chunk = bytes.get(..count)?;
    Some(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i + 1, j + 1) as u8;
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

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::path(3)), "Bg");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
    }

    #[test]
    fn decodes_with_header() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
        assert_eq!(Graph::parse("Dhc\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6 { .. })));
        // A_ sets the only bit; A` would set a padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn large_vertex_count_round_trip() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
