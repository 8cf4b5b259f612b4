//! Standard graph6 encoding: a size field N(n), then the upper triangle of
//! the adjacency matrix in column-major order, packed into 6-bit groups
//! with 63 added to each byte.

use super::FormatError;
use crate::graph::EmbeddedGraph;

const OFFSET: u8 = 63;

fn encode_size(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

/// Encodes a simple graph as graph6 text (no trailing newline).
pub fn to_graph6(g: &EmbeddedGraph) -> Result<String, FormatError> {
    if !g.is_simple() {
        return Err(FormatError::NotSimple);
    }
    let n = g.vertex_count() as u64;
    if n >= 1 << 36 {
        return Err(FormatError::TooManyVertices);
    }
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let n = n as usize;
    let mut adjacency = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacency[u as usize * n + v as usize] = true;
        adjacency[v as usize * n + u as usize] = true;
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for column in 1..n {
        for row in 0..column {
            group <<= 1;
            if adjacency[row * n + column] {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

fn decode_sextet(bytes: &[u8], offset: usize) -> Result<u64, FormatError> {
    let byte = bytes[offset];
    if !(OFFSET..=126).contains(&byte) {
        return Err(FormatError::MalformedByte { byte, offset });
    }
    Ok((byte - OFFSET) as u64)
}

fn decode_size(bytes: &[u8]) -> Result<(u64, usize), FormatError> {
    if bytes.is_empty() {
        return Err(FormatError::EmptyInput);
    }
    if bytes[0] != 126 {
        return Ok((decode_sextet(bytes, 0)?, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(FormatError::Truncated {
                expected: 8,
                found: bytes.len(),
            });
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | decode_sextet(bytes, i)?;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(FormatError::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | decode_sextet(bytes, i)?;
        }
        Ok((n, 4))
    }
}

/// Decodes graph6 text into an abstract graph (edges only, no rotations).
/// Edges are added column-major, matching the bit order, so decoding is
/// deterministic. An optional `>>graph6<<` header and trailing whitespace
/// are tolerated.
pub fn from_graph6(text: &str) -> Result<EmbeddedGraph, FormatError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header_len) = decode_size(bytes)?;
    if n > u32::MAX as u64 {
        return Err(FormatError::Unrepresentable(n));
    }
    let n_usize = n as usize;
    let bit_count = n_usize * n_usize.saturating_sub(1) / 2;
    let expected_bytes = bit_count.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < expected_bytes {
        return Err(FormatError::Truncated {
            expected: expected_bytes,
            found: body.len(),
        });
    }
    if body.len() > expected_bytes {
        return Err(FormatError::MalformedByte {
            byte: body[expected_bytes],
            offset: header_len + expected_bytes,
        });
    }

    let mut g = EmbeddedGraph::new(n as u32);
    let mut bit_index = 0usize;
    'outer: for column in 1..n_usize {
        for row in 0..column {
            let byte_index = bit_index / 6;
            let sextet = decode_sextet(body, byte_index)
                .map_err(|e| shift_offset(e, header_len))?;
            let bit = (sextet >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                g.add_edge(row as u32, column as u32)
                    .expect("vertices in range by construction");
            }
            bit_index += 1;
            if bit_index >= bit_count {
                break 'outer;
            }
        }
    }
    // validate any padding bytes even for tiny graphs
    for i in bit_index.div_ceil(6)..expected_bytes {
        decode_sextet(body, i).map_err(|e| shift_offset(e, header_len))?;
    }
    Ok(g)
}

fn shift_offset(e: FormatError, by: usize) -> FormatError {
    match e {
        FormatError::MalformedByte { byte, offset } => FormatError::MalformedByte {
            byte,
            offset: offset + by,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn edge_set(g: &EmbeddedGraph) -> HashSet<(u32, u32)> {
        g.edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect()
    }

    #[test]
    fn k2_is_a_underscore() {
        let mut g = EmbeddedGraph::new(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn k3_is_bw() {
        let mut g = EmbeddedGraph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_edge(1, 2).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "Bw");
    }

    #[test]
    fn empty_and_trivial_graphs() {
        assert_eq!(to_graph6(&EmbeddedGraph::new(0)).unwrap(), "?");
        assert_eq!(to_graph6(&EmbeddedGraph::new(1)).unwrap(), "@");
        let decoded = from_graph6("?").unwrap();
        assert_eq!(decoded.vertex_count(), 0);
    }

    #[test]
    fn round_trip_small() {
        let mut g = EmbeddedGraph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)] {
            g.add_edge(u, v).unwrap();
        }
        let text = to_graph6(&g).unwrap();
        let back = from_graph6(&text).unwrap();
        assert_eq!(back.vertex_count(), 5);
        assert_eq!(edge_set(&back), edge_set(&g));
        assert_eq!(to_graph6(&back).unwrap(), text);
    }

    #[test]
    fn accepts_header_and_newline() {
        let g = from_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn multibyte_size_field() {
        let g = EmbeddedGraph::new(100);
        let text = to_graph6(&g).unwrap();
        assert!(text.starts_with('~'));
        let back = from_graph6(&text).unwrap();
        assert_eq!(back.vertex_count(), 100);
        assert_eq!(back.edge_count(), 0);
    }

    #[test]
    fn rejects_malformed_and_truncated() {
        assert!(matches!(from_graph6(""), Err(FormatError::EmptyInput)));
        // 0x1f is below the graph6 byte range
        assert!(matches!(
            from_graph6("B\x1f"),
            Err(FormatError::MalformedByte { .. })
        ));
        assert!(matches!(
            from_graph6("D"),
            Err(FormatError::Truncated { .. })
        ));
        let mut g = EmbeddedGraph::new(2);
        g.add_edge(0, 0).unwrap();
        assert!(matches!(to_graph6(&g), Err(FormatError::NotSimple)));
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(matches!(
            from_graph6("A_X"),
            Err(FormatError::MalformedByte { .. })
        ));
    }
}
