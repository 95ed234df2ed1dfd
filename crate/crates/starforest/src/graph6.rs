//! graph6 encoding (McKay's format): vertex count followed by the upper
//! triangle of the adjacency matrix, packed 6 bits per printable byte.
//! Supports orders up to 258047 (one- and four-byte headers).

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

const BIAS: u8 = 63;
const LONG_MARK: u8 = 126; // '~'
const MAX_LONG: usize = 258047;

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_LONG {
        out.push(LONG_MARK);
        out.push(((n >> 12) & 63) as u8 + BIAS);
        out.push(((n >> 6) & 63) as u8 + BIAS);
        out.push((n & 63) as u8 + BIAS);
    } else {
        return Err(Error::Capacity(format!(
            "graph6 writer supports at most {MAX_LONG} vertices, got {n}"
        )));
    }
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc: u8 = 0;
    let mut filled = 0usize;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let bit = g.has_edge(Edge::new(u as VertexId, v as VertexId));
            acc = (acc << 1) | bit as u8;
            filled += 1;
            k += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    debug_assert_eq!(k, nbits);
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let pos;
    let n: usize = if bytes[0] == LONG_MARK {
        if bytes.len() > 1 && bytes[1] == LONG_MARK {
            return Err(Error::Graph6 {
                offset: 1,
                message: "eight-byte vertex counts are not supported".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6 {
                offset: bytes.len(),
                message: "truncated long-form header".into(),
            });
        }
        let mut n = 0usize;
        for (i, &b) in bytes.iter().enumerate().take(4).skip(1) {
            if !(BIAS..=LONG_MARK).contains(&b) {
                return Err(Error::Graph6 {
                    offset: i,
                    message: format!("invalid header byte 0x{b:02x}"),
                });
            }
            n = (n << 6) | (b - BIAS) as usize;
        }
        pos = 4;
        n
    } else {
        let b = bytes[0];
        if !(BIAS..=LONG_MARK).contains(&b) {
            return Err(Error::Graph6 {
                offset: 0,
                message: format!("invalid header byte 0x{b:02x}"),
            });
        }
        pos = 1;
        (b - BIAS) as usize
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len(),
            message: format!(
                "truncated bit field: need {} data bytes, found {}",
                nbytes,
                bytes.len() - pos
            ),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Error::Graph6 {
            offset: pos + nbytes,
            message: "trailing bytes after bit field".into(),
        });
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit_idx / 6];
            if !(BIAS..=LONG_MARK).contains(&byte) {
                return Err(Error::Graph6 {
                    offset: pos + bit_idx / 6,
                    message: format!("invalid data byte 0x{byte:02x}"),
                });
            }
            let shift = 5 - (bit_idx % 6);
            if (byte - BIAS) >> shift & 1 == 1 {
                edges.push(Edge::new(u as VertexId, v as VertexId));
            }
            bit_idx += 1;
            if bit_idx == nbits {
                break 'outer;
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn hypercube_round_trip() {
        let q3 = Graph::hypercube(3).unwrap();
        let parsed = parse_graph6(&write_graph6(&q3).unwrap()).unwrap();
        assert_eq!(parsed, q3);
        // Q_6 exercises the long-form header (64 > 62 vertices).
        let q6 = Graph::hypercube(6).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&q6).unwrap()).unwrap(), q6);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_graph6("") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // K_4 header with missing data byte.
        match parse_graph6("C") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_graph6("C~~").is_err());
    }

    proptest! {
        #[test]
        fn round_trip_random(n in 1usize..40, seed: u64) {
            let mut edges = Vec::new();
            let mut state = seed;
            for u in 0..n as VertexId {
                for v in u + 1..n as VertexId {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push(Edge::new(u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let back = parse_graph6(&write_graph6(&g).unwrap()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
