//! graph6 encoding, as produced by nauty's `geng` and friends.
//!
//! A record is a header giving the order `n` followed by the upper triangle of
//! the adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte with 63 added to each byte. The final group is
//! zero-padded.

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Largest order representable with the four-byte header.
pub const MAX_ORDER: usize = 258_047;

const SHORT_HEADER_MAX: usize = 62;
const BIAS: u8 = 63;
const LONG_MARKER: u8 = 126;
const FILE_HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("graph6 body has trailing data: expected {expected} bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=LONG_MARKER).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
        None => Err(Graph6Error::MalformedHeader),
    }
}

/// Decodes a single graph6 record. A trailing newline and the optional
/// `>>graph6<<` file header are accepted.
pub fn parse_graph6(record: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = record.strip_prefix(FILE_HEADER).unwrap_or(record);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }

    let (n, header_len) = if bytes[0] != LONG_MARKER {
        (usize::from(sextet(bytes, 0)?), 1)
    } else if bytes.get(1) == Some(&LONG_MARKER) {
        // 8-byte form; decoded only to report the order
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | usize::from(sextet(bytes, i)?);
        }
        return Err(if n <= MAX_ORDER {
            Graph6Error::MalformedHeader
        } else {
            Graph6Error::OrderTooLarge(n)
        });
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | usize::from(sextet(bytes, i)?);
        }
        if n <= SHORT_HEADER_MAX {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, 4)
    };

    let body = &bytes[header_len..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage { expected, found: body.len() });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit.is_multiple_of(6) {
                current = sextet(body, bit / 6).map_err(|e| match e {
                    Graph6Error::InvalidByte { offset, byte } => {
                        Graph6Error::InvalidByte { offset: offset + header_len, byte }
                    }
                    other => other,
                })?;
            }
            if current & (0b10_0000 >> (bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    Ok(Graph::from_edge_list(n, &edges).expect("graph6 body yields a simple graph"))
}

/// Encodes a graph as a graph6 record, without a trailing newline.
///
/// Panics if the order exceeds [`MAX_ORDER`].
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 order {n} exceeds {MAX_ORDER}");
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= SHORT_HEADER_MAX {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut current = 0u8;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(VertexId(u), VertexId(v)) {
                current |= 0b10_0000 >> (bit % 6);
            }
            bit += 1;
            if bit.is_multiple_of(6) {
                out.push(current + BIAS);
                current = 0;
            }
        }
    }
    if !bit.is_multiple_of(6) {
        out.push(current + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
