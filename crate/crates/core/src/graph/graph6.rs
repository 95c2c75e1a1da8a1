//! graph6 encoding: the order `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order, six bits per byte, each byte offset by 63.

use super::{check_order, Graph, GraphBuilder};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Canonical graph6 bytes for `g` (no header, no newline).
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
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
    out
}

/// graph6 as a `String`; every byte is printable ASCII.
pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 is ASCII")
}

/// Decodes one graph. An optional `>>graph6<<` header and a trailing newline
/// are accepted; reported offsets are relative to the start of `bytes`.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    decode_at(bytes, 0)
}

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

fn decode_at(bytes: &[u8], base: usize) -> Result<Graph> {
    let mut body = bytes;
    let mut start = base;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        start += HEADER.len();
    }
    while let Some(rest) = body.strip_suffix(b"\n").or_else(|| body.strip_suffix(b"\r")) {
        body = rest;
    }
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(start + pos, format!("byte 0x{:02x} outside 63..=126", body[pos])));
    }
    let (n, header_len) = match body {
        [] => return Err(malformed(start, "empty input")),
        [126, 126, rest @ ..] => (read_order(rest, 6, start + 2)?, 8),
        [126, rest @ ..] => (read_order(rest, 3, start + 1)?, 4),
        [b, ..] => ((*b - 63) as usize, 1),
    };
    check_order(n as u128)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() != expected {
        let offset = start + body.len().min(expected);
        return Err(malformed(
            offset,
            format!("order {n} needs {expected} bytes, found {}", body.len()),
        ));
    }
    let data = &body[header_len..];
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.set(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

fn read_order(rest: &[u8], len: usize, offset: usize) -> Result<usize> {
    if rest.len() < len {
        return Err(malformed(offset + rest.len(), "truncated order field"));
    }
    Ok(rest[..len].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

/// Decodes a newline-separated list of graphs; blank lines are skipped.
/// Offsets in errors refer to the whole input.
pub fn decode_lines(text: &[u8]) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive(|&b| b == b'\n') {
        let trimmed = line.strip_suffix(b"\n").unwrap_or(line);
        let trimmed = trimmed.strip_suffix(b"\r").unwrap_or(trimmed);
        if !trimmed.is_empty() {
            graphs.push(decode_at(trimmed, offset)?);
        }
        offset += line.len();
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        assert_eq!(encode(&Graph::empty(1).unwrap()), b"@");
        assert_eq!(encode(&Graph::empty(0).unwrap()), b"?");
        assert_eq!(decode(b"@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn known_encodings() {
        // Five vertices with edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_string(&g), "DQc");
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(encode_string(&c5), "Dhc");
        assert_eq!(decode(b"Dhc").unwrap(), c5);
        assert_eq!(decode(b">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn large_order_field() {
        let g = Graph::complete(100).unwrap();
        let bytes = encode(&g);
        assert_eq!(&bytes[..4], &[126, 63, 64, 99]);
        assert_eq!(decode(&bytes).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        match decode(b"garbage\x01") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode(b""), Err(Error::MalformedGraph6 { offset: 0, .. })));
        assert!(matches!(decode(b"Dh"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(decode(b"Dhcc"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(decode(b"~?"), Err(Error::MalformedGraph6 { offset: 2, .. })));
    }

    #[test]
    fn multi_line() {
        let graphs = decode_lines(b"Dhc\n\n@\nC~\n").unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[2], Graph::complete(4).unwrap());
        match decode_lines(b"Dhc\nD!c\n") {
            Err(Error::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
    }
}
