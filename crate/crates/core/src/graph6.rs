//! graph6 text encoding.
//!
//! A record is a size prefix followed by the upper triangle of the adjacency
//! matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_ORDER};

/// Optional header emitted by some generators in front of the first record.
pub const HEADER: &str = ">>graph6<<";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range 63..=126.
    BadByte(u8),
    OrderOutOfRange(usize),
    Truncated,
    TrailingBytes,
}

/// Parse failure with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 error at byte {}: ", self.offset)?;
        match &self.kind {
            Graph6ErrorKind::Empty => f.write_str("empty record"),
            Graph6ErrorKind::BadByte(b) => write!(f, "byte {b:#04x} outside 63..=126"),
            Graph6ErrorKind::OrderOutOfRange(n) => {
                write!(f, "order {n} outside supported range 1..={MAX_ORDER}")
            }
            Graph6ErrorKind::Truncated => f.write_str("record ends before the edge data"),
            Graph6ErrorKind::TrailingBytes => f.write_str("unexpected bytes after the edge data"),
        }
    }
}

impl core::error::Error for Graph6Error {}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| 63 + x as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one record. A leading [`HEADER`] and trailing line terminator are
/// tolerated; anything else after the edge data is an error. Padding bits are
/// ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let skipped = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = line[skipped..].trim_end_matches(['\n', '\r']).as_bytes();
    let err = |at: usize, kind| Graph6Error {
        offset: skipped + at,
        kind,
    };
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if let Some(at) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(at, Graph6ErrorKind::BadByte(bytes[at])));
    }
    let (n, mut at) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // 8-byte size form: n >= 258048
        return Err(err(0, Graph6ErrorKind::OrderOutOfRange(usize::MAX)));
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), Graph6ErrorKind::Truncated));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(err(0, Graph6ErrorKind::OrderOutOfRange(n)));
    }
    let need = body_len(n);
    if bytes.len() < at + need {
        return Err(err(bytes.len(), Graph6ErrorKind::Truncated));
    }
    if bytes.len() > at + need {
        return Err(err(at + need, Graph6ErrorKind::TrailingBytes));
    }
    let mut rows = [0u64; MAX_ORDER];
    let mut bit = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit == 0 {
                cur = bytes[at] - 63;
                at += 1;
                bit = 6;
            }
            bit -= 1;
            if cur >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    Ok(Graph::from_rows(&rows[..n]).expect("decoded adjacency is symmetric and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn hand_encoded_records() {
        // n=2 -> 'A'; single bit 1 padded to 100000 -> 63 + 32 = '_'
        assert_eq!(encode_graph6(&complete(2)), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        // n=1 -> '@', empty triangle
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        // K4: six ones -> 63 + 63
        assert_eq!(encode_graph6(&complete(4)), "C~");
        let c5 = cycle(5);
        assert_eq!(parse_graph6(&encode_graph6(&c5)).unwrap(), c5);
    }

    #[test]
    fn known_records_from_generators() {
        // Petersen graph as commonly distributed
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.class_profile().is_regular(3));
    }

    #[test]
    fn large_size_form() {
        let g = Graph::new(64, [(0, 63), (5, 6)]).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@"));
        assert_eq!(s.len(), 4 + body_len(64));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = Graph::new(63, [(1, 62)]).unwrap();
        assert_eq!(parse_graph6(&encode_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2));
        assert_eq!(parse_graph6("A_\r\n").unwrap(), complete(2));
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);
        let e = parse_graph6("A_ ").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::BadByte(b' ')));
        let e = parse_graph6("A__").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::TrailingBytes));
        let e = parse_graph6("D?").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::Truncated));
        let e = parse_graph6("?").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::OrderOutOfRange(0));
        assert_eq!(
            parse_graph6("~?@@").unwrap_err().kind,
            Graph6ErrorKind::OrderOutOfRange(65)
        );
        assert!(matches!(
            parse_graph6("~~??????").unwrap_err().kind,
            Graph6ErrorKind::OrderOutOfRange(_)
        ));
        let e = parse_graph6(">>graph6<<A").unwrap_err();
        assert_eq!((e.offset, e.kind), (11, Graph6ErrorKind::Truncated));
    }
}
