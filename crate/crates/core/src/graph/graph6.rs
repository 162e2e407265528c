//! graph6 text encoding: vertex count, then the upper-triangle bits in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per printable
//! character with offset 63, most significant bit first, zero padded.

use super::{Graph, GraphError, MAX_VERTICES};

impl Graph {
    /// Header-free graph6 string. Uses the single-byte order form for
    /// n <= 62 and the 4-byte `~` form for n = 63, 64.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(63 + self.n as u8);
        } else {
            out.push(b'~');
            let n = self.n as u32;
            out.push(63 + ((n >> 12) & 0x3f) as u8);
            out.push(63 + ((n >> 6) & 0x3f) as u8);
            out.push(63 + (n & 0x3f) as u8);
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                nbits += 1;
                if nbits == 6 {
                    out.push(63 + acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(63 + (acc << (6 - nbits)));
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }
}

/// Parses a header-free graph6 string.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: &str| GraphError::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable graph6 range 63..=126"));
        }
    }
    let (n, body_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte form encodes n >= 258048, far past our capacity
            return Err(err(1, "vertex count exceeds the 64-vertex capacity"));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated order field"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n == 0 {
        return Err(err(0, "vertex count must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(err(0, "vertex count exceeds the 64-vertex capacity"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != body_start + nbytes {
        return Err(err(
            bytes.len().min(body_start + nbytes),
            "adjacency section has the wrong length",
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[body_start + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
        }
    }
    // trailing padding must be zero for a byte-exact round trip
    if nbits % 6 != 0 {
        let last = bytes[body_start + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(body_start + nbytes - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
