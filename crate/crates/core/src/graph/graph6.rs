//! graph6 encoding.
//!
//! The vertex count is written as one byte (`n <= 62`), `126` plus three
//! bytes (`n <= 258047`), or `126 126` plus six bytes, each carrying six
//! bits offset by 63. The upper triangle follows column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most significant
//! bit first, zero-padded to a six-bit boundary.

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.push(MAX_BYTE);
        out.push(MAX_BYTE);
        push_sextets(&mut out, n as u64, 6);
    }

    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn push_sextets(out: &mut Vec<u8>, x: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((x >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse(text: &[u8]) -> Result<Graph> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let mut start = 0;
    if text[..end].starts_with(HEADER) {
        start = HEADER.len();
    }
    let body = &text[start..end];
    if let Some(i) = body.iter().position(|b| !(BIAS..=MAX_BYTE).contains(b)) {
        return Err(Error::Format {
            offset: start + i,
            byte: body[i],
        });
    }

    let sextet = |i: usize| (body[i] - BIAS) as u64;
    let need = |expected: usize| -> Result<()> {
        if body.len() < expected {
            Err(Error::Length {
                expected,
                found: body.len(),
            })
        } else {
            Ok(())
        }
    };

    need(1)?;
    let (n, header) = if body[0] != MAX_BYTE {
        (sextet(0), 1)
    } else if body.len() > 1 && body[1] != MAX_BYTE {
        need(4)?;
        ((1..4).fold(0, |a, i| (a << 6) | sextet(i)), 4)
    } else {
        need(8)?;
        ((2..8).fold(0, |a, i| (a << 6) | sextet(i)), 8)
    };
    let n = usize::try_from(n).map_err(|_| Error::Argument(format!("vertex count {n} too large")))?;

    let bits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| Error::Argument(format!("vertex count {n} too large")))?
        / 2;
    let expected = header + bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Length {
            expected,
            found: body.len(),
        });
    }

    let data = &body[header..];
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                b.set(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}
