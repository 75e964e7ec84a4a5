//! The graph6 text encoding: a size header followed by the upper triangle
//! of the adjacency matrix (column by column), packed six bits per
//! printable character with offset 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("character {b:#04x} out of range 63..126")));
    }
    let (n, body) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data characters for n={n}, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty line".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(Error::Graph6("truncated 8-byte size header".into())),
        [126, rest @ ..] if rest.len() >= 3 => Ok((value(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated 4-byte size header".into())),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}
