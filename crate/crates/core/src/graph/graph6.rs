//! graph6 short form: a header byte `n + 63` followed by the upper triangle
//! of the adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed big-endian six bits per byte, each byte offset by 63.

use super::Graph;
use crate::{Error, Result};

/// Largest order the short form can encode.
pub const GRAPH6_LIMIT: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, payload) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad header byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    if n > GRAPH6_LIMIT {
        return Err(Error::Graph6("long-form headers are not supported".into()));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if payload.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} payload bytes for {n} vertices, found {}",
            payload.len()
        )));
    }
    let mut sextets = Vec::with_capacity(need);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("bad payload byte {b:#04x}")));
        }
        sextets.push(b - 63);
    }
    let bit = |k: usize| sextets[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = vec![];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_LIMIT {
        return Err(Error::CapExceeded {
            what: "graph6 short form",
            limit: GRAPH6_LIMIT,
            order: n,
            overridable: false,
        });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
