//! The graph6 text encoding (upper triangle, column-major, 6 bits per byte).

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    // every byte lies in 63..=126
    String::from_utf8(out).unwrap_or_default()
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if let Some(&c) = body.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(GraphError::Graph6(format!("illegal character {:?}", c as char)));
    }
    let (n, rest) = match body {
        [] => return Err(GraphError::Graph6("empty input".into())),
        [126, 126, ..] => return Err(GraphError::Graph6("eight-byte size prefix exceeds 64 vertices".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            if n <= 62 {
                return Err(GraphError::Graph6(format!("non-canonical size prefix for n={n}")));
            }
            (n, rest)
        }
        [126, ..] => return Err(GraphError::Graph6("truncated size prefix".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::Graph6(format!("unsupported vertex count {n}")));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(GraphError::Graph6(format!(
            "body has {} bytes, expected {expected} for n={n}",
            rest.len()
        )));
    }
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = rest[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_rows(rows)
}
