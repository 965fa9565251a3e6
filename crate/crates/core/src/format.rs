//! Interchange formats: graph6 text and a plain adjacency-list JSON.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups offset by 63,
//! after a size prefix. Orders up to 62 use one prefix byte, 63 and 64 use
//! the `~` escape followed by three bytes.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Format(msg.into()))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * (n - 1) / 2).div_ceil(6) + 4);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 record. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted; anything else malformed is an error.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return bad("empty input");
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return bad(format!("byte {pos} is outside the printable range 63..=126"));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return bad("orders above 258047 are not supported");
        }
        if bytes.len() < 4 {
            return bad("truncated size prefix");
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return bad(format!("non-minimal size prefix for order {n}"));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return bad("order 0 graphs are not supported");
    }
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return bad(format!(
            "order {n} needs {need} data bytes, found {}",
            body.len()
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[need - 1] - 63) & ((1u8 << pad) - 1) != 0 {
            return bad("non-zero padding bits");
        }
    }
    Ok(g)
}

/// `{"order": n, "edges": [[u, v], ...]}` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyList {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for AdjacencyList {
    fn from(g: &Graph) -> Self {
        AdjacencyList {
            order: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&AdjacencyList> for Graph {
    type Error = Error;
    fn try_from(list: &AdjacencyList) -> Result<Graph> {
        let edges: Vec<_> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(list.order, &edges)
    }
}

pub fn to_adjacency_json(g: &Graph) -> String {
    serde_json::to_string(&AdjacencyList::from(g)).expect("plain data serializes")
}

pub fn from_adjacency_json(text: &str) -> Result<Graph> {
    let list: AdjacencyList =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Graph::try_from(&list)
}

// Graphs embedded in reports serialize as graph6 strings.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        decode_graph6(&text).map_err(serde::de::Error::custom)
    }
}
