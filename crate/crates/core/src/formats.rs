//! Text formats: graph6 (bit-exact, n ≤ 62), the plain edge-list format, and DOT.
//!
//! graph6 layout: one byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into
//! 6-bit groups, each group offset by 63, the last group zero-padded.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest order expressible with the one-byte graph6 size prefix.
pub const GRAPH6_MAX_N: usize = 62;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Number of payload bytes for an `n`-vertex graph.
pub fn graph6_payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    if !(63..=126).contains(&head) {
        return Err(g6_err(0, format!("byte {head} outside 63..=126")));
    }
    if head == 126 {
        return Err(Error::UnsupportedSize(63, GRAPH6_MAX_N));
    }
    let n = (head - 63) as usize;
    let need = graph6_payload_len(n);
    let payload = &bytes[1..];
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(i + 1, format!("byte {b} outside 63..=126")));
        }
    }
    if payload.len() < need {
        return Err(g6_err(
            bytes.len(),
            format!("truncated: {n} vertices need {need} payload bytes, found {}", payload.len()),
        ));
    }
    if payload.len() > need {
        return Err(g6_err(1 + need, "trailing bytes after graph"));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = (payload[k / 6] - 63) as u32;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = (payload[need - 1] - 63) as u32;
        let pad_mask = (1u32 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(g6_err(need, "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize(n, GRAPH6_MAX_N));
    }
    let mut out = String::with_capacity(1 + graph6_payload_len(n));
    out.push((63 + n as u8) as char);
    let mut group = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push((group + 63) as char);
                group = 0;
            }
        }
    }
    if k % 6 != 0 {
        group <<= 6 - k % 6;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Identifier used in reports: the graph6 string, or for `n > 62` a single
/// line `n<n>:u-v,u-v,...`.
pub fn graph_id(g: &Graph) -> String {
    match to_graph6(g) {
        Ok(s) => s,
        Err(_) => {
            let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            format!("n{}:{}", g.n(), edges.join(","))
        }
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// (0-based). `#` starts a comment; a `# labels: a b c` comment attaches labels.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Option<Vec<String>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(rest) = comment.and_then(|c| c.trim().strip_prefix("labels:")) {
            labels = Some(rest.split_whitespace().map(str::to_owned).collect());
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::EdgeList {
                line: line_no,
                reason: format!("expected two integers, found {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line: line_no,
                reason: format!("`{s}` is not a non-negative integer"),
            })
        };
        let pair = (parse(fields[0])?, parse(fields[1])?);
        if header.is_none() {
            header = Some(pair);
        } else {
            edges.push((line_no, pair));
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::EdgeList {
            line: 0,
            reason: "missing `n m` header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: edges.last().map_or(1, |e| e.0),
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut list = Vec::with_capacity(m);
    for (line, (u, v)) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::EdgeList {
                line,
                reason: format!("invalid edge ({u},{v}) for n={n}"),
            });
        }
        list.push((u, v));
    }
    g = Graph::from_edge_list(g.n(), &list)?;
    if let Some(l) = labels {
        g = g.with_labels(l)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        let _ = writeln!(out, "# labels: {}", labels.join(" "));
    }
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Undirected DOT, using labels when present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
