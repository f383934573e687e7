//! Edge-list text and graph6 encodings.
//!
//! Edge-list format: first line `n m`, then `m` lines `u v` (0-indexed,
//! whitespace separated). `#` starts a comment anywhere on a line.

use crate::graph::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| GraphError::EdgeListParse {
        line,
        msg: msg.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let header = parse_pair(header).ok_or_else(|| err(hline, "expected `n m`"))?;
    let (n, m) = header;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let pair = parse_pair(body).ok_or_else(|| err(line, "expected `u v`"))?;
        edges.push(pair);
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    let a = it.next()?.ok()?;
    let b = it.next()?.ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes a graph6 string (optionally prefixed by `>>graph6<<`).
pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6("byte outside 63..=126".into()));
    }
    let (n, body) = decode_order(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let short = || GraphError::Graph6("truncated order field".into());
    let word = |b: &[u8]| b.iter().fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize);
    match bytes {
        [] => Err(short()),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(short());
            }
            Ok((word(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(short());
            }
            Ok((word(&rest[..3]), &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - 63) as usize, rest)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.is_adjacent(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads either encoding: a single token without whitespace is graph6.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let body: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    match body.as_slice() {
        [single] if !single.contains(char::is_whitespace) => from_graph6(single),
        _ => parse_edge_list(text),
    }
}
