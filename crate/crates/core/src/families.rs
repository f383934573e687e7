//! Generators for the graph families used throughout the analysis.
//!
//! All generators are deterministic. Where a family has a customary
//! 1-based labelling (the `H(n)` graphs) internal vertex `i` carries label
//! `i + 1`; see [`h_label`] and [`h_vertex`].

use crate::graph::{Graph, GraphError, Vertex};

fn bad(msg: String) -> GraphError {
    GraphError::InvalidParameter(msg)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad(format!("path needs n >= 1, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad(format!("complete graph needs n >= 1, got {n}")));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("K{n}")))
}

/// Parts of a complete bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// `K_{m,n}`: vertices `0..m` form the first part, `m..m+n` the second.
pub fn complete_bipartite(m: usize, n: usize) -> Result<(Graph, Bipartition), GraphError> {
    if m < 1 || n < 1 {
        return Err(bad(format!("complete bipartite needs m, n >= 1, got {m}, {n}")));
    }
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    let g = Graph::from_edge_list(m + n, &edges)?.with_name(format!("K{m},{n}"));
    Ok((
        g,
        Bipartition {
            left: (0..m).collect(),
            right: (m..m + n).collect(),
        },
    ))
}

/// `K_{1,n}` with hub `0`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad(format!("star needs n >= 1, got {n}")));
    }
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Ok(Graph::from_edge_list(n + 1, &edges)?.with_name(format!("S{n}")))
}

/// `W_n` on `n` vertices: hub `0`, rim cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(bad(format!("wheel needs n >= 4, got {n}")));
    }
    let rim = n - 1;
    let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("W{n}")))
}

/// Spine `0..spine_length` in order, then the pendant leaves of each spine
/// vertex in spine order.
pub fn caterpillar(spine_length: usize, leaf_counts: &[usize]) -> Result<Graph, GraphError> {
    if spine_length < 1 || leaf_counts.len() != spine_length {
        return Err(bad(format!(
            "caterpillar needs spine_length >= 1 and one leaf count per spine vertex, got {spine_length} and {}",
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<_> = (1..spine_length).map(|i| (i - 1, i)).collect();
    let mut next = spine_length;
    for (s, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((s, next));
            next += 1;
        }
    }
    let label = leaf_counts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(Graph::from_edge_list(next, &edges)?.with_name(format!("cat[{label}]")))
}

/// `T_n`: center `0`, inner ring `1..=n`, outer leaf `i + n` hanging off `i`.
pub fn subdivided_star(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad(format!("subdivided star needs n >= 1, got {n}")));
    }
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i + n)));
    Ok(Graph::from_edge_list(2 * n + 1, &edges)?.with_name(format!("T{n}")))
}

/// Internal vertex for a 1-based `H(n)` label.
pub fn h_vertex(label: usize) -> Vertex {
    label - 1
}

/// 1-based `H(n)` label of an internal vertex.
pub fn h_label(v: Vertex) -> usize {
    v + 1
}

const H7_EDGES: [(usize, usize); 14] = [
    (1, 2),
    (1, 4),
    (2, 6),
    (5, 6),
    (5, 2),
    (5, 1),
    (5, 4),
    (3, 6),
    (3, 2),
    (3, 1),
    (3, 4),
    (7, 6),
    (7, 4),
    (7, 3),
];

/// The maximum-capture-time graphs `H(n)`, `n >= 7`.
///
/// `H(7)` is the path `6-2-1-4` with two non-adjacent dominating vertices
/// `3` and `5`, plus `7` adjacent to `6`, `4` and `3`. Each later vertex
/// `j` is joined to `j-1`, `j-3` and `j-4`.
pub fn h_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 7 {
        return Err(bad(format!("H(n) needs n >= 7, got {n}")));
    }
    let mut edges: Vec<_> = H7_EDGES.to_vec();
    for j in 8..=n {
        edges.extend([(j, j - 1), (j, j - 3), (j, j - 4)]);
    }
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(a, b)| (h_vertex(a), h_vertex(b)))
        .collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("H{n}")))
}
