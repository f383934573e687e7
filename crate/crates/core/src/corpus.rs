//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from all graphs on `n - 1` vertices by
//! adding a vertex with every possible neighbourhood; duplicates are
//! removed by a brute-force canonical form (minimum adjacency code over all
//! vertex permutations). This is only meant for `n <= 7`.

use std::collections::BTreeSet;

use crate::graph::{Graph, GraphError};
use crate::io::to_graph6;

/// Largest order accepted by the enumerators.
pub const MAX_CORPUS_ORDER: usize = 7;

type Adj = Vec<u8>;

fn code(adj: &[u8], perm: &[usize]) -> u32 {
    let n = adj.len();
    let mut c = 0u32;
    for j in 1..n {
        for i in 0..j {
            c = c << 1 | (adj[perm[i]] >> perm[j] & 1) as u32;
        }
    }
    c
}

fn canonical(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code(adj, &perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code(adj, &perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn decode(n: usize, mut c: u32) -> Adj {
    let mut adj = vec![0u8; n];
    for j in (1..n).rev() {
        for i in (0..j).rev() {
            if c & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            c >>= 1;
        }
    }
    adj
}

fn connected(adj: &[u8]) -> bool {
    let n = adj.len();
    let mut seen = 1u8;
    loop {
        let next = (0..n)
            .filter(|&v| seen >> v & 1 == 1)
            .fold(seen, |acc, v| acc | adj[v]);
        if next == seen {
            return seen.count_ones() as usize == n;
        }
        seen = next;
    }
}

fn to_graph(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)))
        .collect();
    let g = Graph::from_edge_list(n, &edges).expect("enumerated graphs are connected");
    let name = to_graph6(&g);
    g.with_name(name)
}

fn grow(prev: &BTreeSet<u32>, n: usize, keep: impl Fn(&[u8]) -> bool) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for &c in prev {
        let base = decode(n - 1, c);
        for nbrs in 0u16..(1 << (n - 1)) {
            let mut adj = base.clone();
            adj.push(nbrs as u8);
            for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                if nbrs >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            if keep(&adj) {
                out.insert(canonical(&adj));
            }
        }
    }
    out
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 || n > MAX_CORPUS_ORDER {
        return Err(GraphError::InvalidParameter(format!(
            "corpus order must be in 1..={MAX_CORPUS_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// ordered by canonical code. Each graph is named by its graph6 string.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    check_order(n)?;
    let mut all = BTreeSet::from([0u32]);
    for order in 2..=n {
        all = grow(&all, order, |_| true);
    }
    Ok(all
        .into_iter()
        .map(|c| decode(n, c))
        .filter(|adj| connected(adj))
        .map(|adj| to_graph(&adj))
        .collect())
}

/// All connected graphs with `min_n..=max_n` vertices, by order.
pub fn connected_graphs_up_to(min_n: usize, max_n: usize) -> Result<Vec<Graph>, GraphError> {
    check_order(max_n)?;
    let mut out = Vec::new();
    let mut all = BTreeSet::from([0u32]);
    for order in 1..=max_n {
        if order > 1 {
            all = grow(&all, order, |_| true);
        }
        if order >= min_n {
            out.extend(
                all.iter()
                    .map(|&c| decode(order, c))
                    .filter(|adj| connected(adj))
                    .map(|adj| to_graph(&adj)),
            );
        }
    }
    Ok(out)
}

/// Isomorphism test by canonical form; both graphs must have at most
/// [`MAX_CORPUS_ORDER`] vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    assert!(a.n() <= MAX_CORPUS_ORDER && b.n() <= MAX_CORPUS_ORDER);
    let adj = |g: &Graph| -> Adj { (0..g.n()).map(|v| (g.closed_mask(v) & !(1 << v)) as u8).collect() };
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical(&adj(a)) == canonical(&adj(b))
}

/// All trees on exactly `n` vertices up to isomorphism.
pub fn trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    check_order(n)?;
    let mut all = BTreeSet::from([0u32]);
    for order in 2..=n {
        // a tree plus one vertex of degree one
        all = grow(&all, order, |adj| adj[order - 1].count_ones() == 1);
    }
    Ok(all.into_iter().map(|c| to_graph(&decode(n, c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(2, 6).unwrap().len(), 142);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
        assert!(trees(7).unwrap().iter().all(Graph::is_tree));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        // P4 labelled two ways
        let a = vec![0b0010, 0b0101, 0b1010, 0b0100];
        let b = vec![0b0100, 0b1000, 0b1001, 0b0110];
        assert_eq!(canonical(&a), canonical(&b));
        assert_eq!(decode(4, canonical(&a)).len(), 4);
    }

    #[test]
    fn isomorphism() {
        use crate::families::{complete_bipartite, cycle, path, star};
        assert!(is_isomorphic(&complete_bipartite(2, 2).unwrap().0, &cycle(4).unwrap()));
        assert!(!is_isomorphic(&star(3).unwrap(), &path(4).unwrap()));
    }

    #[test]
    fn rejects_large_orders() {
        assert!(connected_graphs(8).is_err());
        assert!(trees(0).is_err());
    }
}
