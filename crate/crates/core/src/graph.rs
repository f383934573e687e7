//! Finite, simple, connected graphs.
//!
//! Every game in this crate treats the graph as reflexive: the legal moves
//! from `v` are its closed neighborhood `N[v]`. Self-loops are never stored.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

/// Closed neighborhoods are kept as `u64` bitmasks, which bounds the order.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {0} is not a trap")]
    NotATrap(Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph has no traps")]
    NoTraps,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
    #[error("graph6 parse error: {0}")]
    Graph6(String),
}

#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    closed: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut closed: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            closed[u] |= 1 << v;
            closed[v] |= 1 << u;
        }
        let adj = (0..n)
            .map(|v| bits(closed[v] & !(1u64 << v)).collect())
            .collect();
        let g = Graph {
            adj,
            closed,
            name: None,
        };
        if !g.is_connected_mask(full_mask(n)) {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Open neighborhood, ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// `N[v]` as a bitmask.
    pub fn closed_mask(&self, v: Vertex) -> u64 {
        self.closed[v]
    }

    /// `N[v]`, ascending; these are the legal moves from `v`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        bits(self.closed[v]).collect()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.closed[u] >> v & 1 == 1
    }

    /// Union of closed neighborhoods of the vertices in `mask`.
    pub fn expand(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |acc, v| acc | self.closed[v])
    }

    fn is_connected_mask(&self, alive: u64) -> bool {
        if alive == 0 {
            return true;
        }
        let start = alive & alive.wrapping_neg();
        let mut seen = start;
        loop {
            let next = self.expand(seen) & alive;
            if next == seen {
                return seen == alive;
            }
            seen = next;
        }
    }

    pub fn bfs_distances(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.bfs_distances(u)[v]
    }

    /// `d(u, S) = min { d(u, s) : s in S }`.
    pub fn distance_to_set(&self, u: Vertex, set: &[Vertex]) -> Result<usize, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let dist = self.bfs_distances(u);
        Ok(set.iter().map(|&s| dist[s]).min().unwrap())
    }

    pub fn eccentricity(&self, v: Vertex) -> usize {
        self.bfs_distances(v).into_iter().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.vertices()
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(0)
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<Vertex> {
        let ecc: Vec<usize> = self.vertices().map(|v| self.eccentricity(v)).collect();
        let radius = *ecc.iter().min().unwrap();
        self.vertices().filter(|&v| ecc[v] == radius).collect()
    }

    /// `v` covers `u` when `v != u` and `N[u] ⊆ N[v]`.
    pub fn covers(&self, v: Vertex, u: Vertex) -> bool {
        v != u && self.closed[u] & !self.closed[v] == 0
    }

    /// All vertices covering `u`, ascending.
    pub fn coverers(&self, u: Vertex) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.covers(v, u)).collect()
    }

    pub fn is_trap(&self, u: Vertex) -> bool {
        self.vertices().any(|v| self.covers(v, u))
    }

    pub fn traps(&self) -> Vec<Vertex> {
        self.vertices().filter(|&u| self.is_trap(u)).collect()
    }

    fn traps_within(&self, alive: u64) -> Vec<Vertex> {
        bits(alive)
            .filter(|&u| {
                let nu = self.closed[u] & alive;
                bits(alive).any(|v| v != u && nu & !(self.closed[v] & alive) == 0)
            })
            .collect()
    }

    /// Elimination ordering by iterated trap deletion (lowest-id trap
    /// first), ending with the last remaining vertex. `None` when some
    /// induced subgraph with at least two vertices has no trap.
    pub fn dismantling_order(&self) -> Option<Vec<Vertex>> {
        let mut alive = full_mask(self.n());
        let mut order = Vec::with_capacity(self.n());
        while alive.count_ones() > 1 {
            let trap = *self.traps_within(alive).first()?;
            alive &= !(1u64 << trap);
            order.push(trap);
        }
        order.extend(bits(alive));
        Some(order)
    }

    /// Dismantlable graphs are exactly the cop-win graphs.
    pub fn is_dismantlable(&self) -> bool {
        self.dismantling_order().is_some()
    }

    /// Cop-win, at least 7 vertices, and reducible below 7 vertices by
    /// repeatedly deleting two distinct traps of the current induced
    /// subgraph. All pair choices are searched.
    pub fn is_2_dismantlable(&self) -> bool {
        if self.n() < 7 || !self.is_dismantlable() {
            return false;
        }
        let mut failed = HashSet::new();
        self.two_dismantle_from(full_mask(self.n()), &mut failed)
    }

    fn two_dismantle_from(&self, alive: u64, failed: &mut HashSet<u64>) -> bool {
        if alive.count_ones() < 7 {
            return true;
        }
        if failed.contains(&alive) {
            return false;
        }
        let traps = self.traps_within(alive);
        for (i, &a) in traps.iter().enumerate() {
            for &b in &traps[i + 1..] {
                if self.two_dismantle_from(alive & !(1u64 << a) & !(1u64 << b), failed) {
                    return true;
                }
            }
        }
        failed.insert(alive);
        false
    }

    /// Induced subgraph on `keep` (ascending), relabelled `0..keep.len()`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Graph::from_edge_list(keep.len(), &edges)
    }

    /// Removes the trap `u` and maps it onto its lowest-id coverer.
    pub fn one_point_retract(&self, u: Vertex) -> Result<(Graph, RetractionMap), GraphError> {
        if u >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            });
        }
        let coverer = *self.coverers(u).first().ok_or(GraphError::NotATrap(u))?;
        let kept: Vec<Vertex> = self.vertices().filter(|&v| v != u).collect();
        let target = self.induced_subgraph(&kept)?;
        let relabel = |x: Vertex| if x > u { x - 1 } else { x };
        let image = self
            .vertices()
            .map(|x| if x == u { relabel(coverer) } else { relabel(x) })
            .collect();
        Ok((
            target,
            RetractionMap {
                removed: u,
                coverer,
                kept,
                image,
            },
        ))
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n()
    }

    /// Degree-one vertices (both vertices of `P2`; none for a single vertex).
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// A tree whose non-leaf vertices induce a path.
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine: Vec<Vertex> = self.vertices().filter(|&v| self.degree(v) > 1).collect();
        if spine.len() <= 1 {
            return true;
        }
        let spine_mask = spine.iter().fold(0u64, |m, &v| m | 1 << v);
        // induced subgraph of a tree is a forest; a connected one with
        // max degree two is a path
        spine
            .iter()
            .all(|&v| (self.closed[v] & spine_mask & !(1u64 << v)).count_ones() <= 2)
            && self.is_connected_mask(spine_mask)
    }
}

/// Retraction of a graph onto the one-point retract `G - u`.
///
/// `image[x]` is the label of `f(x)` in the retract, whose vertices are the
/// source vertices other than `u` in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionMap {
    pub removed: Vertex,
    /// Source label of the vertex the trap is mapped to.
    pub coverer: Vertex,
    /// `kept[i]` is the source vertex labelled `i` in the retract.
    pub kept: Vec<Vertex>,
    pub image: Vec<Vertex>,
}

impl RetractionMap {
    pub fn apply(&self, x: Vertex) -> Vertex {
        self.image[x]
    }

    /// Identity on the retract and every edge (or equal pair) of `source`
    /// maps to an edge or equal pair of `target`.
    pub fn is_retraction(&self, source: &Graph, target: &Graph) -> bool {
        let identity = self.kept.iter().enumerate().all(|(i, &v)| self.image[v] == i);
        let homomorphism = source.edges().into_iter().all(|(x, y)| {
            let (fx, fy) = (self.image[x], self.image[y]);
            fx == fy || target.is_adjacent(fx, fy)
        });
        identity && homomorphism
    }
}
