//! Team configurations and dense indexing of multisets of vertices.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// Positions of one team, as a sorted multiset of vertices. Several players
/// may share a vertex.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TeamConfig(Vec<Vertex>);

impl TeamConfig {
    pub fn new(mut positions: Vec<Vertex>) -> Self {
        positions.sort_unstable();
        TeamConfig(positions)
    }

    pub fn from_counts(counts: &[u8]) -> Self {
        TeamConfig(
            counts
                .iter()
                .enumerate()
                .flat_map(|(v, &c)| std::iter::repeat_n(v, c as usize))
                .collect(),
        )
    }

    pub fn counts(&self, n: usize) -> Vec<u8> {
        let mut counts = vec![0u8; n];
        for &v in &self.0 {
            counts[v] += 1;
        }
        counts
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Occupied vertices as a bitmask.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Drops every member standing on a vertex of `mask`.
    pub fn without(&self, mask: u64) -> TeamConfig {
        TeamConfig(self.0.iter().copied().filter(|&v| mask >> v & 1 == 0).collect())
    }

    /// Every member's move stays inside its closed neighborhood, for some
    /// pairing of the two multisets.
    pub fn is_legal_successor(&self, next: &TeamConfig, g: &Graph) -> bool {
        self.len() == next.len() && perfect_matching(g, &self.0, &next.0)
    }
}

impl fmt::Debug for TeamConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl From<Vec<Vertex>> for TeamConfig {
    fn from(v: Vec<Vertex>) -> Self {
        TeamConfig::new(v)
    }
}

fn perfect_matching(g: &Graph, from: &[Vertex], to: &[Vertex]) -> bool {
    fn augment(
        g: &Graph,
        i: usize,
        from: &[Vertex],
        to: &[Vertex],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..to.len() {
            if !seen[j] && g.closed_mask(from[i]) >> to[j] & 1 == 1 {
                seen[j] = true;
                if owner[j].is_none_or(|o| augment(g, o, from, to, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; to.len()];
    (0..from.len()).all(|i| {
        let mut seen = vec![false; to.len()];
        augment(g, i, from, to, &mut seen, &mut owner)
    })
}

/// Binomial coefficients up to a fixed size, saturating on overflow.
#[derive(Clone, Debug)]
pub(crate) struct Binomials {
    rows: Vec<Vec<u64>>,
}

impl Binomials {
    pub(crate) fn new(max: usize) -> Self {
        let mut rows = vec![vec![1u64]];
        for a in 1..=max {
            let prev = &rows[a - 1];
            let mut row = vec![1u64; a + 1];
            for b in 1..a {
                row[b] = prev[b - 1].saturating_add(prev[b]);
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.rows[a][b]
        }
    }
}

/// `C(a, b)` without a table, saturating.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc.saturating_mul((a - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Dense ranking of all count vectors over `n` vertices with total at most
/// `max_size`, in lexicographic order (vertex 0 most significant).
///
/// Rank 0 is the empty multiset.
#[derive(Clone, Debug)]
pub struct MultisetIndex {
    n: usize,
    max_size: usize,
    binom: Binomials,
    table: Vec<u8>,
    sizes: Vec<u8>,
}

impl MultisetIndex {
    /// Number of multisets of size `<= max_size` over `n` vertices.
    pub fn count_for(n: usize, max_size: usize) -> u128 {
        binomial((n + max_size) as u64, max_size as u64)
    }

    pub fn new(n: usize, max_size: usize) -> Self {
        assert!(max_size <= u8::MAX as usize, "multiplicities are stored as u8");
        let binom = Binomials::new(n + max_size + 1);
        let total = binom.get(n + max_size, max_size) as usize;
        let mut table = Vec::with_capacity(total * n);
        let mut sizes = Vec::with_capacity(total);
        let mut current = vec![0u8; n];
        fill(&mut current, 0, max_size, &mut table, &mut sizes);
        debug_assert_eq!(sizes.len(), total);
        MultisetIndex {
            n,
            max_size,
            binom,
            table,
            sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn counts(&self, rank: usize) -> &[u8] {
        &self.table[rank * self.n..(rank + 1) * self.n]
    }

    pub fn size(&self, rank: usize) -> usize {
        self.sizes[rank] as usize
    }

    pub fn rank(&self, counts: &[u8]) -> usize {
        let mut rem = self.max_size;
        let mut r = 0u64;
        for (i, &c) in counts.iter().enumerate() {
            let c = c as usize;
            let a = self.n - i;
            r += self.binom.get(a + rem, rem) - self.binom.get(a + rem - c, rem - c);
            rem -= c;
        }
        r as usize
    }

    /// Rank of `counts` with all vertices in `mask` emptied.
    pub fn rank_without(&self, counts: &[u8], mask: u64) -> usize {
        let mut rem = self.max_size;
        let mut r = 0u64;
        for (i, &c) in counts.iter().enumerate() {
            let c = if mask >> i & 1 == 1 { 0 } else { c as usize };
            let a = self.n - i;
            r += self.binom.get(a + rem, rem) - self.binom.get(a + rem - c, rem - c);
            rem -= c;
        }
        r as usize
    }

    pub fn support_mask(&self, rank: usize) -> u64 {
        self.counts(rank)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    pub fn team(&self, rank: usize) -> TeamConfig {
        TeamConfig::from_counts(self.counts(rank))
    }
}

fn fill(current: &mut [u8], i: usize, rem: usize, table: &mut Vec<u8>, sizes: &mut Vec<u8>) {
    if i == current.len() {
        table.extend_from_slice(current);
        sizes.push(current.iter().map(|&c| c as usize).sum::<usize>() as u8);
        return;
    }
    for c in 0..=rem {
        current[i] = c as u8;
        fill(current, i + 1, rem - c, table, sizes);
    }
    current[i] = 0;
}

/// All cop configurations of a fixed size, in lexicographic order, with
/// their joint-move successors.
#[derive(Clone, Debug)]
pub struct CopIndex {
    configs: Vec<TeamConfig>,
    masks: Vec<u64>,
    successors: Vec<Vec<u32>>,
    lookup: HashMap<TeamConfig, u32>,
}

impl CopIndex {
    pub fn count_for(n: usize, k: usize) -> u128 {
        binomial((n + k - 1) as u64, k as u64)
    }

    pub fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let mut configs = Vec::new();
        let mut current = Vec::with_capacity(k);
        combos(n, k, 0, &mut current, &mut configs);
        let lookup: HashMap<TeamConfig, u32> = configs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i as u32))
            .collect();
        let masks = configs.iter().map(TeamConfig::mask).collect();
        let successors = configs
            .iter()
            .map(|c| {
                let mut out: Vec<u32> = joint_moves(g, c.as_slice())
                    .into_iter()
                    .map(|t| lookup[&t])
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        CopIndex {
            configs,
            masks,
            successors,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn config(&self, i: usize) -> &TeamConfig {
        &self.configs[i]
    }

    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    /// Successor configurations, ascending (hence lexicographic).
    pub fn successors(&self, i: usize) -> &[u32] {
        &self.successors[i]
    }

    pub fn index_of(&self, config: &TeamConfig) -> Option<usize> {
        self.lookup.get(config).map(|&i| i as usize)
    }
}

fn combos(n: usize, k: usize, start: usize, current: &mut Vec<Vertex>, out: &mut Vec<TeamConfig>) {
    if current.len() == k {
        out.push(TeamConfig(current.clone()));
        return;
    }
    for v in start..n {
        current.push(v);
        combos(n, k, v, current, out);
        current.pop();
    }
}

/// All joint moves of a team, as sorted configurations (duplicates kept).
pub fn joint_moves(g: &Graph, team: &[Vertex]) -> Vec<TeamConfig> {
    let mut out = vec![Vec::with_capacity(team.len())];
    for &p in team {
        let nbhd = g.closed_neighborhood(p);
        out = out
            .into_iter()
            .flat_map(|partial| {
                nbhd.iter().map(move |&q| {
                    let mut next = partial.clone();
                    next.push(q);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(TeamConfig::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};

    #[test]
    fn multiset_ranks_are_dense_and_ordered() {
        for (n, m) in [(1, 3), (3, 2), (4, 5), (6, 3)] {
            let idx = MultisetIndex::new(n, m);
            assert_eq!(idx.len() as u128, MultisetIndex::count_for(n, m));
            for r in 0..idx.len() {
                assert_eq!(idx.rank(idx.counts(r)), r);
            }
            assert_eq!(idx.size(0), 0);
        }
    }

    #[test]
    fn rank_without_drops_masked_vertices() {
        let idx = MultisetIndex::new(4, 4);
        let counts = [1u8, 2, 0, 1];
        assert_eq!(idx.rank_without(&counts, 0b0010), idx.rank(&[1, 0, 0, 1]));
    }

    #[test]
    fn team_configs() {
        let t = TeamConfig::new(vec![3, 1, 3]);
        assert_eq!(t.as_slice(), &[1, 3, 3]);
        assert_eq!(t.counts(4), vec![0, 1, 0, 2]);
        assert_eq!(TeamConfig::from_counts(&[0, 1, 0, 2]), t);
        assert_eq!(t.without(0b1000).as_slice(), &[1]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[1,3,3]");
    }

    #[test]
    fn cop_index_successors() {
        let g = path(3).unwrap();
        let idx = CopIndex::new(&g, 2);
        assert_eq!(idx.len(), 6);
        let from = idx.index_of(&TeamConfig::new(vec![0, 0])).unwrap();
        let succ: Vec<_> = idx
            .successors(from)
            .iter()
            .map(|&s| idx.config(s as usize).clone())
            .collect();
        assert_eq!(
            succ,
            vec![
                TeamConfig::new(vec![0, 0]),
                TeamConfig::new(vec![0, 1]),
                TeamConfig::new(vec![1, 1])
            ]
        );
    }

    #[test]
    fn legal_successor_uses_a_matching() {
        let g = star(3).unwrap();
        let a = TeamConfig::new(vec![1, 2]);
        assert!(a.is_legal_successor(&TeamConfig::new(vec![0, 0]), &g));
        assert!(a.is_legal_successor(&TeamConfig::new(vec![0, 2]), &g));
        assert!(!a.is_legal_successor(&TeamConfig::new(vec![3, 0]), &g));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(Binomials::new(12).get(12, 6), 924);
    }
}
