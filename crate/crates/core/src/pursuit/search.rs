//! Depth-bounded exact search, for robber counts too large to tabulate.

use std::collections::HashMap;

use super::table::{outcomes_into, OutcomeScratch};
use super::{check_params, SolveError};
use crate::graph::Graph;
use crate::team::{CopIndex, MultisetIndex};

struct Search<'a> {
    g: &'a Graph,
    cops: CopIndex,
    robbers: MultisetIndex,
    /// Per position: largest horizon known lost, smallest known won.
    memo: HashMap<(u32, u32), (u32, u32)>,
    scratch: OutcomeScratch,
}

impl Search<'_> {
    /// Can the cops, to move at `(c, r)`, finish within `t` rounds?
    fn win(&mut self, c: usize, r: usize, t: u32) -> bool {
        if r == 0 {
            return true;
        }
        if t == 0 {
            return false;
        }
        let key = (c as u32, r as u32);
        let (lost, won) = self.memo.get(&key).copied().unwrap_or((0, u32::MAX));
        if t <= lost {
            return false;
        }
        if t >= won {
            return true;
        }
        let counts = self.robbers.counts(r).to_vec();
        let succ = self.cops.successors(c).to_vec();
        let mut result = false;
        for &c2 in &succ {
            let c2 = c2 as usize;
            let mask = self.cops.mask(c2);
            let r1 = self.robbers.rank_without(&counts, mask);
            if r1 == 0 {
                result = true;
                break;
            }
            if t == 1 {
                continue;
            }
            let mut replies = Vec::new();
            outcomes_into(self.g, &self.robbers, self.robbers.counts(r1), mask, &mut self.scratch, &mut replies);
            replies.sort_by_cached_key(|&x| spread_key(self.robbers.counts(x as usize)));
            if replies.iter().all(|&x| self.win(c2, x as usize, t - 1)) {
                result = true;
                break;
            }
        }
        let entry = self.memo.entry(key).or_insert((0, u32::MAX));
        if result {
            entry.1 = entry.1.min(t);
        } else {
            entry.0 = entry.0.max(t);
        }
        result
    }
}

/// Robber teams that occupy more vertices, more evenly, first.
fn spread_key(counts: &[u8]) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<u8>) {
    let support = counts.iter().filter(|&&c| c > 0).count();
    let min = counts.iter().copied().filter(|&c| c > 0).min().unwrap_or(0);
    (std::cmp::Reverse(support), std::cmp::Reverse(min))
}

/// Decides `capt_k(G, m) >= bound` without building the full table: for
/// every cop start some placement of `m` robbers survives `bound - 1`
/// rounds against every cop strategy.
pub fn capture_time_at_least(g: &Graph, k: usize, m: usize, bound: u32) -> Result<bool, SolveError> {
    check_params(g, k, m)?;
    if bound == 0 {
        return Ok(true);
    }
    let mut s = Search {
        g,
        cops: CopIndex::new(g, k),
        robbers: MultisetIndex::new(g.n(), m),
        memo: HashMap::new(),
        scratch: OutcomeScratch::default(),
    };
    for c in 0..s.cops.len() {
        let mask = s.cops.mask(c);
        let mut placements: Vec<usize> = (0..s.robbers.len())
            .filter(|&r| s.robbers.size(r) == m && s.robbers.support_mask(r) & mask == 0)
            .collect();
        placements.sort_by_cached_key(|&r| spread_key(s.robbers.counts(r)));
        let survives = placements.into_iter().any(|r| !s.win(c, r, bound - 1));
        if !survives {
            return Ok(false);
        }
    }
    Ok(true)
}
