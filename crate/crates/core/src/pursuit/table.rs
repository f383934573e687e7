//! Retrograde labeling of the full game graph.

use rayon::prelude::*;

use super::{check_params, check_team, state_space_size, GamePosition, GameValue, SolveError, SolverConfig, Turn};
use crate::graph::{bits, Graph};
use crate::team::{CopIndex, MultisetIndex, TeamConfig};

const UNSET: u32 = u32::MAX;

fn to_value(t: u32) -> GameValue {
    if t == UNSET {
        GameValue::RobbersWin
    } else {
        GameValue::Finite(t)
    }
}

/// Reusable dedup marks for [`outcomes_into`].
#[derive(Debug, Default)]
pub struct OutcomeScratch {
    marks: Vec<u32>,
    generation: u32,
    stage: Vec<u32>,
    groups: Vec<(u64, u8)>,
    buf: Vec<u8>,
}

impl OutcomeScratch {
    fn next_generation(&mut self, len: usize) -> u32 {
        if self.marks.len() < len {
            self.marks.resize(len, 0);
        }
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.marks.fill(0);
            self.generation = 1;
        }
        self.generation
    }
}

/// Distinct robber teams reachable in one joint robber move from `counts`
/// (which must avoid `cop_mask`), as ranks in `idx`.
///
/// Moves onto a cop vertex are never generated: such a robber is removed at
/// once, and by monotonicity in the robber team the robbers never gain from
/// it. Staying put is always available, so no outcome is empty.
pub fn outcomes(g: &Graph, idx: &MultisetIndex, counts: &[u8], cop_mask: u64) -> Vec<u32> {
    let mut out = Vec::new();
    outcomes_into(g, idx, counts, cop_mask, &mut OutcomeScratch::default(), &mut out);
    out
}

/// [`outcomes`], appending to `out` in no particular order.
pub fn outcomes_into(
    g: &Graph,
    idx: &MultisetIndex,
    counts: &[u8],
    cop_mask: u64,
    scratch: &mut OutcomeScratch,
    out: &mut Vec<u32>,
) {
    // robbers with the same destination set move as one group
    scratch.groups.clear();
    for (v, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let dests = g.closed_mask(v) & !cop_mask;
        match scratch.groups.iter_mut().find(|(d, _)| *d == dests) {
            Some((_, total)) => *total += c,
            None => scratch.groups.push((dests, c)),
        }
    }
    let groups = std::mem::take(&mut scratch.groups);
    let mut stage = std::mem::take(&mut scratch.stage);
    stage.clear();
    stage.push(0);
    scratch.buf.clear();
    scratch.buf.resize(counts.len(), 0);
    let mut dests = Vec::with_capacity(counts.len());
    for (i, &(mask, c)) in groups.iter().enumerate() {
        dests.clear();
        dests.extend(bits(mask));
        let generation = scratch.next_generation(idx.len());
        let last = i + 1 == groups.len();
        let mut next = Vec::with_capacity(stage.len() * (c as usize + 1));
        for &s in &stage {
            scratch.buf.copy_from_slice(idx.counts(s as usize));
            let mut sink = |r: u32| {
                if scratch.marks[r as usize] != generation {
                    scratch.marks[r as usize] = generation;
                    if last {
                        out.push(r);
                    } else {
                        next.push(r);
                    }
                }
            };
            distribute(&dests, c, &mut scratch.buf, idx, &mut sink);
        }
        stage = next;
    }
    if groups.is_empty() {
        out.push(0);
    }
    scratch.groups = groups;
    scratch.stage = stage;
}

fn distribute(dests: &[usize], c: u8, buf: &mut [u8], idx: &MultisetIndex, sink: &mut impl FnMut(u32)) {
    let (&d, rest) = dests.split_first().expect("nonempty destinations");
    if rest.is_empty() {
        buf[d] += c;
        sink(idx.rank(buf) as u32);
        buf[d] -= c;
        return;
    }
    for x in 0..=c {
        buf[d] += x;
        distribute(rest, c - x, buf, idx, sink);
        buf[d] -= x;
    }
}

/// Values of every position for `k` cops and up to `m` robbers.
#[derive(Debug)]
pub struct GameTable {
    graph: Graph,
    k: usize,
    m: usize,
    cops: CopIndex,
    robbers: MultisetIndex,
    /// Cops to move, indexed `cop * nr + robbers`.
    values: Vec<u32>,
    /// Robbers to move, same indexing.
    after: Vec<u32>,
    active: Vec<u32>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl GameTable {
    pub fn solve(g: &Graph, k: usize, m: usize) -> Result<Self, SolveError> {
        Self::solve_with(g, k, m, &SolverConfig::default())
    }

    pub fn solve_with(g: &Graph, k: usize, m: usize, config: &SolverConfig) -> Result<Self, SolveError> {
        check_params(g, k, m)?;
        let required = state_space_size(g.n(), k, m);
        if required > config.state_cap || required / 2 >= u32::MAX as u128 {
            return Err(SolveError::StateCap {
                required,
                cap: config.state_cap,
            });
        }
        let cops = CopIndex::new(g, k);
        let robbers = MultisetIndex::new(g.n(), m);
        let (nc, nr) = (cops.len(), robbers.len());

        let active: Vec<u32> = (0..nc)
            .flat_map(|c| {
                let mask = cops.mask(c);
                let robbers = &robbers;
                (1..nr)
                    .filter(move |&r| robbers.support_mask(r) & mask == 0)
                    .map(move |r| (c * nr + r) as u32)
            })
            .collect();
        let lists: Vec<Vec<u32>> = active
            .par_iter()
            .map_init(OutcomeScratch::default, |scratch, &node| {
                let (c, r) = (node as usize / nr, node as usize % nr);
                let mut out = Vec::new();
                outcomes_into(g, &robbers, robbers.counts(r), cops.mask(c), scratch, &mut out);
                out
            })
            .collect();
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        for l in &lists {
            offsets.push(offsets.last().unwrap() + l.len());
        }
        let targets: Vec<u32> = lists.into_iter().flatten().collect();

        let mut table = GameTable {
            graph: g.clone(),
            k,
            m,
            cops,
            robbers,
            values: vec![UNSET; nc * nr],
            after: vec![UNSET; nc * nr],
            active,
            offsets,
            targets,
        };
        table.label();
        Ok(table)
    }

    fn label(&mut self) {
        let nr = self.robbers.len();
        let mut cursor: Vec<usize> = self.offsets[..self.active.len()].to_vec();
        let mut pending: Vec<usize> = (0..self.active.len()).collect();
        for t in 1u32.. {
            // robbers-to-move nodes whose outcomes all got values before t
            let values = &self.values;
            let targets = &self.targets;
            let offsets = &self.offsets;
            let active = &self.active;
            let mut cursors: Vec<(usize, usize)> = pending.iter().map(|&i| (i, cursor[i])).collect();
            cursors.par_iter_mut().for_each(|(i, cur)| {
                let c = active[*i] as usize / nr;
                let end = offsets[*i + 1];
                while *cur < end {
                    let r = targets[*cur] as usize;
                    if r != 0 && values[c * nr + r] == UNSET {
                        break;
                    }
                    *cur += 1;
                }
            });
            pending.clear();
            for (i, cur) in cursors {
                cursor[i] = cur;
                if cur == self.offsets[i + 1] {
                    self.after[self.active[i] as usize] = t;
                } else {
                    pending.push(i);
                }
            }

            let cops = &self.cops;
            let robbers = &self.robbers;
            let after = &self.after;
            let labeled: usize = self
                .values
                .par_chunks_mut(nr)
                .enumerate()
                .map(|(c, row)| {
                    let mut count = 0;
                    for (r, slot) in row.iter_mut().enumerate().skip(1) {
                        if *slot != UNSET {
                            continue;
                        }
                        let counts = robbers.counts(r);
                        let hit = cops.successors(c).iter().any(|&c2| {
                            let c2 = c2 as usize;
                            let r1 = robbers.rank_without(counts, cops.mask(c2));
                            r1 == 0 || after[c2 * nr + r1] != UNSET
                        });
                        if hit {
                            *slot = t;
                            count += 1;
                        }
                    }
                    count
                })
                .sum();
            if labeled == 0 {
                break;
            }
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Positions in the table, both turns.
    pub fn position_count(&self) -> usize {
        self.values.len() * 2
    }

    /// Robber-move edges stored after deduplication.
    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    fn cop_index(&self, cops: &TeamConfig) -> Result<usize, SolveError> {
        check_team(&self.graph, cops)?;
        self.cops.index_of(cops).ok_or_else(|| {
            SolveError::InvalidPosition(format!("expected {} cops, got {:?}", self.k, cops))
        })
    }

    fn robber_rank(&self, robbers: &TeamConfig) -> Result<usize, SolveError> {
        check_team(&self.graph, robbers)?;
        if robbers.len() > self.m {
            return Err(SolveError::InvalidPosition(format!(
                "{} robbers exceed the solved m={}",
                robbers.len(),
                self.m
            )));
        }
        Ok(self.robbers.rank(&robbers.counts(self.graph.n())))
    }

    fn check_m(&self, m: usize) -> Result<(), SolveError> {
        if m == 0 || m > self.m {
            return Err(SolveError::InvalidParameter(format!(
                "m={m} outside 1..={}",
                self.m
            )));
        }
        Ok(())
    }

    /// Value with the cops to move.
    pub fn value_of(&self, cops: &TeamConfig, robbers: &TeamConfig) -> Result<GameValue, SolveError> {
        let c = self.cop_index(cops)?;
        let r = self.robber_rank(robbers)?;
        if r == 0 {
            return Ok(GameValue::Finite(0));
        }
        Ok(to_value(self.values[c * self.robbers.len() + r]))
    }

    pub fn value(&self, pos: &GamePosition) -> Result<GameValue, SolveError> {
        match pos.turn {
            Turn::CopsToMove => self.value_of(&pos.cops, &pos.robbers),
            Turn::RobbersToMove => {
                let c = self.cop_index(&pos.cops)?;
                let r = self.robber_rank(&pos.robbers)?;
                if r == 0 {
                    return Err(SolveError::InvalidPosition("no robbers left".into()));
                }
                if pos.robbers.mask() & pos.cops.mask() != 0 {
                    return Err(SolveError::InvalidPosition(
                        "a robber shares a vertex with a cop".into(),
                    ));
                }
                Ok(to_value(self.after[c * self.robbers.len() + r]))
            }
        }
    }

    fn placement_value(&self, c: usize, r0: usize) -> u32 {
        let r1 = self.robbers.rank_without(self.robbers.counts(r0), self.cops.mask(c));
        if r1 == 0 {
            0
        } else {
            self.values[c * self.robbers.len() + r1]
        }
    }

    /// Worst case over placements of `m` robbers, per cop start.
    fn start_values(&self, m: usize) -> Vec<u32> {
        (0..self.cops.len())
            .into_par_iter()
            .map(|c| {
                (0..self.robbers.len())
                    .filter(|&r| self.robbers.size(r) == m)
                    .map(|r| self.placement_value(c, r))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// `capt_k(G, m)` for the solved `m`.
    pub fn capture_time(&self) -> GameValue {
        self.capture_time_for(self.m).expect("solved m is in range")
    }

    /// `capt_k(G, m')` for any `m' <= m`.
    pub fn capture_time_for(&self, m: usize) -> Result<GameValue, SolveError> {
        self.check_m(m)?;
        Ok(to_value(self.start_values(m).into_iter().min().unwrap_or(UNSET)))
    }

    pub fn capture_time_from(&self, cop_start: &TeamConfig, m: usize) -> Result<GameValue, SolveError> {
        self.check_m(m)?;
        let c = self.cop_index(cop_start)?;
        Ok(to_value(
            (0..self.robbers.len())
                .filter(|&r| self.robbers.size(r) == m)
                .map(|r| self.placement_value(c, r))
                .max()
                .unwrap_or(0),
        ))
    }

    /// All cop starts achieving `capt_k(G, m')`, lexicographically.
    pub fn optimal_starts(&self, m: usize) -> Result<Vec<TeamConfig>, SolveError> {
        self.check_m(m)?;
        let values = self.start_values(m);
        let best = values.iter().copied().min().unwrap_or(UNSET);
        Ok(values
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == best)
            .map(|(c, _)| self.cops.config(c).clone())
            .collect())
    }

    /// A worst placement of `m'` robbers against `cops` (least rank among
    /// the maximizers).
    pub fn worst_placement(&self, cops: &TeamConfig, m: usize) -> Result<TeamConfig, SolveError> {
        self.check_m(m)?;
        let c = self.cop_index(cops)?;
        let best = (0..self.robbers.len())
            .filter(|&r| self.robbers.size(r) == m)
            .map(|r| (self.placement_value(c, r), std::cmp::Reverse(r)))
            .max()
            .map(|(_, std::cmp::Reverse(r))| r)
            .unwrap_or(0);
        Ok(self.robbers.team(best))
    }

    /// Lexicographically least optimal joint cop move.
    pub fn best_cop_move(&self, cops: &TeamConfig, robbers: &TeamConfig) -> Result<TeamConfig, SolveError> {
        let c = self.cop_index(cops)?;
        let r = self.robber_rank(robbers)?;
        let nr = self.robbers.len();
        let counts = self.robbers.counts(r);
        let (_, best) = self
            .cops
            .successors(c)
            .iter()
            .map(|&c2| {
                let c2 = c2 as usize;
                let r1 = self.robbers.rank_without(counts, self.cops.mask(c2));
                let v = if r1 == 0 { 1 } else { self.after[c2 * nr + r1] };
                (v, c2)
            })
            .min()
            .expect("a cop can always stay put");
        Ok(self.cops.config(best).clone())
    }

    /// Optimal joint robber move after the cops moved to `cops`; robbers
    /// standing on a cop are dropped first. Among equally good replies the
    /// least-ranked team is chosen.
    pub fn best_robber_move(&self, cops: &TeamConfig, robbers: &TeamConfig) -> Result<TeamConfig, SolveError> {
        let c = self.cop_index(cops)?;
        let survivors = robbers.without(cops.mask());
        let r = self.robber_rank(&survivors)?;
        if r == 0 {
            return Ok(survivors);
        }
        let nr = self.robbers.len();
        let node = (c * nr + r) as u32;
        let i = self.active.binary_search(&node).expect("survivors avoid the cops");
        let list = &self.targets[self.offsets[i]..self.offsets[i + 1]];
        let (_, std::cmp::Reverse(best)) = list
            .iter()
            .map(|&t| {
                let v = if t == 0 { 0 } else { self.values[c * nr + t as usize] };
                (v, std::cmp::Reverse(t))
            })
            .max()
            .expect("staying put is always possible");
        Ok(self.robbers.team(best as usize))
    }
}

/// Cop strategy read off a solved table: from every position, the
/// lexicographically least move among the optimal ones.
#[derive(Debug)]
pub struct CopPolicy {
    table: GameTable,
}

impl CopPolicy {
    pub fn new(table: GameTable) -> Self {
        CopPolicy { table }
    }

    pub fn table(&self) -> &GameTable {
        &self.table
    }

    /// Lexicographically least optimal start against `m` robbers.
    pub fn start(&self, m: usize) -> Result<TeamConfig, SolveError> {
        Ok(self.table.optimal_starts(m)?.swap_remove(0))
    }

    pub fn next_move(&self, cops: &TeamConfig, robbers: &TeamConfig) -> Result<TeamConfig, SolveError> {
        self.table.best_cop_move(cops, robbers)
    }

    pub fn value(&self) -> GameValue {
        self.table.capture_time()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    fn t(v: &[usize]) -> TeamConfig {
        TeamConfig::new(v.to_vec())
    }

    #[test]
    fn k2_cop_steps_onto_robber() {
        let g = path(2).unwrap();
        let table = GameTable::solve(&g, 1, 1).unwrap();
        assert_eq!(table.value_of(&t(&[0]), &t(&[1])).unwrap(), GameValue::Finite(1));
        assert_eq!(table.capture_time(), GameValue::Finite(1));
    }

    #[test]
    fn p3_two_robbers_on_far_end() {
        let g = path(3).unwrap();
        let table = GameTable::solve(&g, 1, 2).unwrap();
        assert_eq!(table.value_of(&t(&[0]), &t(&[2, 2])).unwrap(), GameValue::Finite(2));
        assert_eq!(table.best_cop_move(&t(&[0]), &t(&[2, 2])).unwrap(), t(&[1]));
        let pos = GamePosition::robbers_to_move(t(&[1]), t(&[2, 2]));
        assert_eq!(table.value(&pos).unwrap(), GameValue::Finite(2));
    }

    #[test]
    fn c4_one_cop_loses() {
        let g = cycle(4).unwrap();
        let table = GameTable::solve(&g, 1, 1).unwrap();
        for c in 0..4 {
            let far = (c + 2) % 4;
            assert_eq!(table.value_of(&t(&[c]), &t(&[far])).unwrap(), GameValue::RobbersWin);
            let next = (c + 1) % 4;
            assert_eq!(table.value_of(&t(&[c]), &t(&[next])).unwrap(), GameValue::Finite(1));
        }
        assert_eq!(table.capture_time(), GameValue::RobbersWin);
    }

    #[test]
    fn covering_all_vertices_takes_zero_rounds() {
        let g = path(2).unwrap();
        assert_eq!(GameTable::solve(&g, 2, 3).unwrap().capture_time(), GameValue::Finite(0));
    }

    #[test]
    fn k4_closed_form() {
        // robbers spread evenly over the three free vertices, the cop takes
        // the largest group: f(s) = 1 + f(s - ceil(s/3)), f(0) = 0
        fn f(s: u32) -> u32 {
            if s == 0 {
                0
            } else {
                1 + f(s - s.div_ceil(3))
            }
        }
        let g = complete(4).unwrap();
        let table = GameTable::solve(&g, 1, 9).unwrap();
        for m in 1..=9 {
            assert_eq!(table.capture_time_for(m).unwrap(), GameValue::Finite(f(m as u32)), "m={m}");
        }
    }

    #[test]
    fn outcomes_never_step_on_cops() {
        let g = path(3).unwrap();
        let idx = MultisetIndex::new(3, 2);
        let out = outcomes(&g, &idx, &[0, 0, 2], 0b010);
        assert_eq!(out, vec![idx.rank(&[0, 0, 2]) as u32]);
        let mut both = outcomes(&g, &idx, &[1, 0, 1], 0);
        both.sort_unstable();
        // each end robber stays or steps to the middle
        let mut expect: Vec<u32> = [[1, 0, 1], [0, 1, 1], [1, 1, 0], [0, 2, 0]]
            .iter()
            .map(|c| idx.rank(c) as u32)
            .collect();
        expect.sort_unstable();
        assert_eq!(both, expect);
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(8).unwrap();
        let err = GameTable::solve_with(&g, 2, 5, &SolverConfig { state_cap: 100 }).unwrap_err();
        assert!(matches!(err, SolveError::StateCap { required, .. } if required == 36 * 1287 * 2));
    }
}
