//! The 0-visibility game: the cops never see the robber.
//!
//! Against one invisible, omniscient robber the only event the cops observe
//! is the capture that ends the game, so cop strategies are fixed walks.
//! A walk wins when it clears the contaminated set (every vertex the robber
//! could occupy), and the 0-visibility capture time is a shortest path in
//! the space of [`ClearingState`]s.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, full_mask, Graph, Vertex};
use crate::pursuit::{GameTable, GameValue, SolveError, SolverConfig};
use crate::team::{binomial, CopIndex, TeamConfig};

/// Cops plus the vertices a robber might still occupy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClearingState {
    pub cops: TeamConfig,
    pub contaminated: Vec<Vertex>,
}

/// One round: cops move to `cops`, clear their vertices, and whatever is
/// left spreads to its closed neighborhood (minus the cops). Returns the
/// new contamination, empty once the graph is clear.
pub fn clearing_step(g: &Graph, contaminated: u64, cops: u64) -> u64 {
    let left = contaminated & !cops;
    if left == 0 {
        0
    } else {
        g.expand(left) & !cops
    }
}

/// Cop walk clearing the graph; `rounds()` is its length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Schedule(pub Vec<TeamConfig>);

impl Schedule {
    pub fn rounds(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn configs(&self) -> &[TeamConfig] {
        &self.0
    }

    /// Contaminated set after each round, starting from round 0.
    pub fn contamination(&self, g: &Graph) -> Vec<u64> {
        let mut x = full_mask(g.n()) & !self.0[0].mask();
        let mut out = vec![x];
        for c in &self.0[1..] {
            x = clearing_step(g, x, c.mask());
            out.push(x);
        }
        out
    }

    /// Legal walk whose final contamination is empty.
    pub fn clears(&self, g: &Graph) -> bool {
        !self.0.is_empty()
            && self.0.windows(2).all(|w| w[0].is_legal_successor(&w[1], g))
            && self.contamination(g).last() == Some(&0)
    }
}

fn state_cap_check(g: &Graph, k: usize, config: &SolverConfig) -> Result<(), SolveError> {
    if k == 0 {
        return Err(SolveError::InvalidParameter("need k >= 1".into()));
    }
    let required = CopIndex::count_for(g.n(), k).saturating_mul(1u128 << g.n().min(127));
    if required > config.state_cap {
        return Err(SolveError::StateCap {
            required,
            cap: config.state_cap,
        });
    }
    Ok(())
}

/// Shortest clearing walk for `k` cops, or `None` when `k` cops cannot
/// clear the graph. Breadth-first over rounds with cop configurations
/// tried in lexicographic order, so the walk is canonical.
pub fn solve_with(g: &Graph, k: usize, config: &SolverConfig) -> Result<Option<Schedule>, SolveError> {
    state_cap_check(g, k, config)?;
    let cops = CopIndex::new(g, k);
    let all = full_mask(g.n());
    let mut parent: HashMap<(u32, u64), (u32, u64)> = HashMap::new();
    let mut layer = Vec::new();
    for c in 0..cops.len() {
        let x = all & !cops.mask(c);
        if x == 0 {
            return Ok(Some(Schedule(vec![cops.config(c).clone()])));
        }
        let key = (c as u32, x);
        if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(key) {
            e.insert((u32::MAX, 0));
            layer.push(key);
        }
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &(c, x) in &layer {
            for &c2 in cops.successors(c as usize) {
                let y = clearing_step(g, x, cops.mask(c2 as usize));
                if y == 0 {
                    let mut walk = vec![cops.config(c2 as usize).clone()];
                    let mut at = (c, x);
                    while at.0 != u32::MAX {
                        walk.push(cops.config(at.0 as usize).clone());
                        at = parent[&at];
                    }
                    walk.reverse();
                    return Ok(Some(Schedule(walk)));
                }
                let key = (c2, y);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(key) {
                    e.insert((c, x));
                    next.push(key);
                }
            }
        }
        layer = next;
    }
    Ok(None)
}

pub fn zero_vis_capture_time(g: &Graph, k: usize) -> Result<GameValue, SolveError> {
    Ok(match solve_with(g, k, &SolverConfig::default())? {
        Some(s) => GameValue::Finite(s.rounds() as u32),
        None => GameValue::RobbersWin,
    })
}

/// Minimal-length clearing walk; errors when `k` cops cannot clear `g`.
pub fn extract_schedule(g: &Graph, k: usize) -> Result<Schedule, SolveError> {
    solve_with(g, k, &SolverConfig::default())?.ok_or(SolveError::NotCopWin(k))
}

/// `c_0(G)`.
pub fn zero_vis_cop_number(g: &Graph) -> Result<usize, SolveError> {
    let config = SolverConfig::default();
    for k in 1..=g.n() {
        if solve_with(g, k, &config)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("n cops clear any graph in round 0")
}

/// Strong `k`-cop-win, decided through `c_0(G) <= k`.
pub fn is_strong_k_cop_win(g: &Graph, k: usize) -> Result<bool, SolveError> {
    Ok(solve_with(g, k, &SolverConfig::default())?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// The sequence reached the 0-visibility capture time, its limit.
    Converged { limit: u32 },
    /// `k` cops cannot clear the graph; evidence only, since no finite
    /// prefix proves divergence.
    DivergenceEvidence {
        last_value: GameValue,
        max_m: usize,
        still_growing: bool,
    },
    /// `k` cops cannot catch even one robber.
    NotCopWin,
    /// The graph is clearable but the sequence had not reached the
    /// 0-visibility time by `max_m`.
    Unconverged { last_value: GameValue, max_m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitProbeReport {
    pub graph: String,
    pub k: usize,
    pub max_m: usize,
    /// `capt_k(G, m)` for `m = 1, 2, ...`, up to convergence or `max_m`.
    pub sequence: Vec<GameValue>,
    pub verdict: Verdict,
    pub zero_vis_time: GameValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Schedule>,
}

impl LimitProbeReport {
    pub fn converged(&self) -> bool {
        matches!(self.verdict, Verdict::Converged { .. })
    }

    /// `m,capt` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,capt\n");
        for (i, v) in self.sequence.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, v));
        }
        out
    }
}

/// Robber counts solved by the probe: powers of two, then `max_m`.
fn probe_points(max_m: usize) -> Vec<usize> {
    let mut points: Vec<usize> = std::iter::successors(Some(1usize), |&m| Some(m * 2))
        .take_while(|&m| m < max_m)
        .collect();
    points.push(max_m);
    points
}

/// Computes `capt_k(G, m)` for growing `m` until it meets the 0-visibility
/// capture time or `max_m` is reached.
pub fn limit_probe(g: &Graph, k: usize, max_m: usize) -> Result<LimitProbeReport, SolveError> {
    limit_probe_with(g, k, max_m, &SolverConfig::default())
}

pub fn limit_probe_with(
    g: &Graph,
    k: usize,
    max_m: usize,
    config: &SolverConfig,
) -> Result<LimitProbeReport, SolveError> {
    if max_m == 0 {
        return Err(SolveError::InvalidParameter("max_m must be >= 1".into()));
    }
    let schedule = solve_with(g, k, config)?;
    let zero_vis_time = match &schedule {
        Some(s) => GameValue::Finite(s.rounds() as u32),
        None => GameValue::RobbersWin,
    };
    let mut sequence: Vec<GameValue> = Vec::new();
    let mut done = 0;
    let mut verdict = None;
    // with no finite target the sequence is needed up to max_m anyway
    let points = if zero_vis_time.is_finite() {
        probe_points(max_m)
    } else {
        vec![1, max_m]
    };
    'probe: for m in points {
        if m == done {
            continue;
        }
        let table = GameTable::solve_with(g, k, m, config)?;
        for m2 in sequence.len() + 1..=m {
            let v = table.capture_time_for(m2)?;
            sequence.push(v);
            if v == GameValue::RobbersWin {
                verdict = Some(Verdict::NotCopWin);
                break 'probe;
            }
            if v == zero_vis_time {
                verdict = Some(Verdict::Converged {
                    limit: v.finite().expect("finite"),
                });
                break 'probe;
            }
        }
        done = m;
    }
    let last_value = *sequence.last().expect("at least one value");
    let verdict = verdict.unwrap_or_else(|| {
        if zero_vis_time.is_finite() {
            Verdict::Unconverged { last_value, max_m }
        } else {
            let earlier = sequence[(max_m / 2).max(1) - 1];
            Verdict::DivergenceEvidence {
                last_value,
                max_m,
                still_growing: last_value > earlier,
            }
        }
    });
    debug_assert!(sequence.windows(2).all(|w| w[0] <= w[1]));
    Ok(LimitProbeReport {
        graph: g.name().map(str::to_string).unwrap_or_else(|| crate::io::to_graph6(g)),
        k,
        max_m,
        sequence,
        verdict,
        zero_vis_time,
        schedule,
    })
}

/// Contaminated vertices of a mask, ascending.
pub fn contaminated_vertices(mask: u64) -> Vec<Vertex> {
    bits(mask).collect()
}

/// Worst-case number of rounds a fixed walk needs against `m` robbers
/// that see everything. Robbers do not interact and the walk ignores
/// them, so this is the single-robber survival time.
pub fn schedule_capture_time(g: &Graph, schedule: &Schedule) -> GameValue {
    match schedule.contamination(g).iter().position(|&x| x == 0) {
        Some(r) => GameValue::Finite(r as u32),
        None => GameValue::RobbersWin,
    }
}

/// Size of the clearing state space, `C(n+k-1, k) 2^n`.
pub fn clearing_space_size(n: usize, k: usize) -> u128 {
    binomial((n + k - 1) as u64, k as u64).saturating_mul(1u128 << n.min(127))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn zv(g: &Graph, k: usize) -> GameValue {
        zero_vis_capture_time(g, k).unwrap()
    }

    #[test]
    fn paths_sweep_end_to_end() {
        assert_eq!(zv(&path(4).unwrap(), 1), GameValue::Finite(3));
        let s = extract_schedule(&path(4).unwrap(), 1).unwrap();
        assert_eq!(s.rounds(), 3);
        assert!(s.clears(&path(4).unwrap()));
    }

    #[test]
    fn small_families() {
        assert_eq!(zv(&wheel(6).unwrap(), 2), GameValue::Finite(3));
        assert_eq!(zv(&complete(4).unwrap(), 2), GameValue::Finite(1));
        assert_eq!(zv(&complete_bipartite(2, 5).unwrap().0, 2), GameValue::Finite(4));
        assert_eq!(zv(&cycle(5).unwrap(), 2), GameValue::Finite(2));
        assert_eq!(zv(&cycle(5).unwrap(), 1), GameValue::RobbersWin);
        assert_eq!(zv(&complete(2).unwrap(), 2), GameValue::Finite(0));
    }

    #[test]
    fn stars_start_on_a_leaf() {
        // leaf, hub, leaf, hub, ..., last leaf
        for n in 2..=5 {
            assert_eq!(zv(&star(n).unwrap(), 1), GameValue::Finite(2 * n as u32 - 2), "star({n})");
        }
        let s = extract_schedule(&star(3).unwrap(), 1).unwrap();
        let walk: Vec<usize> = s.configs().iter().map(|c| c.as_slice()[0]).collect();
        assert_eq!(walk, vec![1, 0, 2, 0, 3]);
    }

    #[test]
    fn cop_numbers() {
        assert_eq!(zero_vis_cop_number(&path(6).unwrap()).unwrap(), 1);
        assert_eq!(zero_vis_cop_number(&complete(6).unwrap()).unwrap(), 3);
        assert_eq!(zero_vis_cop_number(&cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(zero_vis_cop_number(&complete_bipartite(2, 4).unwrap().0).unwrap(), 2);
        assert_eq!(zero_vis_cop_number(&wheel(7).unwrap()).unwrap(), 2);
        assert_eq!(zero_vis_cop_number(&subdivided_star(3).unwrap()).unwrap(), 2);
        assert!(!is_strong_k_cop_win(&subdivided_star(3).unwrap(), 1).unwrap());
        assert!(!is_strong_k_cop_win(&h_graph(10).unwrap(), 1).unwrap());
        assert!(is_strong_k_cop_win(&caterpillar(3, &[0, 2, 0]).unwrap(), 1).unwrap());
    }

    #[test]
    fn clearing_never_contaminates_cops() {
        let g = h_graph(8).unwrap();
        for x in [0b1010_1010u64, 0b1111_1111, 0b0000_0001] {
            for c in g.vertices() {
                let y = clearing_step(&g, x, 1 << c);
                assert_eq!(y >> c & 1, 0);
                assert_eq!(y & !(g.expand(x)), 0);
            }
        }
    }

    #[test]
    fn probes() {
        let p = limit_probe(&path(4).unwrap(), 1, 8).unwrap();
        assert_eq!(p.verdict, Verdict::Converged { limit: 3 });
        assert!(p.sequence.len() <= 2);
        let c = limit_probe(&cycle(5).unwrap(), 2, 8).unwrap();
        assert_eq!(c.verdict, Verdict::Converged { limit: 2 });
        let t = limit_probe(&subdivided_star(3).unwrap(), 1, 8).unwrap();
        match t.verdict {
            Verdict::DivergenceEvidence { last_value, still_growing, .. } => {
                assert!(last_value >= GameValue::Finite(10));
                assert!(still_growing);
            }
            v => panic!("unexpected verdict {v:?}"),
        }
        assert_eq!(t.sequence[1], GameValue::Finite(6));
        assert_eq!(limit_probe(&cycle(4).unwrap(), 1, 4).unwrap().verdict, Verdict::NotCopWin);
        assert!(c.to_csv().starts_with("m,capt\n1,"));
    }
}
