//! Scripts for the `H(n)` graphs: the cop strategy from vertex 2 and the
//! squad of robbers realizing the maximum capture time.
//!
//! All decision functions work with the 1-based labels of `H(n)`.

use crate::families::{h_graph, h_label, h_vertex};
use crate::graph::Graph;
use crate::pursuit::GameTable;
use crate::scripts::arena::{CopScript, RobberScript, RoundRecord};
use crate::team::TeamConfig;

/// Robber displacement `R^t - R^{t-1}` and the cop's displacement in reply.
pub const COP_TABLE: [(i64, i64); 7] = [(-4, 4), (-3, 1), (-1, 3), (0, 4), (1, 1), (3, 3), (4, 4)];

/// When `R^0 = 0 (mod 4)`: robber displacement in round 1 and the cop's
/// absolute target in round 2.
pub const COP_ROUND_TWO_TABLE: [(i64, usize); 7] = [(-4, 4), (-3, 5), (-1, 3), (0, 4), (1, 5), (3, 3), (4, 4)];

/// Cop's new vertex relative to the robber at `i`, and the robber's
/// displacement in reply.
pub const ROBBER_TABLE: [(i64, i64); 6] = [(-4, 1), (-3, -1), (-1, -3), (1, -4), (3, -4), (4, -4)];

/// Labels of the start vertices from which one cop wins in `n - 4` rounds.
pub const Z_LABELS: [usize; 2] = [1, 2];

fn lookup<T: Copy>(table: &[(i64, T)], key: i64) -> Option<T> {
    table.iter().find(|&&(k, _)| k == key).map(|&(_, v)| v)
}

fn check_h(g: &Graph) -> Result<usize, String> {
    let n = g.n();
    if n < 7 || h_graph(n).map_err(|e| e.to_string())? != *g {
        return Err("graph is not H(n) in its standard labelling".into());
    }
    Ok(n)
}

/// Adjacency by labels, reflexive.
fn near(g: &Graph, a: usize, b: usize) -> bool {
    a >= 1 && b >= 1 && a <= g.n() && b <= g.n() && g.closed_mask(h_vertex(a)) >> h_vertex(b) & 1 == 1
}

/// The cop's move in `round` (labels): `cop` and `robber` are the
/// positions after round `round - 1`, `prev_robber` after round
/// `round - 2`, `first_robber` after round 0.
pub fn hn_cop_move(
    g: &Graph,
    round: usize,
    cop: usize,
    robber: usize,
    prev_robber: Option<usize>,
    first_robber: usize,
) -> Result<usize, String> {
    if near(g, cop, robber) {
        return Ok(robber);
    }
    let target = match (round, prev_robber) {
        (1, _) if cop != 2 => return Err("the strategy starts on vertex 2".into()),
        (1, _) if first_robber.is_multiple_of(4) => 1,
        (1, _) => (1..=g.n())
            .filter(|&v| near(g, 2, v) && v % 4 == first_robber % 4)
            .max()
            .ok_or("no vertex of N[2] has the robber's residue")?,
        (_, None) => return Err("missing robber history".into()),
        (2, Some(prev)) if first_robber.is_multiple_of(4) => {
            lookup(&COP_ROUND_TWO_TABLE, robber as i64 - prev as i64)
                .ok_or_else(|| format!("robber step {prev} -> {robber} is not in the round-two table"))?
        }
        (_, Some(prev)) => {
            let step = lookup(&COP_TABLE, robber as i64 - prev as i64)
                .ok_or_else(|| format!("robber step {prev} -> {robber} is not in the table"))?;
            (cop as i64 + step) as usize
        }
    };
    if !near(g, cop, target) {
        return Err(format!("table move {cop} -> {target} is not an edge"));
    }
    Ok(target)
}

/// Single cop on `H(n)` starting at vertex 2 and tracking the robber's
/// residue mod 4.
pub struct HnCopFromVertex2;

/// Builds the vertex-2 cop strategy for `g = H(n)`.
pub fn hn_cop_from_vertex2(g: &Graph) -> Result<HnCopFromVertex2, String> {
    check_h(g)?;
    Ok(HnCopFromVertex2)
}

impl CopScript for HnCopFromVertex2 {
    fn name(&self) -> String {
        "hn_cop_from_vertex2".into()
    }

    fn applicable(&self, g: &Graph) -> Result<(), String> {
        check_h(g).map(|_| ())
    }

    fn place(&mut self, _g: &Graph) -> Result<TeamConfig, String> {
        Ok(TeamConfig::new(vec![h_vertex(2)]))
    }

    fn step(
        &mut self,
        g: &Graph,
        round: usize,
        history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        let single = |t: &TeamConfig| match t.as_slice() {
            [v] => Ok(h_label(*v)),
            _ => Err("the strategy handles a single robber".to_string()),
        };
        let prev = match round {
            1 => None,
            _ => Some(single(&history[round - 2].robbers)?),
        };
        let first = single(&history[0].robbers)?;
        let next = hn_cop_move(g, round, single(cops)?, single(robbers)?, prev, first)?;
        Ok(TeamConfig::new(vec![h_vertex(next)]))
    }
}

/// Worst case over all robber behaviours against [`hn_cop_move`] from
/// vertex 2: the latest capture round, or an error if the strategy breaks
/// down or runs past `horizon`.
pub fn hn_cop_worst_case(g: &Graph, horizon: usize) -> Result<usize, String> {
    fn play(
        g: &Graph,
        round: usize,
        cop: usize,
        robber: usize,
        prev: Option<usize>,
        first: usize,
        horizon: usize,
    ) -> Result<usize, String> {
        if round > horizon {
            return Err(format!("robber at {robber} survives past round {horizon}"));
        }
        let next = hn_cop_move(g, round, cop, robber, prev, first)
            .map_err(|e| format!("round {round}, cop {cop}, robber {robber}: {e}"))?;
        if next == robber {
            return Ok(round);
        }
        let mut worst = round;
        for r in (1..=g.n()).filter(|&r| near(g, robber, r)) {
            if r != next {
                worst = worst.max(play(g, round + 1, next, r, Some(robber), first, horizon)?);
            }
        }
        Ok(worst)
    }
    check_h(g)?;
    let mut worst = 0;
    for r0 in (1..=g.n()).filter(|&r| r != 2) {
        worst = worst.max(play(g, 1, 2, r0, None, r0, horizon)?);
    }
    Ok(worst)
}

/// The robber's reply (labels) after the cop moved to `cop`, outside the
/// shared evasion: the table when the cop is adjacent, otherwise the
/// smallest label of `N[robber]` not adjacent to the cop.
pub fn hn_robber_move(g: &Graph, cop: usize, robber: usize) -> usize {
    let adjacent = cop != robber && near(g, cop, robber);
    if adjacent {
        if let Some(step) = lookup(&ROBBER_TABLE, cop as i64 - robber as i64) {
            let target = robber as i64 + step;
            if target >= 1 && near(g, robber, target as usize) && !near(g, cop, target as usize) {
                return target as usize;
            }
        }
    }
    (1..=g.n())
        .find(|&v| near(g, robber, v) && !near(g, cop, v))
        .unwrap_or(robber)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Phase {
    Evade,
    Scatter,
}

/// Two or three robbers on `H(4l+2)` moving as one until cornered, then
/// splitting over the trap's neighborhood and running back towards the
/// low labels while the cop is away from `Z`.
pub struct HnRobbersSquad {
    single: GameTable,
    phase: Phase,
    m: usize,
}

/// Builds the squad for `g = H(4l+2)`, `l >= 2`, and `m` in `{2, 3}`.
pub fn hn_robbers_squad(g: &Graph, m: usize) -> Result<HnRobbersSquad, String> {
    let n = check_h(g)?;
    if n < 10 || n % 4 != 2 {
        return Err(format!("squad needs n = 4l + 2 with l >= 2, got n = {n}"));
    }
    if !(2..=3).contains(&m) {
        return Err(format!("squad needs 2 or 3 robbers, got {m}"));
    }
    let single = GameTable::solve(g, 1, 1).map_err(|e| e.to_string())?;
    Ok(HnRobbersSquad {
        single,
        phase: Phase::Evade,
        m,
    })
}

impl HnRobbersSquad {
    fn single_value(&self, cop: usize, robber: usize) -> u32 {
        let v = self
            .single
            .value_of(&TeamConfig::new(vec![cop]), &TeamConfig::new(vec![robber]))
            .expect("single-robber table covers every pair");
        v.finite().unwrap_or(u32::MAX)
    }
}

impl RobberScript for HnRobbersSquad {
    fn name(&self) -> String {
        format!("hn_robbers_squad({})", self.m)
    }

    fn applicable(&self, g: &Graph, m: usize) -> Result<(), String> {
        if g != self.single.graph() {
            return Err("squad was built for a different graph".into());
        }
        if m != self.m {
            return Err(format!("squad was built for {} robbers", self.m));
        }
        Ok(())
    }

    fn place(&mut self, g: &Graph, cops: &TeamConfig, m: usize) -> Result<TeamConfig, String> {
        self.phase = Phase::Evade;
        let cop = match cops.as_slice() {
            [c] => *c,
            _ => return Err("squad plays against a single cop".into()),
        };
        let free = |v: &usize| g.closed_mask(cop) >> v & 1 == 0;
        let low: Vec<usize> = (0..6).filter(free).collect();
        let pool: Vec<usize> = if low.is_empty() { g.vertices().filter(free).collect() } else { low };
        let start = pool
            .iter()
            .copied()
            .max_by_key(|&v| (self.single_value(cop, v), std::cmp::Reverse(v)))
            .unwrap_or(cop);
        Ok(TeamConfig::new(vec![start; m]))
    }

    fn step(
        &mut self,
        g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        let cop = match cops.as_slice() {
            [c] => *c,
            _ => return Err("squad plays against a single cop".into()),
        };
        if self.phase == Phase::Scatter && Z_LABELS.contains(&h_label(cop)) {
            self.phase = Phase::Evade;
        }
        let mut moved = Vec::with_capacity(robbers.len());
        match self.phase {
            Phase::Scatter => {
                for &r in robbers.as_slice() {
                    moved.push(h_vertex(hn_robber_move(g, h_label(cop), h_label(r))));
                }
            }
            Phase::Evade => {
                let slice = robbers.as_slice();
                let mut i = 0;
                while i < slice.len() {
                    let v = slice[i];
                    let count = slice[i..].iter().take_while(|&&u| u == v).count();
                    let cornered = g.closed_mask(v) & !g.closed_mask(cop) == 0;
                    if cornered && count >= 2 {
                        let mut spots: Vec<usize> =
                            g.closed_neighborhood(v).into_iter().filter(|&u| u != cop).collect();
                        spots.reverse();
                        moved.extend((0..count).map(|j| spots[j % spots.len()]));
                        self.phase = Phase::Scatter;
                    } else {
                        let to = self
                            .single
                            .best_robber_move(cops, &TeamConfig::new(vec![v]))
                            .map_err(|e| e.to_string())?;
                        moved.extend(std::iter::repeat_n(to.as_slice()[0], count));
                    }
                    i += count;
                }
            }
        }
        Ok(TeamConfig::new(moved))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cop_table_rows() {
        assert_eq!(lookup(&COP_TABLE, -3), Some(1));
        assert_eq!(lookup(&COP_TABLE, 0), Some(4));
        assert_eq!(lookup(&COP_TABLE, 2), None);
        // the cop keeps C^{t+1} = R^t (mod 4)
        for &(d, c) in &COP_TABLE {
            assert_eq!((d - c).rem_euclid(4), 0);
        }
        for &(d, c) in &COP_ROUND_TWO_TABLE {
            assert_eq!((d - c as i64).rem_euclid(4), 0);
        }
    }

    #[test]
    fn robber_table_rows() {
        assert_eq!(lookup(&ROBBER_TABLE, 1), Some(-4));
        assert_eq!(lookup(&ROBBER_TABLE, -4), Some(1));
        let h10 = h_graph(10).unwrap();
        // cop captured the first robber at n: the others go to n-5 and n-7
        assert_eq!(hn_robber_move(&h10, 10, 9), 5);
        assert_eq!(hn_robber_move(&h10, 10, 7), 3);
        assert_eq!(hn_robber_move(&h10, 9, 10), 7);
        assert_eq!(hn_robber_move(&h10, 9, 7), 3);
        assert_eq!(hn_robber_move(&h10, 7, 10), 9);
        assert_eq!(hn_robber_move(&h10, 7, 9), 5);
    }

    #[test]
    fn cop_from_vertex2_is_fast_enough() {
        for n in 7..=13 {
            let g = h_graph(n).unwrap();
            let worst = hn_cop_worst_case(&g, n).unwrap();
            assert!(worst <= n - 4, "H({n}): {worst}");
        }
    }

    #[test]
    fn squad_needs_the_right_graph() {
        assert!(hn_robbers_squad(&h_graph(9).unwrap(), 3).is_err());
        assert!(hn_robbers_squad(&h_graph(10).unwrap(), 4).is_err());
        assert!(hn_cop_from_vertex2(&crate::families::path(7).unwrap()).is_err());
    }

    #[test]
    fn squad_against_optimal_cop() {
        use crate::pursuit::extract_cop_strategy;
        use crate::scripts::{arena, OptimalCop};
        let g = h_graph(10).unwrap();
        for (m, claim) in [(3, 22), (2, 14)] {
            let policy = extract_cop_strategy(&g, 1, m).unwrap();
            let mut squad = hn_robbers_squad(&g, m).unwrap();
            let t = arena(&g, &mut OptimalCop::new(&policy), &mut squad, m, 60).unwrap();
            assert!(t.length() >= claim, "m={m}: {:?}", t.outcome);
        }
    }
}
