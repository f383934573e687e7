//! Generic players: table-driven optimal play and simple robber heuristics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::pursuit::{CopPolicy, GameTable};
use crate::scripts::arena::{CopScript, RobberScript, RoundRecord};
use crate::team::TeamConfig;

/// Cops following a solved table, lexicographically least optimal moves.
pub struct OptimalCop<'a> {
    policy: &'a CopPolicy,
    start: Option<TeamConfig>,
}

impl<'a> OptimalCop<'a> {
    pub fn new(policy: &'a CopPolicy) -> Self {
        OptimalCop { policy, start: None }
    }

    /// Starts from `start` instead of an optimal placement.
    pub fn from_start(policy: &'a CopPolicy, start: TeamConfig) -> Self {
        OptimalCop {
            policy,
            start: Some(start),
        }
    }
}

impl CopScript for OptimalCop<'_> {
    fn name(&self) -> String {
        "optimal_cop".into()
    }

    fn applicable(&self, g: &Graph) -> Result<(), String> {
        if g != self.policy.table().graph() {
            return Err("policy was solved on a different graph".into());
        }
        Ok(())
    }

    fn place(&mut self, _g: &Graph) -> Result<TeamConfig, String> {
        match &self.start {
            Some(s) => Ok(s.clone()),
            None => self.policy.start(self.policy.table().m()).map_err(|e| e.to_string()),
        }
    }

    fn step(
        &mut self,
        _g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        self.policy.next_move(cops, robbers).map_err(|e| e.to_string())
    }
}

/// Robbers playing the table's optimal replies.
pub struct OptimalRobbers<'a> {
    table: &'a GameTable,
}

impl<'a> OptimalRobbers<'a> {
    pub fn new(table: &'a GameTable) -> Self {
        OptimalRobbers { table }
    }
}

impl RobberScript for OptimalRobbers<'_> {
    fn name(&self) -> String {
        "optimal_robbers".into()
    }

    fn applicable(&self, g: &Graph, m: usize) -> Result<(), String> {
        if g != self.table.graph() {
            return Err("table was solved on a different graph".into());
        }
        if m > self.table.m() {
            return Err(format!("table covers at most {} robbers", self.table.m()));
        }
        Ok(())
    }

    fn place(&mut self, _g: &Graph, cops: &TeamConfig, m: usize) -> Result<TeamConfig, String> {
        self.table.worst_placement(cops, m).map_err(|e| e.to_string())
    }

    fn step(
        &mut self,
        _g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        self.table.best_robber_move(cops, robbers).map_err(|e| e.to_string())
    }
}

fn nearest_cop(g: &Graph, cops: &TeamConfig) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    for &c in cops.as_slice() {
        for (d, e) in dist.iter_mut().zip(g.bfs_distances(c)) {
            *d = (*d).min(e);
        }
    }
    dist
}

/// Vertices ordered by distance to the nearest cop, farthest first, ties by
/// label.
fn by_distance(g: &Graph, cops: &TeamConfig) -> Vec<(usize, Vertex)> {
    let dist = nearest_cop(g, cops);
    let mut order: Vec<(usize, Vertex)> = g.vertices().map(|v| (dist[v], v)).collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    order
}

/// Robbers that never move. Without fixed positions they start on the
/// vertices farthest from the cops.
pub struct StandStill {
    positions: Option<TeamConfig>,
}

impl StandStill {
    pub fn new() -> Self {
        StandStill { positions: None }
    }

    pub fn at(positions: TeamConfig) -> Self {
        StandStill {
            positions: Some(positions),
        }
    }
}

impl Default for StandStill {
    fn default() -> Self {
        StandStill::new()
    }
}

impl RobberScript for StandStill {
    fn name(&self) -> String {
        "stand_still".into()
    }

    fn place(&mut self, g: &Graph, cops: &TeamConfig, m: usize) -> Result<TeamConfig, String> {
        if let Some(p) = &self.positions {
            return Ok(p.clone());
        }
        let far = by_distance(g, cops)[0].1;
        Ok(TeamConfig::new(vec![far; m]))
    }

    fn step(
        &mut self,
        _g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        _cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        Ok(robbers.clone())
    }
}

/// Robbers spread over the vertices farthest from the cops; each then moves
/// to the neighbor farthest from the nearest cop.
pub struct AdversarialSpread;

impl RobberScript for AdversarialSpread {
    fn name(&self) -> String {
        "adversarial_spread".into()
    }

    fn place(&mut self, g: &Graph, cops: &TeamConfig, m: usize) -> Result<TeamConfig, String> {
        let free: Vec<Vertex> = by_distance(g, cops)
            .into_iter()
            .filter(|&(d, _)| d > 0)
            .map(|(_, v)| v)
            .collect();
        if free.is_empty() {
            return Ok(TeamConfig::new(vec![0; m]));
        }
        Ok(TeamConfig::new((0..m).map(|i| free[i % free.len()]).collect()))
    }

    fn step(
        &mut self,
        g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        let dist = nearest_cop(g, cops);
        let moved = robbers
            .as_slice()
            .iter()
            .map(|&r| {
                g.closed_neighborhood(r)
                    .into_iter()
                    .max_by(|&a, &b| dist[a].cmp(&dist[b]).then(b.cmp(&a)))
                    .expect("closed neighborhoods are nonempty")
            })
            .collect();
        Ok(TeamConfig::new(moved))
    }
}

/// Robbers making uniformly random legal moves from a seeded generator.
pub struct RandomRobbers {
    rng: ChaCha8Rng,
    seed: u64,
}

impl RandomRobbers {
    pub fn new(seed: u64) -> Self {
        RandomRobbers {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }
}

impl RobberScript for RandomRobbers {
    fn name(&self) -> String {
        format!("random_robbers({})", self.seed)
    }

    fn place(&mut self, g: &Graph, _cops: &TeamConfig, m: usize) -> Result<TeamConfig, String> {
        Ok(TeamConfig::new((0..m).map(|_| self.rng.random_range(0..g.n())).collect()))
    }

    fn step(
        &mut self,
        g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        _cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        let moved = robbers
            .as_slice()
            .iter()
            .map(|&r| {
                let nbhd = g.closed_neighborhood(r);
                nbhd[self.rng.random_range(0..nbhd.len())]
            })
            .collect();
        Ok(TeamConfig::new(moved))
    }
}
