//! Non-adaptive cop walks for the families with a known limit.

use crate::graph::{Graph, Vertex};
use crate::scripts::arena::{CopScript, RoundRecord};
use crate::team::TeamConfig;

/// A fixed walk: `configs[t]` is the cop team after round `t`. After the
/// walk ends the cops stay put.
#[derive(Clone, Debug)]
pub struct WalkScript {
    name: String,
    configs: Vec<TeamConfig>,
    claimed: usize,
    graph: Graph,
}

impl WalkScript {
    pub fn new(name: impl Into<String>, graph: &Graph, configs: Vec<TeamConfig>, claimed: usize) -> Self {
        WalkScript {
            name: name.into(),
            configs,
            claimed,
            graph: graph.clone(),
        }
    }

    pub fn configs(&self) -> &[TeamConfig] {
        &self.configs
    }

    /// Rounds the walk takes.
    pub fn rounds(&self) -> usize {
        self.configs.len() - 1
    }

    /// Round count promised for the family.
    pub fn claimed_rounds(&self) -> usize {
        self.claimed
    }

    pub fn cops(&self) -> usize {
        self.configs[0].len()
    }

    pub fn schedule(&self) -> crate::zero_visibility::Schedule {
        crate::zero_visibility::Schedule(self.configs.clone())
    }
}

impl CopScript for WalkScript {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn applicable(&self, g: &Graph) -> Result<(), String> {
        if *g != self.graph {
            return Err("walk was built for a different graph".into());
        }
        Ok(())
    }

    fn place(&mut self, _g: &Graph) -> Result<TeamConfig, String> {
        Ok(self.configs[0].clone())
    }

    fn step(
        &mut self,
        _g: &Graph,
        round: usize,
        _history: &[RoundRecord],
        _cops: &TeamConfig,
        _robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        Ok(self.configs[round.min(self.configs.len() - 1)].clone())
    }
}

fn single(walk: &[Vertex]) -> Vec<TeamConfig> {
    walk.iter().map(|&v| TeamConfig::new(vec![v])).collect()
}

fn inapplicable(what: &str) -> String {
    format!("graph is not {what}")
}

/// `0, 1, ..., n-1` on a path.
pub fn path_sweep(g: &Graph) -> Result<WalkScript, String> {
    let n = g.n();
    if !(g.is_tree() && (0..n.saturating_sub(1)).all(|v| g.is_adjacent(v, v + 1))) {
        return Err(inapplicable("a path labelled in order"));
    }
    let walk: Vec<Vertex> = (0..n).collect();
    Ok(WalkScript::new("path_sweep", g, single(&walk), n - 1))
}

/// Hub, leaf 1, hub, leaf 2, ... on a star with hub 0.
pub fn star_sweep(g: &Graph) -> Result<WalkScript, String> {
    let n = g.n() - 1;
    if n < 1 || g.degree(0) != n || g.edge_count() != n {
        return Err(inapplicable("a star with hub 0"));
    }
    let mut walk = vec![0];
    for leaf in 1..=n {
        walk.extend([leaf, 0]);
    }
    walk.pop();
    Ok(WalkScript::new("star_sweep", g, single(&walk), 2 * n - 1))
}

/// Walks the spine from one end, stepping out to each leaf and back, and
/// stops on the last leaf.
pub fn caterpillar_sweep(g: &Graph) -> Result<WalkScript, String> {
    if !g.is_caterpillar() {
        return Err(inapplicable("a caterpillar"));
    }
    let n = g.n();
    let leaves = g.leaves();
    let claimed = n + leaves.len() - 2;
    if n <= 2 {
        let walk: Vec<Vertex> = (0..n).collect();
        return Ok(WalkScript::new("caterpillar_sweep", g, single(&walk), claimed));
    }
    let spine: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 1).collect();
    // order the spine from an end
    let start = *spine
        .iter()
        .find(|&&v| g.neighbors(v).iter().filter(|u| spine.contains(u)).count() <= 1)
        .expect("a path has an end");
    let mut order = vec![start];
    while let Some(&next) = g
        .neighbors(*order.last().unwrap())
        .iter()
        .find(|&&u| spine.contains(&u) && !order.contains(&u))
    {
        order.push(next);
    }
    let mut walk = vec![start];
    for (i, &s) in order.iter().enumerate() {
        if i > 0 {
            walk.push(s);
        }
        for &leaf in g.neighbors(s).iter().filter(|&&u| g.degree(u) == 1) {
            walk.extend([leaf, s]);
        }
    }
    if g.degree(*walk.last().unwrap()) > 1 && walk.len() > 1 {
        walk.pop();
    }
    Ok(WalkScript::new("caterpillar_sweep", g, single(&walk), claimed))
}

/// Two cops start on `0` and `1` and walk around the cycle in opposite
/// directions.
pub fn cycle_two_cop_sweep(g: &Graph) -> Result<WalkScript, String> {
    let n = g.n();
    if n < 3 || g.edge_count() != n || !(0..n).all(|v| g.is_adjacent(v, (v + 1) % n)) {
        return Err(inapplicable("a cycle labelled in order"));
    }
    let rounds = (n - 1) / 2;
    let configs = (0..=rounds)
        .map(|t| TeamConfig::new(vec![(n - t) % n, 1 + t]))
        .collect();
    Ok(WalkScript::new("cycle_two_cop_sweep", g, configs, rounds))
}

/// One cop alternates between the hub and rim vertex `n-1` while the other
/// walks the rim `1, 2, ..., n-2`.
pub fn wheel_two_cop_sweep(g: &Graph) -> Result<WalkScript, String> {
    let n = g.n();
    let rim = n.saturating_sub(1);
    let is_wheel = n >= 5
        && g.degree(0) == rim
        && (1..n).all(|v| g.degree(v) == 3 && g.is_adjacent(v, 1 + v % rim));
    if !is_wheel {
        return Err(inapplicable("a wheel with hub 0 and rim 1..n-1 in order"));
    }
    let rounds = n - 3;
    let configs = (0..=rounds)
        .map(|t| {
            let a = if t % 2 == 0 { 0 } else { n - 1 };
            TeamConfig::new(vec![a, 1 + t])
        })
        .collect();
    Ok(WalkScript::new("wheel_two_cop_sweep", g, configs, rounds))
}

/// `m` cops on `K_{m,n}` (parts `0..m` and `m..m+n`, `m <= n`): fresh
/// vertices of the large part on even rounds, the whole small part on odd
/// rounds.
pub fn bipartite_sweep(g: &Graph, m: usize) -> Result<WalkScript, String> {
    let total = g.n();
    if m == 0 || 2 * m > total {
        return Err(inapplicable("K_{m,n} with m <= n"));
    }
    let n = total - m;
    let complete = g.edge_count() == m * n && (0..m).all(|u| (m..total).all(|v| g.is_adjacent(u, v)));
    if !complete {
        return Err(inapplicable("K_{m,n} with the small part first"));
    }
    let small = TeamConfig::new((0..m).collect());
    let groups = n.div_ceil(m);
    let group = |i: usize| TeamConfig::new((0..m).map(|j| m + (i * m + j) % n).collect());
    let mut configs = vec![group(0)];
    for i in 1..groups {
        configs.push(small.clone());
        configs.push(group(i));
    }
    if n == m {
        configs.push(small);
    }
    let claimed = if n == m { 1 } else { 2 * groups - 2 };
    Ok(WalkScript::new("bipartite_sweep", g, configs, claimed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::zero_visibility::schedule_capture_time;
    use crate::GameValue;

    fn clears_in(w: &WalkScript) -> GameValue {
        schedule_capture_time(&w.graph, &w.schedule())
    }

    #[test]
    fn walks_are_legal() {
        let walks = [
            path_sweep(&path(6).unwrap()).unwrap(),
            star_sweep(&star(4).unwrap()).unwrap(),
            caterpillar_sweep(&caterpillar(3, &[1, 2, 1]).unwrap()).unwrap(),
            cycle_two_cop_sweep(&cycle(7).unwrap()).unwrap(),
            wheel_two_cop_sweep(&wheel(7).unwrap()).unwrap(),
            bipartite_sweep(&complete_bipartite(2, 5).unwrap().0, 2).unwrap(),
        ];
        for w in &walks {
            assert!(w.configs().windows(2).all(|p| p[0].is_legal_successor(&p[1], &w.graph)), "{}", w.name);
            assert_eq!(w.rounds(), w.claimed_rounds(), "{}", w.name);
        }
    }

    #[test]
    fn star_walk_shape() {
        let w = star_sweep(&star(3).unwrap()).unwrap();
        let walk: Vec<usize> = w.configs().iter().map(|c| c.as_slice()[0]).collect();
        assert_eq!(walk, vec![0, 1, 0, 2, 0, 3]);
        assert_eq!(clears_in(&w), GameValue::Finite(5));
    }

    #[test]
    fn walks_clear_their_graphs() {
        assert_eq!(clears_in(&cycle_two_cop_sweep(&cycle(5).unwrap()).unwrap()), GameValue::Finite(2));
        assert_eq!(clears_in(&wheel_two_cop_sweep(&wheel(6).unwrap()).unwrap()), GameValue::Finite(3));
        let k25 = complete_bipartite(2, 5).unwrap().0;
        assert_eq!(clears_in(&bipartite_sweep(&k25, 2).unwrap()), GameValue::Finite(4));
        let k33 = complete_bipartite(3, 3).unwrap().0;
        assert_eq!(clears_in(&bipartite_sweep(&k33, 3).unwrap()), GameValue::Finite(1));
        let cat = caterpillar(3, &[0, 2, 0]).unwrap();
        let w = caterpillar_sweep(&cat).unwrap();
        assert_eq!(w.claimed_rounds(), 7);
        assert!(clears_in(&w) <= GameValue::Finite(7));
    }

    #[test]
    fn wrong_family_is_rejected() {
        assert!(star_sweep(&path(4).unwrap()).is_err());
        assert!(cycle_two_cop_sweep(&path(4).unwrap()).is_err());
        assert!(caterpillar_sweep(&subdivided_star(3).unwrap()).is_err());
        assert!(wheel_two_cop_sweep(&cycle(5).unwrap()).is_err());
    }
}
