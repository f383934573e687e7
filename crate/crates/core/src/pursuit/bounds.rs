//! Start sets `Z` and `W`, and the upper bounds on `capt(G, m)` built from
//! them.

use serde::{Deserialize, Serialize};

use super::{GameTable, GameValue, SolveError};
use crate::graph::{Graph, GraphError, Vertex};
use crate::team::TeamConfig;

/// Start vertices from which one cop catches one robber within `threshold`
/// rounds.
fn fast_starts(table: &GameTable, threshold: u32) -> Result<Vec<Vertex>, SolveError> {
    let mut out = Vec::new();
    for v in table.graph().vertices() {
        if table.capture_time_from(&TeamConfig::new(vec![v]), 1)? <= GameValue::Finite(threshold) {
            out.push(v);
        }
    }
    Ok(out)
}

fn single_cop_table(g: &Graph) -> Result<GameTable, SolveError> {
    if !g.is_dismantlable() {
        return Err(SolveError::NotCopWin(1));
    }
    GameTable::solve(g, 1, 1)
}

/// `Z`: starts from which one cop needs at most `n - 4` rounds.
pub fn z_set(g: &Graph) -> Result<Vec<Vertex>, SolveError> {
    if g.n() < 7 {
        return Err(SolveError::InvalidParameter(format!(
            "Z is defined for n >= 7, got n={}",
            g.n()
        )));
    }
    fast_starts(&single_cop_table(g)?, g.n() as u32 - 4)
}

/// `W`: starts from which one cop needs at most `floor(n/2)` rounds.
pub fn w_set(g: &Graph) -> Result<Vec<Vertex>, SolveError> {
    fast_starts(&single_cop_table(g)?, g.n() as u32 / 2)
}

/// `max { d(x, S) : x in N[u], u a trap of G }`.
pub fn d_to_set_over_traps(g: &Graph, set: &[Vertex]) -> Result<usize, GraphError> {
    if set.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let traps = g.traps();
    if traps.is_empty() {
        return Err(GraphError::NoTraps);
    }
    let mut best = 0;
    for u in traps {
        for x in g.closed_neighborhood(u) {
            best = best.max(g.distance_to_set(x, set)?);
        }
    }
    Ok(best)
}

/// One upper bound on `capt(G, m)` checked against the solver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub m: usize,
    pub hypotheses: String,
    pub hypotheses_met: bool,
    pub bound: Option<u64>,
    pub measured: GameValue,
    /// `measured <= bound`, when the hypotheses hold.
    pub holds: Option<bool>,
    pub tight: Option<bool>,
}

impl BoundReport {
    fn new(name: &str, m: usize, hypotheses: &str, bound: Option<u64>, measured: GameValue) -> Self {
        let holds = bound.map(|b| measured.finite().is_some_and(|t| t as u64 <= b));
        let tight = bound.map(|b| measured.finite() == Some(b as u32));
        BoundReport {
            name: name.to_string(),
            m,
            hypotheses: hypotheses.to_string(),
            hypotheses_met: bound.is_some(),
            bound,
            measured,
            holds,
            tight,
        }
    }

    /// Fails only when the hypotheses hold and the bound is exceeded.
    pub fn ok(&self) -> bool {
        self.holds != Some(false)
    }
}

/// Shared inputs for the bound checks on one graph.
struct Context<'a> {
    g: &'a Graph,
    table: GameTable,
    m: usize,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, m: usize) -> Result<Self, SolveError> {
        Ok(Context {
            g,
            table: GameTable::solve(g, 1, m)?,
            m,
        })
    }

    fn measured(&self) -> GameValue {
        self.table.capture_time()
    }

    fn big_cop_win(&self) -> bool {
        self.g.n() >= 7 && self.g.is_dismantlable()
    }

    fn diameter(&self) -> BoundReport {
        let (n, m) = (self.g.n() as u64, self.m as u64);
        let bound = self
            .big_cop_win()
            .then(|| (m - 1) * self.g.diameter() as u64 + m * (n - 4));
        BoundReport::new("diameter", self.m, "cop-win, n >= 7", bound, self.measured())
    }

    fn general(&self) -> Result<BoundReport, SolveError> {
        let (n, m) = (self.g.n() as u64, self.m as u64);
        let bound = if self.big_cop_win() {
            let z = fast_starts(&self.table, n as u32 - 4)?;
            let d_z = d_to_set_over_traps(self.g, &z)? as u64;
            Some(d_z * (m - 1) + m * (n - 4))
        } else {
            None
        };
        Ok(BoundReport::new("general", self.m, "cop-win, n >= 7", bound, self.measured()))
    }

    fn two_dismantlable(&self) -> Result<BoundReport, SolveError> {
        let (n, m) = (self.g.n() as u64, self.m as u64);
        let bound = if self.g.is_2_dismantlable() {
            let w = fast_starts(&self.table, n as u32 / 2)?;
            let d_w = d_to_set_over_traps(self.g, &w)? as u64;
            Some(m * (n / 2) + (m - 1) * d_w)
        } else {
            None
        };
        Ok(BoundReport::new("2-dismantlable", self.m, "2-dismantlable", bound, self.measured()))
    }

    fn tree(&self) -> BoundReport {
        let m = self.m as u64;
        let bound = (self.g.is_tree() && self.m <= self.g.leaves().len()).then(|| {
            let d = self.g.diameter() as u64;
            d.div_ceil(2) + (m - 1) * d
        });
        BoundReport::new("tree", self.m, "tree, m <= leaves", bound, self.measured())
    }
}

/// `(m-1) diam(G) + m (n-4)` for cop-win graphs on `n >= 7` vertices.
pub fn bound_diameter(g: &Graph, m: usize) -> Result<BoundReport, SolveError> {
    Ok(Context::new(g, m)?.diameter())
}

/// `d_Z (m-1) + m (n-4)` for cop-win graphs on `n >= 7` vertices.
pub fn bound_general(g: &Graph, m: usize) -> Result<BoundReport, SolveError> {
    Context::new(g, m)?.general()
}

/// `m floor(n/2) + (m-1) d_W` for 2-dismantlable graphs.
pub fn bound_2dismantlable(g: &Graph, m: usize) -> Result<BoundReport, SolveError> {
    Context::new(g, m)?.two_dismantlable()
}

/// `ceil(diam/2) + (m-1) diam` for trees with at least `m` leaves.
pub fn bound_tree(g: &Graph, m: usize) -> Result<BoundReport, SolveError> {
    Ok(Context::new(g, m)?.tree())
}

/// All four bounds for one `m`, sharing one solve.
pub fn all_bounds(g: &Graph, m: usize) -> Result<Vec<BoundReport>, SolveError> {
    let cx = Context::new(g, m)?;
    Ok(vec![cx.diameter(), cx.general()?, cx.two_dismantlable()?, cx.tree()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, h_graph, h_vertex, path};

    #[test]
    fn d_to_set_examples() {
        let h10 = h_graph(10).unwrap();
        assert_eq!(d_to_set_over_traps(&h10, &[0, 1]).unwrap(), 2);
        assert_eq!(d_to_set_over_traps(&path(5).unwrap(), &[0]).unwrap(), 4);
        assert_eq!(d_to_set_over_traps(&complete(5).unwrap(), &[0]).unwrap(), 1);
        assert_eq!(d_to_set_over_traps(&path(5).unwrap(), &[]), Err(GraphError::EmptySet));
        let c5 = crate::families::cycle(5).unwrap();
        assert_eq!(d_to_set_over_traps(&c5, &[0]), Err(GraphError::NoTraps));
    }

    #[test]
    fn z_set_of_h7() {
        let z = z_set(&h_graph(7).unwrap()).unwrap();
        assert_eq!(z, vec![h_vertex(1), h_vertex(2)]);
    }

    #[test]
    fn w_set_of_p6_contains_center() {
        let w = w_set(&path(6).unwrap()).unwrap();
        assert!(w.contains(&2) && w.contains(&3));
    }

    #[test]
    fn hypotheses_are_flagged_not_thrown() {
        let r = bound_general(&path(5).unwrap(), 2).unwrap();
        assert!(!r.hypotheses_met);
        assert_eq!(r.holds, None);
        assert!(r.ok());
    }

    #[test]
    fn path8_two_dismantlable_bound() {
        let r = bound_2dismantlable(&path(8).unwrap(), 2).unwrap();
        assert!(r.hypotheses_met);
        assert_eq!(r.measured, GameValue::Finite(7));
        assert_eq!(r.holds, Some(true));
    }
}
