//! Exact solver for `k` cops against `m` robbers with consecutive capture.
//!
//! One round is a joint cop move followed by a joint robber move. Robbers
//! sharing a vertex with a cop after either half-move are removed. A round
//! costs one unit, charged on the cop move, so a game whose last robber is
//! caught in round `r` has length `r`.
//!
//! Robber teams are multisets: only the occupied-vertex multiplicities
//! matter for the value of a position.

mod bounds;
mod search;
mod table;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::team::TeamConfig;

pub use bounds::{
    all_bounds, bound_2dismantlable, bound_diameter, bound_general, bound_tree,
    d_to_set_over_traps, w_set, z_set, BoundReport,
};
pub use search::capture_time_at_least;
pub use table::{outcomes, outcomes_into, CopPolicy, GameTable, OutcomeScratch};

/// Environment variable overriding the default state-space cap.
pub const STATE_CAP_ENV: &str = "MANYROBBERS_STATE_CAP";

/// Default cap on the number of game positions (both turns counted).
pub const DEFAULT_STATE_CAP: u128 = 50_000_000;

/// Minimax value of a position: a round count, or a robber win.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameValue {
    Finite(u32),
    RobbersWin,
}

impl GameValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(t) => Some(t),
            GameValue::RobbersWin => None,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(t) => write!(f, "{t}"),
            GameValue::RobbersWin => f.write_str("robbers_win"),
        }
    }
}

impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GameValue::Finite(t) => s.serialize_u32(*t),
            GameValue::RobbersWin => s.serialize_str("robbers_win"),
        }
    }
}

impl<'de> Deserialize<'de> for GameValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(t) => Ok(GameValue::Finite(t)),
            Raw::Str(s) if s == "robbers_win" => Ok(GameValue::RobbersWin),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("unknown game value {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Turn {
    CopsToMove,
    RobbersToMove,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GamePosition {
    pub cops: TeamConfig,
    pub robbers: TeamConfig,
    pub turn: Turn,
}

impl GamePosition {
    pub fn cops_to_move(cops: impl Into<TeamConfig>, robbers: impl Into<TeamConfig>) -> Self {
        GamePosition {
            cops: cops.into(),
            robbers: robbers.into(),
            turn: Turn::CopsToMove,
        }
    }

    pub fn robbers_to_move(cops: impl Into<TeamConfig>, robbers: impl Into<TeamConfig>) -> Self {
        GamePosition {
            cops: cops.into(),
            robbers: robbers.into(),
            turn: Turn::RobbersToMove,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("state space of {required} positions exceeds the cap of {cap} (set {STATE_CAP_ENV} to raise it)")]
    StateCap { required: u128, cap: u128 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid position: {0}")]
    InvalidPosition(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("the robbers win on this graph with {0} cop(s)")]
    NotCopWin(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub state_cap: u128,
}

impl SolverConfig {
    /// Default cap, overridden by `MANYROBBERS_STATE_CAP` when it parses.
    pub fn from_env() -> Self {
        let state_cap = std::env::var(STATE_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().replace('_', "").parse().ok())
            .unwrap_or(DEFAULT_STATE_CAP);
        SolverConfig { state_cap }
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig::from_env()
    }
}

/// Positions of the full game, both turns, for `k` cops and up to `m`
/// robbers on `n` vertices.
pub fn state_space_size(n: usize, k: usize, m: usize) -> u128 {
    crate::team::CopIndex::count_for(n, k)
        .saturating_mul(crate::team::MultisetIndex::count_for(n, m))
        .saturating_mul(2)
}

pub fn solve(g: &Graph, k: usize, m: usize) -> Result<GameTable, SolveError> {
    GameTable::solve_with(g, k, m, &SolverConfig::default())
}

/// `capt_k(G, m)`.
pub fn capture_time(g: &Graph, k: usize, m: usize) -> Result<GameValue, SolveError> {
    Ok(solve(g, k, m)?.capture_time())
}

/// Worst case over robber placements against a fixed cop start.
pub fn capture_time_from(g: &Graph, cop_start: &TeamConfig, m: usize) -> Result<GameValue, SolveError> {
    solve(g, cop_start.len(), m)?.capture_time_from(cop_start, m)
}

/// Least `k` such that `k` cops catch one robber.
pub fn cop_number(g: &Graph) -> Result<usize, SolveError> {
    cop_number_with(g, &SolverConfig::default())
}

pub fn cop_number_with(g: &Graph, config: &SolverConfig) -> Result<usize, SolveError> {
    for k in 1..=g.n() {
        if GameTable::solve_with(g, k, 1, config)?.capture_time().is_finite() {
            return Ok(k);
        }
    }
    unreachable!("n cops always win")
}

/// Optimal cop policy for `k` cops and `m` robbers.
pub fn extract_cop_strategy(g: &Graph, k: usize, m: usize) -> Result<CopPolicy, SolveError> {
    let table = solve(g, k, m)?;
    if !table.capture_time().is_finite() {
        return Err(SolveError::NotCopWin(k));
    }
    Ok(CopPolicy::new(table))
}

fn check_params(g: &Graph, k: usize, m: usize) -> Result<(), SolveError> {
    if k == 0 || m == 0 {
        return Err(SolveError::InvalidParameter(format!(
            "need k, m >= 1, got k={k}, m={m}"
        )));
    }
    if m > u8::MAX as usize {
        return Err(SolveError::InvalidParameter(format!("m={m} exceeds 255")));
    }
    if g.n() > crate::graph::MAX_VERTICES {
        return Err(SolveError::Graph(GraphError::TooLarge(g.n())));
    }
    Ok(())
}

fn check_team(g: &Graph, team: &TeamConfig) -> Result<(), SolveError> {
    match team.as_slice().iter().find(|&&v| v >= g.n()) {
        Some(&vertex) => Err(SolveError::Graph(GraphError::VertexOutOfRange {
            vertex,
            n: g.n(),
        })),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_order_and_json() {
        assert!(GameValue::Finite(1000) < GameValue::RobbersWin);
        assert!(GameValue::Finite(2) < GameValue::Finite(3));
        assert_eq!(serde_json::to_string(&GameValue::Finite(4)).unwrap(), "4");
        assert_eq!(
            serde_json::to_string(&GameValue::RobbersWin).unwrap(),
            "\"robbers_win\""
        );
        let back: GameValue = serde_json::from_str("\"robbers_win\"").unwrap();
        assert_eq!(back, GameValue::RobbersWin);
        assert_eq!(serde_json::from_str::<GameValue>("7").unwrap(), GameValue::Finite(7));
    }

    #[test]
    fn state_space_formula() {
        // C(3,2) cop pairs, C(4,2) robber multisets of size <= 2 on P2... n=2
        assert_eq!(state_space_size(2, 2, 2), 3 * 6 * 2);
    }
}
