//! Replays a cop script against a robber script under the exact rules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::team::TeamConfig;

/// One round of play. Round 0 records the placements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round: usize,
    /// Cops after their move.
    pub cops: TeamConfig,
    /// Surviving robbers at the end of the round.
    pub robbers: TeamConfig,
    pub captured_on_cop_move: usize,
    pub captured_on_robber_move: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    AllCaptured { round: usize },
    Truncated { horizon: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub graph: String,
    pub cop_script: String,
    pub robber_script: String,
    pub m: usize,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

impl Transcript {
    /// Round in which the last robber was caught.
    pub fn capture_round(&self) -> Option<usize> {
        match self.outcome {
            Outcome::AllCaptured { round } => Some(round),
            Outcome::Truncated { .. } => None,
        }
    }

    /// Rounds survived by at least one robber: the capture round, or the
    /// horizon plus one when the game was cut off.
    pub fn length(&self) -> usize {
        match self.outcome {
            Outcome::AllCaptured { round } => round,
            Outcome::Truncated { horizon } => horizon + 1,
        }
    }

    /// One JSON object per round.
    pub fn to_json_lines(&self) -> String {
        self.rounds
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArenaError {
    #[error("script {script} does not apply: {reason}")]
    Inapplicable { script: String, reason: String },
    #[error("round {round}: {side} script {script} moved illegally from {from:?} to {to:?}")]
    IllegalMove {
        round: usize,
        side: &'static str,
        script: String,
        from: TeamConfig,
        to: TeamConfig,
    },
    #[error("round 0: {side} script {script} placed {got:?}, expected {expected} players on the graph")]
    BadPlacement {
        side: &'static str,
        script: String,
        got: TeamConfig,
        expected: usize,
    },
    #[error("script {script} failed: {msg}")]
    Script { script: String, msg: String },
}

/// A cop strategy. `step` sees the whole history and the robbers' current
/// positions; non-adaptive scripts simply ignore them.
pub trait CopScript {
    fn name(&self) -> String;

    fn applicable(&self, _g: &Graph) -> Result<(), String> {
        Ok(())
    }

    fn place(&mut self, g: &Graph) -> Result<TeamConfig, String>;

    /// Joint move for `round`, given the cops and surviving robbers after
    /// round `round - 1`.
    fn step(
        &mut self,
        g: &Graph,
        round: usize,
        history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String>;
}

/// A robber strategy with full information.
pub trait RobberScript {
    fn name(&self) -> String;

    fn applicable(&self, _g: &Graph, _m: usize) -> Result<(), String> {
        Ok(())
    }

    fn place(&mut self, g: &Graph, cops: &TeamConfig, m: usize) -> Result<TeamConfig, String>;

    /// Joint move of the surviving `robbers` after the cops moved to `cops`
    /// in `round`.
    fn step(
        &mut self,
        g: &Graph,
        round: usize,
        history: &[RoundRecord],
        cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String>;
}

fn on_graph(g: &Graph, t: &TeamConfig) -> bool {
    t.as_slice().iter().all(|&v| v < g.n())
}

/// Plays until every robber is caught or `horizon` rounds have passed.
pub fn arena(
    g: &Graph,
    cop: &mut dyn CopScript,
    robbers: &mut dyn RobberScript,
    m: usize,
    horizon: usize,
) -> Result<Transcript, ArenaError> {
    let script_err = |script: String| move |msg: String| ArenaError::Script { script, msg };
    cop.applicable(g).map_err(|reason| ArenaError::Inapplicable {
        script: cop.name(),
        reason,
    })?;
    robbers.applicable(g, m).map_err(|reason| ArenaError::Inapplicable {
        script: robbers.name(),
        reason,
    })?;

    let mut cops = cop.place(g).map_err(script_err(cop.name()))?;
    if cops.is_empty() || !on_graph(g, &cops) {
        return Err(ArenaError::BadPlacement {
            side: "cop",
            script: cop.name(),
            got: cops,
            expected: 1,
        });
    }
    let placed = robbers.place(g, &cops, m).map_err(script_err(robbers.name()))?;
    if placed.len() != m || !on_graph(g, &placed) {
        return Err(ArenaError::BadPlacement {
            side: "robber",
            script: robbers.name(),
            got: placed,
            expected: m,
        });
    }
    let mut alive = placed.without(cops.mask());
    let mut rounds = vec![RoundRecord {
        round: 0,
        cops: cops.clone(),
        robbers: alive.clone(),
        captured_on_cop_move: m - alive.len(),
        captured_on_robber_move: 0,
    }];
    let mut outcome = Outcome::Truncated { horizon };
    if alive.is_empty() {
        outcome = Outcome::AllCaptured { round: 0 };
    }
    for round in 1..=horizon {
        if alive.is_empty() {
            break;
        }
        let next = cop
            .step(g, round, &rounds, &cops, &alive)
            .map_err(script_err(cop.name()))?;
        if !cops.is_legal_successor(&next, g) {
            return Err(ArenaError::IllegalMove {
                round,
                side: "cop",
                script: cop.name(),
                from: cops,
                to: next,
            });
        }
        cops = next;
        let survivors = alive.without(cops.mask());
        let on_cop = alive.len() - survivors.len();
        alive = survivors;
        let mut on_robber = 0;
        if !alive.is_empty() {
            let moved = robbers
                .step(g, round, &rounds, &cops, &alive)
                .map_err(script_err(robbers.name()))?;
            if !alive.is_legal_successor(&moved, g) {
                return Err(ArenaError::IllegalMove {
                    round,
                    side: "robber",
                    script: robbers.name(),
                    from: alive,
                    to: moved,
                });
            }
            let survivors = moved.without(cops.mask());
            on_robber = moved.len() - survivors.len();
            alive = survivors;
        }
        rounds.push(RoundRecord {
            round,
            cops: cops.clone(),
            robbers: alive.clone(),
            captured_on_cop_move: on_cop,
            captured_on_robber_move: on_robber,
        });
        if alive.is_empty() {
            outcome = Outcome::AllCaptured { round };
        }
    }
    Ok(Transcript {
        graph: g.name().map(str::to_string).unwrap_or_else(|| crate::io::to_graph6(g)),
        cop_script: cop.name(),
        robber_script: robbers.name(),
        m,
        rounds,
        outcome,
    })
}
