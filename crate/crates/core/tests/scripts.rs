use manyrobbers::corpus::connected_graphs_up_to;
use manyrobbers::families::{complete, path, star, wheel};
use manyrobbers::pursuit::{extract_cop_strategy, GameTable};
use manyrobbers::scripts::sweeps::{path_sweep, star_sweep, wheel_two_cop_sweep, WalkScript};
use manyrobbers::scripts::{
    arena, AdversarialSpread, ArenaError, CopScript, OptimalCop, OptimalRobbers, Outcome, RobberScript,
    RoundRecord, StandStill,
};
use manyrobbers::{Graph, TeamConfig};

fn tc(v: &[usize]) -> TeamConfig {
    TeamConfig::new(v.to_vec())
}

/// Plays a fixed list of joint moves, then stays put.
struct Fixed {
    moves: Vec<TeamConfig>,
}

impl RobberScript for Fixed {
    fn name(&self) -> String {
        "fixed".into()
    }

    fn place(&mut self, _g: &Graph, _cops: &TeamConfig, _m: usize) -> Result<TeamConfig, String> {
        Ok(self.moves[0].clone())
    }

    fn step(
        &mut self,
        _g: &Graph,
        round: usize,
        _history: &[RoundRecord],
        _cops: &TeamConfig,
        robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        Ok(self.moves.get(round).cloned().unwrap_or_else(|| robbers.clone()))
    }
}

struct Teleport;

impl CopScript for Teleport {
    fn name(&self) -> String {
        "teleport".into()
    }

    fn place(&mut self, _g: &Graph) -> Result<TeamConfig, String> {
        Ok(tc(&[0]))
    }

    fn step(
        &mut self,
        g: &Graph,
        _round: usize,
        _history: &[RoundRecord],
        _cops: &TeamConfig,
        _robbers: &TeamConfig,
    ) -> Result<TeamConfig, String> {
        Ok(tc(&[g.n() - 1]))
    }
}

#[test]
fn path_sweep_catches_standing_robbers() {
    let g = path(5).unwrap();
    let mut sweep = path_sweep(&g).unwrap();
    let t = arena(&g, &mut sweep, &mut StandStill::new(), 2, 10).unwrap();
    assert_eq!(t.outcome, Outcome::AllCaptured { round: 4 });
    assert_eq!(t.rounds.last().unwrap().captured_on_cop_move, 2);
}

#[test]
fn star_sweep_beats_six_optimal_robbers() {
    let g = star(4).unwrap();
    let table = GameTable::solve(&g, 1, 6).unwrap();
    let mut sweep = star_sweep(&g).unwrap();
    let t = arena(&g, &mut sweep, &mut OptimalRobbers::new(&table), 6, 20).unwrap();
    assert!(t.capture_round().unwrap() <= 7);
}

#[test]
fn wheel_sweep_beats_a_spread_squad() {
    let g = wheel(6).unwrap();
    let mut sweep = wheel_two_cop_sweep(&g).unwrap();
    let t = arena(&g, &mut sweep, &mut AdversarialSpread, 8, 20).unwrap();
    assert!(t.capture_round().unwrap() <= 3);
}

#[test]
fn illegal_cop_moves_are_reported() {
    let g = path(4).unwrap();
    let err = arena(&g, &mut Teleport, &mut StandStill::at(tc(&[2])), 1, 5).unwrap_err();
    assert!(matches!(err, ArenaError::IllegalMove { round: 1, side: "cop", .. }), "{err}");

    let mut stay = WalkScript::new("stay", &g, vec![tc(&[0])], 0);
    let mut jumper = Fixed { moves: vec![tc(&[3]), tc(&[1])] };
    let err = arena(&g, &mut stay, &mut jumper, 1, 5).unwrap_err();
    assert!(matches!(err, ArenaError::IllegalMove { side: "robber", .. }), "{err}");
}

#[test]
fn bad_placements_are_reported() {
    let g = path(3).unwrap();
    let mut stay = WalkScript::new("stay", &g, vec![tc(&[0])], 0);
    let err = arena(&g, &mut stay, &mut StandStill::at(tc(&[2, 2])), 1, 5).unwrap_err();
    assert!(matches!(err, ArenaError::BadPlacement { side: "robber", .. }), "{err}");
}

#[test]
fn capture_accounting() {
    // K2: the cop steps onto the robber in round 1.
    let k2 = complete(2).unwrap();
    let mut walk = WalkScript::new("walk", &k2, vec![tc(&[0]), tc(&[1])], 1);
    let t = arena(&k2, &mut walk, &mut StandStill::at(tc(&[1])), 1, 5).unwrap();
    assert_eq!(t.capture_round(), Some(1));
    assert_eq!(t.rounds[1].captured_on_cop_move, 1);

    // Robbers placed on the cop are gone before round 1.
    let t = arena(&k2, &mut walk.clone(), &mut StandStill::at(tc(&[0])), 1, 5).unwrap();
    assert_eq!(t.capture_round(), Some(0));

    // P3: a robber walking into a stationary cop still costs the round.
    let p3 = path(3).unwrap();
    let mut stay = WalkScript::new("stay", &p3, vec![tc(&[1])], 0);
    let mut walker = Fixed { moves: vec![tc(&[0]), tc(&[1])] };
    let t = arena(&p3, &mut stay, &mut walker, 1, 5).unwrap();
    assert_eq!(t.capture_round(), Some(1));
    assert_eq!(t.rounds[1].captured_on_robber_move, 1);

    // P3 from an end against a robber at the other end: two rounds.
    let mut walk = WalkScript::new("walk", &p3, vec![tc(&[0]), tc(&[1]), tc(&[2])], 2);
    let t = arena(&p3, &mut walk, &mut StandStill::at(tc(&[2])), 1, 5).unwrap();
    assert_eq!(t.capture_round(), Some(2));
}

#[test]
fn truncated_games_report_horizon() {
    let g = path(4).unwrap();
    let mut stay = WalkScript::new("stay", &g, vec![tc(&[0])], 0);
    let t = arena(&g, &mut stay, &mut StandStill::at(tc(&[3])), 1, 6).unwrap();
    assert_eq!(t.outcome, Outcome::Truncated { horizon: 6 });
    assert_eq!(t.length(), 7);
    assert_eq!(t.rounds.len(), 7);
}

#[test]
fn optimal_play_reproduces_capture_time() {
    for g in connected_graphs_up_to(2, 5).unwrap() {
        for k in 1..=2 {
            for m in 1..=2 {
                let table = GameTable::solve(&g, k, m).unwrap();
                let Some(value) = table.capture_time().finite() else { continue };
                let policy = extract_cop_strategy(&g, k, m).unwrap();
                let t = arena(&g, &mut OptimalCop::new(&policy), &mut OptimalRobbers::new(&table), m, 50).unwrap();
                assert_eq!(t.capture_round(), Some(value as usize), "{:?} k={k} m={m}", g.name());
            }
        }
    }
}

#[test]
fn transcripts_serialize_one_line_per_round() {
    let g = path(5).unwrap();
    let mut sweep = path_sweep(&g).unwrap();
    let t = arena(&g, &mut sweep, &mut StandStill::new(), 1, 10).unwrap();
    let lines = t.to_json_lines();
    assert_eq!(lines.lines().count(), t.rounds.len());
    let first: RoundRecord = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first, t.rounds[0]);
    let back: manyrobbers::scripts::Transcript = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(back, t);
}
