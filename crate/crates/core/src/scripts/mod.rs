//! Executable strategies and an arena replaying them under the game rules.

pub mod arena;
pub mod hn;
pub mod players;
pub mod sweeps;

pub use arena::{arena, ArenaError, CopScript, Outcome, RobberScript, RoundRecord, Transcript};
pub use hn::{hn_cop_from_vertex2, hn_robbers_squad, HnCopFromVertex2, HnRobbersSquad};
pub use players::{AdversarialSpread, OptimalCop, OptimalRobbers, RandomRobbers, StandStill};
pub use sweeps::{
    bipartite_sweep, caterpillar_sweep, cycle_two_cop_sweep, path_sweep, star_sweep,
    wheel_two_cop_sweep, WalkScript,
};
