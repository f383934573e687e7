//! Exact analysis of cops and many robbers with consecutive capture.
//!
//! The crate computes generalized capture times `capt_k(G, m)` by retrograde
//! analysis, cop numbers, 0-visibility cop numbers and capture times, and
//! probes the limit of `capt_k(G, m)` as the number of robbers grows.

pub mod corpus;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pursuit;
pub mod scripts;
pub mod team;
pub mod verify;
pub mod zero_visibility;

pub use graph::{Graph, GraphError, RetractionMap, Vertex};
pub use pursuit::{GamePosition, GameTable, GameValue, SolveError, SolverConfig, Turn};
pub use team::TeamConfig;
