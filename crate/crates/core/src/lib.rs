//! Minimum topic-connected overlays: given users and the topics they
//! subscribe to, find the fewest user-user edges such that every topic's
//! audience is connected using only edges between its own members.

pub mod bench;
pub mod charsys;
pub mod connectivity;
pub mod dominated;
pub mod format;
pub mod hitting;
pub mod model;
pub mod reductions;
pub mod solvers;

pub use connectivity::{is_topic_connected, validate_solution, ValidationReport};
pub use model::{Edge, Instance, ModelError, Overlay, TopicId, UserId};
pub use solvers::{Algo, AlgoChoice, SolveError, SolveReport, SolverLimits};
