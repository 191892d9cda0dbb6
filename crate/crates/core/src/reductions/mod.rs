//! Instance generators: seeded random instances and the two hardness
//! gadgets (hitting set and vertex cover), with maps from overlays back to
//! solutions of the source problem.

mod from_hs;
mod from_vc;
mod random;

pub use from_hs::{
    emit_hs_meta, extract_hs_solution, gen_from_hs, parse_hs_meta, HsTcoMeta, KChoice,
};
pub use from_vc::{
    emit_graph, emit_vc_meta, extract_vc_solution, gen_from_vc, overlay_from_cover, parse_graph,
    parse_vc_meta, Graph, VcTcoMeta,
};
pub use random::gen_random;

use thiserror::Error;

use crate::connectivity::validate_solution;
use crate::model::{Instance, ModelError, Overlay, TopicId};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReductionError {
    #[error("invalid audience range [{min}, {max}] for {n_users} users")]
    AudienceRange {
        min: usize,
        max: usize,
        n_users: usize,
    },
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("the number of special users must be positive")]
    ZeroK,
    #[error("epsilon must be positive and finite, got {0}")]
    BadEpsilon(f64),
    #[error("malformed graph: {0}")]
    Graph(String),
    #[error("overlay is infeasible: topic {0} is disconnected")]
    Infeasible(TopicId),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Fails with the first disconnected topic.
fn require_feasible(instance: &Instance, overlay: &Overlay) -> Result<(), ReductionError> {
    let report = validate_solution(instance, overlay)?;
    match report.disconnected.first() {
        Some(d) => Err(ReductionError::Infeasible(d.topic)),
        None => Ok(()),
    }
}
