//! Algorithm portfolio for minimum topic-connected overlays.

mod approx;
mod auto;
mod exact;
mod special;
mod threshold;

pub use approx::{greedy_component_merge, solve_approx_hs};
pub use auto::{solve_auto, AutoOptions};
pub use exact::{solve_exact_enum, solve_exact_hs};
pub use special::{find_shared_topics, solve_star_disjoint, solve_trivial_pairs};
pub use threshold::{
    small_topic_epsilon, small_topic_threshold, small_topic_threshold_log2, ThresholdError,
};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use thiserror::Error;

use crate::charsys::{CharsysError, DEFAULT_AUDIENCE_CAP};
use crate::hitting::DEFAULT_NODE_LIMIT;
use crate::model::{Instance, ModelError, Overlay, TopicId, UserId};

/// Default limit on subsets examined by the enumeration solver.
pub const DEFAULT_STATE_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algo {
    TrivialPairs,
    StarDisjoint,
    ExactEnum,
    ExactHs,
    ApproxHs,
    GreedyCm,
}

impl Algo {
    pub const ALL: [Algo; 6] = [
        Algo::TrivialPairs,
        Algo::StarDisjoint,
        Algo::ExactEnum,
        Algo::ExactHs,
        Algo::ApproxHs,
        Algo::GreedyCm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::TrivialPairs => "trivial",
            Algo::StarDisjoint => "star",
            Algo::ExactEnum => "exact-enum",
            Algo::ExactHs => "exact-hs",
            Algo::ApproxHs => "approx-hs",
            Algo::GreedyCm => "greedy-cm",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Algo::ApproxHs | Algo::GreedyCm)
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(Algo::TrivialPairs),
            "star" => Ok(Algo::StarDisjoint),
            "exact-enum" => Ok(Algo::ExactEnum),
            "exact-hs" => Ok(Algo::ExactHs),
            "approx-hs" => Ok(Algo::ApproxHs),
            "greedy" | "greedy-cm" => Ok(Algo::GreedyCm),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// An algorithm tag or automatic dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgoChoice {
    Auto,
    Fixed(Algo),
}

impl fmt::Display for AlgoChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgoChoice::Auto => f.write_str("auto"),
            AlgoChoice::Fixed(a) => a.fmt(f),
        }
    }
}

impl FromStr for AlgoChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(AlgoChoice::Auto),
            other => other.parse().map(AlgoChoice::Fixed),
        }
    }
}

impl AlgoChoice {
    pub fn run(
        self,
        instance: &Instance,
        limits: &SolverLimits,
    ) -> Result<SolveReport, SolveError> {
        match self {
            AlgoChoice::Auto => solve_auto(
                instance,
                &AutoOptions {
                    limits: *limits,
                    compare_greedy: false,
                },
            ),
            AlgoChoice::Fixed(a) => solve_with(a, instance, limits),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("precondition violated: max audience {found} exceeds {limit}")]
    AudienceTooLarge { found: usize, limit: usize },
    #[error("precondition violated: users {u} and {v} share topics {} and {}", topics.0, topics.1)]
    SharedTopics {
        u: UserId,
        v: UserId,
        topics: (TopicId, TopicId),
    },
    #[error("no feasible overlay with at most {0} edges")]
    BudgetExceeded(usize),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl SolveError {
    /// Budget and cap outcomes, as opposed to precondition failures.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            SolveError::BudgetExceeded(_) | SolveError::CapExceeded(_)
        )
    }
}

impl From<CharsysError> for SolveError {
    fn from(e: CharsysError) -> Self {
        SolveError::CapExceeded(e.to_string())
    }
}

/// Limits shared by the exact and reduction-based solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    /// Only overlays with at most this many edges are accepted.
    pub budget: Option<usize>,
    /// Edge subsets the enumeration solver may check.
    pub max_states: u64,
    /// Search nodes the hitting-set branching may visit.
    pub max_nodes: u64,
    /// Largest audience turned into a characteristic system.
    pub audience_cap: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            budget: None,
            max_states: DEFAULT_STATE_LIMIT,
            max_nodes: DEFAULT_NODE_LIMIT,
            audience_cap: DEFAULT_AUDIENCE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub algo: Algo,
    pub overlay: Overlay,
    /// Set only by exact algorithms that ran to completion.
    pub optimal: bool,
    pub elapsed: Duration,
    pub seed: Option<u64>,
    pub notes: String,
}

impl SolveReport {
    pub(crate) fn new(algo: Algo, overlay: Overlay, optimal: bool) -> Self {
        SolveReport {
            algo,
            overlay,
            optimal,
            elapsed: Duration::ZERO,
            seed: None,
            notes: String::new(),
        }
    }

    pub(crate) fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn cost(&self) -> usize {
        self.overlay.cost()
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed.as_millis()
    }

    /// `<algo> <cost> <optimal> <millis>`
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} {} {}",
            self.algo,
            self.cost(),
            self.optimal,
            self.elapsed_ms()
        )
    }

    /// Comment lines for the solution file; everything but the timing.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut lines = vec![format!("algo {} optimal {}", self.algo, self.optimal)];
        if let Some(seed) = self.seed {
            lines.push(format!("seed {seed}"));
        }
        if !self.notes.is_empty() {
            lines.push(format!("notes {}", self.notes));
        }
        lines
    }
}

/// Runs one algorithm by tag, timing it.
pub fn solve_with(
    algo: Algo,
    instance: &Instance,
    limits: &SolverLimits,
) -> Result<SolveReport, SolveError> {
    let start = std::time::Instant::now();
    let mut report = match algo {
        Algo::TrivialPairs => solve_trivial_pairs(instance),
        Algo::StarDisjoint => solve_star_disjoint(instance),
        Algo::ExactEnum => solve_exact_enum(instance, limits),
        Algo::ExactHs => solve_exact_hs(instance, limits),
        Algo::ApproxHs => solve_approx_hs(instance, limits),
        Algo::GreedyCm => Ok(greedy_component_merge(instance)),
    }?;
    if let Some(b) = limits.budget {
        if report.optimal && report.cost() > b {
            return Err(SolveError::BudgetExceeded(b));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `floor(d/2) * ceil(d/2)`, the largest cut of `d` vertices.
pub fn cut_bound(d: usize) -> usize {
    (d / 2) * d.div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algo_names_round_trip() {
        for algo in Algo::ALL {
            assert_eq!(algo.name().parse::<Algo>().unwrap(), algo);
        }
        assert_eq!("greedy".parse::<Algo>().unwrap(), Algo::GreedyCm);
        assert!("bogus".parse::<Algo>().is_err());
    }

    #[test]
    fn cut_bounds() {
        assert_eq!(cut_bound(2), 1);
        assert_eq!(cut_bound(3), 2);
        assert_eq!(cut_bound(4), 4);
        assert_eq!(cut_bound(5), 6);
    }

    #[test]
    fn summary_line_format() {
        let r = SolveReport::new(Algo::ExactHs, Overlay::new(), true);
        assert_eq!(r.summary_line(), "exact-hs 0 true 0");
    }
}
