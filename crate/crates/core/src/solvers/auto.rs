//! Dispatch to the cheapest algorithm that is exact on the given instance.

use std::time::Instant;

use super::{
    greedy_component_merge, solve_approx_hs, solve_exact_hs, solve_star_disjoint,
    solve_trivial_pairs, SolveError, SolveReport, SolverLimits,
};
use crate::model::Instance;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AutoOptions {
    pub limits: SolverLimits,
    /// Also run the component-merge heuristic and record its cost in the notes.
    pub compare_greedy: bool,
}

/// Audiences of at most two users go to the pair solver, instances without
/// shared topic pairs to the star solver, and everything else to the exact
/// hitting-set branch. When that search hits its node or audience cap the
/// setwise approximation runs instead, or component merging if the audiences
/// are too large for the reduction.
pub fn solve_auto(instance: &Instance, options: &AutoOptions) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    let limits = &options.limits;
    let mut route = Vec::new();
    let mut report = if instance.max_audience() <= 2 {
        solve_trivial_pairs(instance)?
    } else if let Ok(r) = solve_star_disjoint(instance) {
        r
    } else {
        match solve_exact_hs(instance, limits) {
            Ok(r) => r,
            Err(SolveError::CapExceeded(why)) => {
                route.push(format!("exact-hs gave up ({why})"));
                match solve_approx_hs(instance, limits) {
                    Ok(r) => r,
                    Err(SolveError::CapExceeded(why)) => {
                        route.push(format!("approx-hs gave up ({why})"));
                        greedy_component_merge(instance)
                    }
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        }
    };
    if let Some(b) = limits.budget {
        if report.optimal && report.cost() > b {
            return Err(SolveError::BudgetExceeded(b));
        }
    }
    route.push(format!("solved by {}", report.algo));
    if options.compare_greedy {
        let greedy = greedy_component_merge(instance);
        route.push(format!("greedy-cm cost {}", greedy.cost()));
    }
    if !report.notes.is_empty() {
        route.push(std::mem::take(&mut report.notes));
    }
    report.notes = route.join("; ");
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::Algo;

    #[test]
    fn routes_by_structure() {
        let opts = AutoOptions::default();
        let pairs = Instance::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(solve_auto(&pairs, &opts).unwrap().algo, Algo::TrivialPairs);

        let stars = Instance::new(4, vec![vec![0, 1, 2], vec![0, 3]]).unwrap();
        assert_eq!(solve_auto(&stars, &opts).unwrap().algo, Algo::StarDisjoint);

        let general = Instance::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let r = solve_auto(&general, &opts).unwrap();
        assert_eq!(r.algo, Algo::ExactHs);
        assert_eq!(r.cost(), 3);
        assert!(r.optimal);
    }

    #[test]
    fn falls_back_when_capped() {
        let general = Instance::new(5, vec![vec![0, 1, 2, 3, 4], vec![1, 2, 3]]).unwrap();
        let opts = AutoOptions {
            limits: SolverLimits {
                audience_cap: 4,
                ..SolverLimits::default()
            },
            compare_greedy: true,
        };
        let r = solve_auto(&general, &opts).unwrap();
        assert_eq!(r.algo, Algo::GreedyCm);
        assert!(!r.optimal);
        assert!(r.notes.contains("greedy-cm cost"));
    }

    #[test]
    fn budget_applies_to_exact_routes() {
        let stars = Instance::new(4, vec![vec![0, 1, 2], vec![0, 3]]).unwrap();
        let opts = AutoOptions {
            limits: SolverLimits {
                budget: Some(2),
                ..SolverLimits::default()
            },
            compare_greedy: false,
        };
        assert_eq!(
            solve_auto(&stars, &opts).unwrap_err(),
            SolveError::BudgetExceeded(2)
        );
    }
}
