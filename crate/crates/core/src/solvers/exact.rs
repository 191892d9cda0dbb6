//! Exact solvers: exhaustive edge-subset enumeration over the non-dominated
//! users, and branching on the hitting-set reduction.

use super::{Algo, SolveError, SolveReport, SolverLimits};
use crate::charsys::{lift_hs_solution, reduce_tco_to_hs};
use crate::dominated::preprocess_dominated;
use crate::hitting::{hs_branch_exact, BranchLimits, BranchOutcome};
use crate::model::{Edge, Instance, Overlay};

/// Removes dominated users, then tries edge subsets of the remaining
/// co-topic pairs by increasing size in lexicographic order. The first
/// feasible subset is a minimum; removed users are reattached afterwards.
///
/// Sizes below `max_t |U_t| - 1` are skipped since no such subset can be
/// feasible. Sizes above `|T| * (m - 1)` are never needed, `m` being the number
/// of remaining users.
pub fn solve_exact_enum(
    instance: &Instance,
    limits: &SolverLimits,
) -> Result<SolveReport, SolveError> {
    let domination = preprocess_dominated(instance);
    let removed = domination.removed_count();
    let reduced = &domination.reduced;

    let budget = match limits.budget {
        Some(b) if b < removed => return Err(SolveError::BudgetExceeded(b)),
        Some(b) => Some(b - removed),
        None => None,
    };

    let candidates = reduced.co_topic_pairs();
    let mut checker = SubsetChecker::new(reduced, &candidates);
    let m = reduced.n_users();
    let mut upper = (reduced.n_topics() * m.saturating_sub(1)).min(candidates.len());
    if let Some(b) = budget {
        upper = upper.min(b);
    }
    let lower = reduced.max_audience().saturating_sub(1);

    let mut states: u64 = 0;
    let mut found: Option<Vec<usize>> = None;
    'sizes: for size in lower..=upper {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            states += 1;
            if states > limits.max_states {
                return Err(SolveError::CapExceeded(format!(
                    "enumeration state limit of {} reached at subset size {size}",
                    limits.max_states
                )));
            }
            if checker.is_feasible(&combo) {
                found = Some(combo);
                break 'sizes;
            }
            if !next_combination(&mut combo, candidates.len()) {
                break;
            }
        }
    }

    let Some(combo) = found else {
        return match limits.budget {
            Some(b) => Err(SolveError::BudgetExceeded(b)),
            None => unreachable!("merged spanning trees fit within the search bound"),
        };
    };
    let reduced_overlay: Overlay = combo.iter().map(|&i| candidates[i]).collect();
    let overlay = domination.reattach(&reduced_overlay);
    let notes = format!(
        "users kept {} of {}, reattached {}, subsets checked {states}",
        m,
        instance.n_users(),
        removed
    );
    Ok(SolveReport::new(Algo::ExactEnum, overlay, true).with_notes(notes))
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// Feasibility test for subsets of a fixed candidate edge list, using flat
/// per-topic union-find arrays.
struct SubsetChecker {
    /// For each candidate edge: (topic, local i, local j) per topic containing both ends.
    incidences: Vec<Vec<(usize, u32, u32)>>,
    topic_sizes: Vec<usize>,
    offsets: Vec<usize>,
    parent: Vec<u32>,
    components: Vec<usize>,
}

impl SubsetChecker {
    fn new(instance: &Instance, candidates: &[Edge]) -> Self {
        let mut offsets = Vec::with_capacity(instance.n_topics());
        let mut total = 0;
        for a in instance.audiences() {
            offsets.push(total);
            total += a.len();
        }
        let incidences = candidates
            .iter()
            .map(|e| {
                instance
                    .audiences()
                    .iter()
                    .enumerate()
                    .filter_map(|(t, a)| {
                        let i = a.binary_search(&e.u()).ok()?;
                        let j = a.binary_search(&e.v()).ok()?;
                        Some((t, i as u32, j as u32))
                    })
                    .collect()
            })
            .collect();
        SubsetChecker {
            incidences,
            topic_sizes: instance.audiences().iter().map(Vec::len).collect(),
            offsets,
            parent: vec![0; total],
            components: Vec::with_capacity(instance.n_topics()),
        }
    }

    fn is_feasible(&mut self, subset: &[usize]) -> bool {
        for (t, &size) in self.topic_sizes.iter().enumerate() {
            let base = self.offsets[t];
            for (i, p) in self.parent[base..base + size].iter_mut().enumerate() {
                *p = i as u32;
            }
        }
        self.components.clear();
        self.components.extend_from_slice(&self.topic_sizes);
        for &c in subset {
            for &(t, i, j) in &self.incidences[c] {
                let base = self.offsets[t];
                let slice = &mut self.parent[base..base + self.topic_sizes[t]];
                let ri = find(slice, i);
                let rj = find(slice, j);
                if ri != rj {
                    slice[ri as usize] = rj;
                    self.components[t] -= 1;
                }
            }
        }
        self.components.iter().all(|&c| c <= 1)
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Reduces to hitting set, branches to optimality, and lifts the result back.
pub fn solve_exact_hs(
    instance: &Instance,
    limits: &SolverLimits,
) -> Result<SolveReport, SolveError> {
    let (hs, codec) = reduce_tco_to_hs(instance, limits.audience_cap)?;
    let branch = BranchLimits {
        budget: limits.budget,
        max_nodes: limits.max_nodes,
    };
    let outcome = hs_branch_exact(&hs, branch).expect("characteristic sets are never empty");
    let solution = match outcome {
        BranchOutcome::Solved(s) => s,
        BranchOutcome::BudgetExceeded => {
            return Err(SolveError::BudgetExceeded(limits.budget.unwrap_or(0)));
        }
        BranchOutcome::NodeLimit { nodes, .. } => {
            return Err(SolveError::CapExceeded(format!(
                "branch node limit reached after {nodes} nodes"
            )));
        }
    };
    let overlay =
        lift_hs_solution(&codec, &solution.chosen).expect("solution ids come from the codec");
    let notes = format!("hs elements {} sets {}", hs.n_elements(), hs.sets().len());
    Ok(SolveReport::new(Algo::ExactHs, overlay, true).with_notes(notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::validate_solution;

    #[test]
    fn combinations_in_lexicographic_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn single_topic_triangle() {
        let inst = Instance::new(3, vec![vec![0, 1, 2]]).unwrap();
        for r in [
            solve_exact_enum(&inst, &SolverLimits::default()).unwrap(),
            solve_exact_hs(&inst, &SolverLimits::default()).unwrap(),
        ] {
            assert_eq!(r.cost(), 2);
            assert!(r.optimal);
            assert!(validate_solution(&inst, &r.overlay).unwrap().feasible);
        }
    }

    #[test]
    fn disjoint_pairs() {
        let inst = Instance::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            solve_exact_hs(&inst, &SolverLimits::default())
                .unwrap()
                .cost(),
            2
        );
        assert_eq!(
            solve_exact_enum(&inst, &SolverLimits::default())
                .unwrap()
                .cost(),
            2
        );
    }

    #[test]
    fn shared_edge_is_used() {
        // {0,1,2} and {1,2,3}: edge (1,2) serves both topics
        let inst = Instance::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(
            solve_exact_enum(&inst, &SolverLimits::default())
                .unwrap()
                .cost(),
            3
        );
        assert_eq!(
            solve_exact_hs(&inst, &SolverLimits::default())
                .unwrap()
                .cost(),
            3
        );
    }

    #[test]
    fn budgets() {
        let inst = Instance::new(3, vec![vec![0, 1, 2]]).unwrap();
        let tight = SolverLimits {
            budget: Some(1),
            ..SolverLimits::default()
        };
        assert_eq!(
            solve_exact_hs(&inst, &tight).unwrap_err(),
            SolveError::BudgetExceeded(1)
        );
        assert_eq!(
            solve_exact_enum(&inst, &tight).unwrap_err(),
            SolveError::BudgetExceeded(1)
        );
        let enough = SolverLimits {
            budget: Some(2),
            ..SolverLimits::default()
        };
        assert_eq!(solve_exact_enum(&inst, &enough).unwrap().cost(), 2);
    }

    #[test]
    fn caps() {
        // no user is dominated here, so the enumeration runs on all four
        let inst = Instance::new(
            4,
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![0, 3],
            ],
        )
        .unwrap();
        assert_eq!(
            solve_exact_enum(&inst, &SolverLimits::default())
                .unwrap()
                .cost(),
            4
        );
        let limits = SolverLimits {
            max_states: 2,
            ..SolverLimits::default()
        };
        assert!(matches!(
            solve_exact_enum(&inst, &limits),
            Err(SolveError::CapExceeded(_))
        ));
        let limits = SolverLimits {
            audience_cap: 3,
            ..SolverLimits::default()
        };
        assert!(matches!(
            solve_exact_hs(&inst, &limits),
            Err(SolveError::CapExceeded(_))
        ));
    }

    #[test]
    fn dominated_users_are_reattached() {
        // user 3 only cares about topic 0, user 0 about everything
        let inst = Instance::new(4, vec![vec![0, 1, 2, 3], vec![0, 1], vec![0, 2]]).unwrap();
        let r = solve_exact_enum(&inst, &SolverLimits::default()).unwrap();
        assert_eq!(r.cost(), 3);
        assert!(validate_solution(&inst, &r.overlay).unwrap().feasible);
    }
}
