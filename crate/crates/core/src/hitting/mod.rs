//! Hitting-set engine: greedy approximations, exact branching and
//! kernelization rules.

mod branch;
mod greedy;
mod kernel;

pub use branch::{hs_branch_exact, BranchLimits, BranchOutcome, DEFAULT_NODE_LIMIT};
pub use greedy::{hs_greedy_frequency, hs_greedy_setwise};
pub use kernel::{hs_reduce_rules, Kernel, RuleEvent};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HsError {
    #[error("set {set} contains element {element}, but there are only {n_elements} elements")]
    ElementOutOfRange {
        set: usize,
        element: usize,
        n_elements: usize,
    },
    #[error("set {0} is empty, no hitting set exists")]
    EmptySet(usize),
}

/// A set system over elements `0..n_elements`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HsInstance {
    n_elements: usize,
    sets: Vec<Vec<usize>>,
}

impl HsInstance {
    /// Sorts and deduplicates every set. Empty sets are kept; the solvers
    /// report them as infeasible.
    pub fn new(n_elements: usize, mut sets: Vec<Vec<usize>>) -> Result<Self, HsError> {
        for (i, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&element) = set.last() {
                if element >= n_elements {
                    return Err(HsError::ElementOutOfRange {
                        set: i,
                        element,
                        n_elements,
                    });
                }
            }
        }
        Ok(HsInstance { n_elements, sets })
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Total number of element occurrences over all sets.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn first_empty_set(&self) -> Option<usize> {
        self.sets.iter().position(Vec::is_empty)
    }

    pub(crate) fn check_feasible(&self) -> Result<(), HsError> {
        match self.first_empty_set() {
            Some(i) => Err(HsError::EmptySet(i)),
            None => Ok(()),
        }
    }

    pub fn is_hitting_set(&self, chosen: &[usize]) -> bool {
        let mut mark = vec![false; self.n_elements];
        for &e in chosen {
            if e < self.n_elements {
                mark[e] = true;
            }
        }
        self.sets.iter().all(|s| s.iter().any(|&e| mark[e]))
    }

    /// For every element, the indices of the sets containing it.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n_elements];
        for (i, set) in self.sets.iter().enumerate() {
            for &e in set {
                inc[e].push(i);
            }
        }
        inc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HsSolution {
    /// Chosen elements, sorted.
    pub chosen: Vec<usize>,
    pub optimal: bool,
}

impl HsSolution {
    pub fn new(mut chosen: Vec<usize>, optimal: bool) -> Self {
        chosen.sort_unstable();
        chosen.dedup();
        HsSolution { chosen, optimal }
    }

    pub fn cost(&self) -> usize {
        self.chosen.len()
    }
}
