use super::{hs_greedy_setwise, HsError, HsInstance, HsSolution};

/// Default number of search nodes before the branching gives up.
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchLimits {
    /// Only hitting sets with at most this many elements are accepted.
    pub budget: Option<usize>,
    pub max_nodes: u64,
}

impl Default for BranchLimits {
    fn default() -> Self {
        BranchLimits {
            budget: None,
            max_nodes: DEFAULT_NODE_LIMIT,
        }
    }
}

impl BranchLimits {
    pub fn with_budget(budget: usize) -> Self {
        BranchLimits {
            budget: Some(budget),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchOutcome {
    /// A minimum hitting set (within the budget, if one was given).
    Solved(HsSolution),
    /// The search completed and no hitting set fits the budget.
    BudgetExceeded,
    /// The node limit was hit; `best` is the best hitting set seen so far.
    NodeLimit {
        best: Option<HsSolution>,
        nodes: u64,
    },
}

/// Depth-first branching on the elements of a smallest unhit set.
///
/// After the branch that takes element `e` returns, `e` is forbidden in the
/// sibling branches, so every hitting set is visited at most once. Subtrees
/// are pruned against the incumbent with a disjoint-packing lower bound.
pub fn hs_branch_exact(
    instance: &HsInstance,
    limits: BranchLimits,
) -> Result<BranchOutcome, HsError> {
    instance.check_feasible()?;

    let greedy = hs_greedy_setwise(instance)?.chosen;
    let mut search = Search::new(instance, limits.max_nodes);
    match limits.budget {
        Some(k) if greedy.len() > k => search.bound = k + 1,
        _ => {
            search.bound = greedy.len();
            search.best = Some(greedy);
        }
    }

    let completed = search.run();
    let best = search.best.map(|b| HsSolution::new(b, completed));
    Ok(match (completed, best) {
        (true, Some(sol)) => BranchOutcome::Solved(sol),
        (true, None) => BranchOutcome::BudgetExceeded,
        (false, best) => BranchOutcome::NodeLimit {
            best,
            nodes: search.nodes,
        },
    })
}

struct Search<'a> {
    sets: &'a [Vec<usize>],
    incidence: Vec<Vec<usize>>,
    hits: Vec<u32>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Only solutions strictly smaller than this are recorded.
    bound: usize,
    nodes: u64,
    max_nodes: u64,
    packing_mark: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(instance: &'a HsInstance, max_nodes: u64) -> Self {
        Search {
            sets: instance.sets(),
            incidence: instance.incidence(),
            hits: vec![0; instance.sets().len()],
            forbidden: vec![false; instance.n_elements()],
            chosen: Vec::new(),
            best: None,
            bound: usize::MAX,
            nodes: 0,
            max_nodes,
            packing_mark: vec![false; instance.n_elements()],
        }
    }

    fn available(&self, set: usize) -> impl Iterator<Item = usize> + '_ {
        self.sets[set]
            .iter()
            .copied()
            .filter(|&e| !self.forbidden[e])
    }

    /// Returns `false` when the node limit stopped the search.
    fn run(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }

        // smallest unhit set by available elements, plus a packing bound
        let mut branch_set: Option<(usize, usize)> = None;
        let mut packing = 0;
        let mut marked = Vec::new();
        for s in 0..self.sets.len() {
            if self.hits[s] > 0 {
                continue;
            }
            let mut size = 0;
            let mut disjoint = true;
            for e in self.available(s) {
                size += 1;
                disjoint &= !self.packing_mark[e];
            }
            if size == 0 {
                self.clear_marks(&marked);
                return true;
            }
            if disjoint {
                packing += 1;
                for e in self.sets[s].iter().copied().filter(|&e| !self.forbidden[e]) {
                    self.packing_mark[e] = true;
                    marked.push(e);
                }
            }
            if branch_set.is_none_or(|(_, best)| size < best) {
                branch_set = Some((s, size));
            }
        }
        self.clear_marks(&marked);

        let Some((set, _)) = branch_set else {
            if self.chosen.len() < self.bound {
                self.bound = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return true;
        };
        if self.chosen.len() + packing >= self.bound {
            return true;
        }

        let candidates: Vec<usize> = self.available(set).collect();
        let mut completed = true;
        for &e in &candidates {
            self.take(e);
            completed = self.run();
            self.untake(e);
            self.forbidden[e] = true;
            if !completed || self.chosen.len() + 1 >= self.bound {
                break;
            }
        }
        for &e in &candidates {
            self.forbidden[e] = false;
        }
        completed
    }

    fn clear_marks(&mut self, marked: &[usize]) {
        for &e in marked {
            self.packing_mark[e] = false;
        }
    }

    fn take(&mut self, e: usize) {
        self.chosen.push(e);
        for &s in &self.incidence[e] {
            self.hits[s] += 1;
        }
    }

    fn untake(&mut self, e: usize) {
        self.chosen.pop();
        for &s in &self.incidence[e] {
            self.hits[s] -= 1;
        }
    }
}
