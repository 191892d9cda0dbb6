//! Removal of dominated users.
//!
//! A user `u` is dominated by `v` when every topic of `u` is also a topic of
//! `v`. Any overlay for the instance without `u` extends to the full instance
//! by the single edge `{u, v}`, and some optimum has that shape. After removal
//! the surviving interest sets form an antichain.

use crate::model::{Edge, Instance, Overlay, TopicId, UserId};

/// Result of [`preprocess_dominated`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domination {
    /// The instance restricted to surviving users, re-indexed densely.
    pub reduced: Instance,
    /// `kept[i]` is the original id of reduced user `i`.
    pub kept: Vec<UserId>,
    /// `(removed, dominator)` pairs in removal order, original ids.
    pub reattach: Vec<(UserId, UserId)>,
    /// Users without any topic. They are dropped and need no edge.
    pub idle: Vec<UserId>,
}

fn is_subset(small: &[TopicId], large: &[TopicId]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Removes dominated users until the interest sets form an antichain.
///
/// Users are scanned from the highest id down, so among users with identical
/// interests the higher id goes first. The dominator is the lowest-id user
/// still present.
pub fn preprocess_dominated(instance: &Instance) -> Domination {
    let interests = instance.interests();
    let n = instance.n_users();
    let mut alive = vec![true; n];
    let mut reattach = Vec::new();
    let mut idle = Vec::new();

    for u in (0..n).rev() {
        if interests[u].is_empty() {
            alive[u] = false;
            idle.push(u);
            continue;
        }
        let dominator =
            (0..n).find(|&v| v != u && alive[v] && is_subset(&interests[u], &interests[v]));
        if let Some(v) = dominator {
            alive[u] = false;
            reattach.push((u, v));
        }
    }
    idle.reverse();

    let kept: Vec<UserId> = (0..n).filter(|&u| alive[u]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &u) in kept.iter().enumerate() {
        index[u] = i;
    }
    let audiences = instance
        .audiences()
        .iter()
        .map(|a| a.iter().filter(|&&u| alive[u]).map(|&u| index[u]).collect())
        .collect();
    let reduced = Instance::new(kept.len(), audiences).expect("re-indexed users are in range");

    Domination {
        reduced,
        kept,
        reattach,
        idle,
    }
}

impl Domination {
    pub fn removed_count(&self) -> usize {
        self.reattach.len()
    }

    /// Maps an overlay of the reduced instance back to original ids and adds
    /// one edge per removed user, in reverse removal order.
    pub fn reattach(&self, reduced: &Overlay) -> Overlay {
        let mut out: Overlay = reduced
            .iter()
            .map(|e| Edge::new(self.kept[e.u()], self.kept[e.v()]))
            .collect();
        for &(u, v) in self.reattach.iter().rev() {
            out.insert(Edge::new(u, v));
        }
        out
    }
}
