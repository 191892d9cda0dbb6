//! Polynomial-time heuristics.

use petgraph::unionfind::UnionFind;

use super::{cut_bound, Algo, SolveError, SolveReport, SolverLimits};
use crate::charsys::{lift_hs_solution, reduce_tco_to_hs};
use crate::hitting::hs_greedy_setwise;
use crate::model::{Instance, Overlay};

/// Setwise greedy on the hitting-set reduction. Every characteristic set has
/// at most `floor(d/2) * ceil(d/2)` elements, which bounds the ratio to the
/// optimum.
pub fn solve_approx_hs(
    instance: &Instance,
    limits: &SolverLimits,
) -> Result<SolveReport, SolveError> {
    let (hs, codec) = reduce_tco_to_hs(instance, limits.audience_cap)?;
    let solution = hs_greedy_setwise(&hs).expect("characteristic sets are never empty");
    let overlay =
        lift_hs_solution(&codec, &solution.chosen).expect("solution ids come from the codec");
    let d = instance.max_audience();
    let notes = format!("max audience {d}, ratio bound {}", cut_bound(d).max(1));
    Ok(SolveReport::new(Algo::ApproxHs, overlay, false).with_notes(notes))
}

/// Repeatedly adds the co-topic pair that merges the most topic components,
/// preferring the lexicographically smallest pair on ties, until every
/// topic is connected.
pub fn greedy_component_merge(instance: &Instance) -> SolveReport {
    let candidates = instance.co_topic_pairs();
    let audiences = instance.audiences();
    let mut forests: Vec<UnionFind<usize>> =
        audiences.iter().map(|a| UnionFind::new(a.len())).collect();
    let mut remaining: usize = audiences.iter().map(|a| a.len().saturating_sub(1)).sum();
    // topics containing both endpoints, with local indices
    let incidences: Vec<Vec<(usize, usize, usize)>> = candidates
        .iter()
        .map(|e| {
            audiences
                .iter()
                .enumerate()
                .filter_map(|(t, a)| {
                    Some((
                        t,
                        a.binary_search(&e.u()).ok()?,
                        a.binary_search(&e.v()).ok()?,
                    ))
                })
                .collect()
        })
        .collect();
    let mut used = vec![false; candidates.len()];
    let mut overlay = Overlay::new();
    while remaining > 0 {
        let mut best: Option<(usize, usize)> = None;
        for (c, inc) in incidences.iter().enumerate() {
            if used[c] {
                continue;
            }
            let gain = inc
                .iter()
                .filter(|&&(t, i, j)| !forests[t].equiv(i, j))
                .count();
            if gain > 0 && best.is_none_or(|(_, g)| gain > g) {
                best = Some((c, gain));
            }
        }
        let (c, gain) = best.expect("a disconnected topic always has a merging pair");
        used[c] = true;
        for &(t, i, j) in &incidences[c] {
            forests[t].union(i, j);
        }
        remaining -= gain;
        overlay.insert(candidates[c]);
    }
    SolveReport::new(Algo::GreedyCm, overlay, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::validate_solution;
    use crate::model::Edge;

    #[test]
    fn greedy_prefers_shared_edges() {
        let inst = Instance::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let r = greedy_component_merge(&inst);
        assert!(r.overlay.contains(&Edge::new(1, 2)));
        assert_eq!(r.cost(), 3);
        assert!(validate_solution(&inst, &r.overlay).unwrap().feasible);
        assert!(!r.optimal);
    }

    #[test]
    fn greedy_on_empty_instance() {
        let inst = Instance::new(3, vec![vec![0], vec![]]).unwrap();
        assert_eq!(greedy_component_merge(&inst).cost(), 0);
    }

    #[test]
    fn approx_is_feasible_and_bounded() {
        let inst = Instance::new(5, vec![vec![0, 1, 2, 3], vec![1, 2, 4], vec![0, 4]]).unwrap();
        let r = solve_approx_hs(&inst, &SolverLimits::default()).unwrap();
        assert!(validate_solution(&inst, &r.overlay).unwrap().feasible);
        assert!(r.cost() <= cut_bound(4) * inst.spanning_tree_sum());
    }
}
