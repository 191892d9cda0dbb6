//! Linear-time solvers for two restricted instance classes.

use std::collections::HashMap;

use super::{Algo, SolveError, SolveReport};
use crate::model::{Edge, Instance, Overlay, TopicId, UserId};

/// Audiences of size at most two: every pair that shares a topic needs its
/// own edge, and those edges are the unique minimum.
pub fn solve_trivial_pairs(instance: &Instance) -> Result<SolveReport, SolveError> {
    let found = instance.max_audience();
    if found > 2 {
        return Err(SolveError::AudienceTooLarge { found, limit: 2 });
    }
    let overlay: Overlay = instance
        .audiences()
        .iter()
        .filter(|a| a.len() == 2)
        .map(|a| Edge::new(a[0], a[1]))
        .collect();
    Ok(SolveReport::new(Algo::TrivialPairs, overlay, true))
}

/// First pair of users (in topic order) sharing two topics, with those topics.
pub fn find_shared_topics(instance: &Instance) -> Option<(UserId, UserId, TopicId, TopicId)> {
    let mut first_topic: HashMap<Edge, TopicId> = HashMap::new();
    for (t, audience) in instance.audiences().iter().enumerate() {
        for (i, &a) in audience.iter().enumerate() {
            for &b in &audience[i + 1..] {
                let e = Edge::new(a, b);
                if let Some(&s) = first_topic.get(&e) {
                    return Some((e.u(), e.v(), s, t));
                }
                first_topic.insert(e, t);
            }
        }
    }
    None
}

/// Pairwise interest intersections of size at most one: no edge can serve
/// two topics, so one star per topic is optimal.
pub fn solve_star_disjoint(instance: &Instance) -> Result<SolveReport, SolveError> {
    if let Some((u, v, s, t)) = find_shared_topics(instance) {
        return Err(SolveError::SharedTopics {
            u,
            v,
            topics: (s, t),
        });
    }
    let overlay: Overlay = instance
        .audiences()
        .iter()
        .filter_map(|a| a.split_first())
        .flat_map(|(&center, rest)| rest.iter().map(move |&u| Edge::new(center, u)))
        .collect();
    Ok(SolveReport::new(Algo::StarDisjoint, overlay, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::validate_solution;

    #[test]
    fn pairs_are_connected_directly() {
        let inst = Instance::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let r = solve_trivial_pairs(&inst).unwrap();
        assert_eq!(r.overlay.edges(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(r.optimal);
    }

    #[test]
    fn repeated_pair_is_one_edge() {
        let inst = Instance::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(solve_trivial_pairs(&inst).unwrap().cost(), 1);
    }

    #[test]
    fn tiny_audiences_cost_nothing() {
        let inst = Instance::new(3, vec![vec![0], vec![], vec![2]]).unwrap();
        assert_eq!(solve_trivial_pairs(&inst).unwrap().cost(), 0);
    }

    #[test]
    fn trivial_rejects_large_audience() {
        let inst = Instance::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            solve_trivial_pairs(&inst).unwrap_err(),
            SolveError::AudienceTooLarge { found: 3, limit: 2 }
        );
    }

    #[test]
    fn stars_per_topic() {
        let inst = Instance::new(4, vec![vec![0, 1, 2], vec![0, 3]]).unwrap();
        let r = solve_star_disjoint(&inst).unwrap();
        assert_eq!(r.cost(), 3);
        assert!(validate_solution(&inst, &r.overlay).unwrap().feasible);

        let inst = Instance::new(6, vec![(0..6).collect()]).unwrap();
        assert_eq!(solve_star_disjoint(&inst).unwrap().cost(), 5);
    }

    #[test]
    fn star_reports_witness_pair() {
        let inst = Instance::new(3, vec![vec![0, 1], vec![2], vec![0, 1, 2]]).unwrap();
        assert_eq!(
            solve_star_disjoint(&inst).unwrap_err(),
            SolveError::SharedTopics {
                u: 0,
                v: 1,
                topics: (0, 2)
            }
        );
    }

    #[test]
    fn two_interests_per_user_is_not_enough_by_itself() {
        // every user has at most two topics, but users 0 and 1 share both
        let inst = Instance::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(inst.max_interest(), 2);
        assert!(solve_star_disjoint(&inst).is_err());
        // a path of topics: pairwise intersections have size one
        let inst = Instance::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(solve_star_disjoint(&inst).is_ok());
    }
}
