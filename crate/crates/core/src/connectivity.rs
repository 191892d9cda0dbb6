//! Topic-connectivity checking.
//!
//! A topic is connected when the subgraph induced by its audience is
//! connected using only edges with both endpoints in that audience. Paths
//! through users outside the audience do not count.

use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::model::{Edge, Instance, ModelError, Overlay, TopicId, UserId};

/// Per-topic connectivity verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub overall: bool,
    pub per_topic: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedTopic {
    pub topic: TopicId,
    /// Connected components of the topic's audience, each sorted, ordered by smallest member.
    pub components: Vec<Vec<UserId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub feasible: bool,
    pub cost: usize,
    pub per_topic: Vec<bool>,
    pub disconnected: Vec<DisconnectedTopic>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, ok) in self.per_topic.iter().enumerate() {
            writeln!(
                f,
                "topic {t}: {}",
                if *ok { "connected" } else { "DISCONNECTED" }
            )?;
        }
        for d in &self.disconnected {
            let parts: Vec<String> = d
                .components
                .iter()
                .map(|c| {
                    let users: Vec<String> = c.iter().map(|u| u.to_string()).collect();
                    format!("{{{}}}", users.join(","))
                })
                .collect();
            writeln!(f, "topic {} components: {}", d.topic, parts.join(" "))?;
        }
        write!(
            f,
            "{} cost {}",
            if self.feasible {
                "feasible"
            } else {
                "infeasible"
            },
            self.cost
        )
    }
}

/// Walks every topic once, handing its audience and the resulting union-find
/// (indexed by position in the audience) to `visit`.
fn for_each_topic<F>(instance: &Instance, overlay: &Overlay, mut visit: F)
where
    F: FnMut(TopicId, &[UserId], &mut UnionFind<usize>),
{
    let n = instance.n_users();
    let mut adjacency: Vec<Vec<UserId>> = vec![Vec::new(); n];
    for e in overlay {
        adjacency[e.u()].push(e.v());
    }
    let mut local = vec![usize::MAX; n];
    for (t, audience) in instance.audiences().iter().enumerate() {
        for (i, &u) in audience.iter().enumerate() {
            local[u] = i;
        }
        let mut uf = UnionFind::new(audience.len());
        for (i, &u) in audience.iter().enumerate() {
            for &v in &adjacency[u] {
                if local[v] != usize::MAX {
                    uf.union(i, local[v]);
                }
            }
        }
        visit(t, audience, &mut uf);
        for &u in audience {
            local[u] = usize::MAX;
        }
    }
}

fn is_single_component(uf: &mut UnionFind<usize>, size: usize) -> bool {
    if size <= 1 {
        return true;
    }
    let root = uf.find_mut(0);
    (1..size).all(|i| uf.find_mut(i) == root)
}

pub fn is_topic_connected(
    instance: &Instance,
    overlay: &Overlay,
) -> Result<Connectivity, ModelError> {
    overlay.check_range(instance.n_users())?;
    let mut per_topic = Vec::with_capacity(instance.n_topics());
    for_each_topic(instance, overlay, |_, audience, uf| {
        per_topic.push(is_single_component(uf, audience.len()));
    });
    Ok(Connectivity {
        overall: per_topic.iter().all(|&b| b),
        per_topic,
    })
}

pub fn validate_solution(
    instance: &Instance,
    overlay: &Overlay,
) -> Result<ValidationReport, ModelError> {
    overlay.check_range(instance.n_users())?;
    let mut per_topic = Vec::with_capacity(instance.n_topics());
    let mut disconnected = Vec::new();
    for_each_topic(instance, overlay, |topic, audience, uf| {
        let ok = is_single_component(uf, audience.len());
        per_topic.push(ok);
        if !ok {
            let mut groups: Vec<(usize, Vec<UserId>)> = Vec::new();
            for (i, &u) in audience.iter().enumerate() {
                let root = uf.find_mut(i);
                match groups.iter_mut().find(|(r, _)| *r == root) {
                    Some((_, members)) => members.push(u),
                    None => groups.push((root, vec![u])),
                }
            }
            disconnected.push(DisconnectedTopic {
                topic,
                components: groups.into_iter().map(|(_, m)| m).collect(),
            });
        }
    });
    Ok(ValidationReport {
        feasible: disconnected.is_empty(),
        cost: overlay.cost(),
        per_topic,
        disconnected,
    })
}

/// One path per topic over its sorted audience, shared edges counted once.
pub fn upper_bound_spanning(instance: &Instance) -> Overlay {
    instance
        .audiences()
        .iter()
        .flat_map(|a| a.windows(2).map(|w| Edge::new(w[0], w[1])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn overlay(edges: &[(usize, usize)]) -> Overlay {
        edges.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    fn single(audience: Vec<usize>, n: usize) -> Instance {
        Instance::new(n, vec![audience]).unwrap()
    }

    #[test]
    fn isolated_vertex_disconnects() {
        let inst = single(vec![0, 1, 2], 3);
        let c = is_topic_connected(&inst, &overlay(&[(0, 1)])).unwrap();
        assert!(!c.overall);
        assert_eq!(c.per_topic, vec![false]);
    }

    #[test]
    fn path_connects() {
        let inst = single(vec![0, 1, 2], 3);
        assert!(
            is_topic_connected(&inst, &overlay(&[(0, 1), (1, 2)]))
                .unwrap()
                .overall
        );
    }

    #[test]
    fn relaying_through_outsider_does_not_count() {
        let inst = single(vec![0, 2], 3);
        assert!(
            !is_topic_connected(&inst, &overlay(&[(0, 1), (1, 2)]))
                .unwrap()
                .overall
        );
    }

    #[test]
    fn small_audiences_are_vacuously_connected() {
        let inst = Instance::new(3, vec![vec![], vec![1]]).unwrap();
        let c = is_topic_connected(&inst, &Overlay::new()).unwrap();
        assert_eq!(c.per_topic, vec![true, true]);
    }

    #[test]
    fn out_of_range_edges_are_rejected() {
        let inst = single(vec![0, 1], 2);
        assert!(is_topic_connected(&inst, &overlay(&[(0, 2)])).is_err());
    }

    #[test]
    fn report_lists_components() {
        let inst = Instance::new(4, vec![vec![0, 1, 2, 3], vec![0, 1]]).unwrap();
        let report = validate_solution(&inst, &overlay(&[(0, 1), (2, 3)])).unwrap();
        assert!(!report.feasible);
        assert_eq!(report.per_topic, vec![false, true]);
        assert_eq!(report.disconnected.len(), 1);
        assert_eq!(
            report.disconnected[0].components,
            vec![vec![0, 1], vec![2, 3]]
        );

        let report = validate_solution(&inst, &overlay(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(
            report.disconnected[0].components,
            vec![vec![0, 1, 2], vec![3]]
        );
    }

    #[test]
    fn wrapped_examples() {
        let inst = single(vec![0, 1, 2], 3);
        assert!(
            !validate_solution(&inst, &overlay(&[(0, 1)]))
                .unwrap()
                .feasible
        );
        assert!(
            validate_solution(&inst, &overlay(&[(0, 1), (1, 2)]))
                .unwrap()
                .feasible
        );
        let inst = single(vec![0, 2], 3);
        assert!(
            !validate_solution(&inst, &overlay(&[(0, 1), (1, 2)]))
                .unwrap()
                .feasible
        );
    }

    #[test]
    fn spanning_upper_bound() {
        let inst = single(vec![0, 1, 2], 3);
        assert_eq!(upper_bound_spanning(&inst), overlay(&[(0, 1), (1, 2)]));

        let inst = Instance::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(upper_bound_spanning(&inst).cost(), 1);

        let inst = Instance::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let ub = upper_bound_spanning(&inst);
        assert_eq!(ub.cost(), 2);
        assert!(validate_solution(&inst, &ub).unwrap().feasible);
    }
}
