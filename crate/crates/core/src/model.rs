//! Instances, edges and overlays.
//!
//! An [`Instance`] stores the interest relation topic-wise: one sorted
//! audience list per topic. The per-user interest sets are a derived view.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type UserId = usize;
pub type TopicId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("user {user} in topic {topic} is out of range (n_users = {n_users})")]
    UserOutOfRange {
        topic: TopicId,
        user: UserId,
        n_users: usize,
    },
    #[error("edge ({u}, {v}) is out of range (n_users = {n_users})")]
    EdgeOutOfRange {
        u: UserId,
        v: UserId,
        n_users: usize,
    },
    #[error("self-loop on user {0}")]
    SelfLoop(UserId),
}

/// Undirected pair of distinct users, stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: UserId,
    v: UserId,
}

impl Edge {
    /// Canonical edge between `a` and `b`. Panics on a self-loop.
    pub fn new(a: UserId, b: UserId) -> Self {
        Self::try_new(a, b).unwrap_or_else(|| panic!("self-loop on user {a}"))
    }

    pub fn try_new(a: UserId, b: UserId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> UserId {
        self.u
    }

    pub fn v(self) -> UserId {
        self.v
    }

    pub fn endpoints(self) -> (UserId, UserId) {
        (self.u, self.v)
    }

    pub fn touches(self, w: UserId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`, if `w` is an endpoint.
    pub fn other(self, w: UserId) -> Option<UserId> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A set of overlay edges. The cost of an overlay is its edge count.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Overlay {
    edges: BTreeSet<Edge>,
}

impl Overlay {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` if the edge was not present yet.
    pub fn insert(&mut self, edge: Edge) -> bool {
        self.edges.insert(edge)
    }

    pub fn remove(&mut self, edge: &Edge) -> bool {
        self.edges.remove(edge)
    }

    pub fn contains(&self, edge: &Edge) -> bool {
        self.edges.contains(edge)
    }

    pub fn cost(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.iter().collect()
    }

    pub fn extend_from(&mut self, other: &Overlay) {
        self.edges.extend(other.iter());
    }

    /// Checks that every endpoint is below `n_users`.
    pub fn check_range(&self, n_users: usize) -> Result<(), ModelError> {
        match self.edges.iter().find(|e| e.v >= n_users) {
            None => Ok(()),
            Some(e) => Err(ModelError::EdgeOutOfRange {
                u: e.u,
                v: e.v,
                n_users,
            }),
        }
    }
}

impl FromIterator<Edge> for Overlay {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Overlay {
            edges: iter.into_iter().collect(),
        }
    }
}

impl Extend<Edge> for Overlay {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.edges.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Overlay {
    type Item = Edge;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Edge>>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter().copied()
    }
}

/// Users, topics, and one audience per topic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    n_users: usize,
    audiences: Vec<Vec<UserId>>,
}

impl Instance {
    /// Builds an instance, sorting and deduplicating each audience.
    pub fn new(n_users: usize, mut audiences: Vec<Vec<UserId>>) -> Result<Self, ModelError> {
        for (topic, audience) in audiences.iter_mut().enumerate() {
            audience.sort_unstable();
            audience.dedup();
            if let Some(&user) = audience.last() {
                if user >= n_users {
                    return Err(ModelError::UserOutOfRange {
                        topic,
                        user,
                        n_users,
                    });
                }
            }
        }
        Ok(Instance { n_users, audiences })
    }

    pub fn n_users(&self) -> usize {
        self.n_users
    }

    pub fn n_topics(&self) -> usize {
        self.audiences.len()
    }

    pub fn audience(&self, topic: TopicId) -> &[UserId] {
        &self.audiences[topic]
    }

    pub fn audiences(&self) -> &[Vec<UserId>] {
        &self.audiences
    }

    pub fn max_audience(&self) -> usize {
        self.audiences.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Interest sets, `interests()[u]` lists the topics of user `u` in ascending order.
    pub fn interests(&self) -> Vec<Vec<TopicId>> {
        let mut out = vec![Vec::new(); self.n_users];
        for (t, audience) in self.audiences.iter().enumerate() {
            for &u in audience {
                out[u].push(t);
            }
        }
        out
    }

    pub fn interest(&self, user: UserId) -> Vec<TopicId> {
        self.audiences
            .iter()
            .enumerate()
            .filter(|(_, a)| a.binary_search(&user).is_ok())
            .map(|(t, _)| t)
            .collect()
    }

    /// Rebuilds an instance from per-user interest sets.
    pub fn from_interests(n_topics: usize, interests: &[Vec<TopicId>]) -> Result<Self, ModelError> {
        let mut audiences = vec![Vec::new(); n_topics];
        for (u, topics) in interests.iter().enumerate() {
            for &t in topics {
                if t >= n_topics {
                    return Err(ModelError::UserOutOfRange {
                        topic: t,
                        user: u,
                        n_users: interests.len(),
                    });
                }
                audiences[t].push(u);
            }
        }
        Instance::new(interests.len(), audiences)
    }

    pub fn max_interest(&self) -> usize {
        self.interests().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All unordered pairs of users sharing at least one topic, sorted.
    pub fn co_topic_pairs(&self) -> Vec<Edge> {
        let mut pairs = BTreeSet::new();
        for audience in &self.audiences {
            for (i, &a) in audience.iter().enumerate() {
                for &b in &audience[i + 1..] {
                    pairs.insert(Edge::new(a, b));
                }
            }
        }
        pairs.into_iter().collect()
    }

    /// Sum over topics of `|U_t| - 1`, the cost of one spanning tree per topic.
    pub fn spanning_tree_sum(&self) -> usize {
        self.audiences
            .iter()
            .map(|a| a.len().saturating_sub(1))
            .sum()
    }
}
