//! Characteristic systems and the reduction from topic-connected overlays to
//! hitting set.
//!
//! For a vertex set `V`, the characteristic system holds one cut-edge set per
//! bipartition of `V` into two nonempty sides. An edge set connects `V` iff it
//! intersects every cut. Taking the union of these systems over all topic
//! audiences turns a connectivity requirement into a hitting-set instance.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::hitting::HsInstance;
use crate::model::{Edge, Instance, Overlay, UserId};

/// Largest vertex count accepted by default. The system has `2^(n-1) - 1` sets.
pub const DEFAULT_AUDIENCE_CAP: usize = 20;

/// Cuts are enumerated with a 64-bit mask; caps above this are clamped.
const HARD_AUDIENCE_CAP: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharsysError {
    #[error("audience of size {size} exceeds the cap of {cap} (characteristic system would have 2^{} - 1 sets)", size - 1)]
    AudienceTooLarge { size: usize, cap: usize },
    #[error("element {0} is not in the codec")]
    UnknownElement(usize),
}

/// All cut sets of `vertices`, in bipartition order.
///
/// The side containing the first vertex ranges over subsets (by bitmask over
/// the remaining vertices, ascending), excluding the full set. Each cut is
/// sorted. Fewer than two vertices give an empty system.
pub fn characteristic_system(
    vertices: &[UserId],
    cap: usize,
) -> Result<Vec<Vec<Edge>>, CharsysError> {
    let n = vertices.len();
    let cap = cap.min(HARD_AUDIENCE_CAP);
    if n < 2 {
        return Ok(Vec::new());
    }
    if n > cap {
        return Err(CharsysError::AudienceTooLarge { size: n, cap });
    }
    let mut out = Vec::with_capacity((1usize << (n - 1)) - 1);
    for_each_cut(n, |side| {
        let mut cut = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if side(i) != side(j) {
                    cut.push(Edge::new(vertices[i], vertices[j]));
                }
            }
        }
        cut.sort_unstable();
        out.push(cut);
    });
    Ok(out)
}

/// Calls `visit` once per bipartition of `0..n` (n >= 2); `side(i)` is `true`
/// when `i` is on the side holding vertex 0.
fn for_each_cut<F>(n: usize, mut visit: F)
where
    F: FnMut(&dyn Fn(usize) -> bool),
{
    let full = (1u64 << (n - 1)) - 1;
    for mask in 0..full {
        let side = |i: usize| i == 0 || (mask >> (i - 1)) & 1 == 1;
        visit(&side);
    }
}

/// Bijection between co-topic user pairs and dense element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCodec {
    id_to_edge: Vec<Edge>,
    edge_to_id: BTreeMap<Edge, usize>,
}

impl EdgeCodec {
    /// Ids follow the sorted order of `edges`; duplicates are dropped.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut id_to_edge: Vec<Edge> = edges.into_iter().collect();
        id_to_edge.sort_unstable();
        id_to_edge.dedup();
        let edge_to_id = id_to_edge
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        EdgeCodec {
            id_to_edge,
            edge_to_id,
        }
    }

    /// Codec over every pair of users that share at least one topic.
    pub fn for_instance(instance: &Instance) -> Self {
        Self::from_edges(instance.co_topic_pairs())
    }

    pub fn len(&self) -> usize {
        self.id_to_edge.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id_to_edge.is_empty()
    }

    pub fn id(&self, edge: &Edge) -> Option<usize> {
        self.edge_to_id.get(edge).copied()
    }

    pub fn edge(&self, id: usize) -> Option<Edge> {
        self.id_to_edge.get(id).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.id_to_edge
    }

    /// Element ids of the overlay edges inside the codec domain, sorted.
    /// Edges outside the domain are skipped.
    pub fn encode_restricted(&self, overlay: &Overlay) -> Vec<usize> {
        overlay.iter().filter_map(|e| self.id(&e)).collect()
    }

    /// Element ids of all overlay edges, or the first edge outside the domain.
    pub fn encode(&self, overlay: &Overlay) -> Result<Vec<usize>, Edge> {
        overlay.iter().map(|e| self.id(&e).ok_or(e)).collect()
    }
}

/// Builds the hitting-set instance whose hitting sets are exactly the
/// topic-connected overlays (restricted to co-topic pairs).
///
/// Sets from later topics that repeat an earlier set are dropped.
pub fn reduce_tco_to_hs(
    instance: &Instance,
    cap: usize,
) -> Result<(HsInstance, EdgeCodec), CharsysError> {
    let cap = cap.min(HARD_AUDIENCE_CAP);
    if let Some(size) = instance.audiences().iter().map(Vec::len).find(|&s| s > cap) {
        return Err(CharsysError::AudienceTooLarge { size, cap });
    }
    let codec = EdgeCodec::for_instance(instance);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut sets = Vec::new();
    for audience in instance.audiences() {
        let n = audience.len();
        if n < 2 {
            continue;
        }
        // element id of pair (i, j) within this audience
        let mut pair_id = vec![0usize; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let id = codec
                    .id(&Edge::new(audience[i], audience[j]))
                    .expect("co-topic pair is in the codec");
                pair_id[i * n + j] = id;
            }
        }
        for_each_cut(n, |side| {
            let mut set = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if side(i) != side(j) {
                        set.push(pair_id[i * n + j]);
                    }
                }
            }
            set.sort_unstable();
            if seen.insert(set.clone()) {
                sets.push(set);
            }
        });
    }
    let hs = HsInstance::new(codec.len(), sets).expect("codec ids are in range");
    Ok((hs, codec))
}

pub fn lift_hs_solution(codec: &EdgeCodec, elements: &[usize]) -> Result<Overlay, CharsysError> {
    elements
        .iter()
        .map(|&id| codec.edge(id).ok_or(CharsysError::UnknownElement(id)))
        .collect()
}
