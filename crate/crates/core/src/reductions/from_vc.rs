//! Vertex cover to overlay gadget.
//!
//! Every vertex `v` appears twice, as `v1` in layer one and `v2` in layer
//! two. Every edge `e = {u, v}` yields three topics: `{u1, v1}`, `{u2, v2}`
//! and `{u1, v1, u2, v2}`. The first two force both layer edges, and the
//! third needs one edge between the layers, which picks a cover vertex.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{require_feasible, ReductionError};
use crate::format::{content_lines, expect_sidecar_version, header, ParseError};
use crate::model::{Edge, Instance, Overlay, TopicId, UserId};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are normalized to `u < v`; self-loops, duplicates and
    /// out-of-range endpoints are rejected. Input order is kept.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, ReductionError> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(ReductionError::Graph(format!("self-loop on vertex {a}")));
            }
            if a.max(b) >= n {
                return Err(ReductionError::Graph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(ReductionError::Graph(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(Graph {
            n,
            edges: normalized,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| cover.contains(u) || cover.contains(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcTcoMeta {
    pub graph: Graph,
}

impl VcTcoMeta {
    pub fn layer1(&self, v: usize) -> UserId {
        v
    }

    pub fn layer2(&self, v: usize) -> UserId {
        self.graph.n + v
    }

    /// Source vertex of a gadget user.
    pub fn vertex(&self, u: UserId) -> usize {
        u % self.graph.n
    }

    pub fn is_layer1(&self, u: UserId) -> bool {
        u < self.graph.n
    }

    /// Topics `(t0, t1, t2)` of edge `e`: both layers, layer one, layer two.
    pub fn topics(&self, e: usize) -> (TopicId, TopicId, TopicId) {
        (3 * e, 3 * e + 1, 3 * e + 2)
    }

    pub fn instance(&self) -> Instance {
        let mut audiences = Vec::with_capacity(3 * self.graph.edges.len());
        for &(u, v) in &self.graph.edges {
            let (u1, v1, u2, v2) = (
                self.layer1(u),
                self.layer1(v),
                self.layer2(u),
                self.layer2(v),
            );
            audiences.push(vec![u1, v1, u2, v2]);
            audiences.push(vec![u1, v1]);
            audiences.push(vec![u2, v2]);
        }
        Instance::new(2 * self.graph.n, audiences).expect("gadget users are in range")
    }
}

pub fn gen_from_vc(graph: &Graph) -> (Instance, VcTcoMeta) {
    let meta = VcTcoMeta {
        graph: graph.clone(),
    };
    (meta.instance(), meta)
}

/// Rewrites each cross edge `{u1, v2}` to `{u1, u2}` and returns the
/// vertices whose two copies are joined.
pub fn extract_vc_solution(
    overlay: &Overlay,
    meta: &VcTcoMeta,
) -> Result<Vec<usize>, ReductionError> {
    require_feasible(&meta.instance(), overlay)?;
    let cover: BTreeSet<usize> = overlay
        .iter()
        .filter_map(|e| {
            let (a, b) = e.endpoints();
            (meta.is_layer1(a) && !meta.is_layer1(b)).then(|| meta.vertex(a))
        })
        .collect();
    Ok(cover.into_iter().collect())
}

/// Overlay built from a vertex cover: both layer copies of every edge plus
/// `{w1, w2}` for each cover vertex `w`.
pub fn overlay_from_cover(meta: &VcTcoMeta, cover: &[usize]) -> Overlay {
    let mut overlay = Overlay::new();
    for &(u, v) in meta.graph.edges() {
        overlay.insert(Edge::new(meta.layer1(u), meta.layer1(v)));
        overlay.insert(Edge::new(meta.layer2(u), meta.layer2(v)));
    }
    for &w in cover {
        overlay.insert(Edge::new(meta.layer1(w), meta.layer2(w)));
    }
    overlay
}

/// `p edge <n> <m>` followed by `e <u> <v>` lines with 1-based vertices.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (head, n, m) = header(&mut lines, text, "p", "edge")?;
    let edges = parse_edge_lines(lines, n, m, head, text)?;
    Graph::new(n, edges).map_err(|e| ParseError::new(head, e.to_string()))
}

pub fn emit_graph(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", graph.n, graph.edges.len()).unwrap();
    push_edge_lines(&mut out, graph);
    out
}

fn push_edge_lines(out: &mut String, graph: &Graph) {
    for &(u, v) in &graph.edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
}

fn parse_edge_lines<'a>(
    lines: impl Iterator<Item = crate::format::Line<'a>>,
    n: usize,
    m: usize,
    head: usize,
    text: &str,
) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        if line.tag() != "e" {
            return Err(line.error(format!("unexpected `{}` line in graph", line.tag())));
        }
        line.expect_len(3)?;
        let (u, v): (usize, usize) = (line.num(1)?, line.num(2)?);
        if u == 0 || v == 0 || u > n || v > n {
            return Err(line.error(format!("vertex ids must lie in 1..={n}")));
        }
        if u == v {
            return Err(line.error(format!("self-loop on vertex {u}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(ParseError::new(
            crate::format::last_line_number(text).max(head),
            format!("header declares {m} edges but {} are listed", edges.len()),
        ));
    }
    Ok(edges)
}

/// ```text
/// v 1
/// m vc-tco <n> <m>
/// e <u> <v>          source edges, 1-based, in topic order
/// ```
pub fn emit_vc_meta(meta: &VcTcoMeta) -> String {
    let mut out = String::from("v 1\n");
    writeln!(out, "m vc-tco {} {}", meta.graph.n, meta.graph.edges.len()).unwrap();
    push_edge_lines(&mut out, &meta.graph);
    out
}

pub fn parse_vc_meta(text: &str) -> Result<VcTcoMeta, ParseError> {
    let mut lines = content_lines(text);
    expect_sidecar_version(&mut lines, text)?;
    let (head, n, m) = header(&mut lines, text, "m", "vc-tco")?;
    let edges = parse_edge_lines(lines, n, m, head, text)?;
    let graph = Graph::new(n, edges).map_err(|e| ParseError::new(head, e.to_string()))?;
    Ok(VcTcoMeta { graph })
}
