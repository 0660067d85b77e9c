//! Vertex cover and edge dominating set, both realised in the edge model.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::geometry::{LFrame, Model, Point};
use crate::graph::IntersectionGraph;
use crate::instance::GeomInstance;

/// Bipartite graph with `left` and `right` vertex counts and edges `(l, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, ReductionError> {
        edges.sort_unstable();
        edges.dedup();
        if edges.iter().any(|&(l, r)| l >= left || r >= right) {
            return Err(ReductionError::InvalidSource("edge endpoint out of range".into()));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn edges_touch(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.edges[a], self.edges[b]);
        x.0 == y.0 || x.1 == y.1
    }

    /// Does the edge subset dominate every edge?
    pub fn is_edge_dominating(&self, chosen: &[usize]) -> bool {
        (0..self.edges.len()).all(|e| chosen.iter().any(|&c| c == e || self.edges_touch(c, e)))
    }
}

/// Frame layout for vertex cover: which frame plays which part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverLayout {
    /// Frame of each vertex.
    pub vertex: Vec<usize>,
    /// Frame of each edge `(u, v)` with `u < v`, same order as the graph's edge list.
    pub edge: Vec<((usize, usize), usize)>,
    /// The two pendant frames of each vertex.
    pub pendant: Vec<(usize, usize)>,
}

/// Each vertex `k` (one-based) gets a frame reaching `x = 0` at height `2k`;
/// an edge `(a, b)`, `a < b`, gets a frame at height `2b` whose short vertical
/// arm runs inside vertex `a`'s vertical arm; a pendant pair at height `2n + k`
/// forces one extra frame per vertex.
pub fn vc_to_epg(g: &IntersectionGraph) -> (GeomInstance, CoverLayout) {
    let n = g.n() as i64;
    let mut frames = Vec::new();
    let mut layout = CoverLayout { vertex: Vec::new(), edge: Vec::new(), pendant: Vec::new() };
    for k in 1..=n {
        layout.vertex.push(frames.len());
        frames.push(LFrame {
            id: format!("v{k}"),
            corner: Point::new(-2 * k, 2 * k),
            hspan: 2 * k,
            vspan: 2 * n - k + 1,
        });
    }
    for (u, v) in g.edges() {
        let (a, b) = (u as i64 + 1, v as i64 + 1);
        layout.edge.push(((u, v), frames.len()));
        frames.push(LFrame { id: format!("e{a}-{b}"), corner: Point::new(-2 * a, 2 * b), hspan: 2 * a, vspan: 1 });
    }
    for k in 1..=n {
        let y = 2 * n + k;
        layout.pendant.push((frames.len(), frames.len() + 1));
        frames.push(LFrame { id: format!("p{k}"), corner: Point::new(-2 * k, y), hspan: 2 * k, vspan: 1 });
        frames.push(LFrame {
            id: format!("q{k}"),
            corner: Point::new(-(2 * n + 2 * k), y),
            hspan: 2 * n + 2 * k,
            vspan: 1,
        });
    }
    let mut inst = GeomInstance::frames(frames).with_model(Model::Edge);
    inst.vertical = Some(0);
    (inst, layout)
}

/// Edge `(i, j)` (one-based) becomes the frame from `(-i, 0)` to `(0, -j)` with
/// its corner at `(-i, -j)`; two frames share a grid edge iff the edges share an endpoint.
pub fn eds_to_epg(b: &BipartiteGraph) -> GeomInstance {
    let frames = b
        .edges
        .iter()
        .map(|&(l, r)| {
            let (i, j) = (l as i64 + 1, r as i64 + 1);
            LFrame { id: format!("e{i}-{j}"), corner: Point::new(-i, -j), hspan: i, vspan: j }
        })
        .collect();
    GeomInstance::frames(frames).with_model(Model::Edge)
}

pub fn is_vertex_cover(g: &IntersectionGraph, cover: &[usize]) -> bool {
    g.edges().iter().all(|(u, v)| cover.contains(u) || cover.contains(v))
}

/// Smallest vertex cover by subset enumeration.
pub fn brute_force_vertex_cover(g: &IntersectionGraph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 20);
    let edges = g.edges();
    let mut best: Option<u32> = None;
    for mask in 0u32..(1 << n) {
        if best.is_some_and(|b| b.count_ones() <= mask.count_ones()) {
            continue;
        }
        if edges.iter().all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0) {
            best = Some(mask);
        }
    }
    let m = best.unwrap_or(0);
    (0..n).filter(|&v| m & (1 << v) != 0).collect()
}

/// Smallest edge dominating set by subset enumeration, as edge indices.
pub fn brute_force_eds(b: &BipartiteGraph) -> Vec<usize> {
    let m = b.edges.len();
    assert!(m <= 20);
    let mut best: Option<u32> = None;
    for mask in 0u32..(1 << m) {
        if best.is_some_and(|x| x.count_ones() <= mask.count_ones()) {
            continue;
        }
        let chosen: Vec<usize> = (0..m).filter(|&e| mask & (1 << e) != 0).collect();
        if b.is_edge_dominating(&chosen) {
            best = Some(mask);
        }
    }
    let mask = best.unwrap_or(0);
    (0..m).filter(|&e| mask & (1 << e) != 0).collect()
}
