//! Intersection graphs and the general-purpose dominating set solvers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::*;
use crate::instance::{GeomInstance, Objects};

/// Default vertex cap for [`exact_mds`].
pub const EXACT_CAP: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, exact search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

/// Simple undirected graph with sorted adjacency lists and a label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionGraph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl IntersectionGraph {
    pub fn new(n: usize) -> Self {
        IntersectionGraph { adj: vec![Vec::new(); n], labels: (0..n).map(|i| i.to_string()).collect() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = IntersectionGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g.finish();
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.adj.len());
        self.labels = labels;
        self
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    fn finish(&mut self) {
        for a in &mut self.adj {
            a.sort_unstable();
            a.dedup();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Closed neighbourhood, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Induced subgraph on `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> IntersectionGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = IntersectionGraph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
        }
        g.finish();
        g.labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        g
    }

    fn closed_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64);
        self.adj.iter().enumerate().map(|(v, nb)| nb.iter().fold(1u64 << v, |m, &w| m | (1u64 << w))).collect()
    }
}

/// A vertex set kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DominatingSet {
    members: Vec<usize>,
}

impl DominatingSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        DominatingSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn labels<'a>(&self, g: &'a IntersectionGraph) -> Vec<&'a str> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }
}

pub fn build_intersection_graph(inst: &GeomInstance) -> IntersectionGraph {
    let n = inst.len();
    let mut g = IntersectionGraph::new(n);
    match &inst.objects {
        Objects::Frames(fs) => {
            for i in 0..n {
                for j in i + 1..n {
                    if intersect_in(inst.model, &fs[i], &fs[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        Objects::Rects(rs) => {
            for i in 0..n {
                for j in i + 1..n {
                    if rect_intersect(&rs[i], &rs[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
        }
    }
    g.finish();
    g.labels = inst.ids();
    g
}

pub fn is_dominating(g: &IntersectionGraph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return false;
        }
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Repeatedly take the vertex covering the most undominated vertices,
/// breaking ties towards the smallest id.
pub fn greedy_mds(g: &IntersectionGraph) -> DominatingSet {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut left = n;
    let mut chosen = Vec::new();
    while left > 0 {
        let mut best = (0usize, usize::MAX);
        for v in 0..n {
            let gain = usize::from(!dominated[v]) + g.neighbors(v).iter().filter(|&&w| !dominated[w]).count();
            if gain > best.0 {
                best = (gain, v);
            }
        }
        let v = best.1;
        chosen.push(v);
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !dominated[w] {
                dominated[w] = true;
                left -= 1;
            }
        }
    }
    DominatingSet::new(chosen)
}

pub fn exact_mds(g: &IntersectionGraph) -> Result<DominatingSet, GraphError> {
    exact_mds_capped(g, EXACT_CAP)
}

/// Minimum dominating set by branch and bound. Among all minimum sets the
/// lexicographically least (as a sorted sequence) is returned. `cap` may not
/// exceed 64.
pub fn exact_mds_capped(g: &IntersectionGraph, cap: usize) -> Result<DominatingSet, GraphError> {
    let n = g.n();
    let cap = cap.min(64);
    if n > cap {
        return Err(GraphError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok(DominatingSet::default());
    }
    let masks = g.closed_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut best = greedy_mds(g).len();
    size_search(&masks, all, 0, &mut best);

    // suffix[i] = everything some vertex >= i can dominate
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] | masks[i];
    }
    let mut chosen = Vec::with_capacity(best);
    let found = lex_search(&masks, &suffix, all, 0, best, &mut chosen);
    debug_assert!(found);
    Ok(DominatingSet::new(chosen))
}

fn lower_bound(masks: &[u64], undominated: u64, candidates: u64) -> usize {
    let left = undominated.count_ones() as usize;
    if left == 0 {
        return 0;
    }
    let mut cover = 0u32;
    let mut c = candidates;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        cover = cover.max((masks[v] & undominated).count_ones());
    }
    if cover == 0 {
        return usize::MAX / 2;
    }
    left.div_ceil(cover as usize)
}

// Phase one: find the optimum size. Branch on the lowest undominated vertex:
// one of its closed neighbours must be chosen.
fn size_search(masks: &[u64], undominated: u64, depth: usize, best: &mut usize) {
    if undominated == 0 {
        *best = (*best).min(depth);
        return;
    }
    let all_candidates =
        masks.iter().enumerate().fold(0u64, |m, (v, &mk)| if mk & undominated != 0 { m | (1u64 << v) } else { m });
    if depth + lower_bound(masks, undominated, all_candidates) >= *best {
        return;
    }
    let u = undominated.trailing_zeros() as usize;
    let mut options: Vec<(u32, usize)> = Vec::new();
    let mut c = masks[u];
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        options.push(((masks[v] & undominated).count_ones(), v));
    }
    options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, v) in options {
        size_search(masks, undominated & !masks[v], depth + 1, best);
        if depth + 1 >= *best {
            return;
        }
    }
}

// Phase two: with the size fixed, walk vertices in id order trying
// "include" before "exclude". The first complete hit is lexicographically least.
fn lex_search(masks: &[u64], suffix: &[u64], undominated: u64, i: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
    if undominated == 0 {
        return true;
    }
    if chosen.len() == k || i == masks.len() || undominated & !suffix[i] != 0 {
        return false;
    }
    let candidates = if i == 0 { u64::MAX } else { !((1u64 << i) - 1) };
    let candidates = candidates & if masks.len() == 64 { u64::MAX } else { (1u64 << masks.len()) - 1 };
    if chosen.len() + lower_bound(masks, undominated, candidates) > k {
        return false;
    }
    chosen.push(i);
    if lex_search(masks, suffix, undominated & !masks[i], i + 1, k, chosen) {
        return true;
    }
    chosen.pop();
    lex_search(masks, suffix, undominated, i + 1, k, chosen)
}

/// Plain subset enumeration by increasing size; the first hit in
/// lexicographic order is returned. Independent of the branch and bound, meant
/// for cross-checking on small graphs.
pub fn brute_force_mds(g: &IntersectionGraph) -> DominatingSet {
    let n = g.n();
    assert!(n <= 24, "brute force is only for tiny graphs");
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if is_dominating(g, &idx) {
                return DominatingSet::new(idx);
            }
            // next k-combination in lexicographic order
            let mut pos = k;
            while pos > 0 && idx[pos - 1] == n - k + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            for j in pos..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}
