//! Permutation graphs: frames crossing two perpendicular lines, and an exact
//! minimum dominating set scan over the permutation diagram.
//!
//! Vertex `i` sits at position `i` on line one and position `pi[i]` on line
//! two; `i < j` are adjacent iff `pi[i] > pi[j]`. Reading the vertices as points
//! `(i, pi[i])`, a vertex dominates exactly the points up-left and down-right of it.
//!
//! The scan walks the points left to right and keeps, per cost, the Pareto
//! front of two summaries: the highest chosen `y` so far (later points below it
//! are dominated) and the lowest `y` among skipped points that still wait for a
//! later chosen point beneath them. Both summaries are snapped to values that
//! still occur among the unscanned points, which keeps the front small.
//! Running time is `O(n log n + n w log w)` for front width `w`; `w` stays
//! in the low tens on every family we have measured but has no proven bound.

use thiserror::Error;

use crate::geometry::LFrame;
use crate::graph::{DominatingSet, IntersectionGraph};
use crate::instance::GeomInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("instance needs both a vertical and a horizontal line")]
    MissingLines,
    #[error("frame `{0}` does not cross both lines")]
    NotTwoLineCrossing(String),
    #[error("frames `{0}` and `{1}` sit in different quadrants around the crossing")]
    MixedTypes(String, String),
    #[error("frames `{0}` and `{1}` cross a line at the same point")]
    DegenerateOrder(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    pi: Vec<u32>,
}

impl Permutation {
    /// Zero-based: `pi` must be a rearrangement of `0..n`.
    pub fn new(pi: Vec<u32>) -> Result<Self, PermutationError> {
        let n = pi.len();
        let mut seen = vec![false; n];
        for &p in &pi {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(PermutationError::NotAPermutation(n));
            }
            seen[p] = true;
        }
        Ok(Permutation { pi })
    }

    pub fn from_one_based(pi: &[u32]) -> Result<Self, PermutationError> {
        if pi.contains(&0) {
            return Err(PermutationError::NotAPermutation(pi.len()));
        }
        Permutation::new(pi.iter().map(|&p| p - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.pi
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && ((i < j) == (self.pi[i] > self.pi[j]))
    }

    /// Explicit inversion graph. Quadratic, meant for small inputs.
    pub fn graph(&self) -> IntersectionGraph {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.pi[i] > self.pi[j] {
                    edges.push((i, j));
                }
            }
        }
        IntersectionGraph::from_edges(n, &edges)
    }
}

/// Positions of the frames on the two lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLineEmbedding {
    pub permutation: Permutation,
    /// Frame index at each position of line one.
    pub frame_at: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quadrant {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

fn quadrant(f: &LFrame, v: i64, h: i64) -> Option<Quadrant> {
    let (cx, cy) = (f.corner.x, f.corner.y);
    let hx = (cx.min(cx + f.hspan), cx.max(cx + f.hspan));
    let vy = (cy.min(cy + f.vspan), cy.max(cy + f.vspan));
    if cx == v || cy == h || !(hx.0 <= v && v <= hx.1) || !(vy.0 <= h && h <= vy.1) {
        return None;
    }
    Some(match (cx < v, cy > h) {
        (true, true) => Quadrant::UpperLeft,
        (false, true) => Quadrant::UpperRight,
        (true, false) => Quadrant::LowerLeft,
        (false, false) => Quadrant::LowerRight,
    })
}

/// Order the frames along both lines. Line one lists the crossings with the
/// vertical line, line two those with the horizontal line from left to right.
/// Line one runs top to bottom when corners sit upper-left or lower-right of
/// the crossing and bottom to top otherwise, so that two frames meet exactly
/// when their order flips between the lines.
pub fn lframes_to_permutation(inst: &GeomInstance) -> Result<TwoLineEmbedding, PermutationError> {
    let (Some(v), Some(h)) = (inst.vertical, inst.horizontal) else {
        return Err(PermutationError::MissingLines);
    };
    let frames = inst.frame_list().ok_or(PermutationError::MissingLines)?;
    let mut quad = None;
    for (i, f) in frames.iter().enumerate() {
        let q = quadrant(f, v, h).ok_or_else(|| PermutationError::NotTwoLineCrossing(f.id.clone()))?;
        match quad {
            None => quad = Some((q, i)),
            Some((q0, j)) if q0 != q => {
                return Err(PermutationError::MixedTypes(frames[j].id.clone(), f.id.clone()));
            }
            _ => {}
        }
    }
    let n = frames.len();
    let top_down = matches!(quad, Some((Quadrant::UpperLeft, _)) | Some((Quadrant::LowerRight, _)) | None);

    let mut line_one: Vec<usize> = (0..n).collect();
    line_one.sort_by_key(|&i| frames[i].corner.y);
    if top_down {
        line_one.reverse();
    }
    let mut line_two: Vec<usize> = (0..n).collect();
    line_two.sort_by_key(|&i| frames[i].corner.x);
    for w in line_one.windows(2) {
        if frames[w[0]].corner.y == frames[w[1]].corner.y {
            return Err(PermutationError::DegenerateOrder(frames[w[0]].id.clone(), frames[w[1]].id.clone()));
        }
    }
    for w in line_two.windows(2) {
        if frames[w[0]].corner.x == frames[w[1]].corner.x {
            return Err(PermutationError::DegenerateOrder(frames[w[0]].id.clone(), frames[w[1]].id.clone()));
        }
    }
    let mut rank_two = vec![0u32; n];
    for (r, &i) in line_two.iter().enumerate() {
        rank_two[i] = r as u32;
    }
    let pi = line_one.iter().map(|&i| rank_two[i]).collect();
    Ok(TwoLineEmbedding { permutation: Permutation { pi }, frame_at: line_one })
}

/// Minimum dominating set of a two-line instance, as frame indices.
pub fn mds_two_line(inst: &GeomInstance) -> Result<DominatingSet, PermutationError> {
    let emb = lframes_to_permutation(inst)?;
    let s = mds_permutation(&emb.permutation);
    Ok(DominatingSet::new(s.iter().map(|i| emb.frame_at[i]).collect()))
}

const INF: u32 = u32::MAX;
const NIL: u32 = u32::MAX;

/// Values not yet scanned, with nearest-alive lookups in both directions.
struct Alive {
    // next[v]: smallest alive value >= v, n when none
    next: Vec<u32>,
    // prev[v + 1] - 1: largest alive value <= v, prev == 0 when none
    prev: Vec<u32>,
}

fn find(parent: &mut [u32], mut v: u32) -> u32 {
    while parent[v as usize] != v {
        let p = parent[v as usize];
        parent[v as usize] = parent[p as usize];
        v = p;
    }
    v
}

impl Alive {
    fn new(n: usize) -> Self {
        Alive { next: (0..=n as u32).collect(), prev: (0..=n as u32).collect() }
    }

    fn remove(&mut self, y: u32) {
        self.next[y as usize] = y + 1;
        self.prev[y as usize + 1] = y;
    }

    fn at_or_above(&mut self, v: u32) -> u32 {
        find(&mut self.next, v)
    }

    fn at_or_below(&mut self, v: u32) -> Option<u32> {
        match find(&mut self.prev, v + 1) {
            0 => None,
            p => Some(p - 1),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct State {
    cost: u32,
    // snapped highest chosen y; n means every remaining point lies below it
    f: u32,
    // snapped lowest waiting y, INF when nothing waits
    q: u32,
    trail: u32,
    took: bool,
}

/// Exact minimum dominating set of the permutation graph.
pub fn mds_permutation(p: &Permutation) -> DominatingSet {
    let n = p.len();
    if n == 0 {
        return DominatingSet::default();
    }
    let mut alive = Alive::new(n);
    // trail nodes: (vertex, parent)
    let mut nodes: Vec<(u32, u32)> = Vec::new();
    let mut front = vec![State { cost: 0, f: 0, q: INF, trail: NIL, took: false }];
    let mut cand: Vec<State> = Vec::new();
    let mut stair: Vec<(u32, u32)> = Vec::new();

    for (i, &y) in p.pi.iter().enumerate() {
        alive.remove(y);
        cand.clear();
        for s in &front {
            // take point i
            let f = alive.at_or_above(s.f.max(y));
            let q = if s.q != INF && s.q < y { alive.at_or_below(s.q) } else { Some(INF) };
            if let Some(q) = q {
                cand.push(State { cost: s.cost + 1, f, q, trail: s.trail, took: true });
            }
            // skip point i
            if y < s.f {
                let q = if s.q == INF { Some(INF) } else { alive.at_or_below(s.q) };
                if let Some(q) = q {
                    cand.push(State { cost: s.cost, f: s.f, q, trail: s.trail, took: false });
                }
            } else {
                let f = alive.at_or_above(s.f);
                let wait = if s.q != INF && s.q < y { s.q } else { y };
                if let Some(q) = alive.at_or_below(wait) {
                    cand.push(State { cost: s.cost, f, q, trail: s.trail, took: false });
                }
            }
        }
        cand.sort_unstable_by(|a, b| a.cost.cmp(&b.cost).then(b.f.cmp(&a.f)).then(b.q.cmp(&a.q)));
        front.clear();
        stair.clear();
        for c in &cand {
            let at = stair.partition_point(|&(f, _)| f < c.f);
            if at < stair.len() && stair[at].1 >= c.q {
                continue;
            }
            let end = stair.partition_point(|&(f, _)| f <= c.f);
            let mut start = end;
            while start > 0 && stair[start - 1].1 <= c.q {
                start -= 1;
            }
            stair.splice(start..end, std::iter::once((c.f, c.q)));
            let mut kept = *c;
            if kept.took {
                nodes.push((i as u32, kept.trail));
                kept.trail = (nodes.len() - 1) as u32;
                kept.took = false;
            }
            front.push(kept);
        }
    }
    let best = front.iter().filter(|s| s.q == INF).min_by_key(|s| s.cost).expect("choosing every point is feasible");
    let mut members = Vec::with_capacity(best.cost as usize);
    let mut t = best.trail;
    while t != NIL {
        let (v, parent) = nodes[t as usize];
        members.push(v as usize);
        t = parent;
    }
    DominatingSet::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_permutation, rng, two_line_frames};
    use crate::graph::{brute_force_mds, build_intersection_graph, exact_mds, is_dominating};
    use proptest::prelude::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(mds_permutation(&perm(&[2, 1])).len(), 1);
        assert_eq!(mds_permutation(&perm(&[1, 2, 3])).len(), 3);
        assert_eq!(mds_permutation(&perm(&[3, 2, 1])).len(), 1);
        assert_eq!(mds_permutation(&perm(&[1])).len(), 1);
        assert_eq!(mds_permutation(&Permutation::new(vec![]).unwrap()).len(), 0);
    }

    #[test]
    fn snapping_keeps_late_waiters_alive() {
        // a skipped point must stay coverable by a lower point further right
        let p = Permutation::new(vec![1, 3, 0, 4, 2, 5]).unwrap();
        assert_eq!(mds_permutation(&p).len(), 3);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn matches_brute_force() {
        let mut r = rng(41);
        for n in 1..=10usize {
            for _ in 0..150 {
                let p = Permutation::new(random_permutation(&mut r, n)).unwrap();
                let g = p.graph();
                let s = mds_permutation(&p);
                assert!(is_dominating(&g, s.members()), "{p:?}");
                assert_eq!(s.len(), brute_force_mds(&g).len(), "{p:?}");
            }
        }
    }

    #[test]
    fn larger_matches_branch_and_bound() {
        let mut r = rng(43);
        for _ in 0..40 {
            let p = Permutation::new(random_permutation(&mut r, 28)).unwrap();
            let g = p.graph();
            let s = mds_permutation(&p);
            assert!(is_dominating(&g, s.members()));
            assert_eq!(s.len(), exact_mds(&g).unwrap().len());
        }
    }

    #[test]
    fn frames_follow_the_permutation() {
        for seed in 0..30 {
            let inst = two_line_frames(&mut rng(seed), 9, 20, 5);
            let emb = lframes_to_permutation(&inst).unwrap();
            let g = build_intersection_graph(&inst);
            for i in 0..9 {
                for j in 0..9 {
                    if i != j {
                        let (a, b) = (emb.frame_at[i], emb.frame_at[j]);
                        assert_eq!(emb.permutation.adjacent(i, j), g.has_edge(a, b));
                    }
                }
            }
            let s = mds_two_line(&inst).unwrap();
            assert!(is_dominating(&g, s.members()));
        }
    }

    #[test]
    fn mirrored_quadrants_flip_line_one() {
        // reflect through the horizontal line: corners now lower-left
        for seed in 0..10 {
            let mut inst = two_line_frames(&mut rng(seed), 7, 20, 5);
            if let crate::instance::Objects::Frames(fs) = &mut inst.objects {
                for f in fs.iter_mut() {
                    f.corner.y = 10 - f.corner.y;
                    f.vspan = -f.vspan;
                }
            }
            let emb = lframes_to_permutation(&inst).unwrap();
            let g = build_intersection_graph(&inst);
            for i in 0..7 {
                for j in i + 1..7 {
                    assert_eq!(emb.permutation.adjacent(i, j), g.has_edge(emb.frame_at[i], emb.frame_at[j]));
                }
            }
        }
    }

    #[test]
    fn frame_missing_a_line() {
        let mut inst = GeomInstance::frames(vec![LFrame::new("a", 0, 10, 3, -2).unwrap()]);
        inst.vertical = Some(5);
        inst.horizontal = Some(5);
        assert_eq!(lframes_to_permutation(&inst), Err(PermutationError::NotTwoLineCrossing("a".into())));
    }

    #[test]
    fn tied_crossings() {
        let mut inst = GeomInstance::frames(vec![
            LFrame::new("a", 0, 10, 8, -8).unwrap(),
            LFrame::new("b", 1, 10, 8, -8).unwrap(),
        ]);
        inst.vertical = Some(5);
        inst.horizontal = Some(5);
        assert!(matches!(lframes_to_permutation(&inst), Err(PermutationError::DegenerateOrder(..))));
    }

    proptest! {
        #[test]
        fn always_dominating_and_no_worse_than_greedy(seed in any::<u64>(), n in 1usize..60) {
            let p = Permutation::new(random_permutation(&mut rng(seed), n)).unwrap();
            let g = p.graph();
            let s = mds_permutation(&p);
            prop_assert!(is_dominating(&g, s.members()));
            prop_assert!(s.len() <= crate::graph::greedy_mds(&g).len());
        }
    }
}
