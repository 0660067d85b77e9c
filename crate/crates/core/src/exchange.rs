//! Exchange graph between two dominating sets of one-sided anchored frames.
//!
//! Blue vertices come from one solution, red from the other. Every vertex
//! `u` of the intersection graph that is not already dominated by the common
//! part picks one blue-red pair from its closed neighbourhood, the one whose
//! corners are closest, and becomes a witness of that pair. The resulting arcs
//! are drawn as half-circles on the diagonal and the drawing is checked for
//! crossings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::*;
use crate::graph::{is_dominating, IntersectionGraph};
use crate::instance::GeomInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExchangeError {
    #[error("blue and red sets share vertex {0}")]
    NotDisjoint(usize),
    #[error("vertex {0} has no blue or no red neighbour")]
    Undominated(usize),
    #[error("instance is not one-sided diagonal-anchored")]
    NotOneSided,
    #[error("two arc endpoints share the diagonal position x = {0}")]
    DegeneratePosition(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcClass {
    Top,
    Down,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub blue: usize,
    pub red: usize,
    pub witnesses: Vec<usize>,
    pub class: ArcClass,
    /// The witness whose position fixes how the arc is drawn.
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeGraph {
    pub side: Side,
    pub blue: Vec<usize>,
    pub red: Vec<usize>,
    pub common: Vec<usize>,
    pub arcs: Vec<Arc>,
}

impl ExchangeGraph {
    pub fn vertex_count(&self) -> usize {
        self.blue.len() + self.red.len()
    }

    /// Red neighbours of a set of blue vertices.
    pub fn red_neighbors(&self, blue: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = self.arcs.iter().filter(|a| blue.contains(&a.blue)).map(|a| a.red).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Euler bound for a simple planar bipartite graph on the blue and red vertices.
    pub fn planar_edge_bound(&self) -> usize {
        (2 * self.vertex_count()).saturating_sub(4)
    }
}

fn frames_of(inst: &GeomInstance) -> Result<(&[LFrame], Side), ExchangeError> {
    let frames = inst.frame_list().ok_or(ExchangeError::NotOneSided)?;
    let diag = inst.diagonal.ok_or(ExchangeError::NotOneSided)?;
    let mut side = None;
    for f in frames {
        let s = anchored_side(f, &diag).ok_or(ExchangeError::NotOneSided)?;
        if *side.get_or_insert(s) != s {
            return Err(ExchangeError::NotOneSided);
        }
    }
    Ok((frames, side.unwrap_or(Side::Above)))
}

/// Closest blue-red pair around `u` by squared corner distance, ties broken by
/// `(blue, red)` ids. `None` if `u` sees no blue or no red vertex.
pub fn choose_edge_for_witness(
    u: usize,
    blue: &[usize],
    red: &[usize],
    g: &IntersectionGraph,
    inst: &GeomInstance,
) -> Option<(usize, usize)> {
    let frames = inst.frame_list()?;
    let near = |v: usize| v == u || g.has_edge(u, v);
    let bs: Vec<usize> = blue.iter().copied().filter(|&b| near(b)).collect();
    let rs: Vec<usize> = red.iter().copied().filter(|&r| near(r)).collect();
    let mut best: Option<(i64, usize, usize)> = None;
    for &b in &bs {
        for &r in &rs {
            let key = (corner_dist2(&frames[b], &frames[r]), b, r);
            if best.is_none_or(|cur| key < cur) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, b, r)| (b, r))
}

// Position along the diagonal; corners all lie on it so x alone orders them.
fn pos(frames: &[LFrame], v: usize) -> i64 {
    frames[v].corner.x
}

/// `a` reaches `u` from the left (above the diagonal) or from below (beneath it).
/// For frames on the same side these are the only two ways to meet.
fn from_left(frames: &[LFrame], side: Side, a: usize, u: usize) -> bool {
    match side {
        Side::Above => pos(frames, a) <= pos(frames, u),
        Side::Below => pos(frames, a) >= pos(frames, u),
    }
}

fn from_below(frames: &[LFrame], side: Side, a: usize, u: usize) -> bool {
    match side {
        Side::Above => pos(frames, a) >= pos(frames, u),
        Side::Below => pos(frames, a) <= pos(frames, u),
    }
}

fn classify(frames: &[LFrame], side: Side, blue: usize, red: usize, witnesses: &[usize]) -> (ArcClass, usize) {
    let leftmost = |ws: &mut dyn Iterator<Item = usize>| ws.min_by_key(|&w| (pos(frames, w), w));
    let top = leftmost(
        &mut witnesses.iter().copied().filter(|&w| from_left(frames, side, blue, w) && from_left(frames, side, red, w)),
    );
    if let Some(w) = top {
        return (ArcClass::Top, w);
    }
    let down = leftmost(
        &mut witnesses
            .iter()
            .copied()
            .filter(|&w| from_below(frames, side, blue, w) && from_below(frames, side, red, w)),
    );
    if let Some(w) = down {
        return (ArcClass::Down, w);
    }
    (ArcClass::Mixed, leftmost(&mut witnesses.iter().copied()).expect("arc has a witness"))
}

/// Build the exchange graph for disjoint `blue` and `red`, both dominating.
pub fn build_exchange_graph(
    inst: &GeomInstance,
    g: &IntersectionGraph,
    blue: &[usize],
    red: &[usize],
) -> Result<ExchangeGraph, ExchangeError> {
    if let Some(&v) = blue.iter().find(|v| red.contains(v)) {
        return Err(ExchangeError::NotDisjoint(v));
    }
    build_with_common(inst, g, blue, red, &[])
}

/// Exchange graph between two arbitrary dominating sets. Shared vertices are
/// moved to a common part; vertices they dominate need no witness arc.
pub fn exchange_graph_for_solutions(
    inst: &GeomInstance,
    g: &IntersectionGraph,
    local: &[usize],
    optimal: &[usize],
) -> Result<ExchangeGraph, ExchangeError> {
    let common: Vec<usize> = local.iter().copied().filter(|v| optimal.contains(v)).collect();
    let blue: Vec<usize> = local.iter().copied().filter(|v| !common.contains(v)).collect();
    let red: Vec<usize> = optimal.iter().copied().filter(|v| !common.contains(v)).collect();
    build_with_common(inst, g, &blue, &red, &common)
}

fn build_with_common(
    inst: &GeomInstance,
    g: &IntersectionGraph,
    blue: &[usize],
    red: &[usize],
    common: &[usize],
) -> Result<ExchangeGraph, ExchangeError> {
    let (frames, side) = frames_of(inst)?;
    let mut blue = blue.to_vec();
    let mut red = red.to_vec();
    let mut common = common.to_vec();
    for s in [&mut blue, &mut red, &mut common] {
        s.sort_unstable();
        s.dedup();
    }
    let mut by_pair: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for u in 0..g.n() {
        if common.iter().any(|&c| c == u || g.has_edge(u, c)) {
            continue;
        }
        let (b, r) = choose_edge_for_witness(u, &blue, &red, g, inst).ok_or(ExchangeError::Undominated(u))?;
        by_pair.entry((b, r)).or_default().push(u);
    }
    let arcs = by_pair
        .into_iter()
        .map(|((b, r), witnesses)| {
            let (class, witness) = classify(frames, side, b, r, &witnesses);
            Arc { blue: b, red: r, witnesses, class, witness }
        })
        .collect();
    Ok(ExchangeGraph { side, blue, red, common, arcs })
}

/// Every vertex not dominated by the common part has an arc with both ends in
/// its closed neighbourhood.
pub fn check_local_exchange(h: &ExchangeGraph, g: &IntersectionGraph) -> bool {
    let near = |u: usize, v: usize| u == v || g.has_edge(u, v);
    (0..g.n()).all(|u| h.common.iter().any(|&c| near(u, c)) || h.arcs.iter().any(|a| near(u, a.blue) && near(u, a.red)))
}

/// Swap a subset of the blue vertices for their red neighbours and test
/// whether the result still dominates.
pub fn exchange_dominates(h: &ExchangeGraph, g: &IntersectionGraph, swapped: &[usize]) -> bool {
    let mut set: Vec<usize> = h.blue.iter().copied().filter(|b| !swapped.contains(b)).collect();
    set.extend(h.red_neighbors(swapped));
    set.extend(h.common.iter().copied());
    is_dominating(g, &set)
}

/// One half-circle of a drawn arc, given by its two diagonal positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcPiece {
    pub arc: usize,
    pub lo: i64,
    pub hi: i64,
    /// Which side of the diagonal the half-circle bulges into.
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDrawing {
    pub diagonal: Diagonal,
    pub pieces: Vec<ArcPiece>,
    /// For each mixed arc, where its two halves meet on the diagonal.
    pub junctions: Vec<(usize, i64)>,
}

/// Draw every arc as one or two half-circles whose endpoints are frame corners
/// on the diagonal. Top arcs bulge to the frame side, down arcs to the other
/// side, mixed arcs switch sides at their designated witness.
pub fn draw_arcs(h: &ExchangeGraph, inst: &GeomInstance) -> Result<ArcDrawing, ExchangeError> {
    let (frames, side) = frames_of(inst)?;
    let diagonal = inst.diagonal.ok_or(ExchangeError::NotOneSided)?;
    let mut endpoints: Vec<i64> = h.blue.iter().chain(h.red.iter()).map(|&v| pos(frames, v)).collect();
    endpoints.sort_unstable();
    if let Some(w) = endpoints.windows(2).find(|w| w[0] == w[1]) {
        return Err(ExchangeError::DegeneratePosition(w[0]));
    }
    let other = match side {
        Side::Above => Side::Below,
        Side::Below => Side::Above,
    };
    let mut pieces = Vec::new();
    let mut junctions = Vec::new();
    for (i, a) in h.arcs.iter().enumerate() {
        let (pb, pr) = (pos(frames, a.blue), pos(frames, a.red));
        match a.class {
            ArcClass::Top => pieces.push(ArcPiece { arc: i, lo: pb.min(pr), hi: pb.max(pr), side }),
            ArcClass::Down => pieces.push(ArcPiece { arc: i, lo: pb.min(pr), hi: pb.max(pr), side: other }),
            ArcClass::Mixed => {
                let w = pos(frames, a.witness);
                if w == pb || w == pr || endpoints.binary_search(&w).is_ok() {
                    return Err(ExchangeError::DegeneratePosition(w));
                }
                // the endpoint reaching the witness from the left gets the
                // frame-side half, the other endpoint the opposite half
                let (left, right) = if from_left(frames, side, a.blue, a.witness) { (pb, pr) } else { (pr, pb) };
                pieces.push(ArcPiece { arc: i, lo: left.min(w), hi: left.max(w), side });
                pieces.push(ArcPiece { arc: i, lo: right.min(w), hi: right.max(w), side: other });
                junctions.push((i, w));
            }
        }
    }
    Ok(ArcDrawing { diagonal, pieces, junctions })
}

/// Pairs of pieces from different arcs that cross: same side and strictly
/// interleaved endpoints, or identical spans. Two mixed arcs switching sides at
/// the same point also count.
pub fn count_crossings(d: &ArcDrawing) -> usize {
    let mut crossings = 0;
    for (i, p) in d.pieces.iter().enumerate() {
        for q in &d.pieces[i + 1..] {
            if p.arc == q.arc || p.side != q.side {
                continue;
            }
            let interleave = (p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) || (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi);
            if interleave || (p.lo == q.lo && p.hi == q.hi) {
                crossings += 1;
            }
        }
    }
    for (i, &(a, x)) in d.junctions.iter().enumerate() {
        crossings += d.junctions[i + 1..].iter().filter(|&&(b, y)| a != b && x == y).count();
    }
    crossings
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_intersection_graph;

    fn anchored(id: &str, x: i64, h: i64, v: i64) -> LFrame {
        LFrame::new(id, x, -x, h, v).unwrap()
    }

    fn inst(frames: Vec<LFrame>) -> GeomInstance {
        GeomInstance::frames(frames).with_diagonal(0)
    }

    // Five blue/red frames and a long witness `x` at the right that all of them reach.
    fn fan_with_witness() -> GeomInstance {
        inst(vec![
            anchored("a", 0, 12, 1),
            anchored("b", 2, 10, 1),
            anchored("c", 4, 8, 1),
            anchored("d", 7, 5, 1),
            anchored("e", 8, 4, 1),
            anchored("x", 11, 1, 12),
        ])
    }

    #[test]
    fn closest_pair_wins() {
        let i = fan_with_witness();
        let g = build_intersection_graph(&i);
        assert_eq!(choose_edge_for_witness(5, &[0, 3], &[1, 2, 4], &g, &i), Some((3, 4)));
    }

    #[test]
    fn ties_go_to_smallest_ids() {
        let i = inst(vec![
            anchored("b", 0, 9, 9),
            anchored("r1", 2, 9, 9),
            anchored("r2", -2, 9, 9),
            anchored("u", 1, 1, 9),
        ]);
        let g = build_intersection_graph(&i);
        assert_eq!(choose_edge_for_witness(0, &[0], &[1, 2], &g, &i), Some((0, 1)));
    }

    #[test]
    fn classification_cases() {
        // witness at 5; blue/red positions chosen per case
        let frames =
            |b: i64, r: i64| inst(vec![anchored("b", b, 9, 9), anchored("r", r, 9, 9), anchored("w", 5, 9, 9)]);
        let i = frames(3, 4);
        assert_eq!(classify(i.frame_list().unwrap(), Side::Above, 0, 1, &[2]), (ArcClass::Top, 2));
        let i = frames(6, 7);
        assert_eq!(classify(i.frame_list().unwrap(), Side::Above, 0, 1, &[2]), (ArcClass::Down, 2));
        let i = frames(3, 7);
        assert_eq!(classify(i.frame_list().unwrap(), Side::Above, 0, 1, &[2]), (ArcClass::Mixed, 2));
    }

    #[test]
    fn overlapping_sets_rejected() {
        let i = fan_with_witness();
        let g = build_intersection_graph(&i);
        assert_eq!(build_exchange_graph(&i, &g, &[0, 1], &[1, 2]), Err(ExchangeError::NotDisjoint(1)));
    }

    #[test]
    fn two_sided_instance_rejected() {
        let i = inst(vec![anchored("a", 0, 1, 1), LFrame::new("b", 2, -2, -1, -1).unwrap()]);
        let g = build_intersection_graph(&i);
        assert_eq!(build_exchange_graph(&i, &g, &[0], &[1]), Err(ExchangeError::NotOneSided));
    }

    #[test]
    fn nested_and_crossing_pieces() {
        let d = |p: Vec<(usize, i64, i64)>| ArcDrawing {
            diagonal: Diagonal::new(0),
            pieces: p.into_iter().map(|(arc, lo, hi)| ArcPiece { arc, lo, hi, side: Side::Above }).collect(),
            junctions: vec![],
        };
        assert_eq!(count_crossings(&d(vec![(0, 0, 10), (1, 2, 4)])), 0);
        assert_eq!(count_crossings(&d(vec![(0, 0, 10), (1, 5, 12)])), 1);
        assert_eq!(count_crossings(&d(vec![(0, 0, 10), (1, 10, 12)])), 0);
    }

    #[test]
    fn exchange_respects_local_condition() {
        let i = fan_with_witness();
        let g = build_intersection_graph(&i);
        let blue = [0, 3];
        let red = [1, 2, 4];
        if is_dominating(&g, &blue) && is_dominating(&g, &red) {
            let h = build_exchange_graph(&i, &g, &blue, &red).unwrap();
            assert!(check_local_exchange(&h, &g));
        }
    }
}
