//! Seeded instance generators. Every generator takes an explicit RNG so the
//! same seed always yields the same instance.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::geometry::*;
use crate::graph::IntersectionGraph;
use crate::instance::GeomInstance;
use crate::reductions::{BipartiteGraph, ChordDiagram, MonotoneClause, MonotoneDrawing};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn anchored_frame(id: String, side: Side, x: i64, d: i64, h: i64, v: i64) -> LFrame {
    let (h, v) = match side {
        Side::Above => (h, v),
        Side::Below => (-h, -v),
    };
    LFrame { id, corner: Point::new(x, d - x), hspan: h, vspan: v }
}

fn distinct_positions(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Vec<i64> {
    let mut all: Vec<i64> = (0..span.max(n as i64)).collect();
    all.shuffle(rng);
    all.truncate(n);
    all.sort_unstable();
    all
}

/// `n` frames anchored on one side of `x + y = d`, with pairwise distinct anchors.
pub fn anchored_one_sided(rng: &mut ChaCha8Rng, n: usize, side: Side, d: i64) -> GeomInstance {
    let xs = distinct_positions(rng, n, 2 * n as i64);
    let reach = (n as i64).max(2);
    let frames = xs
        .into_iter()
        .enumerate()
        .map(|(i, x)| anchored_frame(format!("f{i}"), side, x, d, rng.gen_range(1..=reach), rng.gen_range(1..=reach)))
        .collect();
    GeomInstance::frames(frames).with_diagonal(d)
}

/// Frames anchored on both sides; anchors are distinct within a side but may
/// coincide across sides.
pub fn anchored_two_sided(rng: &mut ChaCha8Rng, n: usize, d: i64) -> GeomInstance {
    let above = rng.gen_range(0..=n);
    let mut frames = Vec::with_capacity(n);
    let reach = (n as i64).max(2);
    for (side, count) in [(Side::Above, above), (Side::Below, n - above)] {
        for x in distinct_positions(rng, count, 2 * n as i64) {
            let id = format!("f{}", frames.len());
            frames.push(anchored_frame(id, side, x, d, rng.gen_range(1..=reach), rng.gen_range(1..=reach)));
        }
    }
    GeomInstance::frames(frames).with_diagonal(d)
}

/// Rectangles touching `x + y = d` in one corner, on either side. Anchors are
/// drawn from a small range so shared anchors occur.
pub fn anchored_rects(rng: &mut ChaCha8Rng, n: usize, d: i64) -> GeomInstance {
    let rects = (0..n)
        .map(|i| {
            let x = rng.gen_range(0..(n as i64 + 2));
            let a = Point::new(x, d - x);
            let w = rng.gen_range(1..=n as i64 + 1);
            let h = rng.gen_range(1..=n as i64 + 1);
            let (lo, hi) =
                if rng.gen_bool(0.5) { (a, Point::new(a.x + w, a.y + h)) } else { (Point::new(a.x - w, a.y - h), a) };
            Rect { id: format!("r{i}"), lo, hi }
        })
        .collect();
    GeomInstance::rects(rects).with_diagonal(d)
}

/// Frames crossing both `x = v` and `y = h` with their corners up and to the
/// left of the crossing, all corner coordinates distinct.
pub fn two_line_frames(rng: &mut ChaCha8Rng, n: usize, v: i64, h: i64) -> GeomInstance {
    let mut xs: Vec<i64> = (1..=n as i64).collect();
    let mut ys: Vec<i64> = (1..=n as i64).collect();
    xs.shuffle(rng);
    ys.shuffle(rng);
    let frames = (0..n)
        .map(|i| {
            let cx = v - xs[i];
            let cy = h + ys[i];
            let hs = (v - cx) + rng.gen_range(0..3);
            let vs = -((cy - h) + rng.gen_range(0..3));
            LFrame { id: format!("f{i}"), corner: Point::new(cx, cy), hspan: hs, vspan: vs }
        })
        .collect();
    let mut inst = GeomInstance::frames(frames);
    inst.vertical = Some(v);
    inst.horizontal = Some(h);
    inst
}

/// Erdos-Renyi graph.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> IntersectionGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    IntersectionGraph::from_edges(n, &edges)
}

/// Random permutation of `0..n`.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(rng);
    p
}

pub fn chord_diagram(rng: &mut ChaCha8Rng, n: usize) -> ChordDiagram {
    let mut order: Vec<usize> = (0..n).flat_map(|c| [c, c]).collect();
    order.shuffle(rng);
    ChordDiagram { order }
}

pub fn random_bipartite(rng: &mut ChaCha8Rng, left: usize, right: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for l in 0..left {
        for r in 0..right {
            if rng.gen_bool(p) {
                edges.push((l, r));
            }
        }
    }
    BipartiteGraph { left, right, edges }
}

/// Random planar monotone drawing: runs of short clauses next to the axis on
/// each side, then a few wider clauses bridging them one level up.
pub fn monotone_drawing(rng: &mut ChaCha8Rng, n: usize) -> MonotoneDrawing {
    let mut d = MonotoneDrawing { variables: n, clauses: Vec::new() };
    for positive in [true, false] {
        let mut windows: Vec<(usize, usize)> = Vec::new();
        let mut s = rng.gen_range(0..2usize);
        while s + 1 < n {
            let len = rng.gen_range(2..=3usize).min(n - s);
            let e = s + len - 1;
            if rng.gen_bool(0.8) {
                let vars = if len == 3 && rng.gen_bool(0.4) { vec![s, e] } else { (s..=e).collect() };
                d.clauses.push(MonotoneClause { positive, vars, depth: 1 });
                windows.push((s, e));
            }
            s = if rng.gen_bool(0.6) { e } else { e + 1 };
        }
        if n >= 1 && rng.gen_bool(0.3) {
            let v = rng.gen_range(0..n);
            try_push(&mut d, MonotoneClause { positive, vars: vec![v], depth: 1 });
        }
        for depth in 2..=3u32 {
            if windows.len() < 2 || !rng.gen_bool(0.7) {
                break;
            }
            let a = rng.gen_range(0..windows.len() - 1);
            let b = rng.gen_range(a + 1..windows.len());
            let (l, r) = (windows[a].0, windows[b].1);
            let mut vars = vec![l, r];
            if windows[a].1 == windows.get(a + 1).map_or(usize::MAX, |w| w.0) && windows[a].1 < r && rng.gen_bool(0.5) {
                vars.insert(1, windows[a].1);
            }
            if try_push(&mut d, MonotoneClause { positive, vars, depth }) {
                windows = vec![(l, r)];
            }
        }
    }
    d
}

fn try_push(d: &mut MonotoneDrawing, c: MonotoneClause) -> bool {
    d.clauses.push(c);
    if d.validate().is_err() {
        d.clauses.pop();
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        let a = anchored_two_sided(&mut rng(9), 12, 3);
        let b = anchored_two_sided(&mut rng(9), 12, 3);
        assert_eq!(a, b);
        assert_ne!(a, anchored_two_sided(&mut rng(10), 12, 3));
    }

    #[test]
    fn one_sided_frames_are_anchored() {
        let inst = anchored_one_sided(&mut rng(1), 10, Side::Below, 5);
        let d = inst.diagonal.unwrap();
        assert!(inst.frame_list().unwrap().iter().all(|f| is_anchored(f, &d, Side::Below)));
    }

    #[test]
    fn rects_convert() {
        let inst = anchored_rects(&mut rng(2), 10, -4);
        assert!(inst.rects_to_frames().is_ok());
    }

    #[test]
    fn monotone_drawings_are_valid_and_realisable() {
        for seed in 0..300 {
            let d = monotone_drawing(&mut rng(seed), 1 + seed as usize % 9);
            assert!(d.validate().is_ok(), "{d:?}");
            assert!(crate::reductions::monotone3sat_to_lframes(&d).is_ok(), "{d:?}");
        }
    }

    #[test]
    fn chord_diagrams_and_bipartite_graphs_are_well_formed() {
        for seed in 0..50 {
            let c = chord_diagram(&mut rng(seed), 6);
            assert!(ChordDiagram::new(c.order.clone()).is_ok());
            let b = random_bipartite(&mut rng(seed), 3, 4, 0.5);
            assert!(BipartiteGraph::new(b.left, b.right, b.edges.clone()).is_ok_and(|x| x == b));
        }
    }
}
