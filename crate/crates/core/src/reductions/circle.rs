//! Chord diagrams and their two L-frame realisations.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::geometry::{LFrame, Point};
use crate::graph::IntersectionGraph;
use crate::instance::GeomInstance;

/// Chord labels in the order their endpoints appear around the circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDiagram {
    pub order: Vec<usize>,
}

impl ChordDiagram {
    pub fn new(order: Vec<usize>) -> Result<Self, ReductionError> {
        if !order.len().is_multiple_of(2) {
            return Err(ReductionError::InvalidSource("odd number of chord endpoints".into()));
        }
        let n = order.len() / 2;
        let mut count = vec![0u8; n];
        for &c in &order {
            if c >= n {
                return Err(ReductionError::InvalidSource(format!("chord label {c} out of range")));
            }
            count[c] += 1;
        }
        if count.iter().any(|&k| k != 2) {
            return Err(ReductionError::InvalidSource("every chord needs exactly two endpoints".into()));
        }
        Ok(ChordDiagram { order })
    }

    pub fn chords(&self) -> usize {
        self.order.len() / 2
    }

    /// One-based endpoint positions `(first, second)` of each chord.
    pub fn endpoints(&self) -> Vec<(i64, i64)> {
        let mut ends = vec![(0i64, 0i64); self.chords()];
        for (p, &c) in self.order.iter().enumerate() {
            let p = p as i64 + 1;
            if ends[c].0 == 0 {
                ends[c].0 = p;
            } else {
                ends[c].1 = p;
            }
        }
        ends
    }

    pub fn chords_cross(&self, a: usize, b: usize) -> bool {
        let e = self.endpoints();
        let ((a0, a1), (b0, b1)) = (e[a], e[b]);
        (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
    }

    pub fn circle_graph(&self) -> IntersectionGraph {
        let n = self.chords();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.chords_cross(a, b) {
                    edges.push((a, b));
                }
            }
        }
        IntersectionGraph::from_edges(n, &edges).with_labels((0..n).map(|c| format!("c{c}")).collect())
    }
}

/// Endpoint `p` goes to `(2n + 1 - p, p)` on `x + y = 2n + 1`; each chord becomes
/// the frame below the line joining its two endpoints.
pub fn circle_to_diagonal(c: &ChordDiagram) -> GeomInstance {
    let n = c.chords() as i64;
    let d = 2 * n + 1;
    let frames = c
        .endpoints()
        .into_iter()
        .enumerate()
        .map(|(k, (p, q))| {
            // endpoints (d - p, p) and (d - q, q) with p < q
            LFrame { id: format!("c{k}"), corner: Point::new(d - q, p), hspan: q - p, vspan: q - p }
        })
        .collect();
    GeomInstance::frames(frames).with_diagonal(d)
}

/// Endpoints go to a descending staircase `(2p, 2(2n + 1 - p))`; each chord
/// becomes the frame under the staircase joining its endpoints, with the
/// horizontal arm stretched right to the line `x = 2(2n + 1)`.
pub fn circle_to_vertical(c: &ChordDiagram) -> GeomInstance {
    let n = c.chords() as i64;
    let line = 2 * (2 * n + 1);
    let frames = c
        .endpoints()
        .into_iter()
        .enumerate()
        .map(|(k, (p, q))| LFrame {
            id: format!("c{k}"),
            corner: Point::new(2 * p, 2 * (2 * n + 1 - q)),
            hspan: line - 2 * p,
            vspan: 2 * (q - p),
        })
        .collect();
    let mut inst = GeomInstance::frames(frames);
    inst.vertical = Some(line);
    inst
}
