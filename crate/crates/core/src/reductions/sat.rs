//! Planar monotone 3SAT drawings and their equal-arm L-frame realisation.
//!
//! Variables sit on the x-axis in order. Positive clauses are drawn above the
//! axis and negative ones below, each as a horizontal bar at a height given by
//! its nesting depth with vertical legs down (or up) to its variables.
//!
//! Before the final rotation every frame has an endpoint on the x-axis:
//! - clause frames keep the bar and the leftmost leg, shifted slightly left;
//! - each variable gets one frame per side whose vertical arm is taller than
//!   every bar it must reach, so it meets exactly the clauses that use it;
//! - a unit auxiliary frame touches only the two frames of its variable.
//!
//! The layout is then rotated a quarter turn clockwise so the x-axis becomes
//! the vertical line `x = 0`.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::geometry::{lframe_intersect, LFrame, Point};
use crate::graph::{build_intersection_graph, IntersectionGraph};
use crate::instance::GeomInstance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneClause {
    pub positive: bool,
    /// Variable indices, strictly increasing.
    pub vars: Vec<usize>,
    /// Nesting level of the bar, 1 is closest to the axis.
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneDrawing {
    pub variables: usize,
    pub clauses: Vec<MonotoneClause>,
}

impl MonotoneDrawing {
    /// Check the combinatorial drawing: clause shapes, and that no leg crosses a bar.
    pub fn validate(&self) -> Result<(), ReductionError> {
        let bad = |m: String| Err(ReductionError::InvalidDrawing(m));
        if self.variables == 0 {
            return bad("no variables".into());
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if c.vars.is_empty() || c.vars.len() > 3 {
                return bad(format!("clause {j} has {} literals", c.vars.len()));
            }
            if c.vars.windows(2).any(|w| w[0] >= w[1]) || c.vars.iter().any(|&v| v >= self.variables) {
                return bad(format!("clause {j} variables must be increasing and in range"));
            }
            if c.depth == 0 {
                return bad(format!("clause {j} has depth 0"));
            }
        }
        for (j, a) in self.clauses.iter().enumerate() {
            for (k, b) in self.clauses.iter().enumerate() {
                if j == k || a.positive != b.positive {
                    continue;
                }
                let (lb, rb) = (b.vars[0], *b.vars.last().unwrap());
                let inside = a.vars.iter().any(|&v| lb < v && v < rb);
                if inside && a.depth >= b.depth {
                    return bad(format!("a leg of clause {j} crosses the bar of clause {k}"));
                }
                let (la, ra) = (a.vars[0], *a.vars.last().unwrap());
                if j < k && a.depth == b.depth && la < rb && lb < ra {
                    return bad(format!("clauses {j} and {k} overlap at the same depth"));
                }
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.vars.iter().any(|&v| assignment[v] == c.positive))
    }

    pub fn unsatisfied(&self, assignment: &[bool]) -> usize {
        self.clauses.iter().filter(|c| !c.vars.iter().any(|&v| assignment[v] == c.positive)).count()
    }

    /// Fewest unsatisfied clauses over all assignments, with a witness.
    pub fn brute_force(&self) -> (usize, Vec<bool>) {
        let n = self.variables;
        assert!(n <= 24);
        let mut best = (usize::MAX, vec![false; n]);
        for mask in 0u32..(1 << n) {
            let a: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
            let u = self.unsatisfied(&a);
            if u < best.0 {
                best = (u, a);
                if u == 0 {
                    break;
                }
            }
        }
        best
    }
}

/// Which frame plays which part in the realisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatLayout {
    /// Frame index of the true-side and false-side frame of each variable.
    pub literal: Vec<(usize, usize)>,
    pub auxiliary: Vec<usize>,
    pub clause: Vec<usize>,
}

// Quarter turn clockwise about the origin.
fn rotate(f: &LFrame) -> LFrame {
    LFrame { id: f.id.clone(), corner: Point::new(f.corner.y, -f.corner.x), hspan: f.vspan, vspan: -f.hspan }
}

// Frame hanging off the axis: corner at height `h` on `side`, vertical arm
// back to the axis, horizontal arm of the same length to the right.
fn axis_frame(id: String, x: i64, h: i64, positive: bool) -> LFrame {
    if positive {
        LFrame { id, corner: Point::new(x, h), hspan: h, vspan: -h }
    } else {
        LFrame { id, corner: Point::new(x, -h), hspan: h, vspan: h }
    }
}

pub fn monotone3sat_to_lframes(drawing: &MonotoneDrawing) -> Result<(GeomInstance, SatLayout), ReductionError> {
    drawing.validate()?;
    let n = drawing.variables;
    let max_depth = drawing.clauses.iter().map(|c| c.depth as i64).max().unwrap_or(0);
    let spacing = 2 * (max_depth + 2);
    let col = |i: usize| (i as i64 + 1) * spacing;

    let clause_frames: Vec<LFrame> = drawing
        .clauses
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let left = col(c.vars[0]) - 2 * c.depth as i64;
            let height = col(*c.vars.last().unwrap()) - left;
            axis_frame(format!("c{}", j + 1), left, height, c.positive)
        })
        .collect();

    let mut frames = Vec::with_capacity(3 * n + drawing.clauses.len());
    let mut layout = SatLayout { literal: Vec::new(), auxiliary: Vec::new(), clause: Vec::new() };
    for i in 0..n {
        let mut pair = [0usize; 2];
        for (slot, positive) in [(0, true), (1, false)] {
            let mut height = drawing
                .clauses
                .iter()
                .zip(&clause_frames)
                .filter(|(c, _)| c.positive == positive && c.vars.contains(&i))
                .map(|(_, f)| f.hspan + 1)
                .max()
                .unwrap_or(3);
            // lift the frame over any bar it reaches without belonging to it
            loop {
                let f = axis_frame(String::new(), col(i), height, positive);
                let clash = drawing
                    .clauses
                    .iter()
                    .zip(&clause_frames)
                    .filter(|(c, cf)| c.positive == positive && !c.vars.contains(&i) && cf.hspan > height)
                    .find(|(_, cf)| lframe_intersect(&f, cf));
                match clash {
                    Some((_, cf)) => height = cf.hspan + 1,
                    None => break,
                }
            }
            let tag = if positive { 't' } else { 'f' };
            pair[slot] = frames.len();
            frames.push(axis_frame(format!("{tag}{}", i + 1), col(i), height, positive));
        }
        layout.literal.push((pair[0], pair[1]));
        layout.auxiliary.push(frames.len());
        frames.push(axis_frame(format!("a{}", i + 1), col(i), 1, true));
    }
    for f in clause_frames {
        layout.clause.push(frames.len());
        frames.push(f);
    }

    let frames: Vec<LFrame> = frames.iter().map(rotate).collect();
    let mut inst = GeomInstance::frames(frames);
    inst.vertical = Some(0);
    check_layout(drawing, &build_intersection_graph(&inst), &layout)?;
    Ok((inst, layout))
}

/// Literal frames meet exactly the clauses using that literal, and each
/// auxiliary frame meets only its own variable's two frames.
pub fn check_layout(
    drawing: &MonotoneDrawing,
    g: &IntersectionGraph,
    layout: &SatLayout,
) -> Result<(), ReductionError> {
    for (i, &(t, f)) in layout.literal.iter().enumerate() {
        for (j, c) in drawing.clauses.iter().enumerate() {
            let cf = layout.clause[j];
            let uses = c.vars.contains(&i);
            if g.has_edge(t, cf) != (uses && c.positive) || g.has_edge(f, cf) != (uses && !c.positive) {
                return Err(ReductionError::ConstructionFailed { variable: i, clause: j });
            }
        }
        let mut expect = vec![t, f];
        expect.sort_unstable();
        if g.neighbors(layout.auxiliary[i]) != expect.as_slice() || !g.has_edge(t, f) {
            return Err(ReductionError::ConstructionFailed { variable: i, clause: usize::MAX });
        }
    }
    Ok(())
}

/// `(x1) and (not x1)`.
pub fn golden_unsatisfiable() -> MonotoneDrawing {
    MonotoneDrawing {
        variables: 1,
        clauses: vec![
            MonotoneClause { positive: true, vars: vec![0], depth: 1 },
            MonotoneClause { positive: false, vars: vec![0], depth: 1 },
        ],
    }
}
