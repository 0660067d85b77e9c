//! Integer L-frames, rectangles and the exact predicates used everywhere else.
//!
//! An L-frame is stored as its corner plus two signed arm lengths. The
//! horizontal arm runs from the corner to `(x + hspan, y)` and the vertical
//! arm from the corner to `(x, y + vspan)`. All predicates are exact over `i64`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("frame `{0}` has a zero-length arm")]
    ZeroSpan(String),
    #[error("rectangle `{0}` is degenerate (lo must be strictly below-left of hi)")]
    DegenerateRect(String),
    #[error("rectangle `{0}` does not touch the diagonal in exactly one corner")]
    NotAnchored(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Which side of the diagonal a frame or rectangle hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Above,
    Below,
}

/// Intersection model: ordinary point intersection, or sharing a unit grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Model {
    #[default]
    Standard,
    Edge,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Standard => "standard",
            Model::Edge => "edge",
        }
    }
}

impl std::str::FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" => Ok(Model::Standard),
            "edge" | "epg" => Ok(Model::Edge),
            other => Err(format!("unknown model `{other}`")),
        }
    }
}

/// The line `x + y = d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagonal {
    pub d: i64,
}

impl Diagonal {
    pub const fn new(d: i64) -> Self {
        Diagonal { d }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x + p.y == self.d
    }

    /// Sign of `p` relative to the line: positive above, negative below.
    pub fn offset(&self, p: Point) -> i64 {
        p.x + p.y - self.d
    }
}

/// Closed axis-parallel segment, normalised so that `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Horizontal { y: i64, lo: i64, hi: i64 },
    Vertical { x: i64, lo: i64, hi: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LFrame {
    pub id: String,
    pub corner: Point,
    pub hspan: i64,
    pub vspan: i64,
}

impl LFrame {
    pub fn new(id: impl Into<String>, x: i64, y: i64, hspan: i64, vspan: i64) -> Result<Self, GeometryError> {
        let id = id.into();
        if hspan == 0 || vspan == 0 {
            return Err(GeometryError::ZeroSpan(id));
        }
        Ok(LFrame { id, corner: Point::new(x, y), hspan, vspan })
    }

    pub fn horizontal(&self) -> Segment {
        let a = self.corner.x;
        let b = self.corner.x + self.hspan;
        Segment::Horizontal { y: self.corner.y, lo: a.min(b), hi: a.max(b) }
    }

    pub fn vertical(&self) -> Segment {
        let a = self.corner.y;
        let b = self.corner.y + self.vspan;
        Segment::Vertical { x: self.corner.x, lo: a.min(b), hi: a.max(b) }
    }

    pub fn horizontal_end(&self) -> Point {
        Point::new(self.corner.x + self.hspan, self.corner.y)
    }

    pub fn vertical_end(&self) -> Point {
        Point::new(self.corner.x, self.corner.y + self.vspan)
    }

    /// Same shape, different position.
    pub fn translated(&self, dx: i64, dy: i64) -> LFrame {
        LFrame { corner: Point::new(self.corner.x + dx, self.corner.y + dy), ..self.clone() }
    }

    /// Bounding box as `(min, max)` corners.
    pub fn bbox(&self) -> (Point, Point) {
        let xs = [self.corner.x, self.corner.x + self.hspan];
        let ys = [self.corner.y, self.corner.y + self.vspan];
        (Point::new(xs[0].min(xs[1]), ys[0].min(ys[1])), Point::new(xs[0].max(xs[1]), ys[0].max(ys[1])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub id: String,
    pub lo: Point,
    pub hi: Point,
}

impl Rect {
    pub fn new(id: impl Into<String>, lo: Point, hi: Point) -> Result<Self, GeometryError> {
        let id = id.into();
        if lo.x >= hi.x || lo.y >= hi.y {
            return Err(GeometryError::DegenerateRect(id));
        }
        Ok(Rect { id, lo, hi })
    }
}

fn overlap(a_lo: i64, a_hi: i64, b_lo: i64, b_hi: i64) -> i64 {
    a_hi.min(b_hi) - a_lo.max(b_lo)
}

/// Closed segment intersection. `min_shared` is the minimum length of a
/// shared collinear piece required for a hit; perpendicular pieces only count
/// when `min_shared == 0`.
fn segments_meet(a: Segment, b: Segment, min_shared: i64) -> bool {
    use Segment::*;
    match (a, b) {
        (Horizontal { y: ya, lo: la, hi: ha }, Horizontal { y: yb, lo: lb, hi: hb }) => {
            ya == yb && overlap(la, ha, lb, hb) >= min_shared
        }
        (Vertical { x: xa, lo: la, hi: ha }, Vertical { x: xb, lo: lb, hi: hb }) => {
            xa == xb && overlap(la, ha, lb, hb) >= min_shared
        }
        (Horizontal { y, lo, hi }, Vertical { x, lo: vlo, hi: vhi })
        | (Vertical { x, lo: vlo, hi: vhi }, Horizontal { y, lo, hi }) => {
            min_shared == 0 && lo <= x && x <= hi && vlo <= y && y <= vhi
        }
    }
}

fn frames_meet(a: &LFrame, b: &LFrame, min_shared: i64) -> bool {
    let sa = [a.horizontal(), a.vertical()];
    let sb = [b.horizontal(), b.vertical()];
    sa.iter().any(|&p| sb.iter().any(|&q| segments_meet(p, q, min_shared)))
}

/// Do the two frames share at least one point?
pub fn lframe_intersect(a: &LFrame, b: &LFrame) -> bool {
    frames_meet(a, b, 0)
}

/// Do the two frames share at least one unit grid edge?
pub fn epg_intersect(a: &LFrame, b: &LFrame) -> bool {
    frames_meet(a, b, 1)
}

pub fn intersect_in(model: Model, a: &LFrame, b: &LFrame) -> bool {
    match model {
        Model::Standard => lframe_intersect(a, b),
        Model::Edge => epg_intersect(a, b),
    }
}

pub fn rect_intersect(a: &Rect, b: &Rect) -> bool {
    a.lo.x <= b.hi.x && b.lo.x <= a.hi.x && a.lo.y <= b.hi.y && b.lo.y <= a.hi.y
}

/// A frame is anchored on `side` of `diag` when its corner lies on the line
/// and both arms point away from it on that side.
pub fn is_anchored(f: &LFrame, diag: &Diagonal, side: Side) -> bool {
    diag.contains(f.corner)
        && match side {
            Side::Above => f.hspan > 0 && f.vspan > 0,
            Side::Below => f.hspan < 0 && f.vspan < 0,
        }
}

pub fn anchored_side(f: &LFrame, diag: &Diagonal) -> Option<Side> {
    [Side::Above, Side::Below].into_iter().find(|&s| is_anchored(f, diag, s))
}

/// The two sides of `r` that meet at its anchor corner, as an L-frame.
pub fn rect_to_lframe(r: &Rect, diag: &Diagonal) -> Result<LFrame, GeometryError> {
    if diag.contains(r.lo) {
        Ok(LFrame { id: r.id.clone(), corner: r.lo, hspan: r.hi.x - r.lo.x, vspan: r.hi.y - r.lo.y })
    } else if diag.contains(r.hi) {
        Ok(LFrame { id: r.id.clone(), corner: r.hi, hspan: r.lo.x - r.hi.x, vspan: r.lo.y - r.hi.y })
    } else {
        Err(GeometryError::NotAnchored(r.id.clone()))
    }
}

pub fn rect_side(r: &Rect, diag: &Diagonal) -> Option<Side> {
    if diag.contains(r.lo) {
        Some(Side::Above)
    } else if diag.contains(r.hi) {
        Some(Side::Below)
    } else {
        None
    }
}

pub fn corner_dist2(a: &LFrame, b: &LFrame) -> i64 {
    let dx = a.corner.x - b.corner.x;
    let dy = a.corner.y - b.corner.y;
    dx * dx + dy * dy
}
