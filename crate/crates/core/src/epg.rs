//! Edge-intersection model: two frames are adjacent when they share a unit
//! edge of the integer grid, touching in a single point is not enough.

use crate::geometry::{LFrame, Model, Point};
use crate::graph::{build_intersection_graph, IntersectionGraph};
use crate::instance::GeomInstance;

pub use crate::geometry::epg_intersect;

/// Unit grid edges covered by a frame, each as `(lower-left, upper-right)` endpoint pair.
pub fn grid_edges(f: &LFrame) -> Vec<(Point, Point)> {
    let mut out = Vec::with_capacity((f.hspan.abs() + f.vspan.abs()) as usize);
    let x0 = f.corner.x.min(f.corner.x + f.hspan);
    for x in x0..x0 + f.hspan.abs() {
        out.push((Point::new(x, f.corner.y), Point::new(x + 1, f.corner.y)));
    }
    let y0 = f.corner.y.min(f.corner.y + f.vspan);
    for y in y0..y0 + f.vspan.abs() {
        out.push((Point::new(f.corner.x, y), Point::new(f.corner.x, y + 1)));
    }
    out
}

/// Edge-intersection graph of the frames, regardless of the instance's model tag.
pub fn build_epg_graph(frames: &[LFrame]) -> IntersectionGraph {
    build_intersection_graph(&GeomInstance::frames(frames.to_vec()).with_model(Model::Edge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::lframe_intersect;
    use proptest::prelude::*;

    fn f(x: i64, y: i64, h: i64, v: i64) -> LFrame {
        LFrame::new("f", x, y, h, v).unwrap()
    }

    #[test]
    fn shared_horizontal_edge() {
        assert!(epg_intersect(&f(0, 0, 2, 2), &f(1, 0, 3, -1)));
    }

    #[test]
    fn crossing_without_shared_edge() {
        let a = f(0, 0, 4, 4);
        let b = f(2, -1, 3, 3);
        assert!(lframe_intersect(&a, &b));
        assert!(!epg_intersect(&a, &b));
    }

    #[test]
    fn corner_touch_is_not_an_edge() {
        assert!(!epg_intersect(&f(0, 0, 2, 2), &f(2, 0, 2, -2)));
    }

    #[test]
    fn edge_counts() {
        assert_eq!(grid_edges(&f(0, 0, -3, 2)).len(), 5);
    }

    proptest! {
        #[test]
        fn predicate_matches_edge_sets(
            ax in -4i64..4, ay in -4i64..4, ah in prop_oneof![-4i64..0, 1i64..5], av in prop_oneof![-4i64..0, 1i64..5],
            bx in -4i64..4, by in -4i64..4, bh in prop_oneof![-4i64..0, 1i64..5], bv in prop_oneof![-4i64..0, 1i64..5],
        ) {
            let a = f(ax, ay, ah, av);
            let b = f(bx, by, bh, bv);
            let ea = grid_edges(&a);
            let shared = grid_edges(&b).iter().any(|e| ea.contains(e));
            prop_assert_eq!(epg_intersect(&a, &b), shared);
            prop_assert_eq!(epg_intersect(&a, &b), epg_intersect(&b, &a));
            if shared {
                prop_assert!(lframe_intersect(&a, &b));
            }
        }
    }
}
