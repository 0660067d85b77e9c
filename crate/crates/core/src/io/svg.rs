//! SVG 1.1 pictures of instances, solutions and exchange-graph drawings.
//!
//! Output is a pure function of the input: integer pixel coordinates for
//! everything except arc radii, which are printed with three decimals.

use std::fmt::Write;

use crate::exchange::{ArcDrawing, ExchangeGraph};
use crate::geometry::{LFrame, Point, Rect, Side};
use crate::graph::DominatingSet;
use crate::instance::{GeomInstance, Objects};

const SCALE: i64 = 20;
const MARGIN: i64 = 24;

const PLAIN: &str = "#444444";
const CHOSEN: &str = "#d62728";
const BLUE: &str = "#1f77b4";
const ARC: &str = "#2ca02c";

struct View {
    min: Point,
    max: Point,
}

impl View {
    fn new(inst: &GeomInstance, arcs: Option<&ArcDrawing>) -> View {
        let mut pts = vec![Point::new(0, 0)];
        match &inst.objects {
            Objects::Frames(fs) => {
                for f in fs {
                    pts.extend([f.corner, f.horizontal_end(), f.vertical_end()]);
                }
            }
            Objects::Rects(rs) => {
                for r in rs {
                    pts.extend([r.lo, r.hi]);
                }
            }
        }
        if let Some(a) = arcs {
            for p in &a.pieces {
                pts.push(Point::new(p.lo, a.diagonal.d - p.lo));
                pts.push(Point::new(p.hi, a.diagonal.d - p.hi));
            }
        }
        let min = Point::new(pts.iter().map(|p| p.x).min().unwrap() - 1, pts.iter().map(|p| p.y).min().unwrap() - 1);
        let max = Point::new(pts.iter().map(|p| p.x).max().unwrap() + 1, pts.iter().map(|p| p.y).max().unwrap() + 1);
        View { min, max }
    }

    fn px(&self, x: i64) -> i64 {
        MARGIN + (x - self.min.x) * SCALE
    }

    fn py(&self, y: i64) -> i64 {
        MARGIN + (self.max.y - y) * SCALE
    }

    fn width(&self) -> i64 {
        2 * MARGIN + (self.max.x - self.min.x) * SCALE
    }

    fn height(&self) -> i64 {
        2 * MARGIN + (self.max.y - self.min.y) * SCALE
    }

    fn line(&self, out: &mut String, a: Point, b: Point, extra: &str) {
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {extra}/>"#,
            self.px(a.x),
            self.py(a.y),
            self.px(b.x),
            self.py(b.y)
        )
        .unwrap();
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Corner markers: `(frame index, colour)`.
type Marks<'a> = &'a [(usize, &'static str)];

fn render(inst: &GeomInstance, chosen: &[usize], marks: Marks, arcs: Option<&ArcDrawing>) -> String {
    let v = View::new(inst, arcs);
    let (w, h) = (v.width(), v.height());
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#).unwrap();

    out.push_str("<g id=\"axes\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n");
    v.line(&mut out, Point::new(v.min.x, 0), Point::new(v.max.x, 0), "");
    v.line(&mut out, Point::new(0, v.min.y), Point::new(0, v.max.y), "");
    out.push_str("</g>\n");

    let dashed = r##"stroke="#888888" stroke-width="1.5" stroke-dasharray="6 4""##;
    if let Some(d) = inst.diagonal {
        v.line(&mut out, Point::new(v.min.x, d.d - v.min.x), Point::new(v.max.x, d.d - v.max.x), dashed);
    }
    if let Some(x) = inst.vertical {
        v.line(&mut out, Point::new(x, v.min.y), Point::new(x, v.max.y), dashed);
    }
    if let Some(y) = inst.horizontal {
        v.line(&mut out, Point::new(v.min.x, y), Point::new(v.max.x, y), dashed);
    }

    out.push_str("<g id=\"objects\" fill=\"none\" font-family=\"monospace\" font-size=\"10\">\n");
    let style = |i: usize| {
        if chosen.contains(&i) {
            format!(r#"stroke="{CHOSEN}" stroke-width="3""#)
        } else {
            format!(r#"stroke="{PLAIN}" stroke-width="1.5""#)
        }
    };
    match &inst.objects {
        Objects::Frames(fs) => {
            for (i, f) in fs.iter().enumerate() {
                frame(&mut out, &v, f, &style(i));
            }
        }
        Objects::Rects(rs) => {
            for (i, r) in rs.iter().enumerate() {
                rect(&mut out, &v, r, &style(i));
            }
        }
    }
    out.push_str("</g>\n");

    if let Objects::Frames(fs) = &inst.objects {
        let mut all: Vec<(usize, &str)> = chosen.iter().map(|&i| (i, CHOSEN)).collect();
        all.extend(marks.iter().copied());
        if !all.is_empty() {
            out.push_str("<g id=\"corners\">\n");
            for (i, colour) in all {
                let c = fs[i].corner;
                writeln!(out, r#"<circle cx="{}" cy="{}" r="4" fill="{colour}"/>"#, v.px(c.x), v.py(c.y)).unwrap();
            }
            out.push_str("</g>\n");
        }
    }

    if let Some(a) = arcs {
        out.push_str(&format!("<g id=\"arcs\" fill=\"none\" stroke=\"{ARC}\" stroke-width=\"2\">\n"));
        for p in &a.pieces {
            let (x1, y1) = (v.px(p.lo), v.py(a.diagonal.d - p.lo));
            let (x2, y2) = (v.px(p.hi), v.py(a.diagonal.d - p.hi));
            let r = (((x2 - x1).pow(2) + (y2 - y1).pow(2)) as f64).sqrt() / 2.0;
            // travelling down-right on screen, sweep 1 bulges up-right
            let sweep = match p.side {
                Side::Above => 1,
                Side::Below => 0,
            };
            writeln!(out, r#"<path d="M {x1} {y1} A {r:.3} {r:.3} 0 0 {sweep} {x2} {y2}"/>"#).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn frame(out: &mut String, v: &View, f: &LFrame, style: &str) {
    let (h, c, e) = (f.horizontal_end(), f.corner, f.vertical_end());
    writeln!(
        out,
        r#"<polyline points="{},{} {},{} {},{}" {style}/>"#,
        v.px(h.x),
        v.py(h.y),
        v.px(c.x),
        v.py(c.y),
        v.px(e.x),
        v.py(e.y)
    )
    .unwrap();
    writeln!(out, r#"<text x="{}" y="{}" fill="{PLAIN}">{}</text>"#, v.px(c.x) + 3, v.py(c.y) - 3, escape(&f.id))
        .unwrap();
}

fn rect(out: &mut String, v: &View, r: &Rect, style: &str) {
    writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{}" height="{}" {style}/>"#,
        v.px(r.lo.x),
        v.py(r.hi.y),
        (r.hi.x - r.lo.x) * SCALE,
        (r.hi.y - r.lo.y) * SCALE
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" fill="{PLAIN}">{}</text>"#,
        v.px(r.lo.x) + 3,
        v.py(r.hi.y) + 12,
        escape(&r.id)
    )
    .unwrap();
}

/// Instance with optional highlighted solution and optional arc drawing.
pub fn render_svg(inst: &GeomInstance, solution: Option<&DominatingSet>, arcs: Option<&ArcDrawing>) -> String {
    let chosen = solution.map(|s| s.members().to_vec()).unwrap_or_default();
    render(inst, &chosen, &[], arcs)
}

/// Exchange-graph picture: blue and red corners marked, arcs drawn.
pub fn render_exchange_svg(inst: &GeomInstance, h: &ExchangeGraph, arcs: &ArcDrawing) -> String {
    let mut marks: Vec<(usize, &'static str)> = h.blue.iter().map(|&b| (b, BLUE)).collect();
    marks.extend(h.red.iter().map(|&r| (r, CHOSEN)));
    marks.extend(h.common.iter().map(|&c| (c, PLAIN)));
    render(inst, &[], &marks, Some(arcs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::{draw_arcs, Arc, ArcClass};
    use crate::generate::{anchored_rects, anchored_two_sided, rng};

    fn count(svg: &str, tag: &str) -> usize {
        svg.matches(&format!("<{tag} ")).count()
    }

    #[test]
    fn empty_instance_has_axes_only() {
        let svg = render_svg(&GeomInstance::frames(Vec::new()), None, None);
        assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(count(&svg, "line"), 2);
        assert_eq!(count(&svg, "polyline") + count(&svg, "path") + count(&svg, "circle"), 0);
    }

    #[test]
    fn one_exchange_edge_gives_one_arc() {
        let f = |id: &str, x: i64, h: i64, v: i64| LFrame::new(id, x, -x, h, v).unwrap();
        let inst = GeomInstance::frames(vec![
            f("a", 0, 12, 1),
            f("b", 2, 10, 1),
            f("c", 4, 8, 1),
            f("d", 7, 5, 1),
            f("e", 8, 4, 1),
            f("x", 11, 1, 12),
        ])
        .with_diagonal(0);
        let h = ExchangeGraph {
            side: Side::Above,
            blue: vec![3],
            red: vec![4],
            common: vec![],
            arcs: vec![Arc { blue: 3, red: 4, witnesses: vec![5], class: ArcClass::Top, witness: 5 }],
        };
        let d = draw_arcs(&h, &inst).unwrap();
        let svg = render_exchange_svg(&inst, &h, &d);
        assert_eq!(count(&svg, "path"), 1);
        assert_eq!(count(&svg, "polyline"), 6);
        assert_eq!(render_exchange_svg(&inst, &h, &d), svg);
    }

    #[test]
    fn solution_is_highlighted_and_output_is_stable() {
        let inst = anchored_two_sided(&mut rng(4), 8, 2);
        let sol = DominatingSet::new(vec![1, 5]);
        let svg = render_svg(&inst, Some(&sol), None);
        assert_eq!(svg.matches(CHOSEN).count(), 4);
        assert_eq!(svg, render_svg(&inst, Some(&sol), None));
        assert_eq!(count(&svg, "line"), 3);
    }

    #[test]
    fn rectangles_and_odd_ids() {
        let mut inst = anchored_rects(&mut rng(1), 4, 0);
        if let Objects::Rects(rs) = &mut inst.objects {
            rs[0].id = "a<&>".into();
        }
        let svg = render_svg(&inst, None, None);
        assert_eq!(count(&svg, "rect"), 5);
        assert!(svg.contains("a&lt;&amp;&gt;"));
    }
}
