//! Static SVG figures. Coordinates are rounded to three decimals so the
//! output is byte-stable for a given input.

use std::fmt::Write as _;

use cag_core::candidates::arrangement_vertices;
use cag_core::exact::{int, ConvexRegion, DirectedLine, Point2};
use cag_core::polygon::{cyclic_offset, Chain, ContiguousGuard, SimplePolygon};
use cag_core::visibility::{core_of_range, EdgeRange};

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#17becf", "#8c564b", "#e377c2",
];
const SIZE: f64 = 720.0;
const MARGIN: f64 = 40.0;

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn new(p: &SimplePolygon) -> Self {
        let pts: Vec<(f64, f64)> = p.vertices().iter().map(Point2::to_f64).collect();
        let x0 = pts.iter().map(|q| q.0).fold(f64::INFINITY, f64::min);
        let x1 = pts.iter().map(|q| q.0).fold(f64::NEG_INFINITY, f64::max);
        let y0 = pts.iter().map(|q| q.1).fold(f64::INFINITY, f64::min);
        let y1 = pts.iter().map(|q| q.1).fold(f64::NEG_INFINITY, f64::max);
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        Frame {
            x0,
            y1,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, q: &Point2) -> (f64, f64) {
        let (x, y) = q.to_f64();
        (
            MARGIN + (x - self.x0) * self.scale,
            MARGIN + (self.y1 - y) * self.scale,
        )
    }

    fn points(&self, pts: &[Point2]) -> String {
        pts.iter()
            .map(|q| {
                let (x, y) = self.map(q);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Boundary points along a chain: its start, every vertex it passes, its end.
pub fn chain_polyline(p: &SimplePolygon, chain: &Chain) -> Vec<Point2> {
    let n = p.n();
    match chain {
        Chain::Full => {
            let mut pts = p.vertices().to_vec();
            pts.push(p.vertex(0).clone());
            pts
        }
        Chain::Arc { start, end } => {
            let len = cyclic_offset(start, end, n);
            let mut pts = vec![p.locate(start)];
            for k in 1..=n {
                if int(k as i64) - &start.t >= len {
                    break;
                }
                pts.push(p.vertex((start.edge + k) % n).clone());
            }
            pts.push(p.locate(end));
            pts
        }
    }
}

/// The polygon's bounding box as half-planes.
fn clip_box(p: &SimplePolygon) -> ConvexRegion {
    let vs = p.vertices();
    let mut lo = vs[0].clone();
    let mut hi = vs[0].clone();
    for v in vs {
        if v.x < lo.x {
            lo.x = v.x.clone();
        }
        if v.y < lo.y {
            lo.y = v.y.clone();
        }
        if v.x > hi.x {
            hi.x = v.x.clone();
        }
        if v.y > hi.y {
            hi.y = v.y.clone();
        }
    }
    let (x0, y0, x1, y1) = (lo.x, lo.y, hi.x, hi.y);
    let corners = [
        Point2::new(x0.clone(), y0.clone()),
        Point2::new(x1.clone(), y0),
        Point2::new(x1, y1.clone()),
        Point2::new(x0, y1),
    ];
    let lines: Vec<DirectedLine> = (0..4)
        .map(|i| DirectedLine::through(&corners[i], &corners[(i + 1) % 4]))
        .collect();
    ConvexRegion::from_halfplanes(&lines)
}

fn guard_core(p: &SimplePolygon, guard: &ContiguousGuard) -> Option<ConvexRegion> {
    let n = p.n();
    let range = match &guard.chain {
        Chain::Full => EdgeRange::full(n),
        Chain::Arc { start, end } => {
            let edges = p.chain_edge_range(start, end);
            let first = *edges.first()?;
            EdgeRange::new(first, edges.len(), n)
        }
    };
    let core = core_of_range(p, range).intersect(&clip_box(p));
    (!core.is_empty()).then_some(core)
}

pub fn render(p: &SimplePolygon, guards: &[ContiguousGuard], debug_layers: bool) -> String {
    let frame = Frame::new(p);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##
    );
    let mut ring = p.vertices().to_vec();
    ring.push(p.vertex(0).clone());
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#f4f1e8" stroke="#333333" stroke-width="1.5"/>"##,
        frame.points(&ring[..ring.len() - 1])
    );
    if debug_layers {
        let _ = writeln!(
            out,
            r#"<g id="cores" fill-opacity="0.12" stroke-opacity="0.5">"#
        );
        for (i, guard) in guards.iter().enumerate() {
            if let Some(core) = guard_core(p, guard) {
                let colour = PALETTE[i % PALETTE.len()];
                let _ = writeln!(
                    out,
                    r#"<polygon points="{}" fill="{colour}" stroke="{colour}" stroke-dasharray="4 3"/>"#,
                    frame.points(&core.vertices())
                );
            }
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r##"<g id="arrangement" fill="#888888">"##);
        let mut dots: Vec<Point2> = arrangement_vertices(p)
            .into_iter()
            .filter(|a| a.inside)
            .map(|a| a.c)
            .collect();
        dots.sort();
        dots.dedup();
        for c in &dots {
            let (x, y) = frame.map(c);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="1.5"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(
        out,
        r#"<g id="chains" fill="none" stroke-width="5" stroke-opacity="0.75" stroke-linecap="round">"#
    );
    for (i, guard) in guards.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let dash = if (i / PALETTE.len()) % 2 == 1 {
            r#" stroke-dasharray="8 4""#
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r#"<polyline points="{}" stroke="{colour}"{dash}/>"#,
            frame.points(&chain_polyline(p, &guard.chain))
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r##"<g id="guards" stroke="#000000" stroke-width="1" font-family="monospace" font-size="12">"##
    );
    for (i, guard) in guards.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let (x, y) = frame.map(&guard.g);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="{colour}"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" stroke="none">{i}</text>"#,
            x + 7.0,
            y - 7.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
