//! Simple polygons, boundary coordinates and chains.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{
    dot, format_scalar, int, on_segment, orient, parse_scalar, DirectedLine, Point2, Scalar,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {n}")]
    TooFewVertices { n: usize },
    #[error("edge {index} has zero length")]
    DegenerateEdge { index: usize },
    #[error("edges {first} and {second} intersect")]
    SelfIntersecting { first: usize, second: usize },
    #[error("vertices are in clockwise order")]
    NotCcw,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A point on the boundary: `v_edge + t (v_{edge+1} - v_edge)` with `t` in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    pub edge: usize,
    pub t: Scalar,
}

impl BoundaryPoint {
    /// Builds a canonical point, folding `t = 1` onto the next edge.
    pub fn new(edge: usize, t: Scalar, n: usize) -> Self {
        assert!(
            !t.is_negative() && t <= Scalar::one(),
            "boundary parameter out of range"
        );
        if t.is_one() {
            BoundaryPoint {
                edge: (edge + 1) % n,
                t: Scalar::zero(),
            }
        } else {
            BoundaryPoint { edge: edge % n, t }
        }
    }

    pub fn vertex(i: usize) -> Self {
        BoundaryPoint {
            edge: i,
            t: Scalar::zero(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.t.is_zero()
    }

    /// Arc-parameter `edge + t` in `[0, n)`.
    pub fn param(&self) -> Scalar {
        int(self.edge as i64) + &self.t
    }

    pub fn from_param(s: &Scalar, n: usize) -> Self {
        let nn = int(n as i64);
        let mut s = s % &nn;
        if s.is_negative() {
            s += &nn;
        }
        let e = s.floor();
        let edge: usize = e.to_integer().try_into().expect("edge index fits usize");
        BoundaryPoint { edge, t: s - e }
    }

    /// `edge:t` form used on the command line and in dumps.
    pub fn to_text(&self) -> String {
        format!("{}:{}", self.edge, format_scalar(&self.t))
    }

    pub fn parse(text: &str, n: usize) -> Option<Self> {
        let (e, t) = text.split_once(':')?;
        let edge: usize = e.trim().parse().ok()?;
        let t = parse_scalar(t)?;
        if edge >= n || t.is_negative() || t > Scalar::one() {
            return None;
        }
        Some(BoundaryPoint::new(edge, t, n))
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Closed counter-clockwise chain `[start, end]`, or the whole boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Chain {
    Arc {
        start: BoundaryPoint,
        end: BoundaryPoint,
    },
    Full,
}

impl Chain {
    pub fn arc(start: BoundaryPoint, end: BoundaryPoint) -> Self {
        Chain::Arc { start, end }
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Chain::Full)
    }

    pub fn start(&self) -> Option<&BoundaryPoint> {
        match self {
            Chain::Arc { start, .. } => Some(start),
            Chain::Full => None,
        }
    }

    pub fn end(&self) -> Option<&BoundaryPoint> {
        match self {
            Chain::Arc { end, .. } => Some(end),
            Chain::Full => None,
        }
    }

    /// Arc length in boundary parameter units (`n` for the full boundary).
    pub fn length(&self, n: usize) -> Scalar {
        match self {
            Chain::Full => int(n as i64),
            Chain::Arc { start, end } => cyclic_offset(start, end, n),
        }
    }

    pub fn contains(&self, p: &BoundaryPoint, n: usize) -> bool {
        match self {
            Chain::Full => true,
            Chain::Arc { start, end } => cyclic_offset(start, p, n) <= cyclic_offset(start, end, n),
        }
    }
}

/// CCW distance from `anchor` to `p` in boundary parameter units, in `[0, n)`.
pub fn cyclic_offset(anchor: &BoundaryPoint, p: &BoundaryPoint, n: usize) -> Scalar {
    let d = p.param() - anchor.param();
    if d.is_negative() {
        d + int(n as i64)
    } else {
        d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContiguousGuard {
    pub g: Point2,
    pub chain: Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    OnBoundary,
    Outside,
}

#[derive(Clone, Debug)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
    lines: Vec<DirectedLine>,
    reflex: Vec<bool>,
}

fn segments_intersect(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// Twice the signed area.
fn signed_area2(vs: &[Point2]) -> Scalar {
    let n = vs.len();
    let mut acc = Scalar::zero();
    for i in 0..n {
        let a = &vs[i];
        let b = &vs[(i + 1) % n];
        acc += &a.x * &b.y - &a.y * &b.x;
    }
    acc
}

impl SimplePolygon {
    pub fn validate(raw: Vec<Point2>) -> Result<Self, PolygonError> {
        Self::validate_with(raw, false)
    }

    /// Validates `raw`; with `auto_orient` a clockwise input is reversed
    /// instead of rejected.
    pub fn validate_with(mut raw: Vec<Point2>, auto_orient: bool) -> Result<Self, PolygonError> {
        let n = raw.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices { n });
        }
        for i in 0..n {
            if raw[i] == raw[(i + 1) % n] {
                return Err(PolygonError::DegenerateEdge { index: i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (a, b) = (&raw[i], &raw[(i + 1) % n]);
                let (c, d) = (&raw[j], &raw[(j + 1) % n]);
                if adjacent {
                    // consecutive edges may only share their common vertex, so
                    // they must not run back along each other
                    let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    if orient(p, shared, q) == 0 && dot(&(p - shared), &(q - shared)).is_positive()
                    {
                        return Err(PolygonError::SelfIntersecting {
                            first: i,
                            second: j,
                        });
                    }
                } else if segments_intersect(a, b, c, d) {
                    return Err(PolygonError::SelfIntersecting {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        let area = signed_area2(&raw);
        if !area.is_positive() {
            if auto_orient && area.is_negative() {
                raw.reverse();
            } else {
                return Err(PolygonError::NotCcw);
            }
        }
        Ok(Self::from_valid(raw))
    }

    fn from_valid(vertices: Vec<Point2>) -> Self {
        let n = vertices.len();
        let lines = (0..n)
            .map(|i| DirectedLine::through(&vertices[i], &vertices[(i + 1) % n]))
            .collect();
        let reflex = (0..n)
            .map(|i| {
                orient(
                    &vertices[(i + n - 1) % n],
                    &vertices[i],
                    &vertices[(i + 1) % n],
                ) < 0
            })
            .collect();
        SimplePolygon {
            vertices,
            lines,
            reflex,
        }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self, PolygonError> {
        Self::validate(
            coords
                .iter()
                .map(|&(x, y)| Point2::from_ints(x, y))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point2 {
        &self.vertices[i % self.n()]
    }

    /// Endpoints of edge `i`.
    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        let n = self.n();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    /// Supporting line of edge `i`; the interior lies on its left.
    pub fn edge_line(&self, i: usize) -> &DirectedLine {
        &self.lines[i % self.n()]
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        self.reflex[i % self.n()]
    }

    pub fn reflex_count(&self) -> usize {
        self.reflex.iter().filter(|r| **r).count()
    }

    pub fn locate(&self, p: &BoundaryPoint) -> Point2 {
        let (a, b) = self.edge(p.edge);
        a.lerp(b, &p.t)
    }

    pub fn boundary_point(&self, edge: usize, t: Scalar) -> BoundaryPoint {
        BoundaryPoint::new(edge, t, self.n())
    }

    /// Canonical boundary coordinate of a point known to lie on `∂P`.
    pub fn boundary_point_at(&self, p: &Point2) -> Option<BoundaryPoint> {
        for i in 0..self.n() {
            if p == self.vertex(i) {
                return Some(BoundaryPoint::vertex(i));
            }
        }
        for i in 0..self.n() {
            let (a, b) = self.edge(i);
            if on_segment(a, b, p) {
                return Some(self.boundary_point(i, self.edge_line(i).param_of(p)));
            }
        }
        None
    }

    pub fn cyclic_leq(&self, anchor: &BoundaryPoint, a: &BoundaryPoint, b: &BoundaryPoint) -> bool {
        cyclic_offset(anchor, a, self.n()) <= cyclic_offset(anchor, b, self.n())
    }

    pub fn cyclic_cmp(
        &self,
        anchor: &BoundaryPoint,
        a: &BoundaryPoint,
        b: &BoundaryPoint,
    ) -> Ordering {
        cyclic_offset(anchor, a, self.n()).cmp(&cyclic_offset(anchor, b, self.n()))
    }

    /// Edges meeting the open chain `(start, end)`, in traversal order.
    pub fn chain_edge_range(&self, start: &BoundaryPoint, end: &BoundaryPoint) -> Vec<usize> {
        let n = self.n();
        if start == end {
            return vec![];
        }
        let reach = &start.t + cyclic_offset(start, end, n);
        let count: usize = reach.ceil().to_integer().try_into().unwrap_or(n);
        (0..count.min(n)).map(|k| (start.edge + k) % n).collect()
    }

    pub fn point_in_polygon(&self, p: &Point2) -> Location {
        let n = self.n();
        let mut inside = false;
        for i in 0..n {
            let (a, b) = self.edge(i);
            if on_segment(a, b, p) {
                return Location::OnBoundary;
            }
            if (a.y > p.y) != (b.y > p.y) {
                let o = orient(a, b, p);
                if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                    inside = !inside;
                }
            }
        }
        if inside {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    pub fn contains_closed(&self, p: &Point2) -> bool {
        self.point_in_polygon(p) != Location::Outside
    }

    pub fn signed_area2(&self) -> Scalar {
        signed_area2(&self.vertices)
    }

    /// Parses the polygon text format: `n`, then `n` lines of `x y`.
    pub fn parse_text(text: &str, auto_orient: bool) -> Result<Self, PolygonError> {
        let mut rows = text.lines().enumerate().filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        let (line, header) = rows.next().ok_or(PolygonError::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| PolygonError::Parse {
            line,
            message: format!("bad vertex count {header:?}"),
        })?;
        let mut pts = Vec::with_capacity(n);
        for (line, body) in rows.by_ref() {
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(PolygonError::Parse {
                    line,
                    message: "expected two coordinates".into(),
                });
            }
            let x = parse_scalar(fields[0]).ok_or(PolygonError::Parse {
                line,
                message: format!("bad number {:?}", fields[0]),
            })?;
            let y = parse_scalar(fields[1]).ok_or(PolygonError::Parse {
                line,
                message: format!("bad number {:?}", fields[1]),
            })?;
            pts.push(Point2::new(x, y));
        }
        if pts.len() != n {
            return Err(PolygonError::Parse {
                line: 1,
                message: format!("header says {n} vertices, found {}", pts.len()),
            });
        }
        Self::validate_with(pts, auto_orient)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for v in &self.vertices {
            out.push_str(&format!(
                "{} {}\n",
                format_scalar(&v.x),
                format_scalar(&v.y)
            ));
        }
        out
    }
}
