//! Exact rational points, lines and convex regions.
//!
//! Every predicate here is evaluated over arbitrary-precision rationals, so
//! there is no tolerance anywhere: two points are equal or they are not.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"7"`, `"-3/4"` or `"12/8"` into a canonical rational.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Scalar::new(n, d))
            }
        }
        None => BigInt::from_str(text).ok().map(Scalar::from_integer),
    }
}

/// `p/q` form used in every serialized artifact (integers print without `/1`).
pub fn format_scalar(v: &Scalar) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn sign(v: &Scalar) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point2::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Point2 {
        Point2::new(&self.x * k, &self.y * k)
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(&self) -> Point2 {
        Point2::new(-&self.y, self.x.clone())
    }

    pub fn lerp(&self, other: &Point2, t: &Scalar) -> Point2 {
        self + &(other - self).scale(t)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_scalar(&self.x),
            format_scalar(&self.y)
        )
    }
}

impl<'a> Sub<&'a Point2> for &'a Point2 {
    type Output = Point2;
    fn sub(self, rhs: &'a Point2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Point2> for &'a Point2 {
    type Output = Point2;
    fn add(self, rhs: &'a Point2) -> Point2 {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Point2 {
    type Output = Point2;
    fn mul(self, rhs: &'a Scalar) -> Point2 {
        self.scale(rhs)
    }
}

impl Neg for &Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }
}

pub fn cross(a: &Point2, b: &Point2) -> Scalar {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Point2, b: &Point2) -> Scalar {
    &a.x * &b.x + &a.y * &b.y
}

/// `a - b` as an unreduced fraction with positive denominator.
fn frac_sub(a: &Scalar, b: &Scalar) -> (BigInt, BigInt) {
    if a.denom() == b.denom() {
        (a.numer() - b.numer(), a.denom().clone())
    } else {
        (
            a.numer() * b.denom() - b.numer() * a.denom(),
            a.denom() * b.denom(),
        )
    }
}

fn frac(a: &Scalar) -> (BigInt, BigInt) {
    (a.numer().clone(), a.denom().clone())
}

/// Sign of `ux * vy - uy * vx` over unreduced fractions. Predicates go
/// through here because it skips the gcd work of rational subtraction.
fn cross_sign(
    ux: (BigInt, BigInt),
    uy: (BigInt, BigInt),
    vx: (BigInt, BigInt),
    vy: (BigInt, BigInt),
) -> i8 {
    let l = &ux.0 * &vy.0 * &uy.1 * &vx.1;
    let r = &uy.0 * &vx.0 * &ux.1 * &vy.1;
    match l.cmp(&r) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Sign of `cross(q - p, r - p)`: `+1` for a left turn, `0` when collinear.
pub fn orient(p: &Point2, q: &Point2, r: &Point2) -> i8 {
    cross_sign(
        frac_sub(&q.x, &p.x),
        frac_sub(&q.y, &p.y),
        frac_sub(&r.x, &p.x),
        frac_sub(&r.y, &p.y),
    )
}

/// `true` when `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let (lo_x, hi_x) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (lo_y, hi_y) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    lo_x <= &p.x && &p.x <= hi_x && lo_y <= &p.y && &p.y <= hi_y
}

/// `true` when `p` lies strictly between `a` and `b` on the segment joining them.
pub fn strictly_between(a: &Point2, b: &Point2, p: &Point2) -> bool {
    on_segment(a, b, p) && p != a && p != b
}

/// Exact angular order of non-zero direction vectors, starting at the
/// positive x-axis and sweeping counter-clockwise.
pub fn angle_cmp(a: &Point2, b: &Point2) -> std::cmp::Ordering {
    fn half(d: &Point2) -> u8 {
        if d.y.is_positive() || (d.y.is_zero() && d.x.is_positive()) {
            0
        } else {
            1
        }
    }
    half(a)
        .cmp(&half(b))
        .then_with(|| match sign(&cross(a, b)) {
            1 => std::cmp::Ordering::Less,
            -1 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        })
}

/// An oriented line; its closed left side is the half-plane it bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedLine {
    pub anchor: Point2,
    pub direction: Point2,
}

impl DirectedLine {
    pub fn new(anchor: Point2, direction: Point2) -> Self {
        assert!(
            !direction.is_zero(),
            "directed line needs a non-zero direction"
        );
        DirectedLine { anchor, direction }
    }

    pub fn through(from: &Point2, to: &Point2) -> Self {
        DirectedLine::new(from.clone(), to - from)
    }

    pub fn point_at(&self, t: &Scalar) -> Point2 {
        &self.anchor + &self.direction.scale(t)
    }

    /// Positive left of the line, zero on it.
    pub fn side_value(&self, p: &Point2) -> Scalar {
        cross(&self.direction, &(p - &self.anchor))
    }

    pub fn side(&self, p: &Point2) -> i8 {
        cross_sign(
            frac(&self.direction.x),
            frac(&self.direction.y),
            frac_sub(&p.x, &self.anchor.x),
            frac_sub(&p.y, &self.anchor.y),
        )
    }

    pub fn left_or_on(&self, p: &Point2) -> bool {
        self.side(p) >= 0
    }

    pub fn contains_point(&self, p: &Point2) -> bool {
        self.side(p) == 0
    }

    /// Parameter of the orthogonal projection of `p` onto the line.
    pub fn param_of(&self, p: &Point2) -> Scalar {
        dot(&(p - &self.anchor), &self.direction) / dot(&self.direction, &self.direction)
    }

    pub fn is_parallel(&self, other: &DirectedLine) -> bool {
        cross(&self.direction, &other.direction).is_zero()
    }

    /// Same point set, regardless of orientation.
    pub fn same_line(&self, other: &DirectedLine) -> bool {
        self.is_parallel(other) && self.contains_point(&other.anchor)
    }

    /// Same line and same orientation, hence the same half-plane.
    pub fn same_halfplane(&self, other: &DirectedLine) -> bool {
        self.same_line(other) && dot(&self.direction, &other.direction).is_positive()
    }

    pub fn reversed(&self) -> DirectedLine {
        DirectedLine::new(self.anchor.clone(), -&self.direction)
    }

    /// Parameter along `self` where it meets `other`; `None` when parallel.
    pub fn intersection_param(&self, other: &DirectedLine) -> Option<Scalar> {
        let denom = cross(&other.direction, &self.direction);
        if denom.is_zero() {
            return None;
        }
        Some(cross(&other.direction, &(&other.anchor - &self.anchor)) / denom)
    }
}

/// Intersection point of two lines, `None` when they are parallel (or equal).
pub fn line_intersection(a: &DirectedLine, b: &DirectedLine) -> Option<Point2> {
    a.intersection_param(b).map(|t| a.point_at(&t))
}

/// A possibly unbounded closed interval of line parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamInterval {
    pub lo: Option<Scalar>,
    pub hi: Option<Scalar>,
}

impl ParamInterval {
    pub fn full() -> Self {
        ParamInterval { lo: None, hi: None }
    }

    pub fn is_empty(&self) -> bool {
        matches!((&self.lo, &self.hi), (Some(lo), Some(hi)) if lo > hi)
    }

    pub fn contains(&self, t: &Scalar) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo <= t) && self.hi.as_ref().is_none_or(|hi| t <= hi)
    }

    fn raise_lo(&mut self, t: Scalar) {
        if self.lo.as_ref().is_none_or(|lo| &t > lo) {
            self.lo = Some(t);
        }
    }

    fn lower_hi(&mut self, t: Scalar) {
        if self.hi.as_ref().is_none_or(|hi| &t < hi) {
            self.hi = Some(t);
        }
    }

    /// Restricts the interval to parameters whose points lie left of (or on) `h`.
    /// Returns `false` once the interval is known to be empty.
    pub fn clip(&mut self, line: &DirectedLine, h: &DirectedLine) -> bool {
        let c0 = cross(&h.direction, &(&line.anchor - &h.anchor));
        let c1 = cross(&h.direction, &line.direction);
        if c1.is_zero() {
            if c0.is_negative() {
                self.lo = Some(Scalar::one());
                self.hi = Some(Scalar::zero());
                return false;
            }
        } else {
            let bound = -c0 / &c1;
            if c1.is_positive() {
                self.raise_lo(bound);
            } else {
                self.lower_hi(bound);
            }
        }
        !self.is_empty()
    }
}

/// One maximal piece of a region boundary lying on a constraint line,
/// oriented so that the region is on its left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPiece {
    pub line: DirectedLine,
    pub from: Option<Point2>,
    pub to: Option<Point2>,
}

/// Exact intersection of closed half-planes. May be empty, degenerate
/// (a point, segment, ray or line) or unbounded.
#[derive(Clone, Debug)]
pub struct ConvexRegion {
    halfplanes: Vec<DirectedLine>,
    boundary: Vec<BoundaryPiece>,
    empty: bool,
}

/// Intersection of a line with a convex region, ordered along the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineSection {
    Empty,
    Segment {
        first: Point2,
        last: Point2,
    },
    /// At least one side runs off to infinity; finite ends are reported.
    Unbounded {
        first: Option<Point2>,
        last: Option<Point2>,
    },
}

impl LineSection {
    pub fn finite_points(&self) -> Vec<Point2> {
        match self {
            LineSection::Empty => vec![],
            LineSection::Segment { first, last } => {
                if first == last {
                    vec![first.clone()]
                } else {
                    vec![first.clone(), last.clone()]
                }
            }
            LineSection::Unbounded { first, last } => {
                first.iter().chain(last.iter()).cloned().collect()
            }
        }
    }
}

impl ConvexRegion {
    /// The whole plane.
    pub fn plane() -> Self {
        ConvexRegion {
            halfplanes: vec![],
            boundary: vec![],
            empty: false,
        }
    }

    pub fn empty() -> Self {
        ConvexRegion {
            halfplanes: vec![],
            boundary: vec![],
            empty: true,
        }
    }

    pub fn from_halfplanes(hs: &[DirectedLine]) -> Self {
        let mut unique: Vec<DirectedLine> = Vec::with_capacity(hs.len());
        for h in hs {
            if !unique.iter().any(|u| u.same_halfplane(h)) {
                unique.push(h.clone());
            }
        }
        if unique.is_empty() {
            return ConvexRegion::plane();
        }

        let mut pieces: Vec<BoundaryPiece> = Vec::new();
        for (i, line) in unique.iter().enumerate() {
            let mut iv = ParamInterval::full();
            let alive = unique
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .all(|(_, h)| iv.clip(line, h));
            if alive {
                pieces.push(BoundaryPiece {
                    line: line.clone(),
                    from: iv.lo.as_ref().map(|t| line.point_at(t)),
                    to: iv.hi.as_ref().map(|t| line.point_at(t)),
                });
            }
        }

        if pieces.is_empty() {
            return ConvexRegion::empty();
        }
        pieces.sort_by(|a, b| angle_cmp(&a.line.direction, &b.line.direction));
        ConvexRegion {
            halfplanes: pieces.iter().map(|p| p.line.clone()).collect(),
            boundary: pieces,
            empty: false,
        }
    }

    /// Closed convex hull of at most three points (point, segment or triangle).
    pub fn hull_of(points: &[Point2]) -> Self {
        let mut pts: Vec<Point2> = Vec::new();
        for p in points {
            if !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        match pts.len() {
            0 => ConvexRegion::empty(),
            1 => {
                let p = &pts[0];
                let ex = Point2::from_ints(1, 0);
                let ey = Point2::from_ints(0, 1);
                ConvexRegion::from_halfplanes(&[
                    DirectedLine::new(p.clone(), ex.clone()),
                    DirectedLine::new(p.clone(), -&ex),
                    DirectedLine::new(p.clone(), ey.clone()),
                    DirectedLine::new(p.clone(), -&ey),
                ])
            }
            _ => {
                let (mut a, mut b) = (pts[0].clone(), pts[1].clone());
                let third = pts.iter().skip(2).find(|p| orient(&a, &b, p) != 0).cloned();
                match third {
                    Some(c) => {
                        if orient(&a, &b, &c) < 0 {
                            std::mem::swap(&mut a, &mut b);
                        }
                        ConvexRegion::from_halfplanes(&[
                            DirectedLine::through(&a, &b),
                            DirectedLine::through(&b, &c),
                            DirectedLine::through(&c, &a),
                        ])
                    }
                    None => {
                        // collinear: the hull is the segment between the extreme points
                        let line = DirectedLine::through(&a, &b);
                        let lo = pts
                            .iter()
                            .min_by(|p, q| line.param_of(p).cmp(&line.param_of(q)))
                            .unwrap();
                        let hi = pts
                            .iter()
                            .max_by(|p, q| line.param_of(p).cmp(&line.param_of(q)))
                            .unwrap();
                        let d = hi - lo;
                        ConvexRegion::from_halfplanes(&[
                            DirectedLine::new(lo.clone(), d.clone()),
                            DirectedLine::new(lo.clone(), -&d),
                            DirectedLine::new(lo.clone(), -&d.perp()),
                            DirectedLine::new(hi.clone(), d.perp()),
                        ])
                    }
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Non-redundant constraints (the lines carrying boundary pieces).
    pub fn halfplanes(&self) -> &[DirectedLine] {
        &self.halfplanes
    }

    /// Boundary pieces in counter-clockwise order of their directions.
    pub fn boundary(&self) -> &[BoundaryPiece] {
        &self.boundary
    }

    pub fn is_bounded(&self) -> bool {
        !self.empty
            && !self.boundary.is_empty()
            && self
                .boundary
                .iter()
                .all(|p| p.from.is_some() && p.to.is_some())
    }

    /// Distinct finite corner points, in boundary order.
    pub fn vertices(&self) -> Vec<Point2> {
        let mut out: Vec<Point2> = Vec::new();
        for piece in &self.boundary {
            for p in piece.from.iter().chain(piece.to.iter()) {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
        }
        out
    }

    pub fn contains(&self, p: &Point2) -> bool {
        !self.empty && self.halfplanes.iter().all(|h| h.left_or_on(p))
    }

    /// Some point of the region: the vertex centroid when there are vertices,
    /// otherwise a point on a boundary line (or the origin for the plane).
    pub fn representative_point(&self) -> Option<Point2> {
        if self.empty {
            return None;
        }
        let verts = self.vertices();
        if !verts.is_empty() {
            let k = int(verts.len() as i64);
            let mut sx = Scalar::zero();
            let mut sy = Scalar::zero();
            for v in &verts {
                sx += &v.x;
                sy += &v.y;
            }
            return Some(Point2::new(sx / &k, sy / k));
        }
        match self.boundary.first() {
            Some(piece) => Some(piece.line.anchor.clone()),
            None => Some(Point2::origin()),
        }
    }

    pub fn line_interval(&self, line: &DirectedLine) -> Option<ParamInterval> {
        if self.empty {
            return None;
        }
        let mut iv = ParamInterval::full();
        for h in &self.halfplanes {
            if !iv.clip(line, h) {
                return None;
            }
        }
        Some(iv)
    }

    pub fn line_section(&self, line: &DirectedLine) -> LineSection {
        match self.line_interval(line) {
            None => LineSection::Empty,
            Some(iv) => {
                let first = iv.lo.as_ref().map(|t| line.point_at(t));
                let last = iv.hi.as_ref().map(|t| line.point_at(t));
                match (first, last) {
                    (Some(first), Some(last)) => LineSection::Segment { first, last },
                    (first, last) => LineSection::Unbounded { first, last },
                }
            }
        }
    }

    pub fn intersect(&self, other: &ConvexRegion) -> ConvexRegion {
        if self.empty || other.empty {
            return ConvexRegion::empty();
        }
        let mut hs = self.halfplanes.clone();
        hs.extend(other.halfplanes.iter().cloned());
        ConvexRegion::from_halfplanes(&hs)
    }
}

pub fn halfplane_intersection(hs: &[DirectedLine]) -> ConvexRegion {
    ConvexRegion::from_halfplanes(hs)
}

pub fn region_contains(region: &ConvexRegion, p: &Point2) -> bool {
    region.contains(p)
}

pub fn region_line_segment(region: &ConvexRegion, line: &DirectedLine) -> LineSection {
    region.line_section(line)
}

pub fn region_intersect(a: &ConvexRegion, b: &ConvexRegion) -> ConvexRegion {
    a.intersect(b)
}

/// First and last points of `line` inside `a ∩ b`, found from the sections of
/// the two regions separately plus cross membership.
pub fn section_of_pair(a: &ConvexRegion, b: &ConvexRegion, line: &DirectedLine) -> LineSection {
    let sa = a.line_interval(line);
    let sb = b.line_interval(line);
    let (Some(sa), Some(sb)) = (sa, sb) else {
        return LineSection::Empty;
    };
    // the lower end of the intersection is whichever finite lower end the
    // other region also contains
    let pick = |x: &Option<Scalar>,
                other: &ParamInterval,
                y: &Option<Scalar>,
                own: &ParamInterval,
                lower: bool| {
        let mut cands: Vec<Scalar> = Vec::new();
        if let Some(t) = x {
            if other.contains(t) {
                cands.push(t.clone());
            }
        }
        if let Some(t) = y {
            if own.contains(t) {
                cands.push(t.clone());
            }
        }
        if lower {
            cands.into_iter().max()
        } else {
            cands.into_iter().min()
        }
    };
    let lo = pick(&sa.lo, &sb, &sb.lo, &sa, true);
    let hi = pick(&sa.hi, &sb, &sb.hi, &sa, false);
    let lo_unbounded = sa.lo.is_none() && sb.lo.is_none();
    let hi_unbounded = sa.hi.is_none() && sb.hi.is_none();
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return LineSection::Empty;
        }
    }
    if (lo.is_none() && !lo_unbounded) || (hi.is_none() && !hi_unbounded) {
        return LineSection::Empty;
    }
    let first = lo.map(|t| line.point_at(&t));
    let last = hi.map(|t| line.point_at(&t));
    match (first, last) {
        (Some(first), Some(last)) => LineSection::Segment { first, last },
        (first, last) => LineSection::Unbounded { first, last },
    }
}
