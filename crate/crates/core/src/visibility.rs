//! Visibility cores, the dyadic core table and exact point-to-point visibility.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{on_segment, orient, ConvexRegion, DirectedLine, Point2, Scalar};
use crate::polygon::{BoundaryPoint, Chain, ContiguousGuard, Location, SimplePolygon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VisibilityError {
    #[error("query point lies outside the polygon")]
    PointOutside,
    #[error("guard is not left of the edge containing the boundary point")]
    PreconditionViolated,
}

/// Cyclic run of `len` consecutive edges starting at `first`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeRange {
    pub first: usize,
    pub len: usize,
}

impl EdgeRange {
    pub fn new(first: usize, len: usize, n: usize) -> Self {
        assert!(len >= 1 && len <= n, "edge range length must be in 1..=n");
        EdgeRange {
            first: first % n,
            len,
        }
    }

    pub fn full(n: usize) -> Self {
        EdgeRange { first: 0, len: n }
    }

    /// Range `first..=last` walking counter-clockwise.
    pub fn from_to(first: usize, last: usize, n: usize) -> Self {
        EdgeRange::new(first, (last + n - first) % n + 1, n)
    }

    pub fn is_full(&self, n: usize) -> bool {
        self.len == n
    }

    pub fn last(&self, n: usize) -> usize {
        (self.first + self.len - 1) % n
    }

    pub fn edges(&self, n: usize) -> impl Iterator<Item = usize> {
        let first = self.first;
        (0..self.len).map(move |k| (first + k) % n)
    }

    pub fn contains_edge(&self, e: usize, n: usize) -> bool {
        (e + n - self.first) % n < self.len
    }
}

/// Intersection of the left half-planes of the edges in `range`.
pub fn core_of_range(p: &SimplePolygon, range: EdgeRange) -> ConvexRegion {
    let n = p.n();
    let lines: Vec<DirectedLine> = range.edges(n).map(|e| p.edge_line(e).clone()).collect();
    ConvexRegion::from_halfplanes(&lines)
}

/// A guard seeing the whole boundary, if the kernel is nonempty.
pub fn single_guard_check(p: &SimplePolygon) -> Option<ContiguousGuard> {
    let kernel = core_of_range(p, EdgeRange::full(p.n()));
    let g = kernel.representative_point()?;
    debug_assert!(p.contains_closed(&g));
    Some(ContiguousGuard {
        g,
        chain: Chain::Full,
    })
}

/// Cores of all ranges of `2^j` edges, for every start edge.
#[derive(Clone, Debug)]
pub struct DyadicCoreTable {
    n: usize,
    levels: Vec<Vec<ConvexRegion>>,
}

impl DyadicCoreTable {
    pub fn build(p: &SimplePolygon) -> Self {
        let n = p.n();
        let mut levels: Vec<Vec<ConvexRegion>> = vec![(0..n)
            .map(|i| ConvexRegion::from_halfplanes(std::slice::from_ref(p.edge_line(i))))
            .collect()];
        let mut width = 1;
        while width * 2 <= n {
            let prev = levels.last().unwrap();
            let next = (0..n)
                .map(|i| prev[i].intersect(&prev[(i + width) % n]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        DyadicCoreTable { n, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &ConvexRegion {
        &self.levels[j][i % self.n]
    }

    /// Two table entries whose ranges cover exactly `range`.
    pub fn range_core_query(&self, range: EdgeRange) -> (&ConvexRegion, &ConvexRegion) {
        let j = usize::BITS as usize - 1 - range.len.leading_zeros() as usize;
        let second = (range.first + range.len - (1 << j)) % self.n;
        (self.entry(range.first, j), self.entry(second, j))
    }

    pub fn range_contains(&self, range: EdgeRange, q: &Point2) -> bool {
        let (a, b) = self.range_core_query(range);
        a.contains(q) && b.contains(q)
    }
}

/// The maximal run of edges around the edge holding `m` whose supporting
/// lines all have `g` on their closed left side.
pub fn maximal_left_range(
    p: &SimplePolygon,
    g: &Point2,
    m: &BoundaryPoint,
) -> Result<EdgeRange, VisibilityError> {
    let n = p.n();
    let ok = |e: usize| p.edge_line(e).left_or_on(g);
    let seed = if ok(m.edge) {
        m.edge
    } else if m.is_vertex() && ok((m.edge + n - 1) % n) {
        (m.edge + n - 1) % n
    } else {
        return Err(VisibilityError::PreconditionViolated);
    };
    let mut fwd = 0;
    while fwd + 1 < n && ok((seed + fwd + 1) % n) {
        fwd += 1;
    }
    if fwd + 1 == n {
        return Ok(EdgeRange::full(n));
    }
    let mut back = 0;
    while back + fwd + 1 < n && ok((seed + n - back - 1) % n) {
        back += 1;
    }
    Ok(EdgeRange::new((seed + n - back) % n, fwd + back + 1, n))
}

/// Parameters along `a + s (b - a)` where the segment touches edge `(c, d)`
/// without crossing it; `None` on a proper transversal crossing.
fn contact_params(
    a: &Point2,
    b: &Point2,
    c: &Point2,
    d: &Point2,
    out: &mut Vec<Scalar>,
) -> Option<()> {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return None;
    }
    let dir = b - a;
    let len2 = crate::exact::dot(&dir, &dir);
    let param = |q: &Point2| crate::exact::dot(&(q - a), &dir) / &len2;
    if o1 == 0 && o2 == 0 {
        for q in [c, d] {
            if on_segment(a, b, q) {
                out.push(param(q));
            }
        }
        return Some(());
    }
    for (o, q) in [(o1, c), (o2, d)] {
        if o == 0 && on_segment(a, b, q) {
            out.push(param(q));
        }
    }
    Some(())
}

/// `true` when the closed segment `[g, x]` lies in the closed polygon.
pub fn sees(p: &SimplePolygon, g: &Point2, x: &Point2) -> bool {
    if g == x {
        return p.contains_closed(g);
    }
    let mut ts = vec![Scalar::zero(), Scalar::one()];
    for i in 0..p.n() {
        let (c, d) = p.edge(i);
        if contact_params(g, x, c, d, &mut ts).is_none() {
            return false;
        }
    }
    ts.sort();
    ts.dedup();
    if p.point_in_polygon(g) == Location::Outside || p.point_in_polygon(x) == Location::Outside {
        return false;
    }
    let two = Scalar::from_integer(2.into());
    ts.windows(2).all(|w| {
        let mid = g.lerp(x, &((&w[0] + &w[1]) / &two));
        p.point_in_polygon(&mid) != Location::Outside
    })
}

/// Where the ray `origin + s·dir` (s ≥ 0) first leaves the closed polygon.
/// Grazing contacts with reflex vertices do not stop the ray.
pub fn ray_exit(p: &SimplePolygon, origin: &Point2, dir: &Point2) -> Point2 {
    assert!(!dir.is_zero(), "ray direction must be non-zero");
    let ray = DirectedLine::new(origin.clone(), dir.clone());
    let mut ss = vec![Scalar::zero()];
    for i in 0..p.n() {
        let (c, d) = p.edge(i);
        let edge = DirectedLine::through(c, d);
        match ray.intersection_param(&edge) {
            Some(s) => {
                if s.is_negative() {
                    continue;
                }
                let q = ray.point_at(&s);
                if on_segment(c, d, &q) {
                    ss.push(s);
                }
            }
            None => {
                if ray.contains_point(c) {
                    for q in [c, d] {
                        let s = ray.param_of(q);
                        if !s.is_negative() {
                            ss.push(s);
                        }
                    }
                }
            }
        }
    }
    ss.sort();
    ss.dedup();
    let two = Scalar::from_integer(2.into());
    for w in ss.windows(2) {
        let mid = ray.point_at(&((&w[0] + &w[1]) / &two));
        if p.point_in_polygon(&mid) == Location::Outside {
            return ray.point_at(&w[0]);
        }
    }
    ray.point_at(ss.last().unwrap())
}

/// Visible parts of every edge, as sorted disjoint closed `t`-intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibleBoundary {
    pub intervals: Vec<Vec<(Scalar, Scalar)>>,
}

impl VisibleBoundary {
    /// Visibility along an edge only changes where the sight line passes
    /// through a vertex, so every edge is cut at those parameters and each
    /// breakpoint and open cell is classified once.
    pub fn compute(p: &SimplePolygon, g: &Point2) -> Result<Self, VisibilityError> {
        if p.point_in_polygon(g) == Location::Outside {
            return Err(VisibilityError::PointOutside);
        }
        let n = p.n();
        let two = Scalar::from_integer(2.into());
        let mut intervals = Vec::with_capacity(n);
        for e in 0..n {
            let line = p.edge_line(e);
            let mut cuts = vec![Scalar::zero(), Scalar::one()];
            for v in p.vertices() {
                if v == g {
                    continue;
                }
                let sight = DirectedLine::through(g, v);
                match line.intersection_param(&sight) {
                    Some(t) => cuts.push(t),
                    None => {
                        if line.contains_point(g) {
                            cuts.push(line.param_of(v));
                        }
                    }
                }
            }
            if line.contains_point(g) {
                cuts.push(line.param_of(g));
            }
            cuts.retain(|t| !t.is_negative() && *t <= Scalar::one());
            cuts.sort();
            cuts.dedup();
            let at = |t: &Scalar| line.point_at(t);
            let point_vis: Vec<bool> = cuts.iter().map(|t| sees(p, g, &at(t))).collect();
            let cell_vis: Vec<bool> = cuts
                .windows(2)
                .map(|w| sees(p, g, &at(&((&w[0] + &w[1]) / &two))))
                .collect();
            let mut merged: Vec<(Scalar, Scalar)> = Vec::new();
            for k in 0..cuts.len() {
                if point_vis[k] {
                    let extends = k > 0 && cell_vis[k - 1] && !merged.is_empty();
                    if extends {
                        merged.last_mut().unwrap().1 = cuts[k].clone();
                    } else {
                        merged.push((cuts[k].clone(), cuts[k].clone()));
                    }
                }
            }
            intervals.push(merged);
        }
        Ok(VisibleBoundary { intervals })
    }

    pub fn is_visible(&self, edge: usize, t: &Scalar) -> bool {
        self.intervals[edge]
            .iter()
            .any(|(lo, hi)| lo <= t && t <= hi)
    }

    pub fn is_visible_point(&self, b: &BoundaryPoint) -> bool {
        self.is_visible(b.edge, &b.t)
    }

    pub fn fully_visible(&self) -> bool {
        self.intervals
            .iter()
            .all(|iv| iv.len() == 1 && iv[0].0.is_zero() && iv[0].1.is_one())
    }

    /// Upper end of the visible interval holding `t` on `edge`.
    fn reach_forward(&self, edge: usize, t: &Scalar) -> Option<Scalar> {
        self.intervals[edge]
            .iter()
            .find(|(lo, hi)| lo <= t && t <= hi)
            .map(|(_, hi)| hi.clone())
    }

    fn reach_backward(&self, edge: usize, t: &Scalar) -> Option<Scalar> {
        self.intervals[edge]
            .iter()
            .find(|(lo, hi)| lo <= t && t <= hi)
            .map(|(lo, _)| lo.clone())
    }

    /// Farthest `v` such that `[u, v]` is entirely visible; `None` when `u`
    /// itself is hidden.
    pub fn forward_chain(&self, u: &BoundaryPoint) -> Option<Chain> {
        let n = self.intervals.len();
        let mut edge = u.edge;
        let mut t = u.t.clone();
        for step in 0..=n {
            let hi = self.reach_forward(edge, &t)?;
            if step == n {
                // back on the starting edge after a full loop
                if hi >= u.t {
                    return Some(Chain::Full);
                }
                return Some(Chain::arc(u.clone(), BoundaryPoint { edge, t: hi }));
            }
            if !hi.is_one() {
                return Some(Chain::arc(u.clone(), BoundaryPoint { edge, t: hi }));
            }
            edge = (edge + 1) % n;
            t = Scalar::zero();
        }
        unreachable!("loop returns by the final step")
    }

    /// Earliest `s` such that `[s, u]` is entirely visible.
    pub fn backward_start(&self, u: &BoundaryPoint) -> Option<BoundaryPoint> {
        let n = self.intervals.len();
        let mut edge = u.edge;
        let mut t = u.t.clone();
        for _ in 0..=n {
            let lo = self.reach_backward(edge, &t)?;
            if !lo.is_zero() {
                return Some(BoundaryPoint::new(edge, lo, n));
            }
            // a vertex is visible; continue onto the previous edge's end
            let prev = (edge + n - 1) % n;
            if !self.is_visible(prev, &Scalar::one()) {
                return Some(BoundaryPoint { edge, t: lo });
            }
            edge = prev;
            t = Scalar::one();
        }
        None
    }

    /// The maximal visible chain containing `x`.
    pub fn maximal_chain(&self, x: &BoundaryPoint) -> Option<Chain> {
        if !self.is_visible_point(x) {
            return None;
        }
        if self.fully_visible() {
            return Some(Chain::Full);
        }
        let start = self.backward_start(x)?;
        match self.forward_chain(&start)? {
            Chain::Full => Some(Chain::Full),
            arc => Some(arc),
        }
    }
}

/// Region visible from a point: its visible boundary pieces plus the closed
/// polygon they span (windows join consecutive pieces).
#[derive(Clone, Debug)]
pub struct VisibilityPolygon {
    pub guard: Point2,
    pub boundary: VisibleBoundary,
    pub ring: Vec<Point2>,
}

impl VisibilityPolygon {
    pub fn contains(&self, q: &Point2) -> bool {
        if self.ring.len() < 3 {
            return self.ring.windows(2).any(|w| on_segment(&w[0], &w[1], q))
                || self.ring.first() == Some(q);
        }
        ring_location(&self.ring, q) != Location::Outside
    }
}

/// Crossing-number classification against an arbitrary closed ring.
pub fn ring_location(ring: &[Point2], q: &Point2) -> Location {
    let m = ring.len();
    let mut inside = false;
    for i in 0..m {
        let a = &ring[i];
        let b = &ring[(i + 1) % m];
        if on_segment(a, b, q) {
            return Location::OnBoundary;
        }
        if (a.y > q.y) != (b.y > q.y) {
            let o = orient(a, b, q);
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

pub fn visibility_polygon(
    p: &SimplePolygon,
    g: &Point2,
) -> Result<VisibilityPolygon, VisibilityError> {
    let boundary = VisibleBoundary::compute(p, g)?;
    let mut ring: Vec<Point2> = Vec::new();
    for (e, ivs) in boundary.intervals.iter().enumerate() {
        let line = p.edge_line(e);
        for (lo, hi) in ivs {
            for t in [lo, hi] {
                let q = line.point_at(t);
                if ring.last() != Some(&q) {
                    ring.push(q);
                }
            }
        }
    }
    while ring.len() > 1 && ring.first() == ring.last() {
        ring.pop();
    }
    Ok(VisibilityPolygon {
        guard: g.clone(),
        boundary,
        ring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn square() -> SimplePolygon {
        SimplePolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    fn l_shape() -> SimplePolygon {
        SimplePolygon::from_ints(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point2 {
        Point2::new(ratio(x.0, x.1), ratio(y.0, y.1))
    }

    #[test]
    fn core_examples() {
        let sq = square();
        let core = core_of_range(&sq, EdgeRange::full(4));
        let mut v = core.vertices();
        v.sort();
        let mut expect = sq.vertices().to_vec();
        expect.sort();
        assert_eq!(v, expect);

        let l = l_shape();
        let k = core_of_range(&l, EdgeRange::full(6));
        let mut v = k.vertices();
        v.sort();
        assert_eq!(
            v,
            vec![
                Point2::from_ints(0, 0),
                Point2::from_ints(0, 1),
                Point2::from_ints(1, 0),
                Point2::from_ints(1, 1)
            ]
        );

        let half = core_of_range(&l, EdgeRange::new(1, 1, 6));
        assert!(!half.is_bounded());
        assert_eq!(half.halfplanes().len(), 1);
    }

    #[test]
    fn single_guard_examples() {
        let g = single_guard_check(&square()).unwrap();
        assert_eq!(g.chain, Chain::Full);
        assert_eq!(g.g, pt((1, 2), (1, 2)));
        let l = single_guard_check(&l_shape()).unwrap();
        assert!(l.g.x >= int(0) && l.g.x <= int(1) && l.g.y >= int(0) && l.g.y <= int(1));
        let comb = SimplePolygon::from_ints(&[
            (0, 0),
            (11, 0),
            (11, 2),
            (10, 2),
            (10, 12),
            (9, 12),
            (9, 2),
            (6, 2),
            (6, 12),
            (5, 12),
            (5, 2),
            (2, 2),
            (2, 12),
            (1, 12),
            (1, 2),
            (0, 2),
        ])
        .unwrap();
        assert!(single_guard_check(&comb).is_none());
    }

    #[test]
    fn dyadic_examples() {
        let sq = square();
        let t = DyadicCoreTable::build(&sq);
        assert_eq!(t.depth(), 3);
        let mut v = t.entry(0, 2).vertices();
        v.sort();
        assert_eq!(v.len(), 4);
        let quarter = t.entry(0, 1);
        assert_eq!(quarter.vertices(), vec![Point2::from_ints(1, 0)]);
        assert!(quarter.contains(&Point2::from_ints(-5, 3)));
        assert!(!quarter.contains(&Point2::from_ints(2, 3)));

        let l = l_shape();
        let t = DyadicCoreTable::build(&l);
        let e21 = t.entry(2, 1);
        assert_eq!(e21.vertices(), vec![Point2::from_ints(1, 1)]);
        assert!(e21.contains(&Point2::from_ints(-4, -4)));
        assert!(!e21.contains(&pt((3, 2), (0, 1))));
        assert!(!e21.contains(&pt((0, 1), (3, 2))));
    }

    #[test]
    fn range_query_examples() {
        let sq = square();
        let t = DyadicCoreTable::build(&sq);
        let (a, b) = t.range_core_query(EdgeRange::new(2, 1, 4));
        assert!(std::ptr::eq(a, b));
        let (a, b) = t.range_core_query(EdgeRange::new(1, 2, 4));
        assert!(std::ptr::eq(a, b));
        let (a, b) = t.range_core_query(EdgeRange::new(0, 3, 4));
        assert!(std::ptr::eq(a, t.entry(0, 1)));
        assert!(std::ptr::eq(b, t.entry(1, 1)));
    }

    #[test]
    fn maximal_left_range_examples() {
        let sq = square();
        let m = BoundaryPoint::new(0, ratio(1, 2), 4);
        assert_eq!(
            maximal_left_range(&sq, &pt((1, 2), (1, 2)), &m).unwrap(),
            EdgeRange::full(4)
        );

        let l = l_shape();
        let m = BoundaryPoint::new(0, ratio(1, 2), 6);
        assert_eq!(
            maximal_left_range(&l, &pt((3, 2), (1, 2)), &m).unwrap(),
            EdgeRange::from_to(4, 2, 6)
        );
        let m = BoundaryPoint::new(3, ratio(1, 2), 6);
        assert_eq!(
            maximal_left_range(&l, &pt((1, 2), (3, 2)), &m).unwrap(),
            EdgeRange::from_to(3, 1, 6)
        );
        let m = BoundaryPoint::new(3, ratio(1, 2), 6);
        assert_eq!(
            maximal_left_range(&l, &pt((3, 2), (1, 2)), &m),
            Err(VisibilityError::PreconditionViolated)
        );
    }

    #[test]
    fn sees_examples() {
        let sq = square();
        assert!(sees(
            &sq,
            &Point2::from_ints(0, 0),
            &Point2::from_ints(1, 1)
        ));
        let l = l_shape();
        assert!(sees(&l, &Point2::from_ints(2, 0), &Point2::from_ints(0, 2)));
        assert!(!sees(
            &l,
            &Point2::from_ints(2, 1),
            &Point2::from_ints(1, 2)
        ));
        // along a boundary edge
        assert!(sees(&l, &Point2::from_ints(0, 0), &Point2::from_ints(2, 0)));
        // along the extension of an edge leaving the polygon
        assert!(sees(&l, &Point2::from_ints(2, 1), &Point2::from_ints(0, 1)));
        assert!(!sees(&l, &pt((3, 2), (1, 2)), &pt((1, 2), (2, 1))));
    }

    #[test]
    fn ray_exit_examples() {
        let sq = square();
        let c = pt((1, 2), (1, 2));
        assert_eq!(
            ray_exit(&sq, &c, &Point2::from_ints(1, 0)),
            pt((1, 1), (1, 2))
        );
        assert_eq!(
            ray_exit(&sq, &c, &Point2::from_ints(-1, -1)),
            Point2::from_ints(0, 0)
        );
        let l = l_shape();
        assert_eq!(
            ray_exit(&l, &pt((3, 2), (1, 2)), &Point2::new(int(-1), int(1))),
            Point2::from_ints(0, 2)
        );
        // a boundary origin whose ray leaves immediately
        assert_eq!(
            ray_exit(&sq, &Point2::from_ints(1, 0), &Point2::from_ints(1, 1)),
            Point2::from_ints(1, 0)
        );
    }

    #[test]
    fn visible_boundary_of_l_shape() {
        let l = l_shape();
        let vb = VisibleBoundary::compute(&l, &pt((3, 2), (1, 2))).unwrap();
        // edge 4 runs (1,2)->(0,2); only its endpoint (0,2) is visible
        assert_eq!(vb.intervals[4], vec![(int(1), int(1))]);
        // edge 3 (1,1)->(1,2) is seen edge-on: only the reflex vertex
        assert_eq!(vb.intervals[3], vec![(int(0), int(0))]);
        assert_eq!(vb.intervals[5], vec![(int(0), int(1))]);
        let chain = vb.forward_chain(&BoundaryPoint::vertex(0)).unwrap();
        assert_eq!(
            chain,
            Chain::arc(BoundaryPoint::vertex(0), BoundaryPoint::vertex(3))
        );
        let whole = vb
            .maximal_chain(&BoundaryPoint::new(0, ratio(1, 2), 6))
            .unwrap();
        assert_eq!(
            whole,
            Chain::arc(BoundaryPoint::vertex(5), BoundaryPoint::vertex(3))
        );

        let kernel = VisibleBoundary::compute(&l, &pt((1, 2), (1, 2))).unwrap();
        assert!(kernel.fully_visible());
        assert_eq!(
            kernel.maximal_chain(&BoundaryPoint::vertex(2)),
            Some(Chain::Full)
        );
        assert_eq!(
            kernel.forward_chain(&BoundaryPoint::vertex(2)),
            Some(Chain::Full)
        );
    }

    #[test]
    fn visibility_polygon_examples() {
        let sq = square();
        let vp = visibility_polygon(&sq, &pt((1, 3), (2, 3))).unwrap();
        assert_eq!(vp.ring, sq.vertices().to_vec());
        let l = l_shape();
        let vp = visibility_polygon(&l, &pt((3, 2), (1, 2))).unwrap();
        assert!(vp.contains(&pt((1, 2), (3, 2))));
        assert!(!vp.contains(&pt((3, 4), (7, 4))));
        assert!(vp.contains(&Point2::from_ints(1, 1)));
        let full = visibility_polygon(&l, &pt((1, 2), (1, 2))).unwrap();
        for q in [
            pt((3, 2), (1, 2)),
            pt((1, 2), (3, 2)),
            pt((19, 10), (9, 10)),
        ] {
            assert!(full.contains(&q));
        }
        assert_eq!(
            visibility_polygon(&l, &Point2::from_ints(3, 3)).unwrap_err(),
            VisibilityError::PointOutside
        );
    }
}
