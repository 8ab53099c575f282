//! Brute-force reference implementations used to cross-check the solver.
//!
//! Nothing here shares code with the query structures beyond the exact
//! predicates: chains come from per-edge visibility intervals, geodesics
//! from a visibility graph, and cores are intersected directly.

use std::cell::RefCell;
use std::collections::{BinaryHeap, HashMap};
use std::rc::Rc;

use num_traits::{One, Signed, Zero};

use crate::candidates::arrangement_vertices;
use crate::exact::{
    cross, dot, format_scalar, int, ratio, ConvexRegion, DirectedLine, Point2, Scalar,
};
use crate::polygon::{
    cyclic_offset, BoundaryPoint, Chain, ContiguousGuard, Location, SimplePolygon,
};
use crate::solver::{GuardSolution, SolverConfig, SolverState};
use crate::visibility::{
    core_of_range, sees, single_guard_check, visibility_polygon, EdgeRange, VisibleBoundary,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Boundary sample points per edge.
    pub density: usize,
    /// Also scan a rational grid of guard positions (only used for n ≤ 8).
    pub grid: bool,
    pub grid_steps: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            density: 7,
            grid: false,
            grid_steps: 12,
        }
    }
}

/// Maximal chain starting at `u` that `g` sees, by walking visible intervals.
pub fn oracle_max_chain_from_guard(
    p: &SimplePolygon,
    g: &Point2,
    u: &BoundaryPoint,
) -> Option<Chain> {
    let vb = VisibleBoundary::compute(p, g).ok()?;
    vb.forward_chain(u)
}

/// Offset from `u` reached by a chain starting at `u` (`n` for the whole boundary).
pub fn reach(chain: &Chain, u: &BoundaryPoint, n: usize) -> Scalar {
    match chain {
        Chain::Full => int(n as i64),
        Chain::Arc { end, .. } => cyclic_offset(u, end, n),
    }
}

/// Visibility-graph shortest path with floating-point lengths.
pub fn oracle_geodesic(p: &SimplePolygon, s: &Point2, t: &Point2) -> Vec<Point2> {
    if s == t {
        return vec![s.clone()];
    }
    let mut nodes: Vec<Point2> = vec![s.clone(), t.clone()];
    nodes.extend(p.vertices().iter().filter(|v| *v != s && *v != t).cloned());
    let m = nodes.len();
    let coords: Vec<(f64, f64)> = nodes.iter().map(|q| q.to_f64()).collect();
    let mut dist = vec![f64::INFINITY; m];
    let mut prev = vec![usize::MAX; m];
    let mut done = vec![false; m];
    #[derive(PartialEq)]
    struct Item(f64, usize);
    impl Eq for Item {}
    impl PartialOrd for Item {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for Item {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            o.0.total_cmp(&self.0).then(o.1.cmp(&self.1))
        }
    }
    let mut heap = BinaryHeap::new();
    dist[0] = 0.0;
    heap.push(Item(0.0, 0));
    while let Some(Item(d, a)) = heap.pop() {
        if done[a] {
            continue;
        }
        done[a] = true;
        if a == 1 {
            break;
        }
        for b in 0..m {
            if done[b] || b == a {
                continue;
            }
            let w = (coords[a].0 - coords[b].0).hypot(coords[a].1 - coords[b].1);
            if d + w < dist[b] - 1e-12 && sees(p, &nodes[a], &nodes[b]) {
                dist[b] = d + w;
                prev[b] = a;
                heap.push(Item(dist[b], b));
            }
        }
    }
    let mut path = vec![t.clone()];
    let mut cur = 1;
    while cur != 0 {
        cur = prev[cur];
        assert!(
            cur != usize::MAX,
            "target unreachable in the visibility graph"
        );
        path.push(nodes[cur].clone());
    }
    path.reverse();
    path
}

/// Caches the visible boundary of every guard position it is asked about.
pub struct Oracle<'a> {
    pub polygon: &'a SimplePolygon,
    pub config: OracleConfig,
    arrangement: Vec<Point2>,
    cache: RefCell<HashMap<Point2, Rc<VisibleBoundary>>>,
    differences: RefCell<Vec<String>>,
}

impl<'a> Oracle<'a> {
    pub fn new(p: &'a SimplePolygon, config: OracleConfig) -> Self {
        let mut arrangement: Vec<Point2> = arrangement_vertices(p)
            .into_iter()
            .filter(|a| a.inside)
            .map(|a| a.c)
            .collect();
        arrangement.sort();
        arrangement.dedup();
        Oracle {
            polygon: p,
            config,
            arrangement,
            cache: RefCell::new(HashMap::new()),
            differences: RefCell::new(Vec::new()),
        }
    }

    pub fn visible(&self, g: &Point2) -> Option<Rc<VisibleBoundary>> {
        if let Some(vb) = self.cache.borrow().get(g) {
            return Some(vb.clone());
        }
        let vb = Rc::new(VisibleBoundary::compute(self.polygon, g).ok()?);
        self.cache.borrow_mut().insert(g.clone(), vb.clone());
        Some(vb)
    }

    pub fn chain_from(&self, g: &Point2, u: &BoundaryPoint) -> Option<Chain> {
        self.visible(g)?.forward_chain(u)
    }

    pub fn arrangement_points(&self) -> &[Point2] {
        &self.arrangement
    }

    /// Guard positions worth trying for chains starting at `u`.
    pub fn candidates_for(&self, u: &BoundaryPoint) -> Vec<Point2> {
        let p = self.polygon;
        let n = p.n();
        let up = p.locate(u);
        let mut out: Vec<Point2> = self.arrangement.clone();
        for k in 0..n {
            let far = p.vertex(u.edge + k + 1);
            if far == &up {
                continue;
            }
            let path = oracle_geodesic(p, &up, far);
            if path
                .windows(3)
                .any(|w| crate::exact::orient(&w[0], &w[1], &w[2]) < 0)
            {
                continue;
            }
            let core = core_of_range(p, EdgeRange::new(u.edge, k + 1, n));
            if core.is_empty() {
                continue;
            }
            let ell = DirectedLine::through(&path[1], &up);
            out.extend(core.line_section(&ell).finite_points());
            out.extend(core.vertices());
        }
        out.retain(|g| p.point_in_polygon(g) != Location::Outside);
        out.sort();
        out.dedup();
        out
    }

    /// Best guard for chains starting at `u`, over every candidate position.
    pub fn max_guard(&self, u: &BoundaryPoint) -> Option<ContiguousGuard> {
        let n = self.polygon.n();
        let mut best: Option<(Scalar, ContiguousGuard)> = None;
        for g in self.candidates_for(u) {
            if let Some(chain) = self.chain_from(&g, u) {
                let r = reach(&chain, u, n);
                if best.as_ref().is_none_or(|(b, _)| r > *b) {
                    best = Some((r, ContiguousGuard { g, chain }));
                }
            }
        }
        if self.config.grid && n <= 8 {
            let grid = self.grid_reach(u);
            let found = best.as_ref().map_or(Scalar::zero(), |(r, _)| r.clone());
            if grid > found {
                self.differences.borrow_mut().push(format!(
                    "from {u}: grid reaches {}, candidates reach {}",
                    format_scalar(&grid),
                    format_scalar(&found)
                ));
            }
        }
        best.map(|(_, g)| g)
    }

    /// Cases where grid mode beat the candidate scan. The candidate answer
    /// is still the one returned; these are only reported.
    pub fn differences(&self) -> Vec<String> {
        self.differences.borrow().clone()
    }

    /// Best reach from `u` over a rational grid of guard positions plus the
    /// arrangement; an assumption-free lower bound on the true maximum.
    pub fn grid_reach(&self, u: &BoundaryPoint) -> Scalar {
        let p = self.polygon;
        let n = p.n();
        let steps = self.config.grid_steps as i64;
        let xs: Vec<&Scalar> = p.vertices().iter().map(|v| &v.x).collect();
        let ys: Vec<&Scalar> = p.vertices().iter().map(|v| &v.y).collect();
        let (x0, x1) = (
            (*xs.iter().min().unwrap()).clone(),
            (*xs.iter().max().unwrap()).clone(),
        );
        let (y0, y1) = (
            (*ys.iter().min().unwrap()).clone(),
            (*ys.iter().max().unwrap()).clone(),
        );
        let mut best = Scalar::zero();
        let mut pts: Vec<Point2> = self.arrangement.clone();
        for i in 0..=steps {
            for j in 0..=steps {
                let fx = ratio(i, steps);
                let fy = ratio(j, steps);
                let q = Point2::new(&x0 + &(&x1 - &x0) * fx, &y0 + &(&y1 - &y0) * fy);
                if p.point_in_polygon(&q) != Location::Outside {
                    pts.push(q);
                }
            }
        }
        for g in pts {
            if let Some(chain) = self.chain_from(&g, u) {
                let r = reach(&chain, u, n);
                if r > best {
                    best = r;
                }
            }
        }
        best
    }
}

pub fn oracle_max_guard(p: &SimplePolygon, u: &BoundaryPoint) -> Option<ContiguousGuard> {
    Oracle::new(p, OracleConfig::default()).max_guard(u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardVerdict {
    pub index: usize,
    pub failures: Vec<String>,
}

impl GuardVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub guards: Vec<GuardVerdict>,
    pub coverage_failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.coverage_failures.is_empty() && self.guards.iter().all(|g| g.passed())
    }
}

/// Boundary points worth checking on a chain: its ends, the vertices it
/// passes and the midpoint of every edge fragment.
fn chain_samples(p: &SimplePolygon, chain: &Chain) -> Vec<Point2> {
    let n = p.n();
    let (start, len) = match chain {
        Chain::Full => (BoundaryPoint::vertex(0), int(n as i64)),
        Chain::Arc { start, end } => (start.clone(), cyclic_offset(start, end, n)),
    };
    let s0 = start.param();
    let s1 = &s0 + &len;
    let mut cuts = vec![s0.clone(), s1.clone()];
    let mut k = s0.floor() + Scalar::one();
    while k < s1 {
        cuts.push(k.clone());
        k += Scalar::one();
    }
    cuts.sort();
    cuts.dedup();
    let two = int(2);
    let mut out: Vec<Point2> = Vec::new();
    for (i, c) in cuts.iter().enumerate() {
        out.push(p.locate(&BoundaryPoint::from_param(c, n)));
        if let Some(next) = cuts.get(i + 1) {
            out.push(p.locate(&BoundaryPoint::from_param(&((c + next) / &two), n)));
        }
    }
    out
}

/// `true` when every point of `chain` lies in the visible intervals.
pub fn chain_within(vb: &VisibleBoundary, chain: &Chain, n: usize) -> bool {
    match chain {
        Chain::Full => vb.fully_visible(),
        Chain::Arc { start, end } => match vb.forward_chain(start) {
            None => false,
            Some(reached) => reach(&reached, start, n) >= cyclic_offset(start, end, n),
        },
    }
}

pub fn oracle_validate_solution(p: &SimplePolygon, sol: &GuardSolution) -> ValidationReport {
    let n = p.n();
    let mut guards = Vec::new();
    for (index, guard) in sol.guards.iter().enumerate() {
        let mut failures = Vec::new();
        if p.point_in_polygon(&guard.g) == Location::Outside {
            failures.push(format!("guard {} lies outside the polygon", guard.g));
        }
        for q in chain_samples(p, &guard.chain) {
            if !sees(p, &guard.g, &q) {
                failures.push(format!("guard {} does not see {}", guard.g, q));
            }
        }
        if n <= 20 && failures.is_empty() {
            match visibility_polygon(p, &guard.g) {
                Ok(vp) => {
                    if !chain_within(&vp.boundary, &guard.chain, n) {
                        failures.push("chain leaves the visibility polygon".to_string());
                    }
                    for q in chain_samples(p, &guard.chain) {
                        if !vp.contains(&q) {
                            failures.push(format!("{q} is outside the visibility polygon"));
                        }
                    }
                }
                Err(e) => failures.push(e.to_string()),
            }
        }
        guards.push(GuardVerdict { index, failures });
    }

    let mut coverage_failures = Vec::new();
    match sol.guards.as_slice() {
        [] => coverage_failures.push("no guards".to_string()),
        [single] if single.chain.is_full() => {}
        all => {
            let mut total = Scalar::zero();
            for (i, g) in all.iter().enumerate() {
                let Chain::Arc { start, end } = &g.chain else {
                    coverage_failures.push(format!("guard {i} mixes a full chain with others"));
                    continue;
                };
                let next = &all[(i + 1) % all.len()];
                if next.chain.start() != Some(end) {
                    coverage_failures.push(format!(
                        "chain {i} ends at {end} but the next starts elsewhere"
                    ));
                }
                let len = cyclic_offset(start, end, n);
                if len.is_zero() {
                    coverage_failures.push(format!("chain {i} has zero length"));
                }
                total += len;
            }
            if total != int(n as i64) {
                coverage_failures.push(format!(
                    "chains cover {} of {} boundary units",
                    crate::exact::format_scalar(&total),
                    n
                ));
            }
        }
    }
    if !sol.covered {
        coverage_failures.push("solution is not marked as covering".to_string());
    }
    ValidationReport {
        guards,
        coverage_failures,
    }
}

/// Boundary sample with `density` points per edge at `t = j / density`.
pub fn dense_sample(n: usize, density: usize) -> Vec<BoundaryPoint> {
    (0..n)
        .flat_map(|e| {
            (0..density).map(move |j| BoundaryPoint {
                edge: e,
                t: ratio(j as i64, density as i64),
            })
        })
        .collect()
}

/// Fan triangles of the visibility polygon of `w`.
fn visibility_fan(p: &SimplePolygon, w: &Point2) -> Vec<ConvexRegion> {
    let Ok(vp) = visibility_polygon(p, w) else {
        return vec![];
    };
    let ring = &vp.ring;
    let m = ring.len();
    (0..m)
        .map(|k| ConvexRegion::hull_of(&[w.clone(), ring[k].clone(), ring[(k + 1) % m].clone()]))
        .collect()
}

fn bbox(r: &ConvexRegion) -> Option<(Scalar, Scalar, Scalar, Scalar)> {
    let vs = r.vertices();
    let first = vs.first()?;
    let (mut x0, mut x1, mut y0, mut y1) = (
        first.x.clone(),
        first.x.clone(),
        first.y.clone(),
        first.y.clone(),
    );
    for v in &vs[1..] {
        if v.x < x0 {
            x0 = v.x.clone();
        }
        if v.x > x1 {
            x1 = v.x.clone();
        }
        if v.y < y0 {
            y0 = v.y.clone();
        }
        if v.y > y1 {
            y1 = v.y.clone();
        }
    }
    Some((x0, x1, y0, y1))
}

type Fan = Vec<(ConvexRegion, Option<(Scalar, Scalar, Scalar, Scalar)>)>;

fn fan_with_boxes(p: &SimplePolygon, w: &Point2) -> Fan {
    visibility_fan(p, w)
        .into_iter()
        .map(|t| {
            let b = bbox(&t);
            (t, b)
        })
        .collect()
}

fn fans_meet(fa: &Fan, fb: &Fan) -> bool {
    for (ta, boxa) in fa {
        for (tb, boxb) in fb {
            if let (Some(x), Some(y)) = (boxa, boxb) {
                if x.1 < y.0 || y.1 < x.0 || x.3 < y.2 || y.3 < x.2 {
                    continue;
                }
            }
            if !ta.intersect(tb).is_empty() {
                return true;
            }
        }
    }
    false
}

/// Whether some single point of the polygon sees both `a` and `b`.
pub fn co_visible(p: &SimplePolygon, a: &Point2, b: &Point2) -> bool {
    sees(p, a, b) || fans_meet(&fan_with_boxes(p, a), &fan_with_boxes(p, b))
}

/// Largest set of edge midpoints no two of which one point can see; a
/// lower bound on the number of contiguous guards.
pub fn invisible_witnesses(p: &SimplePolygon) -> Vec<Point2> {
    let n = p.n();
    let half = ratio(1, 2);
    let mids: Vec<Point2> = (0..n)
        .map(|e| {
            p.locate(&BoundaryPoint {
                edge: e,
                t: half.clone(),
            })
        })
        .collect();
    let fans: Vec<Fan> = mids.iter().map(|m| fan_with_boxes(p, m)).collect();
    let mut conflict = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = sees(p, &mids[i], &mids[j]) || fans_meet(&fans[i], &fans[j]);
            conflict[i][j] = c;
            conflict[j][i] = c;
        }
    }
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn grow(
        k: usize,
        n: usize,
        conflict: &[Vec<bool>],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() + (n - k) <= best.len() {
            return;
        }
        if k == n {
            *best = current.clone();
            return;
        }
        if current.iter().all(|&c| !conflict[c][k]) {
            current.push(k);
            grow(k + 1, n, conflict, current, best);
            current.pop();
        }
        grow(k + 1, n, conflict, current, best);
    }
    grow(0, n, &conflict, &mut current, &mut best);
    best.into_iter().map(|i| mids[i].clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimumBounds {
    pub lower: usize,
    pub upper: usize,
    /// Witness points proving the lower bound, when the certificate applied.
    pub witnesses: Vec<Point2>,
}

/// Sandwich bounds on the optimum: greedy from a dense sample gives an upper
/// bound, one less is a lower bound, and pairwise-invisible witnesses can
/// raise it.
pub fn oracle_optimum_bounds(p: &SimplePolygon, density: usize) -> OptimumBounds {
    if single_guard_check(p).is_some() {
        return OptimumBounds {
            lower: 1,
            upper: 1,
            witnesses: vec![],
        };
    }
    let state = SolverState::build(
        p,
        SolverConfig {
            parallelism: 1,
            paranoid: false,
        },
    );
    let mut starts = dense_sample(p.n(), density);
    starts.extend(state.starts.iter().cloned());
    let upper = starts
        .iter()
        .map(|u| state.greedy_from(u).map(|s| s.len()).unwrap_or(usize::MAX))
        .min()
        .unwrap_or(usize::MAX);
    let mut lower = upper.saturating_sub(1).max(1);
    let witnesses = invisible_witnesses(p);
    if witnesses.len() > lower {
        lower = witnesses.len().min(upper);
    }
    OptimumBounds {
        lower,
        upper,
        witnesses,
    }
}

/// Definition of a bad guard, for chains that do not wind straight back
/// along the sight line (those are reported as `None`).
pub fn is_bad_guard(
    p: &SimplePolygon,
    g: &Point2,
    u: &BoundaryPoint,
    v: &BoundaryPoint,
) -> Option<bool> {
    let n = p.n();
    let (up, vp) = (p.locate(u), p.locate(v));
    let len = cyclic_offset(u, v, n);
    // (I) a vertex strictly inside the chain
    let first_vertex = if u.is_vertex() {
        int(1)
    } else {
        Scalar::one() - &u.t
    };
    let has_vertex = first_vertex < len;
    // (II)
    let apart = &up != g && &vp != g;
    if !(has_vertex && apart) {
        return Some(false);
    }
    // (III) counter-clockwise angle from u to v around g exceeds π
    let du = &up - g;
    let dv = &vp - g;
    let c = cross(&du, &dv);
    if c.is_zero() && dot(&du, &dv).is_positive() {
        return None;
    }
    let reflex_angle = c.is_negative();
    if !reflex_angle {
        return Some(false);
    }
    // (IV)
    let path = oracle_geodesic(p, &up, &vp);
    Some(path.len() > 2)
}
