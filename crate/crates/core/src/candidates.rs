//! Arrangement of supporting lines, the candidate guard set, the chain
//! index and the start set.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{format_scalar, int, on_segment, orient, DirectedLine, Point2, Scalar};
use crate::parallel::ordered_map;
use crate::paths::PathStructure;
use crate::polygon::{
    cyclic_offset, BoundaryPoint, Chain, ContiguousGuard, Location, SimplePolygon,
};
use crate::visibility::{maximal_left_range, ray_exit, sees};

/// Intersection of the supporting lines of edges `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementVertex {
    pub c: Point2,
    pub edges: (usize, usize),
    pub inside: bool,
}

/// Every pairwise intersection of supporting lines, plus the shared vertex of
/// consecutive edges lying on one line.
pub fn arrangement_vertices(p: &SimplePolygon) -> Vec<ArrangementVertex> {
    let n = p.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (li, lj) = (p.edge_line(i), p.edge_line(j));
            let c = match crate::exact::line_intersection(li, lj) {
                Some(c) => c,
                None => {
                    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    if adjacent && li.same_line(lj) {
                        if j == i + 1 {
                            p.vertex(j).clone()
                        } else {
                            p.vertex(0).clone()
                        }
                    } else {
                        continue;
                    }
                }
            };
            let inside = p.point_in_polygon(&c) != Location::Outside;
            out.push(ArrangementVertex {
                c,
                edges: (i, j),
                inside,
            });
        }
    }
    out
}

/// Parameters on edge `e` of the points it shares with segment `[g, h]`.
fn edge_hits(p: &SimplePolygon, e: usize, g: &Point2, h: &Point2) -> Option<(Scalar, Scalar)> {
    let (a, b) = p.edge(e);
    let line = p.edge_line(e);
    if g == h {
        return on_segment(a, b, g).then(|| {
            let t = line.param_of(g);
            (t.clone(), t)
        });
    }
    let o1 = orient(g, h, a);
    let o2 = orient(g, h, b);
    if o1 == 0 && o2 == 0 {
        // collinear: clip the edge to the segment
        let seg = DirectedLine::through(g, h);
        let (sa, sb) = (seg.param_of(a), seg.param_of(b));
        let zero = Scalar::zero();
        let one = Scalar::one();
        let to_edge = |s: &Scalar| line.param_of(&seg.point_at(s));
        let (lo_s, hi_s) = if sa <= sb { (sa, sb) } else { (sb, sa) };
        let lo = if lo_s > zero { lo_s } else { zero };
        let hi = if hi_s < one { hi_s } else { one };
        if lo > hi {
            return None;
        }
        let (t1, t2) = (to_edge(&lo), to_edge(&hi));
        return Some(if t1 <= t2 { (t1, t2) } else { (t2, t1) });
    }
    let seg = DirectedLine::through(g, h);
    let s = seg.intersection_param(line)?;
    if s < Scalar::zero() || s > Scalar::one() {
        return None;
    }
    let q = seg.point_at(&s);
    if !on_segment(a, b, &q) {
        return None;
    }
    let t = line.param_of(&q);
    Some((t.clone(), t))
}

/// The inclusion-maximal chain through `x` that `g` sees entirely.
///
/// The chain is confined to the run of edges `g` is left of; its ends are
/// where the sight lines from `g` along the last legs of the geodesics from
/// the run's end vertices meet the run.
pub fn maximal_chain_through(
    p: &SimplePolygon,
    ps: &PathStructure,
    g: &Point2,
    x: &BoundaryPoint,
) -> Option<Chain> {
    let n = p.n();
    let xp = p.locate(x);
    if !sees(p, g, &xp) {
        return None;
    }
    let range = maximal_left_range(p, g, x).ok()?;
    if range.is_full(n) {
        return Some(Chain::Full);
    }
    let s = BoundaryPoint::vertex(range.first);
    let t = BoundaryPoint::vertex((range.first + range.len) % n);
    let x_off = cyclic_offset(&s, x, n);
    debug_assert!(x_off <= int(range.len as i64));

    let sight_exit = |end: &BoundaryPoint| -> Option<Point2> {
        let ep = p.locate(end);
        if &ep == g {
            return None;
        }
        let path = ps.shortest_path(&ep, g).ok()?;
        let r = &path.points[path.points.len() - 2];
        Some(ray_exit(p, g, &(r - g)))
    };

    let u = match sight_exit(&s) {
        None => s.clone(),
        Some(exit) => {
            let mut found = None;
            for k in 0..range.len {
                let e = (range.first + k) % n;
                if let Some((lo, _)) = edge_hits(p, e, g, &exit) {
                    if int(k as i64) + &lo <= x_off {
                        found = Some(BoundaryPoint::new(e, lo, n));
                    }
                    break;
                }
            }
            found.unwrap_or_else(|| x.clone())
        }
    };
    let v = match sight_exit(&t) {
        None => t.clone(),
        Some(exit) => {
            let mut found = None;
            for k in (0..range.len).rev() {
                let e = (range.first + k) % n;
                if let Some((_, hi)) = edge_hits(p, e, g, &exit) {
                    if int(k as i64) + &hi >= x_off {
                        found = Some(BoundaryPoint::new(e, hi, n));
                    }
                    break;
                }
            }
            found.unwrap_or_else(|| x.clone())
        }
    };
    Some(Chain::arc(u, v))
}

/// Which endpoint of the two defining edges a candidate was grown from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndpointTag {
    A,
    B,
    E,
    F,
}

impl fmt::Display for EndpointTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EndpointTag::A => "a",
            EndpointTag::B => "b",
            EndpointTag::E => "e",
            EndpointTag::F => "f",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateGuard {
    pub guard: ContiguousGuard,
    pub edges: (usize, usize),
    pub tag: EndpointTag,
}

impl CandidateGuard {
    /// `c.x c.y edge_i edge_j x_tag start_edge start_t end_edge end_t`.
    pub fn dump_line(&self) -> String {
        let g = &self.guard.g;
        let chain = match &self.guard.chain {
            Chain::Full => "- - - -".to_string(),
            Chain::Arc { start, end } => format!(
                "{} {} {} {}",
                start.edge,
                format_scalar(&start.t),
                end.edge,
                format_scalar(&end.t)
            ),
        };
        format!(
            "{} {} {} {} {} {}",
            format_scalar(&g.x),
            format_scalar(&g.y),
            self.edges.0,
            self.edges.1,
            self.tag,
            chain
        )
    }
}

#[derive(Clone, Debug)]
pub struct CandidateGuardSet {
    pub guards: Vec<CandidateGuard>,
    pub arrangement_size: usize,
    pub inside_count: usize,
}

impl CandidateGuardSet {
    pub fn build(p: &SimplePolygon, ps: &PathStructure, threads: usize) -> Self {
        let n = p.n();
        let arrangement = arrangement_vertices(p);
        let inside: Vec<&ArrangementVertex> = arrangement.iter().filter(|a| a.inside).collect();
        let per_vertex = ordered_map(&inside, threads, |av| {
            let (i, j) = av.edges;
            let ends = [
                (EndpointTag::A, i),
                (EndpointTag::B, (i + 1) % n),
                (EndpointTag::E, j),
                (EndpointTag::F, (j + 1) % n),
            ];
            let mut out = Vec::new();
            for (tag, vi) in ends {
                let x = BoundaryPoint::vertex(vi);
                if let Some(chain) = maximal_chain_through(p, ps, &av.c, &x) {
                    let zero_length = matches!(&chain, Chain::Arc { start, end } if start == end);
                    if !zero_length {
                        out.push(CandidateGuard {
                            guard: ContiguousGuard {
                                g: av.c.clone(),
                                chain,
                            },
                            edges: av.edges,
                            tag,
                        });
                    }
                }
            }
            out
        });
        let mut guards: Vec<CandidateGuard> = Vec::new();
        for cand in per_vertex.into_iter().flatten() {
            if !guards.iter().any(|g| g.guard == cand.guard) {
                guards.push(cand);
            }
        }
        CandidateGuardSet {
            guards,
            arrangement_size: arrangement.len(),
            inside_count: inside.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }

    pub fn dump(&self) -> String {
        self.guards.iter().map(|g| g.dump_line() + "\n").collect()
    }
}

/// One step of the pruned staircase, in linearized boundary parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEntry {
    pub start: Scalar,
    pub end: Scalar,
    pub guard: ContiguousGuard,
}

/// Chains sorted by start with every chain contained in a predecessor
/// removed, so starts and ends both increase strictly.
#[derive(Clone, Debug)]
pub struct ChainIndex {
    n: usize,
    entries: Vec<IndexEntry>,
    full: Option<ContiguousGuard>,
}

impl ChainIndex {
    pub fn build(n: usize, guards: &[ContiguousGuard]) -> Self {
        let nn = int(n as i64);
        let mut full = None;
        let mut raw: Vec<IndexEntry> = Vec::new();
        for g in guards {
            match &g.chain {
                Chain::Full => {
                    if full.is_none() {
                        full = Some(g.clone());
                    }
                }
                Chain::Arc { start, end } => {
                    let s = start.param();
                    let e = &s + cyclic_offset(start, end, n);
                    raw.push(IndexEntry {
                        start: &s - &nn,
                        end: &e - &nn,
                        guard: g.clone(),
                    });
                    raw.push(IndexEntry {
                        start: s,
                        end: e,
                        guard: g.clone(),
                    });
                }
            }
        }
        // equal starts: larger end first, then keep the earliest input
        raw.sort_by(|a, b| a.start.cmp(&b.start).then_with(|| b.end.cmp(&a.end)));
        let mut entries: Vec<IndexEntry> = Vec::new();
        for e in raw {
            if entries.last().is_none_or(|last| e.end > last.end) {
                if entries.last().is_some_and(|last| last.start == e.start) {
                    continue;
                }
                entries.push(e);
            }
        }
        ChainIndex { n, entries, full }
    }

    pub fn entries(&self) -> &[IndexEntry] {
        &self.entries
    }

    pub fn full_guard(&self) -> Option<&ContiguousGuard> {
        self.full.as_ref()
    }

    /// Number of distinct staircase chains (each appears twice when linearized).
    pub fn len(&self) -> usize {
        let nn = int(self.n as i64);
        self.entries
            .iter()
            .filter(|e| e.start >= Scalar::zero() && e.start < nn)
            .count()
            + usize::from(self.full.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The chain containing `u` whose end is farthest from `u`, with that
    /// end; `None` when no indexed chain contains `u`.
    pub fn query(&self, u: &BoundaryPoint) -> Option<(ContiguousGuard, BoundaryPoint)> {
        if let Some(full) = &self.full {
            return Some((full.clone(), u.clone()));
        }
        let p = u.param();
        let idx = self.entries.partition_point(|e| e.start <= p);
        if idx == 0 {
            return None;
        }
        let e = &self.entries[idx - 1];
        if e.end < p {
            return None;
        }
        Some((e.guard.clone(), BoundaryPoint::from_param(&e.end, self.n)))
    }
}

/// All vertices plus every finite chain start, sorted and deduplicated.
pub fn build_start_set(p: &SimplePolygon, guards: &[ContiguousGuard]) -> Vec<BoundaryPoint> {
    let mut out: Vec<BoundaryPoint> = (0..p.n()).map(BoundaryPoint::vertex).collect();
    for g in guards {
        if let Chain::Arc { start, .. } = &g.chain {
            out.push(start.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `v` is a reflex vertex or the segment from `v` to `g` passes through one.
pub fn end_is_explained(p: &SimplePolygon, g: &Point2, v: &BoundaryPoint) -> bool {
    if v.is_vertex() && p.is_reflex(v.edge) {
        return true;
    }
    let vp = p.locate(v);
    (0..p.n()).any(|i| {
        p.is_reflex(i) && {
            let r = p.vertex(i);
            r != &vp && r != g && on_segment(&vp, g, r)
        }
    })
}

/// Mirror image of [`end_is_explained`] for chain starts.
pub fn start_is_explained(p: &SimplePolygon, g: &Point2, u: &BoundaryPoint) -> bool {
    end_is_explained(p, g, u)
}
