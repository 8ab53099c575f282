//! Triangulation, geodesic shortest paths and ray shooting.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::exact::{orient, DirectedLine, Point2};
use crate::polygon::{BoundaryPoint, SimplePolygon};
use crate::visibility::ray_exit;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("query point lies outside the polygon")]
    PointOutside,
    #[error("path query needs two distinct points")]
    DegenerateQuery,
}

/// Ear-clipping triangulation with its dual adjacency.
#[derive(Clone, Debug)]
pub struct PathStructure {
    vertices: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
    neighbors: Vec<Vec<(usize, usize, usize)>>,
}

/// Shortest path inside the polygon, endpoints included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicPath {
    pub points: Vec<Point2>,
}

impl GeodesicPath {
    /// Drops interior points where the path goes straight on.
    pub fn simplified(&self) -> GeodesicPath {
        let mut out: Vec<Point2> = Vec::with_capacity(self.points.len());
        for q in &self.points {
            while out.len() >= 2 && orient(&out[out.len() - 2], &out[out.len() - 1], q) == 0 {
                out.pop();
            }
            out.push(q.clone());
        }
        GeodesicPath { points: out }
    }

    pub fn reversed(&self) -> GeodesicPath {
        GeodesicPath {
            points: self.points.iter().rev().cloned().collect(),
        }
    }

    pub fn length_f64(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| {
                let (ax, ay) = w[0].to_f64();
                let (bx, by) = w[1].to_f64();
                (bx - ax).hypot(by - ay)
            })
            .sum()
    }
}

fn in_triangle(a: &Point2, b: &Point2, c: &Point2, p: &Point2) -> bool {
    orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0
}

impl PathStructure {
    pub fn build(p: &SimplePolygon) -> Self {
        let vertices = p.vertices().to_vec();
        let triangles = ear_clip(&vertices);
        let mut by_edge: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (ti, t) in triangles.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                by_edge
                    .entry((a.min(b), a.max(b)))
                    .or_default()
                    .push((ti, k));
            }
        }
        let mut neighbors = vec![Vec::new(); triangles.len()];
        let mut keys: Vec<_> = by_edge.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let users = &by_edge[&key];
            if users.len() == 2 {
                let (t0, k0) = users[0];
                let (t1, k1) = users[1];
                let t0e = triangles[t0];
                let t1e = triangles[t1];
                // crossing from A into B over A's edge (a_k, a_{k+1}):
                // a_{k+1} is on the left, a_k on the right
                neighbors[t0].push((t1, t0e[(k0 + 1) % 3], t0e[k0]));
                neighbors[t1].push((t0, t1e[(k1 + 1) % 3], t1e[k1]));
            }
        }
        PathStructure {
            vertices,
            triangles,
            neighbors,
        }
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Number of dual-tree edges.
    pub fn dual_edge_count(&self) -> usize {
        self.neighbors.iter().map(|v| v.len()).sum::<usize>() / 2
    }

    fn corner(&self, t: usize, k: usize) -> &Point2 {
        &self.vertices[self.triangles[t][k]]
    }

    fn containing(&self, q: &Point2) -> Vec<usize> {
        (0..self.triangles.len())
            .filter(|&t| in_triangle(self.corner(t, 0), self.corner(t, 1), self.corner(t, 2), q))
            .collect()
    }

    /// Portals `(left, right)` along the dual path from a triangle holding
    /// `s` to one holding `t`; empty when some triangle holds both.
    fn portals(&self, s: &Point2, t: &Point2) -> Result<Vec<(usize, usize)>, PathError> {
        let from = self.containing(s);
        let to = self.containing(t);
        if from.is_empty() || to.is_empty() {
            return Err(PathError::PointOutside);
        }
        if from.iter().any(|a| to.contains(a)) {
            return Ok(vec![]);
        }
        let m = self.triangles.len();
        let mut prev: Vec<Option<(usize, usize, usize)>> = vec![None; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for &f in &from {
            seen[f] = true;
            queue.push_back(f);
        }
        let mut goal = None;
        while let Some(cur) = queue.pop_front() {
            if to.contains(&cur) {
                goal = Some(cur);
                break;
            }
            for &(nb, l, r) in &self.neighbors[cur] {
                if !seen[nb] {
                    seen[nb] = true;
                    prev[nb] = Some((cur, l, r));
                    queue.push_back(nb);
                }
            }
        }
        let mut cur = goal.expect("dual graph of a triangulated simple polygon is connected");
        let mut portals = Vec::new();
        while let Some((back, l, r)) = prev[cur] {
            portals.push((l, r));
            cur = back;
        }
        portals.reverse();
        Ok(portals)
    }

    pub fn shortest_path(&self, s: &Point2, t: &Point2) -> Result<GeodesicPath, PathError> {
        if s == t {
            if self.containing(s).is_empty() {
                return Err(PathError::PointOutside);
            }
            return Ok(GeodesicPath {
                points: vec![s.clone()],
            });
        }
        let inner = self.portals(s, t)?;
        let mut portals: Vec<(&Point2, &Point2)> = Vec::with_capacity(inner.len() + 2);
        portals.push((s, s));
        portals.extend(
            inner
                .iter()
                .map(|&(l, r)| (&self.vertices[l], &self.vertices[r])),
        );
        portals.push((t, t));
        Ok(GeodesicPath {
            points: funnel(&portals),
        })
    }

    /// Supporting line of the final segment of the path from `s` to `t`,
    /// directed towards `t`.
    pub fn last_edge_line(&self, s: &Point2, t: &Point2) -> Result<DirectedLine, PathError> {
        if s == t {
            return Err(PathError::DegenerateQuery);
        }
        let path = self.shortest_path(s, t)?;
        let k = path.points.len();
        Ok(DirectedLine::through(
            &path.points[k - 2],
            &path.points[k - 1],
        ))
    }
}

/// Simple funnel algorithm over counter-clockwise portals.
fn funnel(portals: &[(&Point2, &Point2)]) -> Vec<Point2> {
    let mut path: Vec<Point2> = vec![portals[0].0.clone()];
    let push = |path: &mut Vec<Point2>, q: &Point2| {
        if path.last() != Some(q) {
            path.push(q.clone());
        }
    };
    let mut apex = portals[0].0;
    let mut left = portals[0].0;
    let mut right = portals[0].1;
    let (mut left_i, mut right_i) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (pl, pr) = portals[i];
        if orient(apex, right, pr) >= 0 {
            if apex == right || orient(apex, left, pr) < 0 {
                right = pr;
                right_i = i;
            } else {
                push(&mut path, left);
                apex = left;
                right = apex;
                right_i = left_i;
                i = left_i + 1;
                continue;
            }
        }
        if orient(apex, left, pl) <= 0 {
            if apex == left || orient(apex, right, pl) > 0 {
                left = pl;
                left_i = i;
            } else {
                push(&mut path, right);
                apex = right;
                left = apex;
                left_i = right_i;
                i = right_i + 1;
                continue;
            }
        }
        i += 1;
    }
    push(&mut path, portals[portals.len() - 1].0);
    path
}

fn ear_clip(vs: &[Point2]) -> Vec<[usize; 3]> {
    let mut idx: Vec<usize> = (0..vs.len()).collect();
    let mut out = Vec::with_capacity(vs.len().saturating_sub(2));
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m).find(|&k| {
            let (a, b, c) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
            if orient(&vs[a], &vs[b], &vs[c]) <= 0 {
                return false;
            }
            idx.iter()
                .filter(|&&w| w != a && w != b && w != c)
                .all(|&w| !in_triangle(&vs[a], &vs[b], &vs[c], &vs[w]))
        });
        let k = ear.expect("a simple polygon always has a clippable ear");
        out.push([idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]]);
        idx.remove(k);
    }
    out.push([idx[0], idx[1], idx[2]]);
    out
}

pub fn build_paths(p: &SimplePolygon) -> PathStructure {
    PathStructure::build(p)
}

/// `true` when no interior vertex of the path turns right.
pub fn is_left_turning(path: &GeodesicPath) -> bool {
    path.points
        .windows(3)
        .all(|w| orient(&w[0], &w[1], &w[2]) >= 0)
}

/// Boundary point where the ray from `origin` along `direction` leaves the polygon.
pub fn ray_shoot(p: &SimplePolygon, origin: &Point2, direction: &Point2) -> BoundaryPoint {
    let hit = ray_exit(p, origin, direction);
    p.boundary_point_at(&hit)
        .expect("ray exit lies on the boundary")
}
