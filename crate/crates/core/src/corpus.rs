//! Seeded polygon generators for tests, benchmarks and the CLI corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{orient, Point2};
use crate::polygon::SimplePolygon;
use crate::visibility::single_guard_check;

fn segments_cross(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let o = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| {
        ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum()
    };
    let within = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| {
        p.0.min(q.0) <= r.0 && r.0 <= p.0.max(q.0) && p.1.min(q.1) <= r.1 && r.1 <= p.1.max(q.1)
    };
    let (o1, o2, o3, o4) = (o(a, b, c), o(a, b, d), o(c, d, a), o(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within(a, b, c))
        || (o2 == 0 && within(a, b, d))
        || (o3 == 0 && within(c, d, a))
        || (o4 == 0 && within(c, d, b))
}

/// Random simple polygon on `n` distinct integer points of `[0, size]^2`,
/// made simple by 2-opt moves and oriented counter-clockwise.
pub fn random_simple_polygon(rng: &mut impl Rng, n: usize, size: i64) -> SimplePolygon {
    loop {
        let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
        while pts.len() < n {
            let q = (rng.gen_range(0..=size), rng.gen_range(0..=size));
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
        pts.shuffle(rng);
        let mut steps = 0;
        'untangle: while steps < 50 * n * n {
            for i in 0..n {
                for j in i + 2..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    if segments_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n]) {
                        pts[i + 1..=j].reverse();
                        steps += 1;
                        continue 'untangle;
                    }
                }
            }
            break;
        }
        let raw: Vec<Point2> = pts.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect();
        if let Ok(p) = SimplePolygon::validate_with(raw, true) {
            return p;
        }
    }
}

/// Strictly convex polygon with vertices near a circle of radius `radius`.
pub fn random_convex_polygon(rng: &mut impl Rng, n: usize, radius: i64) -> SimplePolygon {
    loop {
        let mut pts: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0.0..std::f64::consts::TAU);
                (
                    (radius as f64 * a.cos()).round() as i64,
                    (radius as f64 * a.sin()).round() as i64,
                )
            })
            .collect();
        pts.sort();
        pts.dedup();
        let hull = convex_hull(&pts);
        if hull.len() >= 3 {
            let raw = hull.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect();
            if let Ok(p) = SimplePolygon::validate(raw) {
                return p;
            }
        }
    }
}

/// Monotone-chain hull, counter-clockwise, without collinear points.
fn convex_hull(pts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Polygon star-shaped around the origin, which is returned as the kernel
/// certificate.
pub fn random_star_polygon(rng: &mut impl Rng, n: usize, radius: i64) -> (SimplePolygon, Point2) {
    let origin = Point2::origin();
    loop {
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 < n {
                angles[i + 1]
            } else {
                angles[0] + std::f64::consts::TAU
            };
            next - angles[i] < 0.9 * std::f64::consts::PI
        });
        if !gaps_ok {
            continue;
        }
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| {
                let r = radius as f64 * rng.gen_range(0.3..1.0);
                Point2::from_ints((r * a.cos()).round() as i64, (r * a.sin()).round() as i64)
            })
            .collect();
        let certified = (0..n).all(|i| orient(&pts[i], &pts[(i + 1) % n], &origin) > 0);
        if !certified {
            continue;
        }
        if let Ok(p) = SimplePolygon::validate(pts) {
            return (p, origin);
        }
    }
}

/// Comb with `m` tall prongs of width 1 on a base of height 2; it needs
/// exactly `m` contiguous guards.
pub fn comb(m: usize) -> SimplePolygon {
    assert!(m >= 1);
    let m = m as i64;
    let w = 4 * m - 1;
    let mut pts = vec![(0, 0), (w, 0), (w, 2)];
    for j in (0..m).rev() {
        pts.extend([
            (4 * j + 2, 2),
            (4 * j + 2, 12),
            (4 * j + 1, 12),
            (4 * j + 1, 2),
        ]);
    }
    pts.push((0, 2));
    SimplePolygon::from_ints(&pts).expect("comb is simple")
}

pub fn square() -> SimplePolygon {
    SimplePolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
}

pub fn l_shape() -> SimplePolygon {
    SimplePolygon::from_ints(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]).unwrap()
}

/// The standard random corpus: `count` polygons with 5 to `max_n` vertices
/// in `[0, 32]^2`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplePolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(5..=max_n);
            random_simple_polygon(&mut rng, n, 32)
        })
        .collect()
}

/// The first `count` polygons of the standard random stream that need more
/// than one guard.
pub fn nontrivial_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplePolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(5..=max_n);
        let p = random_simple_polygon(&mut rng, n, 32);
        if single_guard_check(&p).is_none() {
            out.push(p);
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
