//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit when any
//! criterion fails. Runs under `cargo test` without the libtest harness.

use std::path::Path;
use std::time::{Duration, Instant};

use cag_cli::run;
use cag_core::candidates::end_is_explained;
use cag_core::corpus::{
    comb, l_shape, nontrivial_corpus, random_convex_polygon, random_star_polygon, rng, square,
};
use cag_core::exact::{ratio, Point2};
use cag_core::oracle::{
    chain_within, dense_sample, is_bad_guard, oracle_max_chain_from_guard, oracle_optimum_bounds,
    oracle_validate_solution, reach, Oracle, OracleConfig,
};
use cag_core::paths::PathStructure;
use cag_core::polygon::{BoundaryPoint, Chain, SimplePolygon};
use cag_core::solver::{solve, SolverConfig, SolverState};
use cag_core::visibility::VisibleBoundary;
use rand::Rng;

const CORPUS_SEED: u64 = 2024;
const CORPUS_SIZE: usize = 100;
const CORPUS_MAX_N: usize = 12;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], summary: String) -> Self {
        let mut detail = summary;
        if let Some(first) = failures.first() {
            detail.push_str(&format!("; {} failure(s), first: {first}", failures.len()));
        }
        Outcome {
            passed: failures.is_empty(),
            detail,
        }
    }
}

fn sequential() -> SolverConfig {
    SolverConfig {
        parallelism: 1,
        paranoid: false,
    }
}

fn ms(d: Duration) -> String {
    format!("{:.0} ms", d.as_secs_f64() * 1e3)
}

fn in_kernel(p: &SimplePolygon, g: &Point2) -> bool {
    (0..p.n()).all(|e| p.edge_line(e).left_or_on(g))
}

fn gate_correctness() -> Outcome {
    let mut r = rng(101);
    let mut polys: Vec<SimplePolygon> = (0..50)
        .map(|_| {
            let n = r.gen_range(3..=64);
            random_convex_polygon(&mut r, n, 1_000_000)
        })
        .collect();
    for _ in 0..50 {
        let n = r.gen_range(5..=64);
        let (p, centre) = random_star_polygon(&mut r, n, 1000);
        assert!(in_kernel(&p, &centre), "generator certificate");
        polys.push(p);
    }
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (i, p) in polys.iter().enumerate() {
        let clock = Instant::now();
        let out = solve(p, &sequential());
        let took = clock.elapsed();
        slowest = slowest.max(took);
        match out {
            Ok(out) if out.solution.len() == 1 && in_kernel(p, &out.solution.guards[0].g) => {}
            Ok(out) => failures.push(format!("instance {i}: k = {}", out.solution.len())),
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
        if took >= Duration::from_secs(1) {
            failures.push(format!("instance {i} took {}", ms(took)));
        }
    }
    Outcome::new(
        &failures,
        format!(
            "{} convex + star instances, slowest solve {}",
            polys.len(),
            ms(slowest)
        ),
    )
}

fn comb_family() -> Outcome {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for m in 2..=6 {
        let p = comb(m);
        let clock = Instant::now();
        let k = solve(&p, &sequential()).map(|o| o.solution.len());
        let solve_time = clock.elapsed();
        let bounds = oracle_optimum_bounds(&p, 7);
        let total = clock.elapsed();
        parts.push(format!(
            "m={m}: {} + {}",
            ms(solve_time),
            ms(total - solve_time)
        ));
        if k != Ok(m) {
            failures.push(format!("m={m}: solve gave {k:?}"));
        }
        if (bounds.lower, bounds.upper) != (m, m) || bounds.witnesses.len() != m {
            failures.push(format!(
                "m={m}: bounds ({}, {}) with {} witnesses",
                bounds.lower,
                bounds.upper,
                bounds.witnesses.len()
            ));
        }
        if total >= Duration::from_secs(10) {
            failures.push(format!("m={m}: solve and certificate took {}", ms(total)));
        }
    }
    Outcome::new(
        &failures,
        format!(
            "k = m and bounds (m, m) for m = 2..6, solve + certificate {}",
            parts.join(", ")
        ),
    )
}

fn oracle_equivalence(corpus: &[SimplePolygon]) -> Outcome {
    let mut failures = Vec::new();
    let mut queries = 0;
    for (i, p) in corpus.iter().enumerate() {
        let n = p.n();
        let state = SolverState::build(p, sequential());
        let oracle = Oracle::new(p, OracleConfig::default());
        for u in &state.starts {
            queries += 1;
            let fast = state.max_guard_query(u).map(|g| g.chain);
            let slow = oracle.max_guard(u).map(|g| g.chain);
            match (fast, slow) {
                (Ok(a), Some(b)) if reach(&a, u, n) == reach(&b, u, n) && a.end() == b.end() => {}
                (a, b) => failures.push(format!("polygon {i} from {u}: query {a:?}, oracle {b:?}")),
            }
        }
    }
    Outcome::new(
        &failures,
        format!("{queries} start points over {} polygons", corpus.len()),
    )
}

fn sandwich(corpus: &[SimplePolygon]) -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    for (i, p) in corpus.iter().enumerate() {
        let state = SolverState::build(p, sequential());
        let k = match state.best_over_starts() {
            Ok(s) => s.len(),
            Err(e) => {
                failures.push(format!("polygon {i}: {e}"));
                continue;
            }
        };
        for u in dense_sample(p.n(), 7) {
            runs += 1;
            match state.greedy_from(&u) {
                Ok(s) if s.len() == k || s.len() == k + 1 => {}
                Ok(s) => {
                    failures.push(format!("polygon {i} from {u}: {} guards, k = {k}", s.len()))
                }
                Err(e) => failures.push(format!("polygon {i} from {u}: {e}")),
            }
        }
    }
    Outcome::new(&failures, format!("{runs} greedy runs"))
}

/// A point of `p`: the centroid of three random boundary points, if inside.
fn random_point_in(p: &SimplePolygon, r: &mut impl Rng) -> Option<Point2> {
    let n = p.n();
    let mut sum = Point2::origin();
    for _ in 0..3 {
        let b = random_boundary_point(n, r);
        sum = &sum + &p.locate(&b);
    }
    let c = sum.scale(&ratio(1, 3));
    p.contains_closed(&c).then_some(c)
}

fn random_boundary_point(n: usize, r: &mut impl Rng) -> BoundaryPoint {
    let den = r.gen_range(1..=12);
    BoundaryPoint::new(r.gen_range(0..n), ratio(r.gen_range(0..den), den), n)
}

fn good_guard_replacement(corpus: &[SimplePolygon]) -> (usize, Vec<String>) {
    let mut r = rng(505);
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 200 && attempts < 200_000 {
        attempts += 1;
        let p = &corpus[r.gen_range(0..corpus.len())];
        let n = p.n();
        let Some(g) = random_point_in(p, &mut r) else {
            continue;
        };
        let Ok(vb) = VisibleBoundary::compute(p, &g) else {
            continue;
        };
        let u = random_boundary_point(n, &mut r);
        let Some(Chain::Arc { end, .. }) = vb.forward_chain(&u) else {
            continue;
        };
        if end == u {
            continue;
        }
        if is_bad_guard(p, &g, &u, &end) != Some(false) {
            continue;
        }
        checked += 1;
        let chain = Chain::arc(u.clone(), end.clone());
        let oracle = Oracle::new(p, OracleConfig::default());
        let replaced = oracle.arrangement_points().iter().any(|c| {
            oracle
                .visible(c)
                .is_some_and(|vc| chain_within(&vc, &chain, n))
        });
        if !replaced {
            failures.push(format!(
                "5a: guard {g} on [{u}, {end}] has no arrangement replacement"
            ));
        }
    }
    if checked < 200 {
        failures.push(format!("5a: only {checked} good guards sampled"));
    }
    (checked, failures)
}

fn structural_properties(corpus: &[SimplePolygon]) -> Outcome {
    let (good, mut failures) = good_guard_replacement(corpus);

    let mut ends = 0;
    for (i, p) in corpus.iter().enumerate() {
        let state = SolverState::build(p, sequential());
        for c in &state.candidates.guards {
            if let Chain::Arc { end, .. } = &c.guard.chain {
                ends += 1;
                if !end_is_explained(p, &c.guard.g, end) {
                    failures.push(format!(
                        "5b: polygon {i}, guard {} ends at {end} unexplained",
                        c.guard.g
                    ));
                }
            }
        }
    }

    let mut r = rng(506);
    let mut pairs = 0;
    let mut attempts = 0;
    while pairs < 500 && attempts < 200_000 {
        attempts += 1;
        let p = &corpus[r.gen_range(0..corpus.len())];
        let n = p.n();
        let Some(g) = random_point_in(p, &mut r) else {
            continue;
        };
        let x = random_boundary_point(n, &mut r);
        let ps = PathStructure::build(p);
        let Some(through) = cag_core::candidates::maximal_chain_through(p, &ps, &g, &x) else {
            continue;
        };
        pairs += 1;
        let forward = oracle_max_chain_from_guard(p, &g, &x);
        let truncated_end = |c: &Chain| c.end().cloned();
        let whole = VisibleBoundary::compute(p, &g)
            .ok()
            .and_then(|vb| vb.maximal_chain(&x));
        match &forward {
            Some(f)
                if truncated_end(f) == truncated_end(&through)
                    && whole.as_ref() == Some(&through) => {}
            _ => failures.push(format!(
                "5c: g = {g}, x = {x}: through {through:?}, oracle {forward:?}"
            )),
        }
    }
    if pairs < 500 {
        failures.push(format!("5c: only {pairs} pairs sampled"));
    }
    Outcome::new(
        &failures,
        format!("(a) {good} good guards, (b) {ends} chain ends, (c) {pairs} (g, x) pairs"),
    )
}

fn report_value(text: &str, key: &str) -> Option<usize> {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(": ")?.parse().ok())
}

fn write_corpus(dir: &Path, corpus: &[SimplePolygon]) -> Vec<String> {
    corpus
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = dir.join(format!("poly{i:03}.poly"));
            std::fs::write(&path, p.to_text()).unwrap();
            path.to_str().unwrap().to_string()
        })
        .collect()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("cag").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8_lossy(&out).into_owned())
}

fn size_bounds(corpus: &[SimplePolygon], files: &[String]) -> Outcome {
    let mut failures = Vec::new();
    let mut worst = (0.0f64, 0.0f64);
    for (i, (p, file)) in corpus.iter().zip(files).enumerate() {
        let state = SolverState::build(p, sequential());
        let s = state.sizes();
        let (code, text) = run_cli(&[file, "--parallel", "1"]);
        let reported = (
            report_value(&text, "sizes.arrangement_inside"),
            report_value(&text, "sizes.guard_set"),
            report_value(&text, "sizes.start_set"),
        );
        if code != 0
            || reported
                != (
                    Some(s.arrangement_inside),
                    Some(s.guard_set),
                    Some(s.start_set),
                )
        {
            failures.push(format!(
                "polygon {i}: report sizes {reported:?} differ from {s:?}"
            ));
        }
        if s.guard_set > 4 * s.arrangement_inside {
            failures.push(format!(
                "polygon {i}: |G| = {} > 4 * {}",
                s.guard_set, s.arrangement_inside
            ));
        }
        if s.start_set > p.n() + s.guard_set {
            failures.push(format!(
                "polygon {i}: |U| = {} > {} + {}",
                s.start_set,
                p.n(),
                s.guard_set
            ));
        }
        let g_ratio = s.guard_set as f64 / (4 * s.arrangement_inside).max(1) as f64;
        let u_ratio = s.start_set as f64 / (p.n() + s.guard_set) as f64;
        worst = (worst.0.max(g_ratio), worst.1.max(u_ratio));
    }
    Outcome::new(
        &failures,
        format!(
            "{} instances, largest |G|/(4|C|) = {:.2}, largest |U|/(n+|G|) = {:.2}",
            corpus.len(),
            worst.0,
            worst.1
        ),
    )
}

fn solution_validity(corpus: &[SimplePolygon]) -> Outcome {
    let mut failures = Vec::new();
    let mut polys: Vec<SimplePolygon> = corpus.to_vec();
    polys.extend((2..=6).map(comb));
    polys.extend([square(), l_shape()]);
    let mut r = rng(707);
    for _ in 0..10 {
        let n = r.gen_range(3..=20);
        polys.push(random_convex_polygon(&mut r, n, 1000));
        polys.push(random_star_polygon(&mut r, n.max(5), 1000).0);
    }
    let mut full_checks = 0;
    for (i, p) in polys.iter().enumerate() {
        match solve(p, &sequential()) {
            Ok(out) => {
                full_checks += usize::from(p.n() <= 20);
                let report = oracle_validate_solution(p, &out.solution);
                if !report.passed() {
                    failures.push(format!("instance {i}: {report:?}"));
                }
            }
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    Outcome::new(
        &failures,
        format!(
            "{} solutions, {full_checks} with visibility polygon containment",
            polys.len()
        ),
    )
}

fn determinism(dir: &Path, files: &[String]) -> Outcome {
    let mut failures = Vec::new();
    for (i, file) in files.iter().enumerate() {
        let mut outputs = Vec::new();
        for pass in 0..2 {
            let svg = dir.join(format!("run{i}_{pass}.svg"));
            let report = dir.join(format!("run{i}_{pass}.txt"));
            let svg_s = svg.to_str().unwrap();
            let report_s = report.to_str().unwrap();
            let (code, _) = run_cli(&[
                file,
                "--parallel",
                "1",
                "--validate",
                "--debug-layers",
                "--svg",
                svg_s,
                "--out",
                report_s,
            ]);
            if code != 0 {
                failures.push(format!("{file}: exit code {code}"));
            }
            outputs.push((
                std::fs::read(&svg).unwrap_or_default(),
                std::fs::read(&report).unwrap_or_default(),
            ));
        }
        if outputs[0] != outputs[1] {
            failures.push(format!("{file}: outputs differ between runs"));
        }
    }
    Outcome::new(
        &failures,
        format!(
            "{} inputs, report and SVG compared byte for byte",
            files.len()
        ),
    )
}

fn main() {
    let clock = Instant::now();
    let corpus = nontrivial_corpus(CORPUS_SEED, CORPUS_SIZE, CORPUS_MAX_N);
    let dir = tempfile::tempdir().expect("temporary directory");
    let mut all: Vec<SimplePolygon> = corpus.clone();
    all.extend((2..=6).map(comb));
    all.extend([square(), l_shape()]);
    let files = write_corpus(dir.path(), &all);

    let criteria: Vec<Criterion> = vec![
        ("gate correctness", Box::new(gate_correctness)),
        ("comb family", Box::new(comb_family)),
        (
            "oracle equivalence of the query",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        ("sandwich property", Box::new(|| sandwich(&corpus))),
        (
            "structural properties",
            Box::new(|| structural_properties(&corpus)),
        ),
        (
            "size bounds",
            Box::new(|| size_bounds(&corpus, &files[..corpus.len()])),
        ),
        ("solution validity", Box::new(|| solution_validity(&corpus))),
        ("determinism", Box::new(|| determinism(dir.path(), &files))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.passed);
        println!(
            "{verdict} criterion {} ({name}): {} [{}]",
            i + 1,
            outcome.detail,
            ms(started.elapsed())
        );
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        clock.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
