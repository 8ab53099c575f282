//! Batch front end: read a polygon file, solve or run one greedy pass, and
//! write a report plus an optional SVG figure.

pub mod args;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use cag_core::oracle::oracle_validate_solution;
use cag_core::polygon::{BoundaryPoint, SimplePolygon};
use cag_core::solver::{solve, GuardSolution, SolveError, SolverConfig, SolverState};
use clap::Parser;

pub use args::{Args, Format};
pub use report::{parse_text_report, RunReport};

pub const EXIT_OK: i32 = 0;
/// Unreadable or unwritable files and bad command lines.
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID_POLYGON: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
/// `--validate` was given and the oracle rejected the solution.
pub const EXIT_VALIDATION_FAILED: i32 = 4;

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn internal_failure(p: &SimplePolygon, config: &SolverConfig, err: &SolveError) -> Failure {
    let state = SolverState::build(p, config.clone());
    let mut message = format!("internal error: {err}\n# polygon\n{}", p.to_text());
    message.push_str("# candidates: x y i j tag start_edge start_t end_edge end_t\n");
    message.push_str(&state.candidates.dump());
    message.push_str(&format!(
        "# start set: {}\n",
        state
            .starts
            .iter()
            .map(BoundaryPoint::to_text)
            .collect::<Vec<_>>()
            .join(" ")
    ));
    Failure::new(EXIT_INTERNAL, message)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", path.display())))
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    match execute(&args, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message.trim_end());
            f.code
        }
    }
}

fn execute(args: &Args, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&args.input).map_err(|e| {
        Failure::new(
            EXIT_IO,
            format!("cannot read {}: {e}", args.input.display()),
        )
    })?;
    let p = SimplePolygon::parse_text(&text, args.auto_orient)
        .map_err(|e| Failure::new(EXIT_INVALID_POLYGON, format!("invalid polygon: {e}")))?;
    let instance = args
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let config = SolverConfig {
        parallelism: args.parallel,
        paranoid: args.paranoid,
    };

    let (solution, gated, sizes, mut timings, mode): (GuardSolution, _, _, _, _) =
        match &args.seed_only {
            Some(seed) => {
                let u = BoundaryPoint::parse(seed, p.n()).ok_or_else(|| {
                    Failure::new(
                        EXIT_IO,
                        format!(
                            "--seed-only expects EDGE:T with EDGE < {}, got {seed}",
                            p.n()
                        ),
                    )
                })?;
                let clock = Instant::now();
                let state = SolverState::build(&p, config.clone());
                let structures = clock.elapsed();
                let clock = Instant::now();
                let sol = state
                    .greedy_from(&u)
                    .map_err(|e| internal_failure(&p, &config, &e))?;
                let timings = cag_core::solver::PhaseTimings {
                    structures,
                    greedy: clock.elapsed(),
                    ..Default::default()
                };
                (
                    sol,
                    false,
                    Some(report::Sizes::from(&state.sizes())),
                    report::Timings::new(&timings),
                    "seed",
                )
            }
            None => {
                let out = solve(&p, &config).map_err(|e| internal_failure(&p, &config, &e))?;
                let sizes = out.sizes.as_ref().map(report::Sizes::from);
                (
                    out.solution,
                    out.gated,
                    sizes,
                    report::Timings::new(&out.timings),
                    "solve",
                )
            }
        };

    let validation = if args.validate {
        let clock = Instant::now();
        let v = report::Validation::from(&oracle_validate_solution(&p, &solution));
        timings.validate_ms = Some(clock.elapsed().as_secs_f64() * 1e3);
        Some(v)
    } else {
        None
    };
    let candidates = args.dump_candidates.then(|| {
        let state = SolverState::build(&p, config.clone());
        state
            .candidates
            .dump()
            .lines()
            .map(str::to_string)
            .collect()
    });

    let report = RunReport {
        instance,
        n: p.n(),
        mode: mode.to_string(),
        gated,
        k: solution.len(),
        start: solution.start.to_text(),
        covered: solution.covered,
        guards: solution
            .guards
            .iter()
            .map(report::GuardRow::from_guard)
            .collect(),
        sizes,
        timings: args.timings.then_some(timings),
        validation,
        candidates,
    };
    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &args.out {
        Some(path) => write_file(path, &rendered)?,
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot write report: {e}")))?,
    }
    if let Some(path) = &args.svg {
        write_file(path, &svg::render(&p, &solution.guards, args.debug_layers))?;
    }
    Ok(match &report.validation {
        Some(v) if !v.passed => EXIT_VALIDATION_FAILED,
        _ => EXIT_OK,
    })
}
