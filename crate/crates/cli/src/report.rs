//! Run reports: a line-oriented `key: value` text form with a guard table,
//! and a JSON form described by `docs/report.schema.json`.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context};
use cag_core::exact::{format_scalar, parse_scalar, to_f64, Point2};
use cag_core::oracle::ValidationReport;
use cag_core::polygon::{BoundaryPoint, Chain, ContiguousGuard};
use cag_core::solver::{GuardSolution, PhaseTimings, StructureSizes};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GuardRow {
    pub x: String,
    pub y: String,
    pub x_approx: f64,
    pub y_approx: f64,
    /// `None` for a guard that sees the whole boundary.
    pub start: Option<String>,
    pub end: Option<String>,
}

impl GuardRow {
    pub fn from_guard(guard: &ContiguousGuard) -> Self {
        let (start, end) = match &guard.chain {
            Chain::Full => (None, None),
            Chain::Arc { start, end } => (Some(start.to_text()), Some(end.to_text())),
        };
        GuardRow {
            x: format_scalar(&guard.g.x),
            y: format_scalar(&guard.g.y),
            x_approx: to_f64(&guard.g.x),
            y_approx: to_f64(&guard.g.y),
            start,
            end,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sizes {
    pub arrangement: usize,
    pub arrangement_inside: usize,
    pub guard_set: usize,
    pub chain_index: usize,
    pub start_set: usize,
}

impl From<&StructureSizes> for Sizes {
    fn from(s: &StructureSizes) -> Self {
        Sizes {
            arrangement: s.arrangement,
            arrangement_inside: s.arrangement_inside,
            guard_set: s.guard_set,
            chain_index: s.chain_index,
            start_set: s.start_set,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub gate_ms: f64,
    pub structures_ms: f64,
    pub greedy_ms: f64,
    pub validate_ms: Option<f64>,
}

impl Timings {
    pub fn new(t: &PhaseTimings) -> Self {
        Timings {
            gate_ms: t.gate.as_secs_f64() * 1e3,
            structures_ms: t.structures.as_secs_f64() * 1e3,
            greedy_ms: t.greedy.as_secs_f64() * 1e3,
            validate_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub passed: bool,
    pub failures: Vec<String>,
}

impl From<&ValidationReport> for Validation {
    fn from(r: &ValidationReport) -> Self {
        let mut failures: Vec<String> = r
            .guards
            .iter()
            .flat_map(|g| {
                g.failures
                    .iter()
                    .map(move |f| format!("guard {}: {}", g.index, f))
            })
            .collect();
        failures.extend(r.coverage_failures.iter().cloned());
        Validation {
            passed: r.passed(),
            failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    /// `solve`, or `seed` for a single greedy pass.
    pub mode: String,
    pub gated: bool,
    pub k: usize,
    pub start: String,
    pub covered: bool,
    pub guards: Vec<GuardRow>,
    pub sizes: Option<Sizes>,
    pub timings: Option<Timings>,
    pub validation: Option<Validation>,
    pub candidates: Option<Vec<String>>,
}

fn approx(v: f64) -> String {
    format!("{v:.6}")
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instance: {}", self.instance);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "gated: {}", self.gated);
        let _ = writeln!(out, "k: {}", self.k);
        let _ = writeln!(out, "start: {}", self.start);
        let _ = writeln!(out, "covered: {}", self.covered);
        if let Some(s) = &self.sizes {
            let _ = writeln!(out, "sizes.arrangement: {}", s.arrangement);
            let _ = writeln!(out, "sizes.arrangement_inside: {}", s.arrangement_inside);
            let _ = writeln!(out, "sizes.guard_set: {}", s.guard_set);
            let _ = writeln!(out, "sizes.chain_index: {}", s.chain_index);
            let _ = writeln!(out, "sizes.start_set: {}", s.start_set);
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(out, "timings.gate_ms: {:.3}", t.gate_ms);
            let _ = writeln!(out, "timings.structures_ms: {:.3}", t.structures_ms);
            let _ = writeln!(out, "timings.greedy_ms: {:.3}", t.greedy_ms);
            if let Some(v) = t.validate_ms {
                let _ = writeln!(out, "timings.validate_ms: {v:.3}");
            }
        }
        if let Some(v) = &self.validation {
            let _ = writeln!(
                out,
                "validation: {}",
                if v.passed { "pass" } else { "fail" }
            );
            for f in &v.failures {
                let _ = writeln!(out, "validation.failure: {f}");
            }
        }
        let _ = writeln!(out, "guards:");
        let _ = writeln!(out, "# idx x y start end ~x ~y");
        for (i, g) in self.guards.iter().enumerate() {
            let _ = writeln!(
                out,
                "{} {} {} {} {} {} {}",
                i,
                g.x,
                g.y,
                g.start.as_deref().unwrap_or("-"),
                g.end.as_deref().unwrap_or("-"),
                approx(g.x_approx),
                approx(g.y_approx)
            );
        }
        if let Some(c) = &self.candidates {
            let _ = writeln!(out, "candidates:");
            let _ = writeln!(out, "# x y i j tag start_edge start_t end_edge end_t");
            for line in c {
                let _ = writeln!(out, "{line}");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn guard_from_fields(fields: &[&str], n: usize) -> anyhow::Result<ContiguousGuard> {
    let [x, y, start, end, ..] = fields else {
        bail!("short guard row");
    };
    let g = Point2::new(
        parse_scalar(x).ok_or_else(|| anyhow!("bad x: {x}"))?,
        parse_scalar(y).ok_or_else(|| anyhow!("bad y: {y}"))?,
    );
    let chain = match (*start, *end) {
        ("-", "-") => Chain::Full,
        (s, e) => Chain::arc(
            BoundaryPoint::parse(s, n).ok_or_else(|| anyhow!("bad chain start: {s}"))?,
            BoundaryPoint::parse(e, n).ok_or_else(|| anyhow!("bad chain end: {e}"))?,
        ),
    };
    Ok(ContiguousGuard { g, chain })
}

/// Reads the solution back out of a text report. Only the exact columns are
/// used; the decimal ones are ignored.
pub fn parse_text_report(text: &str) -> anyhow::Result<GuardSolution> {
    let mut n = None;
    let mut start = None;
    let mut covered = false;
    let mut rows: Vec<Vec<&str>> = Vec::new();
    let mut in_table = false;
    for line in text.lines() {
        if in_table {
            if line.starts_with('#') {
                continue;
            }
            if line.ends_with(':') {
                in_table = false;
                continue;
            }
            rows.push(line.split_whitespace().skip(1).collect());
            continue;
        }
        match line.split_once(": ") {
            Some(("n", v)) => n = Some(v.parse::<usize>().context("bad n")?),
            Some(("start", v)) => start = Some(v.to_string()),
            Some(("covered", v)) => covered = v == "true",
            _ if line == "guards:" => in_table = true,
            _ => {}
        }
    }
    let n = n.ok_or_else(|| anyhow!("report has no `n:` line"))?;
    let start = start.ok_or_else(|| anyhow!("report has no `start:` line"))?;
    let start = BoundaryPoint::parse(&start, n).ok_or_else(|| anyhow!("bad start: {start}"))?;
    let guards = rows
        .iter()
        .map(|r| guard_from_fields(r, n))
        .collect::<anyhow::Result<_>>()?;
    Ok(GuardSolution {
        guards,
        start,
        covered,
    })
}
