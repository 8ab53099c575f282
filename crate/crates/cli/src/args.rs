use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Minimum contiguous guard set for a simple polygon.
#[derive(Debug, Parser)]
#[command(name = "cag", version)]
pub struct Args {
    /// Polygon file: vertex count, then one `x y` pair per line.
    pub input: PathBuf,

    /// Check the solution against the reference oracle.
    #[arg(long)]
    pub validate: bool,

    /// Append the candidate guard set to the report.
    #[arg(long)]
    pub dump_candidates: bool,

    /// Run a single greedy pass from this boundary point (`edge:t`).
    #[arg(long, value_name = "EDGE:T")]
    pub seed_only: Option<String>,

    /// Probe every edge instead of binary searching.
    #[arg(long)]
    pub paranoid: bool,

    /// Worker threads; 1 is sequential, 0 uses every core.
    #[arg(long, value_name = "D", default_value_t = 0)]
    pub parallel: usize,

    /// Write an SVG figure here.
    #[arg(long, value_name = "FILE")]
    pub svg: Option<PathBuf>,

    /// Draw guard cores and arrangement vertices in the SVG.
    #[arg(long)]
    pub debug_layers: bool,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Include wall-clock phase timings (makes reports non-reproducible).
    #[arg(long)]
    pub timings: bool,

    /// Accept clockwise input by reversing it.
    #[arg(long)]
    pub auto_orient: bool,
}
