//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::check;
use crate::describe::describe;
use crate::error::{CliError, Result};
use crate::fuzz::{self, FuzzConfig};
use crate::render::{self, RenderRequest};
use crate::spec::CurveSpec;

#[derive(Debug, Parser)]
#[command(name = "hedgehog", version, about = "Planar hedgehogs from trigonometric support functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// JSON curve spec: {"a0": .., "harmonics": [{"n": .., "a": .., "b": ..}], "label": ..}
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Support function such as "137 + 21*cos(2s) - 1/3*sin(9s)"
    #[arg(long, value_name = "STR", allow_hyphen_values = true)]
    pub expr: Option<String>,
}

impl Source {
    pub fn load(&self) -> Result<CurveSpec> {
        match (&self.input, &self.expr) {
            (Some(path), _) => CurveSpec::from_file(path),
            (None, Some(expr)) => CurveSpec::from_expr(expr),
            (None, None) => Err(CliError::Input("one of --input or --expr is required".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length, area, Steiner point, convexity and singular points.
    Describe {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Inequality report for order k.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        /// Evaluate the formulas for non-ovals too.
        #[arg(long)]
        unchecked: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw curve families to SVG (and optionally CSV).
    Render {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: usize,
        /// Comma-separated: oval, perpendicular, preserving, midpoint, symmetral, polygon, steiner_disk
        #[arg(long, default_value = "oval")]
        sets: String,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        /// Normal angle of the first polygon edge, in radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        polygon_angle: f64,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Random convex inputs through the full invariant suite.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        /// Inclusive range MIN..MAX of orders.
        #[arg(long, default_value = "3..8")]
        k: String,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn emit(out: &mut impl Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

/// Runs a parsed command, writing its report to `out`. Returns the exit code for
/// completed runs; errors carry their own.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<i32> {
    match cli.command {
        Command::Describe { source, json } => {
            let d = describe(&source.load()?)?;
            let text = if json {
                serde_json::to_string_pretty(&d).expect("description serializes") + "\n"
            } else {
                d.to_text()
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::Check { source, k, unchecked, json } => {
            let tol = check::tolerance_from_env()?;
            let report = check::check(&source.load()?, k, unchecked, tol)?;
            let text = if json { check::to_json(&report) + "\n" } else { check::to_text(&report) };
            emit(out, &text)?;
            let violations = report.violations();
            if violations.is_empty() {
                Ok(0)
            } else {
                Err(CliError::Violation(violations.join("; ")))
            }
        }
        Command::Render { source, k, sets, samples, polygon_angle, output, csv } => {
            let spec = source.load()?;
            let h = spec.to_hedgehog()?;
            let req = RenderRequest { sets: render::parse_sets(&sets)?, k, samples, polygon_base_angle: polygon_angle };
            let layers = render::layers(&h, &req)?;
            write_file(&output, &render::to_svg(&layers, spec.label.as_deref()))?;
            if let Some(path) = csv {
                write_file(&path, &render::to_csv(&layers))?;
            }
            Ok(0)
        }
        Command::Fuzz { seed, trials, max_degree, k, jobs } => {
            let (k_min, k_max) = fuzz::parse_k_range(&k)?;
            let config = FuzzConfig { seed, trials, max_degree, k_min, k_max, jobs };
            let summary = fuzz::run(&config)?;
            emit(out, &summary.to_string())?;
            Ok(summary.exit_code())
        }
    }
}
