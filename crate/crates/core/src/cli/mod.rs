//! The `spip` command line: batch classification, the reference cases and
//! polygon validation.

pub mod batch;
pub mod fixtures;
pub mod job;
pub mod plot;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use batch::{run, BatchResult, ResultRecord, EXIT_DISAGREEMENT, EXIT_INPUT, EXIT_OK, EXIT_VALIDATION};
pub use job::{parse_input, InputError, Job, JobSpec, Method};

#[derive(Debug, Parser)]
#[command(name = "spip", version, about = "Spherical point-in-polygon classifier")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every point of a job against every polygon.
    Classify(ClassifyArgs),
    /// Run the built-in reference cases.
    Fixtures(FixturesArgs),
    /// Report unit-norm, side, BAE and hemisphere checks for each polygon.
    Validate(ValidateArgs),
}

/// Flags override the matching fields of the job header.
#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Job document (JSON lines); `-` for standard input.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Check every result against the subdivision oracle.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Read angles as degrees.
    #[arg(long)]
    pub degrees: bool,
    /// Do not classify polygons that fail validation; exit 3 if any do.
    #[arg(long)]
    pub strict_validate: bool,
    /// Rescale Cartesian inputs onto the unit sphere.
    #[arg(long)]
    pub normalize: bool,
    /// Write the projected polygons as SVG.
    #[arg(long)]
    pub plot: Option<PathBuf>,
    /// Write records here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Print the result records as JSON lines instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub degrees: bool,
    #[arg(long)]
    pub normalize: bool,
}

impl ClassifyArgs {
    fn apply(&self, spec: &mut JobSpec) {
        if let Some(m) = self.method {
            spec.method = m;
        }
        if let Some(t) = self.tolerance {
            spec.tolerance = t;
        }
        spec.verify |= self.verify;
        spec.strict_validate |= self.strict_validate;
        spec.normalize |= self.normalize;
        if self.degrees {
            spec.angle_unit = job::AngleUnit::Degrees;
        }
    }
}

/// One line of `spip validate` output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolygonReport {
    pub polygon_id: String,
    pub status: batch::Status,
    pub unit: bool,
    pub edges: bool,
    pub bae: bool,
    pub hc: bool,
    pub hc_witness: Option<[f64; 3]>,
    pub failing_edge_pairs: Vec<(usize, usize)>,
    pub reasons: Vec<String>,
}

/// Validation reports for every polygon of `spec`. Vertices need not be
/// unit; that is reported rather than rejected.
pub fn validate_job(spec: &JobSpec) -> Result<Vec<PolygonReport>, InputError> {
    spec.check()?;
    (0..spec.polygons.len())
        .map(|k| {
            let r = crate::sphere::validate(&spec.raw_vertices(k)?, spec.tolerance);
            Ok(PolygonReport {
                polygon_id: spec.polygons[k].id.clone(),
                status: if r.passed() { batch::Status::Pass } else { batch::Status::Fail },
                unit: r.is_unit,
                edges: r.edges_ok,
                bae: r.is_bae,
                hc: r.is_hc,
                hc_witness: r.hc_witness.map(|w| w.to_array()),
                failing_edge_pairs: r.failing_edge_pairs,
                reasons: r.problems,
            })
        })
        .collect()
}

fn classify_command(args: &ClassifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let mut spec = match parse_input(&args.input) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    args.apply(&mut spec);
    let job = match spec.resolve() {
        Ok(j) => j,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };

    let result = run(&job);
    let text = result.to_jsonl();
    match &args.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if let Some(path) = &args.plot {
        std::fs::write(path, plot::render(&job))?;
    }
    for p in job.polygons.iter().filter(|p| !p.report.passed()) {
        writeln!(err, "polygon {:?} failed validation: {}", p.id, p.report.problems.join("; "))?;
    }
    let n = result.disagreements();
    if n > 0 {
        writeln!(err, "{n} record(s) with errors or oracle disagreement")?;
    }
    Ok(result.exit_code())
}

fn fixtures_command(args: &FixturesArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let rows = fixtures::run_fixtures();
    if args.json {
        for row in &rows {
            writeln!(out, "{}", row.record.to_json())?;
        }
    } else {
        out.write_all(fixtures::render_table(&rows).as_bytes())?;
    }
    Ok(if rows.iter().all(fixtures::FixtureRow::passed) { EXIT_OK } else { EXIT_DISAGREEMENT })
}

fn validate_command(args: &ValidateArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let reports = parse_input(&args.input).and_then(|mut spec| {
        spec.normalize |= args.normalize;
        if args.degrees {
            spec.angle_unit = job::AngleUnit::Degrees;
        }
        validate_job(&spec)
    });
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT);
        }
    };
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    Ok(if reports.iter().all(|r| r.status == batch::Status::Pass) { EXIT_OK } else { EXIT_VALIDATION })
}

/// Runs a parsed command line and returns the process exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Classify(a) => classify_command(a, out, err),
        Command::Fixtures(a) => fixtures_command(a, out),
        Command::Validate(a) => validate_command(a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e:#}");
        EXIT_INPUT
    })
}
