//! Command-line front end.
//!
//! [`run`] takes the argument list and output streams explicitly so the whole
//! surface can be driven from tests. Exit codes: 0 success, 2 input error,
//! 1 internal error. Diagnostics only ever go to the error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::alpha::validate_alpha;
use crate::analytics::{
    alpha_curve, compute_rows, correlation_matrix, rank_rows, AuthorIndexRow, CorrelationMethod,
};
use crate::dataset::{
    dataset_summary, read_dataset, ColumnMapping, Dataset, DatasetFormat, DatasetSummary,
};
use crate::indexes::{full_report, IndexReport};
use crate::report;
use crate::svg;
use crate::vector::CitationVector;

#[derive(Debug, Parser)]
#[command(
    name = "nuindex",
    version,
    about = "Citation indexes h, g, g*, nu, nu.bar and nu-alpha"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute all indexes for one citation vector.
    Index(IndexArgs),
    /// Sample nu-alpha over a list or grid of alphas.
    Alpha(AlphaArgs),
    /// Per-author index table for a dataset file.
    Dataset(DatasetArgs),
    /// Correlation matrix of h, nu, nu.bar, g, g.star and m across authors.
    Correlate(CorrelateArgs),
    /// Two-panel SVG of normalized index triplets, authors ranked by h/m.
    PlotRanking(PlotArgs),
}

#[derive(Debug, Args)]
struct VectorInput {
    /// Citation counts, separated by spaces or commas.
    #[arg(allow_negative_numbers = true)]
    values: Vec<String>,
    /// Read the counts from a file instead.
    #[arg(long, conflicts_with = "values")]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IndexArgs {
    #[command(flatten)]
    input: VectorInput,
    /// Emit JSON instead of the text line.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
#[group(id = "alpha_source", required = true, multiple = false, args = ["alphas", "grid"])]
struct AlphaArgs {
    #[command(flatten)]
    input: VectorInput,
    /// Comma-separated alphas in ascending order.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    alphas: Vec<String>,
    /// Inclusive grid `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Also write the step plot as SVG.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct DatasetInput {
    path: PathBuf,
    /// csv or jsonl.
    #[arg(long, default_value = "csv")]
    format: String,
    /// TOML column mapping for foreign layouts.
    #[arg(long)]
    mapping: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DatasetArgs {
    #[command(flatten)]
    input: DatasetInput,
    /// Write the table here; the summary then goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CorrelateArgs {
    #[command(flatten)]
    input: DatasetInput,
    /// pearson or spearman.
    #[arg(long, default_value = "pearson")]
    method: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    input: DatasetInput,
    /// SVG output path.
    #[arg(long)]
    out: PathBuf,
    /// CSV of the plotted rows; defaults to the SVG path with a .csv extension.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        Self::Input(e.to_string())
    }

    fn internal(e: impl std::fmt::Display) -> Self {
        Self::Internal(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> CliResult {
        self.out
            .write_all(text.as_bytes())
            .map_err(CliError::internal)
    }

    fn warn(&mut self, text: &str) {
        let _ = writeln!(self.err, "warning: {text}");
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Index(a) => cmd_index(a, &mut io),
        Command::Alpha(a) => cmd_alpha(a, &mut io),
        Command::Dataset(a) => cmd_dataset(a, &mut io),
        Command::Correlate(a) => cmd_correlate(a, &mut io),
        Command::PlotRanking(a) => cmd_plot_ranking(a, &mut io),
    };
    let _ = io.out.flush();
    match result {
        Ok(()) => 0,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(io.err, "internal error: {msg}");
            1
        }
    }
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

fn read_vector(input: &VectorInput) -> CliResult<CitationVector> {
    let owned;
    let toks: Vec<&str> = match &input.file {
        Some(path) => {
            owned = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            tokens(&owned).collect()
        }
        None if input.values.is_empty() => return Err(CliError::input("no citation counts given")),
        None => input.values.iter().flat_map(|v| tokens(v)).collect(),
    };
    CitationVector::parse_tokens(&toks).map_err(CliError::input)
}

#[derive(Serialize)]
struct IndexJson<'a> {
    x: &'a [u64],
    #[serde(flatten)]
    report: IndexReport,
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(CliError::internal)
}

fn cmd_index(args: IndexArgs, io: &mut Io) -> CliResult {
    let x = read_vector(&args.input)?;
    let report = full_report(&x);
    let text = if args.json {
        to_json(&IndexJson {
            x: x.counts(),
            report,
        })?
    } else {
        report::index_line(&report) + "\n"
    };
    io.print(&text)
}

/// Expands `start:stop:step` into an inclusive grid; the last point is
/// clamped to `stop` when the step does not land on it.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    const MAX_POINTS: f64 = 1e6;
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("grid `{spec}` must look like start:stop:step"));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid grid number `{s}`"))
    };
    let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
    for v in [start, stop] {
        validate_alpha(v).map_err(|e| e.to_string())?;
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(format!("grid step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("grid stop {stop} is below start {start}"));
    }
    let steps = ((stop - start) / step + 1e-9).floor();
    if steps > MAX_POINTS {
        return Err(format!("grid `{spec}` has too many points"));
    }
    let mut grid: Vec<f64> = (0..=steps as usize)
        .map(|k| start + k as f64 * step)
        .collect();
    let last = grid.last_mut().expect("grid has a first point");
    if (stop - *last).abs() <= 1e-9 * step {
        *last = stop;
    } else {
        grid.push(stop);
    }
    Ok(grid)
}

fn caption(x: &CitationVector) -> String {
    const SHOWN: usize = 12;
    let mut parts: Vec<String> = x.counts().iter().take(SHOWN).map(u64::to_string).collect();
    if x.len() > SHOWN {
        parts.push("...".into());
    }
    format!("x = ({})", parts.join(", "))
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn cmd_alpha(args: AlphaArgs, io: &mut Io) -> CliResult {
    let x = read_vector(&args.input)?;
    let alphas = match &args.grid {
        Some(grid) => parse_grid(grid).map_err(CliError::Input)?,
        None => args
            .alphas
            .iter()
            .map(|a| {
                a.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Input(format!("invalid alpha `{a}`")))
            })
            .collect::<CliResult<_>>()?,
    };
    let curve = alpha_curve(&x, &alphas).map_err(CliError::input)?;
    if let Some(path) = &args.out {
        write_file(path, &svg::alpha_svg(&curve, &caption(&x)))?;
    }
    let text = if args.json {
        to_json(&curve)?
    } else {
        report::alpha_csv(&curve)
    };
    io.print(&text)
}

fn load(input: &DatasetInput) -> CliResult<Dataset> {
    let format: DatasetFormat = input.format.parse().map_err(CliError::input)?;
    let mapping = match &input.mapping {
        Some(path) => ColumnMapping::from_path(path).map_err(CliError::input)?,
        None => ColumnMapping::default(),
    };
    read_dataset(&input.path, format, &mapping).map_err(CliError::input)
}

#[derive(Serialize)]
struct DatasetJson<'a> {
    summary: DatasetSummary,
    rows: &'a [AuthorIndexRow],
}

fn cmd_dataset(args: DatasetArgs, io: &mut Io) -> CliResult {
    let d = load(&args.input)?;
    if d.records.is_empty() {
        io.warn("dataset is empty");
    }
    let summary = dataset_summary(&d);
    let rows = compute_rows(&d);
    let table = if args.json {
        to_json(&DatasetJson {
            summary,
            rows: &rows,
        })?
    } else {
        report::rows_csv(&rows)
    };
    match &args.out {
        Some(path) => {
            write_file(path, &table)?;
            io.print(&format!("{summary}\n"))
        }
        None => {
            io.print(&table)?;
            let _ = writeln!(io.err, "{summary}");
            Ok(())
        }
    }
}

fn cmd_correlate(args: CorrelateArgs, io: &mut Io) -> CliResult {
    let method: CorrelationMethod = args.method.parse().map_err(CliError::input)?;
    let d = load(&args.input)?;
    let rows = compute_rows(&d);
    let cm = correlation_matrix(&rows, method).map_err(CliError::input)?;
    if cm.rows_excluded > 0 {
        io.warn(&format!(
            "{} author(s) without papers excluded",
            cm.rows_excluded
        ));
    }
    if cm.is_degenerate() {
        let cols: Vec<&str> = cm.zero_variance.iter().map(|c| c.label()).collect();
        io.warn(&format!(
            "zero variance in {}; affected entries are NA",
            cols.join(", ")
        ));
    }
    let text = if args.json {
        to_json(&cm)?
    } else {
        report::matrix_text(&cm)
    };
    io.print(&text)
}

fn cmd_plot_ranking(args: PlotArgs, io: &mut Io) -> CliResult {
    let d = load(&args.input)?;
    if d.records.is_empty() {
        io.warn("dataset is empty; writing an empty plot");
    }
    let ranked = rank_rows(&compute_rows(&d));
    let csv_path = args
        .csv
        .clone()
        .unwrap_or_else(|| args.out.with_extension("csv"));
    write_file(&args.out, &svg::ranking_svg(&ranked))?;
    write_file(&csv_path, &report::ranking_csv(&ranked))?;
    io.print(&format!(
        "wrote {} and {} ({} authors)\n",
        args.out.display(),
        csv_path.display(),
        ranked.len()
    ))
}
