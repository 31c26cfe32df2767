//! Command-line front end: reads matrices and metrics from files, runs the
//! cross/volume/compound/gram/hodge computations and the randomized identity
//! verifier, and emits structured JSON result documents.
//!
//! Convention: the columns of a matrix file are the vectors. A vector passed
//! as its own file must therefore be a single column (one CSV row per
//! component).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 dimension error, 4 invalid metric, 5 numeric failure.

mod document;
mod files;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ncross::compound::{compound_matrix, row_minor_vector};
use ncross::crossprod::{euclidean_volume, hodge_dual};
use ncross::matrix::Matrix;
use ncross::metric::{validate_metric, MetricSpace, SignedVolume};
use ncross::oracles::{random_matrix, verify_cauchy_binet, verify_compound_multiplicativity};
use ncross::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use document::{
    ComponentOut, CompoundResult, CrossResult, GramResult, HodgeComponent, HodgeResult,
    InputDigest, MetricVolumeOut, ResultDocument, VerifyResult, VolumeResult,
};
use files::{load_matrix, FileFormat};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(ncross::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(e) => match e {
                ncross::Error::Metric(_) => 4,
                ncross::Error::Numeric(_) => 5,
                _ => 3,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<ncross::Error> for CliError {
    fn from(e: ncross::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Parser)]
#[command(
    name = "ncross",
    version,
    about = "Cross products, compound matrices and parallelotope volumes in n dimensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cross product of m vectors in n dimensions (columns are vectors).
    Cross(VectorArgs),
    /// Volume of the parallelotope spanned by the input vectors.
    Volume(VectorArgs),
    /// All k-by-k minors of a matrix, indexed by combinations.
    Compound(CompoundArgs),
    /// Gram matrix of the input vectors under a metric.
    Gram(VectorArgs),
    /// Classical signed dual of the cross product of n-1 vectors.
    Hodge(PlainArgs),
    /// Randomized verification of the determinant identities.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VectorArgs {
    /// One matrix file (columns are the vectors) or m single-column files.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Metric matrix file; the identity metric when omitted.
    #[arg(long)]
    metric: Option<PathBuf>,
    /// Input format override; inferred from file extensions when omitted.
    #[arg(long, value_enum)]
    format: Option<FileFormat>,
    /// Write the result document here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Metric validation tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
}

#[derive(Args)]
struct PlainArgs {
    /// One matrix file (columns are the vectors) or m single-column files.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Input format override; inferred from file extensions when omitted.
    #[arg(long, value_enum)]
    format: Option<FileFormat>,
    /// Write the result document here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompoundArgs {
    /// Source matrix file.
    file: PathBuf,
    /// Minor order k.
    k: usize,
    /// Input format override; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FileFormat>,
    /// Write the result document here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check: 1 = product determinant, 2 = compound multiplicativity.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: u8,
    /// Number of random instances.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Master seed; trial t runs on seed + t, so failures are reproducible.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest sampled dimension.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=9))]
    max_dim: u64,
    /// Pass bound: gap <= tolerance * (1 + |reference|).
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Sample complex entries instead of real ones.
    #[arg(long)]
    complex: bool,
    /// Write the result document here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Cross(args) => cmd_cross(args),
        Command::Volume(args) => cmd_volume(args),
        Command::Compound(args) => cmd_compound(args),
        Command::Gram(args) => cmd_gram(args),
        Command::Hodge(args) => cmd_hodge(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Loads the input vectors as the columns of one matrix: either a single
/// matrix file, or one single-column file per vector.
fn load_vectors(
    paths: &[PathBuf],
    format: Option<FileFormat>,
) -> Result<(Matrix, Vec<InputDigest>), CliError> {
    if paths.len() == 1 {
        let loaded = load_matrix(&paths[0], format)?;
        return Ok((loaded.matrix, vec![loaded.digest]));
    }
    let mut columns = Vec::new();
    let mut digests = Vec::new();
    for path in paths {
        let loaded = load_matrix(path, format)?;
        if loaded.matrix.cols() != 1 {
            return Err(CliError::Core(ncross::Error::Dimension(format!(
                "{}: expected a single-column vector but found {} columns; \
                 columns are vectors, so write one component per CSV row",
                path.display(),
                loaded.matrix.cols()
            ))));
        }
        columns.push(loaded.matrix.column(0));
        digests.push(loaded.digest);
    }
    let matrix = Matrix::from_columns(&columns)?;
    Ok((matrix, digests))
}

fn load_metric(
    path: &Path,
    format: Option<FileFormat>,
    tolerance: f64,
) -> Result<(MetricSpace, InputDigest), CliError> {
    let loaded = load_matrix(path, format)?;
    let space = validate_metric(loaded.matrix, tolerance)?;
    Ok((space, loaded.digest))
}

fn metric_volume_out(vol: &SignedVolume) -> MetricVolumeOut {
    MetricVolumeOut {
        signed_squared: vol.squared,
        magnitude: vol.magnitude,
        sign: vol.sign,
    }
}

fn complex_out(v: Complex64) -> [f64; 2] {
    [v.re, v.im]
}

fn matrix_out(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| complex_out(m.get(r, c))).collect())
        .collect()
}

fn emit<T: Serialize>(
    command: &str,
    inputs: Vec<InputDigest>,
    metric: Option<InputDigest>,
    result: T,
    output: Option<&Path>,
    code: ExitCode,
) -> Result<ExitCode, CliError> {
    let doc = ResultDocument {
        command: command.to_string(),
        inputs,
        metric,
        result,
    };
    let bytes = document::to_json_line(&doc)
        .map_err(|e| CliError::Parse(format!("cannot serialize result: {e}")))?;
    match output {
        Some(path) => fs::write(path, &bytes)
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?,
        None => io::stdout()
            .write_all(&bytes)
            .map_err(|e| CliError::Parse(format!("cannot write to stdout: {e}")))?,
    }
    Ok(code)
}

fn cmd_cross(args: VectorArgs) -> Result<ExitCode, CliError> {
    let (x, inputs) = load_vectors(&args.files, args.format)?;
    let v = row_minor_vector(&x)?;
    let mut metric_digest = None;
    let mut metric_volume = None;
    if let Some(path) = &args.metric {
        let (space, digest) = load_metric(path, args.format, args.tolerance)?;
        let vol = space.signed_squared_volume(&x)?;
        metric_volume = Some(metric_volume_out(&vol));
        metric_digest = Some(digest);
    }
    let result = CrossResult {
        n: v.n(),
        m: v.m(),
        components: v
            .components()
            .iter()
            .map(|(label, value)| ComponentOut::new(label, *value))
            .collect(),
        norm: v.norm(),
        metric_volume,
    };
    emit(
        "cross",
        inputs,
        metric_digest,
        result,
        args.output.as_deref(),
        ExitCode::SUCCESS,
    )
}

fn cmd_volume(args: VectorArgs) -> Result<ExitCode, CliError> {
    let (x, inputs) = load_vectors(&args.files, args.format)?;
    let (volume, metric_volume, metric_digest) = match &args.metric {
        None => {
            let cols: Vec<Vec<Complex64>> = (0..x.cols()).map(|j| x.column(j)).collect();
            (Some(euclidean_volume(&cols)?), None, None)
        }
        Some(path) => {
            let (space, digest) = load_metric(path, args.format, args.tolerance)?;
            let vol = space.signed_squared_volume(&x)?;
            (None, Some(metric_volume_out(&vol)), Some(digest))
        }
    };
    let result = VolumeResult {
        n: x.rows(),
        m: x.cols(),
        volume,
        metric_volume,
    };
    emit(
        "volume",
        inputs,
        metric_digest,
        result,
        args.output.as_deref(),
        ExitCode::SUCCESS,
    )
}

fn cmd_compound(args: CompoundArgs) -> Result<ExitCode, CliError> {
    let loaded = load_matrix(&args.file, args.format)?;
    let comp = compound_matrix(&loaded.matrix, args.k)?;
    let result = CompoundResult {
        k: comp.k(),
        source_rows: comp.source_rows(),
        source_cols: comp.source_cols(),
        row_labels: comp
            .row_labels()
            .iter()
            .map(|l| l.indices().to_vec())
            .collect(),
        col_labels: comp
            .col_labels()
            .iter()
            .map(|l| l.indices().to_vec())
            .collect(),
        entries: matrix_out(comp.matrix()),
    };
    emit(
        "compound",
        vec![loaded.digest],
        None,
        result,
        args.output.as_deref(),
        ExitCode::SUCCESS,
    )
}

fn cmd_gram(args: VectorArgs) -> Result<ExitCode, CliError> {
    let (x, inputs) = load_vectors(&args.files, args.format)?;
    let (space, metric_digest) = match &args.metric {
        Some(path) => {
            let (space, digest) = load_metric(path, args.format, args.tolerance)?;
            (space, Some(digest))
        }
        None => (MetricSpace::euclidean(x.rows())?, None),
    };
    let gram = space.gram(&x)?;
    let result = GramResult {
        n: x.rows(),
        m: x.cols(),
        entries: matrix_out(&gram),
    };
    emit(
        "gram",
        inputs,
        metric_digest,
        result,
        args.output.as_deref(),
        ExitCode::SUCCESS,
    )
}

fn cmd_hodge(args: PlainArgs) -> Result<ExitCode, CliError> {
    let (x, inputs) = load_vectors(&args.files, args.format)?;
    let v = row_minor_vector(&x)?;
    let dual = hodge_dual(&v)?;
    let result = HodgeResult {
        n: v.n(),
        components: dual
            .iter()
            .enumerate()
            .map(|(i, value)| HodgeComponent {
                axis: i + 1,
                value: complex_out(*value),
                magnitude: value.norm(),
            })
            .collect(),
    };
    emit(
        "hodge",
        inputs,
        None,
        result,
        args.output.as_deref(),
        ExitCode::SUCCESS,
    )
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let max_dim = args.max_dim as usize;
    let mut failures = 0u64;
    let mut worst_gap = 0.0f64;
    let mut worst_seed = args.seed;
    let mut failing_seed = None;
    for trial in 0..args.trials {
        let trial_seed = args.seed.wrapping_add(trial);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        let (passed, gap) = match args.theorem {
            1 => {
                let m = rng.gen_range(1..=max_dim);
                let n = rng.gen_range(1..=max_dim);
                let a = random_matrix(&mut rng, m, n, args.complex);
                let b = random_matrix(&mut rng, n, m, args.complex);
                let report = verify_cauchy_binet(&a, &b, args.tolerance)?;
                let normalized = report.gap / (1.0 + report.det_product.norm());
                (report.passed, normalized)
            }
            _ => {
                let m = rng.gen_range(1..=max_dim);
                let n = rng.gen_range(1..=max_dim);
                let s = rng.gen_range(1..=max_dim);
                let a = random_matrix(&mut rng, m, n, args.complex);
                let b = random_matrix(&mut rng, n, s, args.complex);
                let k = rng.gen_range(1..=m.min(n).min(s));
                let report = verify_compound_multiplicativity(&a, &b, k, args.tolerance)?;
                (report.passed, report.max_gap)
            }
        };
        if gap > worst_gap {
            worst_gap = gap;
            worst_seed = trial_seed;
        }
        if !passed {
            failures += 1;
            if failing_seed.is_none() {
                failing_seed = Some(trial_seed);
            }
        }
    }
    let passed = failures == 0;
    let result = VerifyResult {
        theorem: args.theorem,
        trials: args.trials,
        seed: args.seed,
        max_dim: args.max_dim,
        tolerance: args.tolerance,
        complex: args.complex,
        passed,
        failures,
        worst_gap,
        worst_seed,
        failing_seed,
    };
    let code = if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    emit(
        "verify",
        Vec::new(),
        None,
        result,
        args.output.as_deref(),
        code,
    )
}
