//! The `qweight` command line.
//!
//! Exit codes: 0 success, 1 a conjecture-backed check failed, 2 bad input,
//! 3 a theorem-backed check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::crystal::ssot::ssot_enumerate;
use crate::crystal::tensor::BoxTensor;
use crate::error::{Error, Result};
use crate::harness::{grids, write_summary_csv, CheckReport, CheckSpec, Harness, KlCache, Sweep};
use crate::kl::KlEngine;
use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::roots::RootType;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONJECTURE_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_THEOREM_FAIL: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Plain,
}

/// Lusztig q-weight multiplicities, oscillating tableaux and their checks.
#[derive(Debug, Parser)]
#[command(name = "qweight", version)]
pub struct Cli {
    /// Output format [default: json]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// TOML file with defaults for format, cache, jobs, q_max; flags win
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute KL^L_{λμ}(q) or its stable version
    Kl(KlArgs),
    /// List oscillating tableaux, their box tensors, or count them
    Ssot(SsotArgs),
    /// Run named checks or sweeps
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct KlArgs {
    #[arg(long = "type")]
    pub root_type: RootType,
    #[arg(long)]
    pub rank: usize,
    /// Comma-separated parts; "" is the empty partition
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Partition,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Partition,
    /// standard, glA, or custom:l1,l2,… in root order
    #[arg(long = "L", default_value = "standard")]
    pub length: LengthFunction,
    /// Sum over S_n only
    #[arg(long)]
    pub stable: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    #[default]
    Ssots,
    Tensors,
    Count,
}

#[derive(Debug, Args)]
pub struct SsotArgs {
    #[arg(long)]
    pub shape: Partition,
    /// Strip sizes, comma-separated; need not be a partition
    #[arg(long, value_parser = parse_sizes)]
    pub weight: Sizes,
    #[arg(long)]
    pub gcap: u32,
    #[arg(long, value_enum, default_value_t = Emit::Ssots)]
    pub emit: Emit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes(pub Vec<u32>);

fn parse_sizes(s: &str) -> std::result::Result<Sizes, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Sizes(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad strip size {t:?}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Sizes)
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Write the JSON report here, and the summary CSV next to it
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Append-only JSON-lines cache of KL polynomials
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Worker threads [default: 1]
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Report wall time as 0 so output is byte-identical across runs
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub check: VerifyCommand,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// The rank-3 worked example
    Example13,
    /// KL against Σq^E in the box case; without --lambda, every λ for n' ≤ n, g' ≤ g
    Conj1Box {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// SSOT count against KL(1); without --lambda/--mu, the full grid
    Conj1Count {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Nonnegativity of KL^{C, glA}
    Conj2(PairArgs),
    /// KL_{λ+1ⁿ,μ+1ⁿ} − KL_{λμ} ≥ 0 in type C
    Monotonicity(PairArgs),
    /// Nonnegativity of KL with the standard length function
    Positivity {
        #[arg(long = "type", default_value = "C")]
        root_type: RootType,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// q^{(|λ|−|μ|)/2}·∞KL^{glA} = ∞KL
    StableIdentity {
        /// Root types to sweep; exactly one when --lambda is given
        #[arg(long = "type", value_delimiter = ',', default_value = "B,C,D")]
        types: Vec<RootType>,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// KL_{λ+kⁿ,μ+kⁿ} reaches ∞KL by k_max
    Stabilization {
        #[arg(long = "type", default_value = "C")]
        root_type: RootType,
        #[arg(long = "L", default_value = "standard")]
        length: LengthFunction,
        #[arg(long)]
        k_max: Option<u32>,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Type A KL against Kostka–Foulkes, and energy against charge
    TypeaCharge {
        #[arg(long, visible_alias = "rank")]
        n: usize,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    /// Truncated Demazure character against Σ_λ KL_{λμ} χ^λ
    Demazure {
        #[arg(long = "type", default_value = "C")]
        root_type: RootType,
        #[arg(long, visible_alias = "n")]
        rank: usize,
        /// Weight inside the operator; without it, every μ with |μ| ≤ max-size
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long = "L", default_value = "standard")]
        length: LengthFunction,
        /// q-degree truncation [default: 6, or q_max from the config]
        #[arg(long)]
        q_max: Option<u32>,
        #[arg(long, default_value_t = 3)]
        max_size: u32,
    },
    /// The default suite over every check
    All,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, visible_alias = "rank")]
    pub n: usize,
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub mu: Option<Partition>,
    /// Grid bound on |λ| when --lambda/--mu are absent
    #[arg(long, default_value_t = 6)]
    pub max_size: u32,
}

/// Optional defaults read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    pub format: Option<Format>,
    pub cache: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub q_max: Option<u32>,
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))
    }
}

/// Parses `args` (program name first) and runs against the process streams.
pub fn run_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run_with_args`] with explicit output streams.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let config = match &cli.config {
        Some(p) => CliConfig::load(p)?,
        None => CliConfig::default(),
    };
    let format = cli.format.or(config.format).unwrap_or_default();
    match cli.command {
        Command::Kl(a) => cmd_kl(&a, format, out),
        Command::Ssot(a) => cmd_ssot(&a, format, out),
        Command::Verify(a) => cmd_verify(a, &config, format, out),
    }
}

fn cmd_kl(a: &KlArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let engine = KlEngine::new(a.root_type, a.rank, a.length.clone())?;
    let p = if a.stable {
        engine.stable_kl(&a.lambda, &a.mu)?
    } else {
        engine.kl(&a.lambda, &a.mu)?
    };
    match format {
        Format::Json => writeln!(out, "{}", json!({ "coeffs": p.coeffs() }))?,
        Format::Plain => writeln!(out, "{p}")?,
        Format::Csv => {
            writeln!(out, "exponent,coefficient")?;
            for (e, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{e},{c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_ssot(a: &SsotArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let all = ssot_enumerate(&a.shape, &a.weight.0, a.gcap);
    match a.emit {
        Emit::Count => match format {
            Format::Csv => writeln!(out, "count\n{}", all.len())?,
            _ => writeln!(out, "{}", all.len())?,
        },
        Emit::Ssots => {
            let rows: Vec<String> = all
                .iter()
                .map(serde_json::to_string)
                .collect::<std::result::Result<_, _>>()?;
            emit_rows("ssot", &rows, format, out)?;
        }
        Emit::Tensors => {
            let mut tensors: Vec<BoxTensor> = all
                .iter()
                .map(|s| {
                    s.to_box_tensor().ok_or_else(|| {
                        Error::Parameter("tensors need every strip size to be 1".into())
                    })
                })
                .collect::<Result<_>>()?;
            tensors.sort();
            match format {
                Format::Plain => {
                    for t in &tensors {
                        writeln!(out, "{t}")?;
                    }
                }
                _ => {
                    let rows: Vec<String> = tensors
                        .iter()
                        .map(serde_json::to_string)
                        .collect::<std::result::Result<_, _>>()?;
                    emit_rows("tensor", &rows, format, out)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// A JSON array, one JSON value per line, or a one-column CSV.
fn emit_rows(column: &str, rows: &[String], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "[{}]", rows.join(","))?,
        Format::Plain => {
            for r in rows {
                writeln!(out, "{r}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([column]).map_err(csv_err)?;
            for r in rows {
                w.write_record([r]).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
            out.write_all(&bytes)?;
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn single_or_grid(
    lambda: &Option<Partition>,
    mu: &Option<Partition>,
    single: impl FnOnce(Partition, Partition) -> CheckSpec,
    grid: impl FnOnce() -> Vec<CheckSpec>,
) -> Result<Vec<CheckSpec>> {
    match (lambda, mu) {
        (Some(l), Some(m)) => Ok(vec![single(l.clone(), m.clone())]),
        (None, None) => Ok(grid()),
        _ => Err(Error::Parameter("give both --lambda and --mu, or neither for a sweep".into())),
    }
}

/// The specs a `verify` subcommand stands for.
pub fn verify_specs(check: &VerifyCommand, config: &CliConfig) -> Result<Vec<CheckSpec>> {
    use VerifyCommand as V;
    Ok(match check {
        V::Example13 => vec![CheckSpec::example_13()],
        V::Conj1Box { n, g, lambda } => match lambda {
            Some(l) => vec![CheckSpec::conj1_box(*n, *g, l.clone())],
            None => grids::conj1_box(*n, *g),
        },
        V::Conj1Count { n, g, lambda, mu } => single_or_grid(
            lambda,
            mu,
            |l, m| CheckSpec::conj1_count(*n, *g, l, m),
            || grids::conj1_count(*n, *g),
        )?,
        V::Conj2(p) => single_or_grid(
            &p.lambda,
            &p.mu,
            |l, m| CheckSpec::conj2(p.n, l, m),
            || grids::conj2(p.n, p.max_size),
        )?,
        V::Monotonicity(p) => single_or_grid(
            &p.lambda,
            &p.mu,
            |l, m| CheckSpec::monotonicity(p.n, l, m),
            || grids::monotonicity(p.n, p.max_size),
        )?,
        V::Positivity { root_type, pair: p } => single_or_grid(
            &p.lambda,
            &p.mu,
            |l, m| CheckSpec::kl_positivity(*root_type, p.n, l, m),
            || grids::kl_positivity(*root_type, p.n, p.max_size),
        )?,
        V::StableIdentity { types, pair: p } => {
            if p.lambda.is_some() && types.len() != 1 {
                return Err(Error::Parameter("a single check needs exactly one --type".into()));
            }
            single_or_grid(
                &p.lambda,
                &p.mu,
                |l, m| CheckSpec::stable_identity(types[0], p.n, l, m),
                || grids::stable_identity(types, p.n, p.max_size),
            )?
        }
        V::Stabilization { root_type, length, k_max, pair: p } => {
            let mut specs = single_or_grid(
                &p.lambda,
                &p.mu,
                |l, m| CheckSpec::stabilization(*root_type, p.n, l, m, *k_max),
                || grids::stabilization(*root_type, p.n, p.max_size),
            )?;
            if *length != LengthFunction::Standard {
                for s in &mut specs {
                    s.length = Some(length.clone());
                }
            }
            specs
        }
        V::TypeaCharge { n, bound } => vec![CheckSpec::typea_charge(*n, *bound)],
        V::Demazure { root_type, rank, mu, length, q_max, max_size } => {
            let q = q_max.or(config.q_max).unwrap_or(6);
            match mu {
                Some(m) => vec![CheckSpec::demazure(*root_type, *rank, m.clone(), length.clone(), q)],
                None => grids::demazure(*root_type, *rank, *max_size, length, q),
            }
        }
        V::All => grids::default_suite(),
    })
}

fn cmd_verify(a: VerifyArgs, config: &CliConfig, format: Format, out: &mut dyn Write) -> Result<i32> {
    let specs = verify_specs(&a.check, config)?;
    let cache_path = a.cache.or_else(|| config.cache.clone());
    let harness = match &cache_path {
        Some(p) => Harness::with_cache(KlCache::open(p)?),
        None => Harness::new(),
    };
    let jobs = a.jobs.or(config.jobs).unwrap_or(1);
    let mut sweep = harness.run_sweep(specs, jobs)?;
    if a.no_timing {
        sweep.reports = sweep.reports.iter().map(CheckReport::untimed).collect();
    }
    if let Some(path) = &a.report {
        write_report(&sweep, path)?;
    }
    print_sweep(&sweep, format, out)?;
    Ok(sweep.summary.exit_code())
}

/// The JSON array of reports at `path` and the summary CSV at `path` with
/// its extension replaced by `csv`.
pub fn write_report(sweep: &Sweep, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&sweep.reports)?;
    text.push('\n');
    std::fs::write(path, text)?;
    let csv_path = summary_path(path);
    let file = std::fs::File::create(csv_path)?;
    write_summary_csv(&sweep.reports, file)
}

pub fn summary_path(report: &Path) -> PathBuf {
    if report.extension().is_some_and(|e| e == "csv") {
        report.with_extension("summary.csv")
    } else {
        report.with_extension("csv")
    }
}

fn print_sweep(sweep: &Sweep, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, sweep)?;
            writeln!(out)?;
        }
        Format::Csv => write_summary_csv(&sweep.reports, &mut *out)?,
        Format::Plain => {
            for r in &sweep.reports {
                writeln!(out, "{}", r.line())?;
            }
            let s = &sweep.summary;
            writeln!(
                out,
                "total={} pass={} fail={} unsupported={} theorem_failures={} conjecture_failures={}",
                s.total, s.pass, s.fail, s.unsupported, s.theorem_failures, s.conjecture_failures
            )?;
        }
    }
    Ok(())
}
