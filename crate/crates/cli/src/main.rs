//! Command-line front end for the partition identity toolkit.
//!
//! Four subcommands cover the library surface: `verify` runs brute-force
//! identity suites over ranges of `n` and `m`, `table` renders both sides of
//! one identity as a value table, `enumerate` lists (optionally decorated)
//! partitions of a given weight, and `map` applies the merge/split bijection
//! to a single partition.
//!
//! Exit codes: 0 on success with all checks passing, 1 when a verification
//! check fails, 2 on usage errors, 3 on I/O errors.

mod jobs;
mod output;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use glaisher::{
    decompose_dn, decompose_oe, enumerate_decorated, enumerate_partitions, sigma, sigma_inv,
    weight_w, weight_wtilde, IdentityReport, IdentityTag, PartList, Sign,
};
use jobs::{build_jobs, build_table_jobs, run_job, Job, VerifyConfig};
use output::{render_csv, render_json, render_text, Record};

#[derive(Parser)]
#[command(
    name = "glaisher",
    version,
    about = "Partition identity toolkit: verify identities by brute force, \
             tabulate them, enumerate partitions, and apply the merge/split bijection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks over ranges of n and m and report every result
    Verify(VerifyArgs),
    /// Render one identity as a table of left and right side values
    Table(TableArgs),
    /// List the partitions of n, plain or decorated with their weights
    Enumerate(EnumerateArgs),
    /// Apply the merge/split bijection to one partition
    Map(MapArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity tags to check, comma separated; defaults to every identity
    #[arg(long, value_delimiter = ',')]
    identities: Vec<String>,
    /// Range of n as `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "1..20")]
    n: String,
    /// Range of m as `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "1..6")]
    m: String,
    /// Sign choices for the signed families, comma separated
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "+1,-1",
        allow_hyphen_values = true
    )]
    signs: Vec<String>,
    /// Complex evaluation points per (identity, n, m, sign)
    #[arg(long, default_value_t = 5)]
    z_samples: u64,
    /// Rational evaluation points per (identity, n, m)
    #[arg(long, default_value_t = 5)]
    points: u64,
    /// Root seed for all sampled evaluation points
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses all cores, unset falls back to GLAISHER_WORKERS
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Record per-check wall time; off by default so output bytes never vary
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Identity tag to tabulate
    #[arg(long, default_value = "beta-sum")]
    identity: String,
    /// Range of n as `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "1..12")]
    n: String,
    /// Range of m as `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "2..4")]
    m: String,
    /// Index k for the per-k identity families
    #[arg(long, default_value_t = 1)]
    k: u64,
    /// Sign for the signed families
    #[arg(long, default_value = "+1", allow_hyphen_values = true)]
    sign: String,
    /// Seed for the identities that evaluate at sampled rational points
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the table to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Weight to enumerate
    #[arg(long)]
    n: u64,
    /// List decorated partitions with their W and W~ weights
    #[arg(long)]
    decorated: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the listing to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MapArgs {
    /// Modulus of the bijection, at least 2
    #[arg(long)]
    m: u64,
    /// Partition to map: comma separated parts, e.g. `5,4,3,2,2,1`
    #[arg(long, allow_hyphen_values = true)]
    parts: String,
    /// Apply the inverse direction (split multiplicities, merge parts)
    #[arg(long)]
    inverse: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Io(String),
}

impl AppError {
    fn code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Io(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) | AppError::Io(msg) => f.write_str(msg),
        }
    }
}

fn usage(err: impl fmt::Display) -> AppError {
    AppError::Usage(err.to_string())
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(err.code());
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, AppError> {
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Table(args) => run_table(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Map(args) => run_map(args),
    }
}

/// Parses `lo..hi` (inclusive) or a bare value into an inclusive range.
fn parse_range(text: &str) -> Result<(u64, u64), AppError> {
    let text = text.trim();
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| AppError::Usage(format!("invalid range bound `{s}` in `{text}`")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(AppError::Usage(format!("empty range `{text}`")));
    }
    Ok((lo, hi))
}

fn parse_tags(names: &[String]) -> Result<Vec<IdentityTag>, AppError> {
    if names.is_empty() {
        return Ok(IdentityTag::ALL.to_vec());
    }
    names
        .iter()
        .map(|name| name.trim().parse().map_err(usage))
        .collect()
}

fn parse_signs(names: &[String]) -> Result<Vec<Sign>, AppError> {
    let signs: Vec<Sign> = names
        .iter()
        .map(|name| name.trim().parse().map_err(usage))
        .collect::<Result<_, _>>()?;
    if signs.is_empty() {
        return Err(AppError::Usage("at least one sign is required".into()));
    }
    Ok(signs)
}

fn require_positive_modulus(m_range: (u64, u64)) -> Result<(), AppError> {
    if m_range.0 == 0 {
        return Err(AppError::Usage("m must be at least 1".into()));
    }
    Ok(())
}

fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("GLAISHER_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

/// Runs jobs on a rayon pool, preserving job order in the results.
fn execute_jobs(jobs: &[Job], timings: bool, workers: usize) -> Result<Vec<Record>, AppError> {
    let run = || -> glaisher::Result<Vec<(IdentityReport, u64)>> {
        jobs.par_iter().map(|job| run_job(job, timings)).collect()
    };
    let outcome = if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| AppError::Usage(format!("cannot build worker pool: {e}")))?
            .install(run)
    };
    let reports = outcome.map_err(usage)?;
    Ok(reports
        .iter()
        .map(|(report, elapsed)| Record::new(report, *elapsed))
        .collect())
}

fn render_records(format: Format, records: &[Record]) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}

fn emit(content: &str, output: Option<&Path>) -> Result<(), AppError> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            match std::io::stdout().lock().write_all(content.as_bytes()) {
                Ok(()) => Ok(()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => process::exit(0),
                Err(e) => Err(AppError::Io(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}

fn exit_code_for(records: &[Record]) -> i32 {
    if records.iter().all(Record::is_pass) {
        0
    } else {
        1
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32, AppError> {
    let cfg = VerifyConfig {
        identities: parse_tags(&args.identities)?,
        n_range: parse_range(&args.n)?,
        m_range: parse_range(&args.m)?,
        signs: parse_signs(&args.signs)?,
        z_samples: args.z_samples,
        points: args.points,
        seed: args.seed,
        timings: args.timings,
    };
    require_positive_modulus(cfg.m_range)?;
    let jobs = build_jobs(&cfg);
    let records = execute_jobs(&jobs, cfg.timings, resolve_workers(args.workers))?;
    emit(
        &render_records(args.format, &records),
        args.output.as_deref(),
    )?;
    Ok(exit_code_for(&records))
}

fn run_table(args: TableArgs) -> Result<i32, AppError> {
    let tag: IdentityTag = args.identity.trim().parse().map_err(usage)?;
    let n_range = parse_range(&args.n)?;
    let m_range = parse_range(&args.m)?;
    require_positive_modulus(m_range)?;
    if args.k == 0 {
        return Err(AppError::Usage("k must be at least 1".into()));
    }
    let sign: Sign = args.sign.trim().parse().map_err(usage)?;
    let jobs = build_table_jobs(tag, n_range, m_range, sign, args.k, args.seed);
    let records = execute_jobs(&jobs, false, 0)?;
    emit(
        &render_records(args.format, &records),
        args.output.as_deref(),
    )?;
    Ok(exit_code_for(&records))
}

#[derive(Serialize)]
struct EnumRecord {
    parts: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wtilde: Option<String>,
}

fn run_enumerate(args: EnumerateArgs) -> Result<i32, AppError> {
    let rows: Vec<EnumRecord> = if args.decorated {
        enumerate_decorated(args.n)
            .map(|d| EnumRecord {
                parts: d.to_string(),
                w: Some(weight_w(&d).to_string()),
                wtilde: Some(weight_wtilde(&d).to_string()),
            })
            .collect()
    } else {
        enumerate_partitions(args.n)
            .map(|p| EnumRecord {
                parts: p.to_string(),
                w: None,
                wtilde: None,
            })
            .collect()
    };
    let content = match args.format {
        Format::Text => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&row.parts);
                if let (Some(w), Some(wt)) = (&row.w, &row.wtilde) {
                    out.push_str(&format!(" W={w} W~={wt}"));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&serde_json::to_string(row).expect("row serializes"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            if args.decorated {
                writer
                    .write_record(["parts", "w", "wtilde"])
                    .expect("writes to memory");
                for row in &rows {
                    writer
                        .write_record([
                            row.parts.as_str(),
                            row.w.as_deref().unwrap_or(""),
                            row.wtilde.as_deref().unwrap_or(""),
                        ])
                        .expect("writes to memory");
                }
            } else {
                writer.write_record(["parts"]).expect("writes to memory");
                for row in &rows {
                    writer
                        .write_record([row.parts.as_str()])
                        .expect("writes to memory");
                }
            }
            String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("valid utf-8")
        }
    };
    emit(&content, args.output.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct MapRecord {
    source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    o_part: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_part: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_part: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_part: Option<String>,
    image: String,
}

fn warn_if_unsorted(raw: &str, normalized: &PartList) {
    let mut values = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match token.parse::<u64>() {
            Ok(v) => values.push(v),
            Err(_) => return,
        }
    }
    if values.windows(2).any(|pair| pair[0] < pair[1]) {
        eprintln!("warning: parts were not nonincreasing; normalized to {normalized}");
    }
}

fn run_map(args: MapArgs) -> Result<i32, AppError> {
    if args.m < 2 {
        return Err(AppError::Usage("map requires m to be at least 2".into()));
    }
    let list: PartList = args.parts.parse().map_err(usage)?;
    warn_if_unsorted(&args.parts, &list);
    let source = list.to_partition();

    let (first_label, second_label, first, second, image) = if args.inverse {
        let split = decompose_dn(&list, args.m).map_err(usage)?;
        let image = sigma_inv(&source, args.m).map_err(usage)?;
        ("d-part", "n-part", split.d_part, split.n_part, image)
    } else {
        let split = decompose_oe(&list, args.m).map_err(usage)?;
        let image = sigma(&source, args.m).map_err(usage)?;
        ("o-part", "e-part", split.o_part, split.e_part, image)
    };
    let image = image.to_part_list();
    let first_key = first_label.replace('-', "_");
    let second_key = second_label.replace('-', "_");

    let content = match args.format {
        Format::Text => format!(
            "source: {list}\n{first_label}: {first}\n{second_label}: {second}\nimage: {image}\n",
        ),
        Format::Json => {
            let record = MapRecord {
                source: list.to_string(),
                o_part: (!args.inverse).then(|| first.to_string()),
                e_part: (!args.inverse).then(|| second.to_string()),
                d_part: args.inverse.then(|| first.to_string()),
                n_part: args.inverse.then(|| second.to_string()),
                image: image.to_string(),
            };
            let mut out = serde_json::to_string(&record).expect("record serializes");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["source", &first_key, &second_key, "image"])
                .expect("writes to memory");
            writer
                .write_record([
                    list.to_string(),
                    first.to_string(),
                    second.to_string(),
                    image.to_string(),
                ])
                .expect("writes to memory");
            String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("valid utf-8")
        }
    };
    emit(&content, args.output.as_deref())?;
    Ok(0)
}
