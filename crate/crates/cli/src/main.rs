//! `pgonal`: command-line front end for curve validation, classification
//! and Galois descent. One JSON (or text) document on stdout per run,
//! diagnostics on stderr, exit status 0 / 10 / 2 / 70.

mod commands;
mod report;
mod text;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use commands::Options;
use report::{Report, Status};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "pgonal", version, about = "Cyclic p-gonal curves: uniqueness, descent data and models")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Cap on the conic point search box (default: Holzer bound, capped)
    #[arg(long, global = true)]
    height_bound: Option<u64>,
    /// Seed for corpus generation
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a curve file (or every .json file in a directory)
    Validate { path: PathBuf },
    /// Genus of a curve
    Genus { path: PathBuf },
    /// Möbius isomorphisms between two curves, with their weight units t
    Isom { first: PathBuf, second: PathBuf },
    /// Power character of the Galois action
    Character { path: PathBuf },
    /// Galois cocycle of Möbius maps
    Cocycle { path: PathBuf },
    /// Descend the curve to a model over Q or a quadratic field
    Descend { path: PathBuf },
    /// Uniqueness of the p-gonal group for a shape (p, m)
    Classify {
        #[arg(long = "p")]
        p: u32,
        #[arg(long = "m")]
        m: usize,
    },
    /// The six exceptional fixture curves
    Gallery,
    /// Write a corpus of random twisted curves into a directory
    Corpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

fn guarded(command: &str, f: impl FnOnce() -> Report) -> Report {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_string());
        Report::failure(command, Status::Internal, format!("internal invariant violated: {msg}"))
    })
}

fn single(command: &'static str, path: &Path, opts: Options) -> Report {
    guarded(command, || {
        let curve = match commands::load(command, path) {
            Ok(c) => c,
            Err(r) => return r,
        };
        match command {
            "validate" => commands::validate(&curve),
            "genus" => commands::genus(&curve),
            "character" => commands::character(&curve),
            "cocycle" => commands::cocycle(&curve),
            "descend" => commands::descend_cmd(&curve, opts),
            _ => unreachable!("not a single-file command"),
        }
    })
}

/// Every `.json` file in `dir`, processed in parallel; the batch report
/// lists per-file reports by file name and carries the worst status.
fn batch(command: &'static str, dir: &Path, opts: Options) -> Report {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => {
            return Report::failure(command, Status::InvalidInput, format!("{}: {e}", dir.display()))
        }
    };
    files.sort();
    let reports: Vec<(String, Report)> = files
        .par_iter()
        .map(|f| {
            let name = f.file_name().unwrap_or_default().to_string_lossy().into_owned();
            (name, single(command, f, opts))
        })
        .collect();
    let status = reports.iter().map(|(_, r)| r.status).max().unwrap_or(Status::Ok);
    let items: Vec<Value> = reports
        .iter()
        .map(|(name, r)| {
            json!({
                "file": name,
                "command": command,
                "status": r.status.as_str(),
                "payload": r.payload,
                "log": r.log,
            })
        })
        .collect();
    let mut out = Report::new("batch", status, Value::Array(items));
    for (name, r) in &reports {
        for line in &r.log {
            out.log.push(format!("{name}: {line}"));
        }
    }
    out.log.push(format!("{command}: {} files, worst status {}", reports.len(), status.as_str()));
    out
}

fn run(cli: &Cli) -> Report {
    let opts = Options { height_bound: cli.height_bound, seed: cli.seed };
    let file_cmd = |name: &'static str, path: &Path| {
        if path.is_dir() {
            batch(name, path, opts)
        } else {
            single(name, path, opts)
        }
    };
    match &cli.cmd {
        Cmd::Validate { path } => file_cmd("validate", path),
        Cmd::Genus { path } => file_cmd("genus", path),
        Cmd::Character { path } => file_cmd("character", path),
        Cmd::Cocycle { path } => file_cmd("cocycle", path),
        Cmd::Descend { path } => file_cmd("descend", path),
        Cmd::Isom { first, second } => guarded("isom", || {
            let a = match commands::load("isom", first) {
                Ok(c) => c,
                Err(r) => return r,
            };
            match commands::load("isom", second) {
                Ok(b) => commands::isom(&a, &b),
                Err(r) => r,
            }
        }),
        Cmd::Classify { p, m } => guarded("classify", || commands::classify(*p, *m)),
        Cmd::Gallery => guarded("gallery", commands::gallery_cmd),
        Cmd::Corpus { dir, count } => guarded("corpus", || commands::corpus_cmd(dir, *count, opts)),
    }
}

fn emit(report: &Report, format: Format) -> ExitCode {
    for line in &report.log {
        eprintln!("{}: {line}", report.command);
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n",
        Format::Text => text::render(report),
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(report.status.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            let r = Report::failure("usage", Status::InvalidInput, e.kind().to_string());
            return emit(&r, Format::Json);
        }
    };
    // panics are reported as internal-invariant-violation reports
    std::panic::set_hook(Box::new(|info| eprintln!("panic: {info}")));
    let report = run(&cli);
    emit(&report, cli.format)
}
