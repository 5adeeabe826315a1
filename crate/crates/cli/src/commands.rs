use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, ValueEnum};
use log::{info, warn};
use walkdir::WalkDir;

use teddy_core::catalog::{load_catalog, Catalog, CatalogError};
use teddy_core::config::{builtin_configs, NamedConfig, ThresholdConfig};
use teddy_core::detect::Finding;
use teddy_core::eval::{render_table, sweep, Corpus};
use teddy_core::history::{scan_tree, walk_history, HistoryError};
use teddy_core::output::write_atomic;
use teddy_core::recommend::{analyze_diff, render_comment};
use teddy_core::snippet::is_python_path;
use teddy_core::timeline::emit_timeline;

use crate::settings::ThresholdArgs;
use crate::status;

pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

type CmdResult = Result<u8, Failure>;

trait Classify<T> {
    fn usage(self) -> Result<T, Failure>;
    fn runtime(self) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Classify<T> for Result<T, E> {
    fn usage(self) -> Result<T, Failure> {
        self.map_err(|e| Failure { code: status::USAGE, error: e.into() })
    }

    fn runtime(self) -> Result<T, Failure> {
        self.map_err(|e| Failure { code: status::RUNTIME, error: e.into() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct CatalogArgs {
    /// Catalog directory holding catalog.json
    #[arg(long, env = "TEDDY_CATALOG", value_name = "DIR")]
    pub catalog: PathBuf,
}

impl CatalogArgs {
    fn load(&self) -> Result<Catalog, Failure> {
        let catalog = load_catalog(&self.catalog).usage()?;
        info!("loaded {} catalog entries from {}", catalog.len(), self.catalog.display());
        Ok(catalog)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            write_atomic(path, text.as_bytes()).with_context(|| format!("cannot write {}", path.display())).runtime()
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).runtime()
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(value).runtime()?;
    text.push('\n');
    Ok(text)
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().is_err() {
            warn!("worker pool already initialised; --jobs ignored");
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckDiffArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Unified diff to analyse; standard input when omitted
    #[arg(long, value_name = "FILE")]
    diff: Option<PathBuf>,
    /// Output format: markdown or json
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
    /// Write output here instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

pub fn check_diff(args: CheckDiffArgs) -> CmdResult {
    if args.format == Format::Table {
        return Err(anyhow!("check-diff supports --format markdown or json")).usage();
    }
    let config = args.thresholds.resolve(ThresholdConfig::prevention_default()).usage()?;
    let catalog = args.catalog.load()?;
    let diff = match &args.diff {
        Some(path) => fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).usage()?,
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("cannot read standard input").usage()?;
            text
        }
    };
    let recs = analyze_diff(&diff, &catalog, &config).usage()?;
    let text = match args.format {
        Format::Json => to_json(&recs)?,
        _ => render_comment(&recs),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if recs.is_empty() { status::OK } else { status::FINDINGS })
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Python files or directories to scan
    #[arg(required = true, value_name = "PATH")]
    paths: Vec<PathBuf>,
    /// Output format: table or json
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

fn collect_sources(paths: &[PathBuf]) -> Result<Vec<(String, String)>, Failure> {
    let mut files = Vec::new();
    for root in paths {
        if !root.exists() {
            return Err(anyhow!("{} does not exist", root.display())).usage();
        }
        for entry in WalkDir::new(root).sort_by_file_name() {
            let entry = entry.runtime()?;
            let path = entry.path();
            let name = path.to_string_lossy().replace('\\', "/");
            if !entry.file_type().is_file() || !is_python_path(&name) {
                continue;
            }
            match fs::read_to_string(path) {
                Ok(text) => files.push((name, text)),
                Err(err) => warn!("skipping {name}: {err}"),
            }
        }
    }
    Ok(files)
}

fn findings_table(findings: &[Finding]) -> String {
    let mut out = String::new();
    for f in findings {
        let _ = writeln!(
            out,
            "{}:{}-{}\t{}\t{}\t{:.2}\t{}",
            f.file_path, f.start_line, f.end_line, f.label, f.idiom_type, f.score, f.entry_id
        );
    }
    out
}

pub fn scan(args: ScanArgs) -> CmdResult {
    if args.format == Format::Markdown {
        return Err(anyhow!("scan supports --format table or json")).usage();
    }
    let config = args.thresholds.resolve(ThresholdConfig::detection_default()).usage()?;
    let catalog = args.catalog.load()?;
    let files = collect_sources(&args.paths)?;
    let report = scan_tree(&files, &catalog, &config).usage()?;
    let text = match args.format {
        Format::Json => to_json(&report.findings)?,
        _ => findings_table(&report.findings),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(status::OK)
}

#[derive(Debug, Args)]
pub struct HistoryArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Local git repository
    #[arg(long, default_value = ".", value_name = "DIR")]
    repo: PathBuf,
    /// Directory for occurrences.jsonl and timeline.html
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
    /// Worker threads
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

pub fn history(args: HistoryArgs) -> CmdResult {
    let config = args.thresholds.resolve(ThresholdConfig::detection_default()).usage()?;
    let catalog = args.catalog.load()?;
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let dataset = match walk_history(&args.repo, &catalog, &config, jobs) {
        Ok(d) => d,
        Err(e @ (HistoryError::NotARepository { .. } | HistoryError::NoCommits(_) | HistoryError::Config(_))) => {
            return Err(e).usage();
        }
        Err(e) => return Err(e).runtime(),
    };
    let (jsonl, html) = emit_timeline(&dataset, &args.out)
        .with_context(|| format!("cannot write to {}", args.out.display()))
        .runtime()?;
    eprintln!(
        "{} occurrences in {} commits ({} warnings): {}, {}",
        dataset.occurrences.len(),
        dataset.commit_count,
        dataset.warnings.len(),
        jsonl.display(),
        html.display()
    );
    Ok(status::OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepSource {
    /// C1 to C4
    Builtin,
    /// The named configurations of --config
    File,
    /// Both
    All,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    catalog: CatalogArgs,
    /// Ground-truth manifest
    #[arg(long, value_name = "FILE")]
    truth: PathBuf,
    /// Evaluate a set of named configurations instead of one
    #[arg(long, value_enum)]
    sweep: Option<SweepSource>,
    /// Output format: table or json
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

pub fn eval(args: EvalArgs) -> CmdResult {
    if args.format == Format::Markdown {
        return Err(anyhow!("eval supports --format table or json")).usage();
    }
    set_jobs(args.jobs);
    let configs: Vec<NamedConfig> = match args.sweep {
        None => {
            let config = args.thresholds.resolve(ThresholdConfig::prevention_default()).usage()?;
            let name = args.thresholds.use_config.clone().unwrap_or_else(|| "default".to_string());
            vec![NamedConfig { name, config }]
        }
        Some(source) => {
            let file = args.thresholds.file().usage()?;
            let mut configs = Vec::new();
            if matches!(source, SweepSource::Builtin | SweepSource::All) {
                configs.extend(builtin_configs());
            }
            if matches!(source, SweepSource::File | SweepSource::All) {
                configs.extend(file.named());
            }
            configs
        }
    };
    let catalog = args.catalog.load()?;
    let corpus = Corpus::load(&args.truth).usage()?;
    let rows = match sweep(&catalog, &corpus, &configs) {
        Ok(rows) => rows,
        Err(e @ (teddy_core::eval::EvalError::Truth(_) | teddy_core::eval::EvalError::NoConfigs)) => {
            return Err(e).usage();
        }
        Err(e) => return Err(e).runtime(),
    };
    let text = match args.format {
        Format::Json => to_json(&rows)?,
        _ => render_table(&rows),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(status::OK)
}

pub fn catalog_validate(args: CatalogArgs) -> CmdResult {
    match load_catalog(&args.catalog) {
        Ok(catalog) => {
            println!("{}: {} entries, valid", args.catalog.display(), catalog.len());
            Ok(status::OK)
        }
        Err(CatalogError::Validation(violations)) => {
            for v in &violations {
                println!("{v}");
            }
            Err(anyhow!("{} violation(s) in {}", violations.len(), args.catalog.display())).usage()
        }
        Err(e) => Err(e).usage(),
    }
}
