mod commands;
mod settings;

use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

/// Exit statuses.
pub mod status {
    pub const OK: u8 = 0;
    pub const FINDINGS: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RUNTIME: u8 = 3;
}

#[derive(Parser)]
#[command(name = "teddy", version, about = "Detect Pythonic idioms and recommend them in code review")]
struct Cli {
    /// More log output (repeatable)
    #[arg(short, long, action = ArgAction::Count, global = true)]
    verbose: u8,
    /// Only log errors
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recommend Pythonic replacements for non-Pythonic code added by a diff
    CheckDiff(commands::CheckDiffArgs),
    /// Detect idioms in Python files or directories
    Scan(commands::ScanArgs),
    /// Detect idioms across the first-parent history of a git repository
    History(commands::HistoryArgs),
    /// Measure retrieval accuracy against a ground-truth corpus
    Eval(commands::EvalArgs),
    /// Check a catalog for structural problems
    CatalogValidate(commands::CatalogArgs),
}

fn init_logging(verbose: u8, quiet: bool) {
    let level = if quiet {
        log::LevelFilter::Error
    } else {
        match verbose {
            0 => log::LevelFilter::Warn,
            1 => log::LevelFilter::Info,
            2 => log::LevelFilter::Debug,
            _ => log::LevelFilter::Trace,
        }
    };
    env_logger::Builder::new().filter_level(level).parse_env("TEDDY_LOG").format_timestamp(None).init();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_logging(cli.verbose, cli.quiet);
    let result = match cli.command {
        Command::CheckDiff(args) => commands::check_diff(args),
        Command::Scan(args) => commands::scan(args),
        Command::History(args) => commands::history(args),
        Command::Eval(args) => commands::eval(args),
        Command::CatalogValidate(args) => commands::catalog_validate(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
