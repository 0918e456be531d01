use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use ydcheck_cli::{builtin_names, run_suites, FieldChoice, ReportFormat, Suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "ydcheck",
    about = "Exact identity checking for weak braided Hopf algebras and Yetter-Drinfeld module categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity suites over instances and report pass/fail per identity.
    Check(CheckArgs),
    /// List builtin instances and available suites.
    List,
}

#[derive(Args)]
struct CheckArgs {
    /// JSON configuration file; command-line flags are ignored when given.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Builtin name or structure-file path; repeatable.
    #[arg(long = "instance")]
    instances: Vec<String>,
    /// Comma-separated suite names; defaults to all suites.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// Q for the rationals or Fp:<p> for a prime field.
    #[arg(long, default_value = "Q")]
    field: String,
    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Worker count; 0 picks the number of cores. The YDCHECK_JOBS
    /// environment variable overrides this flag.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    field: Option<String>,
    instances: Vec<String>,
    #[serde(default)]
    suites: Vec<String>,
    #[serde(default)]
    parallelism: usize,
    report_format: Option<String>,
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    if names.is_empty() {
        return Ok(Suite::ALL.to_vec());
    }
    names.iter().map(|n| Suite::from_str(n)).collect()
}

fn build_config(args: &CheckArgs) -> Result<SuiteConfig, String> {
    let mut cfg = if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let file: ConfigFile =
            serde_json::from_str(&text).map_err(|e| format!("bad config: {e}"))?;
        SuiteConfig {
            field: FieldChoice::from_str(file.field.as_deref().unwrap_or("Q"))?,
            instances: file.instances,
            suites: parse_suites(&file.suites)?,
            parallelism: file.parallelism,
            report_format: ReportFormat::from_str(file.report_format.as_deref().unwrap_or("text"))?,
        }
    } else {
        SuiteConfig {
            field: FieldChoice::from_str(&args.field)?,
            instances: args.instances.clone(),
            suites: parse_suites(&args.suite)?,
            parallelism: args.jobs,
            report_format: ReportFormat::from_str(&args.format)?,
        }
    };
    if let Ok(jobs) = std::env::var("YDCHECK_JOBS") {
        cfg.parallelism = jobs
            .parse()
            .map_err(|_| format!("bad YDCHECK_JOBS {jobs:?}"))?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            println!("builtin instances:");
            for name in builtin_names() {
                println!("  {name}");
            }
            println!("suites:");
            for suite in Suite::ALL {
                println!("  {}", suite.name());
            }
            ExitCode::SUCCESS
        }
        Command::Check(args) => {
            let cfg = match build_config(&args) {
                Ok(cfg) => cfg,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            };
            match run_suites(&cfg) {
                Ok(report) => {
                    match cfg.report_format {
                        ReportFormat::Json => println!("{}", report.to_json()),
                        ReportFormat::Text => print!("{}", report.render_text()),
                    }
                    ExitCode::from(report.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
