//! Command-line front end: argument model, dispatch and exit codes.

pub mod file;
pub mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{tono_family, BoundsError};
use crate::fuzz::fuzz;

use file::{parse, Encoding, TonoParams, ValuationEntry, ValuationFile};
use report::{fuzz_table, Report, Sections};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_CHECK_FAILED: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "valuation-lab",
    version,
    about = "Invariants and bounds of divisorial plane valuations"
)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value = "table")]
    pub format: Format,
    /// Stamp reports with the current time; off by default so output is reproducible.
    #[arg(long, global = true)]
    pub timestamps: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicities, maximal contact values, Puiseux exponents, volumes.
    Invariants { file: PathBuf },
    /// Degree, Seshadri-type and negativity bounds.
    Bounds { file: PathBuf },
    /// Run every built-in identity; exits with 2 if any fails.
    Check { file: PathBuf },
    /// Named example families.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the identities on random configurations.
    Fuzz {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_points: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// The valuations ν_{a,e} with their supraminimal cuspidal curves.
    Tono {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        e: i64,
        /// Also write a valuation file describing the member.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// What a command prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String, code: u8) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_INVALID,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

fn load(path: &Path) -> Result<ValuationFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn render(report: &mut Report, cli: &Cli) -> String {
    if cli.timestamps {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        report.generated_at = Some(now);
    }
    match cli.format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json(),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Invariants { file } => {
            file_command(cli, file, "invariants", &[Sections::Invariants])
        }
        Command::Bounds { file } => file_command(cli, file, "bounds", &[Sections::Bounds]),
        Command::Check { file } => file_command(cli, file, "check", &[Sections::Checks]),
        Command::Family {
            family: Family::Tono { a, e, emit },
        } => tono_command(cli, *a, *e, emit.as_deref()),
        Command::Fuzz {
            max_points,
            trials,
            seed,
        } => {
            let summary = fuzz(*max_points as usize, *trials, *seed);
            let stdout = match cli.format {
                Format::Table => fuzz_table(&summary),
                Format::Json => {
                    let mut text =
                        serde_json::to_string_pretty(&summary).expect("plain data serializes");
                    text.push('\n');
                    text
                }
            };
            let code = if summary.clean() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Outcome::ok(stdout, code)
        }
    }
}

/// Exit status for a report built from a valid file.
pub fn status(report: &Report) -> u8 {
    if report.checks_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn file_command(cli: &Cli, path: &Path, command: &'static str, sections: &[Sections]) -> Outcome {
    let file = match load(path) {
        Ok(file) => file,
        Err(e) => return Outcome::invalid(e),
    };
    let mut report = Report::build(command, &file, sections);
    let code = status(&report);
    Outcome::ok(render(&mut report, cli), code)
}

fn tono_command(cli: &Cli, a: i64, e: i64, emit: Option<&Path>) -> Outcome {
    let family = match tono_family(a, e) {
        Ok(family) => family,
        Err(err @ BoundsError::TonoParameters { .. }) => return Outcome::invalid(err),
        Err(err) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("check failed: {err}\n"),
                code: EXIT_CHECK_FAILED,
            }
        }
    };
    if let Some(path) = emit {
        let entry = ValuationEntry::new(None, Encoding::Tono(TonoParams { a, e }));
        let file =
            ValuationFile::new(vec![entry], None).expect("tono parameters already validated");
        if let Err(err) = std::fs::write(path, file.serialize()) {
            return Outcome::invalid(format!("{}: {err}", path.display()));
        }
    }
    let mut report = Report::tono(&family);
    Outcome::ok(render(&mut report, cli), EXIT_OK)
}
