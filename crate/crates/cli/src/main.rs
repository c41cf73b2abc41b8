use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use acyt_core::input::GeometryInput;
use acyt_core::report::{exit_code, run_pipeline, Command, Selection};
use acyt_core::Arithmetic;

/// Verify SU(3)-structures and their torsion connection on six-dimensional
/// Lie algebras.
#[derive(Parser)]
#[command(name = "acyt", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline.
    Check(Opts),
    /// Nijenhuis tensor, Lee form, torsion and the torsion connection.
    Torsion(Opts),
    /// Curvature identities, equivalences and the implication monitor.
    Curvature(Opts),
    /// Soliton residuals and parallel vector fields.
    Soliton(Opts),
    /// Algebraic identities of the SU(3)-structure.
    Identities(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Machine,
    Human,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Args)]
struct Opts {
    /// Geometry description (TOML).
    #[arg(
        long,
        value_name = "PATH",
        required_unless_present = "fixture",
        conflicts_with = "fixture"
    )]
    input: Option<PathBuf>,
    /// Use a bundled fixture instead of a file.
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Overrides the arithmetic named in the input.
    #[arg(long, value_enum)]
    arithmetic: Option<Mode>,
    /// Comma-separated check ids or id prefixes.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    checks: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match cli.command {
        Cmd::Check(o) => (Command::Check, o),
        Cmd::Torsion(o) => (Command::Torsion, o),
        Cmd::Curvature(o) => (Command::Curvature, o),
        Cmd::Soliton(o) => (Command::Soliton, o),
        Cmd::Identities(o) => (Command::Identities, o),
    };
    let selection = Selection {
        command,
        arithmetic: opts.arithmetic.map(|m| match m {
            Mode::Exact => Arithmetic::Exact,
            Mode::Float => Arithmetic::Float,
        }),
        checks: opts.checks,
    };
    let input = match (&opts.input, &opts.fixture) {
        (Some(path), _) => GeometryInput::from_path(path),
        (None, Some(name)) => GeometryInput::fixture(name),
        (None, None) => unreachable!("clap requires one of --input and --fixture"),
    };
    let result = input.and_then(|i| run_pipeline(&i, &selection));
    match &result {
        Ok(report) => match opts.format {
            Format::Machine => print!("{}", report.to_json()),
            Format::Human => print!("{}", report.to_human()),
        },
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result) as u8)
}
