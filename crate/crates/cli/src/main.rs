mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::CliError;

#[derive(Parser)]
#[command(name = "equidissect", version, about = "Exact equal-area triangle dissections of darts and kites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a partition from one of the five constructions.
    Construct(ConstructArgs),
    /// Check a dissection document and print the report.
    Verify(VerifyArgs),
    /// List verified odd spectrum members of the dart D(r/(2s)).
    Spectrum(SpectrumArgs),
    /// Draw a dissection document as SVG.
    Render(RenderArgs),
    /// Construct and verify a family of instances in parallel.
    Sweep(SweepArgs),
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub theorem: u8,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    /// Split every face into weight-many equal triangles.
    #[arg(long)]
    pub refine: bool,
    /// Theorem 1 only: use the uncorrected sign in q; the result does not tile.
    #[arg(long)]
    pub paper_literal: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Dissection JSON; `-` or omitted reads standard input.
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RenderArgs {
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 800)]
    pub width: u32,
    #[arg(long, default_value_t = 24)]
    pub margin: u32,
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
    /// Print each face index at its centroid.
    #[arg(long)]
    pub labels: bool,
    /// Render even if the faces do not tile the polygon.
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub theorem: u8,
    /// Largest r for the dart families.
    #[arg(long, default_value_t = 49)]
    pub r_max: u64,
    /// Theorem 1: t runs over odd values from r to r + t_span.
    #[arg(long, default_value_t = 40)]
    pub t_span: u64,
    /// Largest k for the kite families.
    #[arg(long, default_value_t = 8)]
    pub k_max: u64,
    /// Directory receiving one report per instance and summary.json.
    #[arg(long)]
    pub out: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Construct(args) => commands::construct(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Spectrum(args) => commands::spectrum(&args),
        Command::Render(args) => commands::render(&args),
        Command::Sweep(args) => commands::sweep(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::BadHypotheses(_) | CliError::Io(_) => 1,
            CliError::NotATiling(_) => 2,
            CliError::MalformedInput(_) => 4,
        }
    }
}
