use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use trilie::axioms::AxiomError;
use trilie::constructions::ConstructionError;
use trilie::format::{FormatError, ReportFormat};

mod commands;

#[derive(Parser)]
#[command(name = "trilie", version, about = "Check and construct 3-Lie-Rinehart algebras over the rationals")]
struct Cli {
    /// Report style.
    #[arg(long, value_enum, default_value_t = Style::Text, global = true)]
    format: Style,
    /// Witnesses printed per failing law.
    #[arg(long, default_value_t = 5, global = true)]
    witness_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run every checker that applies to the blocks of FILE (`-` for stdin).
    Validate { file: String },
    /// Build a structure and print it with its certification report.
    Construct {
        kind: ConstructKind,
        file: String,
        /// Write the structure here and the report to stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a derivation space.
    Derive { kind: DeriveKind, file: String },
    /// Subspace calculus.
    Analyze { kind: AnalyzeKind, file: String },
    /// Built-in examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ConstructKind {
    Semidirect,
    Tensor,
    EExt,
    Wedge,
    WSpace,
    QuotientW,
    Quotient,
    CrossedIdeal,
    CrossedEpi,
    CrossedWedge,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DeriveKind {
    Der,
    DerA,
    DerBeta,
    Inner,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum AnalyzeKind {
    Centers,
    Ideals,
    Hom,
    Crossed,
}

#[derive(Subcommand)]
enum ExamplesCommand {
    /// Names and one-line descriptions.
    List,
    /// Print an example in the text format.
    Emit { name: String },
}

/// 2 for input that cannot be read or resolved, 3 for a violated
/// precondition, 1 for a law that failed while constructing.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<ConstructionError>() {
        return match e {
            ConstructionError::Axiom(AxiomError::DimensionMismatch { .. }) | ConstructionError::Model(_) => 2,
            e if e.is_precondition() => 3,
            _ => 1,
        };
    }
    if let Some(e) = err.downcast_ref::<AxiomError>() {
        return match e {
            AxiomError::PreconditionViolated { .. } => 3,
            AxiomError::DimensionMismatch { .. } => 2,
        };
    }
    if err.downcast_ref::<FormatError>().is_some() {
        return 2;
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = match cli.format {
        Style::Text => ReportFormat::Text,
        Style::Machine => ReportFormat::Machine,
    };
    let mut out = commands::Output::new(style, cli.witness_limit);
    let result: Result<()> = match cli.command {
        Command::Validate { file } => commands::validate(&mut out, &file),
        Command::Construct { kind, file, output } => commands::construct(&mut out, kind, &file, output.as_deref()),
        Command::Derive { kind, file } => commands::derive(&mut out, kind, &file),
        Command::Analyze { kind, file } => commands::analyze(&mut out, kind, &file),
        Command::Examples { action: ExamplesCommand::List } => commands::examples_list(&mut out),
        Command::Examples { action: ExamplesCommand::Emit { name } } => commands::examples_emit(&mut out, &name),
    };
    match result {
        Ok(()) => {
            print!("{}", out.finish());
            ExitCode::from(if out.passed() { 0 } else { 1 })
        }
        Err(err) => {
            print!("{}", out.finish());
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
