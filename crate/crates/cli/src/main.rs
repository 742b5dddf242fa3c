//! `logdiff`: JSON front end for logdiff-core.
//!
//! Every command prints one envelope
//! `{"schema_version":1,"status":"ok"|"error","payload":...,"diagnostics":[...]}`.
//! Exit codes: 0 ok, 1 domain failure, 2 usage or parse error.

mod commands;
mod schema;
mod suite;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use commands::Ctx;
use schema::{Envelope, FieldJson, Status, SCHEMA_VERSION};

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
    payload: Option<Value>,
}

impl CliError {
    pub fn usage(e: impl Display) -> Self {
        CliError { code: 2, message: e.to_string(), payload: None }
    }

    pub fn domain(e: impl Display) -> Self {
        CliError { code: 1, message: e.to_string(), payload: None }
    }

    pub fn with_payload(mut self, payload: Value) -> Self {
        self.payload = Some(payload);
        self
    }
}

impl From<logdiff_core::Error> for CliError {
    fn from(e: logdiff_core::Error) -> Self {
        match e {
            logdiff_core::Error::Parse { .. } => CliError::usage(e),
            _ => CliError::domain(e),
        }
    }
}

#[derive(Parser)]
#[command(name = "logdiff", version, about = "Logarithmic differentials, symbols and Witt vectors over finite fields")]
struct Cli {
    /// Field for form and symbol inputs, e.g. '{"p":2,"vars":["t","u"]}'.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Read the input JSON from a file instead of the command line.
    #[arg(long, global = true)]
    json_in: Option<PathBuf>,
    /// Also write the output envelope to a file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant factors of Omega^n of a finite local ring: {"family","p","n","degree"?,"k_max"?}.
    Omega { input: Option<String> },
    /// Normal form modulo exact forms, with witness.
    Nf { input: Option<String> },
    /// Membership in nu and the Artin-Schreier class.
    NuCheck { input: Option<String> },
    /// Differential symbol of a sum of Milnor symbols.
    Dsym { input: Option<String> },
    /// Write a form in nu as d_k of symbols (p = 2).
    Decompose { input: Option<String> },
    /// Witt vector arithmetic: {"p"|"q","i","op","a","b"?}.
    Witt { input: Option<String> },
    /// Symbol group over F_q: {"q","i","n"}.
    Hsym { input: Option<String> },
    /// Basis of the bounded part of nu_n: {"n","bound"}.
    NuBasis { input: Option<String> },
    /// Solve x^p - x = g in the bounded space: {"g","bound"}.
    SolveAs { input: Option<String> },
    /// Randomized self-check.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn load_input(cli: &Cli, inline: Option<&String>) -> Result<Value, CliError> {
    let text = match (inline, &cli.json_in) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
        }
        (Some(_), Some(_)) => return Err(CliError::usage("give the input inline or with --json-in, not both")),
        (None, None) => return Err(CliError::usage("missing input JSON")),
    };
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("invalid JSON: {e}")))
}

fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    let field = match &cli.field {
        Some(s) => Some(commands::decode::<FieldJson>(
            &serde_json::from_str(s).map_err(|e| CliError::usage(format!("invalid --field: {e}")))?,
        )?),
        None => None,
    };
    let ctx = Ctx { field };
    match &cli.command {
        Command::Omega { input } => commands::omega(&load_input(cli, input.as_ref())?),
        Command::Nf { input } => commands::nf(&ctx, &load_input(cli, input.as_ref())?),
        Command::NuCheck { input } => commands::nu_check(&ctx, &load_input(cli, input.as_ref())?),
        Command::Dsym { input } => commands::dsym(&ctx, &load_input(cli, input.as_ref())?),
        Command::Decompose { input } => commands::decompose(&ctx, &load_input(cli, input.as_ref())?),
        Command::Witt { input } => commands::witt(&load_input(cli, input.as_ref())?),
        Command::Hsym { input } => commands::hsym(&load_input(cli, input.as_ref())?),
        Command::NuBasis { input } => commands::nu_basis(&ctx, &load_input(cli, input.as_ref())?),
        Command::SolveAs { input } => commands::solve_as(&ctx, &load_input(cli, input.as_ref())?),
        Command::Suite { seed, count, jobs } => suite::run(*seed, *count, *jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (envelope, code) = match dispatch(&cli) {
        Ok(payload) => {
            (Envelope { schema_version: SCHEMA_VERSION, status: Status::Ok, payload, diagnostics: vec![] }, 0)
        }
        Err(e) => (
            Envelope {
                schema_version: SCHEMA_VERSION,
                status: Status::Error,
                payload: e.payload.unwrap_or(Value::Null),
                diagnostics: vec![e.message],
            },
            e.code,
        ),
    };
    let text = serde_json::to_string(&envelope).expect("envelopes serialize");
    println!("{text}");
    if let Some(path) = &cli.json_out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("logdiff: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
