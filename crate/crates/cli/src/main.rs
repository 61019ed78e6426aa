mod commands;
mod encode;
mod manifest;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use commands::Command;
use encode::CliError;

/// Manin maps and tangency bounds for elliptic curves over k(t).
#[derive(Debug, Parser)]
#[command(name = "manin", version)]
struct Cli {
    command: Command,
    /// TOML manifest describing the curve, points and operator.
    manifest: PathBuf,
    /// Largest multiple nP scanned when looking for tangencies.
    #[arg(long)]
    n_max: Option<u64>,
    /// Degree bound on A, B, C when solving for a Picard-Fuchs operator.
    #[arg(long)]
    pole_bound: Option<usize>,
    /// Machine-readable output (the default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    table: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = cli.command.name();
    let mut inputs = Value::Null;
    let outcome = manifest::read(&cli.manifest)
        .and_then(|m| manifest::load(&m, cli.n_max, cli.pole_bound))
        .and_then(|setup| {
            inputs = setup.inputs.clone();
            commands::run(cli.command, &setup)
        });
    match outcome {
        Ok(out) => {
            let failed = out.checks.iter().any(|c| !c.pass);
            if cli.table {
                emit(&table::render(&name, &out.results, &out.checks));
            } else {
                let doc = json!({
                    "command": name,
                    "inputs": inputs,
                    "results": out.results,
                    "checks": out.checks,
                });
                emit(&json_text(&doc));
            }
            ExitCode::from(if failed { 1 } else { 0 })
        }
        Err(e) => {
            let (kind, msg, code) = match e {
                CliError::Input(m) => ("input", m, 2),
                CliError::Hypothesis(m) => ("hypothesis", m, 1),
            };
            eprintln!("manin {name}: {msg}");
            if !cli.table {
                let doc = json!({
                    "command": name,
                    "inputs": inputs,
                    "error": {"kind": kind, "message": msg},
                });
                emit(&json_text(&doc));
            }
            ExitCode::from(code)
        }
    }
}

fn json_text(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).unwrap() + "\n"
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
