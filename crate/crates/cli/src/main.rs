//! `lcq`: compute second lower-central quotients from homological
//! data, cross-check them against group presentations, and reproduce
//! the Fano-surface determinant chain.
//!
//! Exit codes: 0 all checks passed, 1 a named check failed, 2 the
//! input could not be used.

use clap::{Parser, Subcommand};
use lcq::catalog;
use lcq::format::{parse_presentation, parse_space, FormatError};
use lcq::selftest;
use lcq_core::fano;
use lcq_core::nilpotent::gamma2_mod_gamma3;
use lcq_core::second_quotient::second_lcs_quotient;
use num_bigint::BigInt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lcq",
    version,
    about = "Exact second lower-central quotients D/(D,G) from homological data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read a space file and print Coker(mu) with its exactness flag
    Cokermu { file: PathBuf },
    /// Read a presentation file and print gamma2/gamma3 of the group
    Nilquot { file: PathBuf },
    /// Reproduce the Fano-surface determinant computation and checks
    Fano,
    /// Run every built-in catalog entry and cross-validate
    Catalog {
        /// Process entries concurrently (output is identical)
        #[arg(long)]
        parallel: bool,
    },
    /// Run the property suites at reduced case counts
    Selftest,
}

/// Input problems exit with 2, failed checks with 1.
enum RunError {
    Input(String),
    Check(String),
}

fn read_input(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))
}

fn input_err(path: &Path, e: FormatError) -> RunError {
    RunError::Input(format!("{}: {e}", path.display()))
}

fn cmd_cokermu(path: &Path) -> Result<(), RunError> {
    let text = read_input(path)?;
    let space = parse_space(&text).map_err(|e| input_err(path, e))?;
    let result =
        second_lcs_quotient(&space).map_err(|e| RunError::Input(format!("{}: {e}", space.name)))?;
    let rendered = if result.group.is_trivial() {
        "trivial group".to_string()
    } else {
        result.group.to_string()
    };
    println!("{}: D/(D,G) = {rendered}, {}", space.name, result.exactness);
    Ok(())
}

fn cmd_nilquot(path: &Path) -> Result<(), RunError> {
    let text = read_input(path)?;
    let presentation = parse_presentation(&text).map_err(|e| input_err(path, e))?;
    let quotient = gamma2_mod_gamma3(&presentation);
    println!("gamma2/gamma3 = {quotient}");
    Ok(())
}

fn cmd_fano() -> Result<(), RunError> {
    let det = fano::det_f();
    println!("det_f = {det}");
    let (block_det, expected) = fano::rank1_det_identity(5);
    println!("rank-1 identity (n = 5): |det(E - I)| = {block_det}, |1 - n| = {expected}");

    let blocks = fano::verify_block_decomposition();
    print!("{blocks}");
    let parity = fano::parity_check();
    print!("{parity}");

    let mut failed: Vec<String> = blocks
        .items()
        .iter()
        .chain(parity.items())
        .filter(|i| !i.passed)
        .map(|i| i.name.to_string())
        .collect();
    if det != BigInt::from(4) {
        failed.push("det_f".to_string());
    }
    if block_det != expected {
        failed.push("rank1_det_identity".to_string());
    }

    match fano::fano_second_quotient() {
        Ok(result) => println!("D/(D,G) = {}, {}", result.group, result.exactness),
        Err(e) => {
            println!("second quotient: {e}");
            failed.push("fano_second_quotient".to_string());
        }
    }
    if failed.is_empty() {
        println!("all fano checks passed");
        Ok(())
    } else {
        Err(RunError::Check(format!(
            "failing checks: {}",
            failed.join(", ")
        )))
    }
}

fn cmd_catalog(parallel: bool) -> Result<(), RunError> {
    let outcomes = catalog::run_catalog(parallel)
        .map_err(|e| RunError::Input(format!("built-in catalog: {e}")))?;
    let mut first_bad: Option<String> = None;
    for o in &outcomes {
        let mark = if o.ok { "  ok" } else { "FAIL" };
        println!("{mark}  {}: {}", o.name, o.line);
        if !o.ok && first_bad.is_none() {
            first_bad = Some(o.name.clone());
        }
    }
    match first_bad {
        None => {
            println!("{} entries, all passed", outcomes.len());
            Ok(())
        }
        Some(name) => Err(RunError::Check(format!("catalog entry {name} failed"))),
    }
}

fn cmd_selftest() -> Result<(), RunError> {
    let mut failed = Vec::new();
    for suite in selftest::run_all() {
        match &suite.failure {
            None => println!("  ok  {}: {}", suite.name, suite.detail),
            Some(why) => {
                println!("FAIL  {}: {why}", suite.name);
                failed.push(suite.name);
            }
        }
    }
    if failed.is_empty() {
        println!("selftest passed");
        Ok(())
    } else {
        Err(RunError::Check(format!(
            "failing suites: {}",
            failed.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cokermu { file } => cmd_cokermu(&file),
        Command::Nilquot { file } => cmd_nilquot(&file),
        Command::Fano => cmd_fano(),
        Command::Catalog { parallel } => cmd_catalog(parallel),
        Command::Selftest => cmd_selftest(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(RunError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}
