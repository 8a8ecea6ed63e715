//! `gradmod`: command-line front end.
//!
//! Exit codes: 0 success or pass, 1 a check failed or a counterexample was
//! found, 2 bad input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "gradmod", version, about = "Exact graded module computations over monomial quotient rings")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Invariants of the numerical semigroup generated by GENS (e.g. 9,10,61,62).
    Semigroup(SemigroupArgs),
    /// Burch, weakly m-full or m-full test for a submodule.
    Check(CheckArgs),
    /// Minimal free resolution and Betti table.
    Resolve(ResolveArgs),
    /// Graded Tor_i(A, B) for i <= IMAX.
    Tor(HomologyArgs),
    /// Graded Ext^i(A, B) for i <= IMAX.
    Ext(HomologyArgs),
    /// Run fixture or property suites.
    Verify {
        #[command(subcommand)]
        suite: VerifyCommand,
    },
    /// Exhaustive runs over small families.
    Enumerate {
        #[command(subcommand)]
        family: EnumerateCommand,
    },
}

#[derive(Args)]
pub struct SemigroupArgs {
    pub gens: String,
    #[arg(long)]
    pub pf: bool,
    /// Apéry set with respect to M.
    #[arg(long, value_name = "M")]
    pub apery: Option<i64>,
    #[arg(long)]
    pub surjection: bool,
    #[arg(long)]
    pub nearly_gorenstein: bool,
    #[arg(long)]
    pub self_dual: bool,
    #[arg(long)]
    pub profile: bool,
    #[arg(long)]
    pub all: bool,
}

#[derive(Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub submodule: String,
    #[arg(long = "in", value_name = "X")]
    pub ambient: String,
    #[arg(long, group = "test")]
    pub burch: bool,
    #[arg(long, group = "test")]
    pub weakly_m_full: bool,
    /// Element name from the file, or a polynomial.
    #[arg(long, group = "test", value_name = "ELT")]
    pub m_full_with: Option<String>,
    /// Degree window; by default the smallest certifying one.
    #[arg(short = 'D')]
    pub window: Option<i64>,
}

#[derive(Args)]
pub struct ResolveArgs {
    pub file: PathBuf,
    #[arg(short = 'M')]
    pub module: String,
    #[arg(short = 't', default_value_t = 3)]
    pub length: usize,
    #[arg(short = 'D')]
    pub window: i64,
}

#[derive(Args)]
pub struct HomologyArgs {
    pub file: PathBuf,
    #[arg(short = 'M')]
    pub first: String,
    #[arg(short = 'N')]
    pub second: String,
    #[arg(short = 'i', default_value_t = 2)]
    pub imax: usize,
    #[arg(short = 'D', conflicts_with = "auto_window")]
    pub window: Option<i64>,
    /// Smallest window that certifies every reported degree (the default).
    #[arg(long)]
    pub auto_window: bool,
}

#[derive(Subcommand)]
pub enum VerifyCommand {
    /// Worked-example fixtures.
    Paper {
        /// Run a single fixture (F1..F6).
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Rigidity properties on seeded random instances.
    Random {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Plant a broken resolution and expect the suite to catch it.
        #[arg(long)]
        self_test: bool,
    },
}

#[derive(Subcommand)]
pub enum EnumerateCommand {
    Semigroups {
        #[arg(long, default_value_t = 4)]
        max_gen: usize,
        #[arg(long, default_value_t = 40)]
        max_val: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::dispatch(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.envelope()).expect("reports serialize"));
            } else {
                print!("{}", out.human);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if cli.json {
                let err = serde_json::json!({ "schema": commands::SCHEMA, "command": "error", "code": 2, "error": format!("{e:#}") });
                println!("{}", serde_json::to_string_pretty(&err).expect("reports serialize"));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
