//! `enmat`: batch computation and law checking over base-weighted matrices.
//!
//! Reads a document from `--in FILE` or standard input, runs one command,
//! writes the result to standard output and diagnostics to standard error.

pub mod parser;
pub mod render;
pub mod run;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use run::{exit_code_for, run_command, CommandSpec, EXIT_PARSE};

#[derive(Parser, Debug)]
#[command(
    name = "enmat",
    about = "Weighted-matrix calculus: closure, cofree, hom, convolution and law checking",
    after_help = "Commands: compose SECOND FIRST | tensor A B | closure G | cofree G | \
                  hom A B | pullback F B | pullback F G M | pushforward F C | \
                  pushforward F G M | convolution C B | sweedler-hom A B | \
                  enrichment-report A B [C...] | validate base|category NAME|cocategory NAME | \
                  check [laws=...] [seed=N] [cases=N]\n\
                  Exit codes: 0 ok, 1 law violation, 2 parse error, 3 domain error, \
                  4 non-convergence, 5 budget/cap exceeded."
)]
struct Cli {
    /// Command verb.
    verb: String,
    /// Command arguments (names declared in the document, or key=value
    /// options for `check`).
    args: Vec<String>,
    /// Read the document from a file instead of standard input.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Cap on exponent object sets.
    #[arg(long, default_value_t = enmat::DEFAULT_EXPONENT_CAP)]
    cap: usize,
    /// Iteration cap for closure.
    #[arg(long)]
    max_iter: Option<usize>,
    /// Seed for randomized law suites.
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

pub fn run_main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = CommandSpec {
        verb: cli.verb,
        args: cli.args,
        cap: cli.cap,
        max_iter: cli.max_iter,
        seed: cli.seed,
    };

    // `check` runs library suites and takes no document, so it must not
    // block on standard input.
    let doc = if cmd.verb == "check" {
        None
    } else {
        let text = match &cli.input {
            Some(path) => match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("enmat: cannot read {}: {e}", path.display());
                    return ExitCode::from(EXIT_PARSE);
                }
            },
            None => {
                let mut buf = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                    eprintln!("enmat: cannot read standard input: {e}");
                    return ExitCode::from(EXIT_PARSE);
                }
                buf
            }
        };
        match parser::parse_document(&text) {
            Ok(d) => Some(d),
            Err(e) => {
                eprintln!("enmat: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
        }
    };

    match run_command(doc.as_ref(), &cmd) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("enmat: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
