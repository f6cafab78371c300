//! Command implementations and report types behind the `wallislab` binary.

pub mod cli;
pub mod commands;
pub mod error;
pub mod output;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

use cli::{Cli, Command};
use commands::Context;
use error::{CliResult, EXIT_OK};

fn execute(cli: &Cli) -> CliResult<i32> {
    let ctx = Context::from_env()?;
    let (report, code, output) = match &cli.command {
        Command::Pi(a) => (commands::cmd_pi(a, &ctx)?, EXIT_OK, &a.output),
        Command::Table(a) => (commands::cmd_table(a, &ctx)?, EXIT_OK, &a.output),
        Command::Erf(a) => (commands::cmd_erf(a, &ctx)?, EXIT_OK, &a.output),
        Command::Verify(a) => {
            let (r, code) = commands::cmd_verify(a, &ctx)?;
            if let report::Payload::Verification(v) = &r.results {
                let s = &v.summary;
                eprintln!(
                    "summary: {} checks, HOLDS {}, FAILS {}, UNDECIDED {}",
                    s.total, s.holds, s.fails, s.undecided
                );
            }
            (r, code, &a.output)
        }
    };
    let text = output::render(&report, output.format)?;
    output::emit(&text, output.out.as_deref())?;
    Ok(code)
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
