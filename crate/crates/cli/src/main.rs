use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

mod args;
mod commands;
mod output;

use args::{Cli, Command};
use commands::{Context, Exit};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Usage as u8),
            };
        }
    };
    let ctx = Context::from_opts(&cli.global);
    let outcome = match cli.command {
        Command::Table { kind, range } => commands::table(&ctx, kind, range),
        Command::Verify { n, all } => commands::verify(&ctx, n, all),
        Command::Value(ref args) => commands::value(&ctx, args),
    };

    let stdout = io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) =
        output::render(&outcome.rows, cli.global.format, outcome.layout, &mut lock).and_then(|_| lock.flush())
    {
        eprintln!("hypvol: cannot write output: {e}");
        return ExitCode::from(Exit::Internal as u8);
    }
    for err in &outcome.errors {
        eprintln!("hypvol: {err}");
    }
    ExitCode::from(outcome.exit as u8)
}
