//! `graphtile`: command-line front end for the tiling library.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage,
//! parse or file errors.

mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match commands::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli.command, cli.json) {
        Ok(Output::Report(report)) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("graphtile: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

pub enum Output {
    Report(report::Report),
    /// A graph or graphon file, printed verbatim so it can be re-read.
    Text(String),
}
