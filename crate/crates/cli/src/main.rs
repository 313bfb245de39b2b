mod args;
mod output;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use macwheel::Error;

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run::run(cli) {
        Ok(out) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&out.value).expect("reports serialize") + "\n",
                Format::Table => output::render_table(&out.value),
            };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 for a failed check, 2 for bad input, 3 for an internal assertion.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Pole { .. } | Error::NotSymmetric(..) => 1,
        Error::Internal(_) => 3,
        _ => 2,
    }
}
