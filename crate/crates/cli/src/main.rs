use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use takahashi_cli::{run, Cli, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
