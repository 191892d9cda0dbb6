use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use tco_cli::args::Cli;
use tco_cli::{run, Io};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let result = run(
        cli,
        &mut Io {
            out: &mut out,
            err: &mut err,
        },
    );
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
