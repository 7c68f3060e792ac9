use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use charseq_cli::{run_cli, Cli, MODULUS_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env = std::env::var(MODULUS_ENV).ok();
    match run_cli(cli, env.as_deref()) {
        Ok(text) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("charseq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
