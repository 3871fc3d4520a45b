use std::io;
use std::process::ExitCode;

use bsk_cli::{exit_code, run, Cli, RunConfig, EXIT_VALIDATION};
use clap::Parser;

// BSK_THREADS caps the worker pool; 0 or unset means one per core.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("BSK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| format!("BSK_THREADS must be a non-negative integer, got {raw:?}"))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("bsk: {msg}");
        return ExitCode::from(EXIT_VALIDATION as u8);
    }
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bsk: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    let code = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
