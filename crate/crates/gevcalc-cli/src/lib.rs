//! Library half of the `gevcalc` binary: argument grammar, dispatch, and
//! report documents (exposed so integration tests can parse emitted JSON).

pub mod args;
pub mod exec;
pub mod reports;

use clap::Parser;

fn configure_threads() -> Result<(), exec::CliError> {
    if let Ok(raw) = std::env::var("GEVCALC_THREADS") {
        let n: usize = raw.parse().map_err(|_| {
            exec::CliError::Usage(format!("GEVCALC_THREADS: not a positive integer: {raw:?}"))
        })?;
        if n == 0 {
            return Err(exec::CliError::Usage("GEVCALC_THREADS: must be positive".into()));
        }
        // ignore the error if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Parses the argument vector and runs the command, returning the process
/// exit code: 0 success, 2 run-specification errors, 1 numerical or I/O
/// failures.
pub fn run() -> i32 {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version
        Err(e) => e.exit(),
    };
    if let Err(e) = configure_threads() {
        eprintln!("gevcalc: {}", e.message());
        return e.exit_code();
    }
    match exec::execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gevcalc: {}", e.message());
            e.exit_code()
        }
    }
}
