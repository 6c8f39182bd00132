use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use sboxforge::exec::configure_threads;
use sboxforge_cli::args::Cli;
use sboxforge_cli::{run, Exit, THREADS_ENV};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not failures; every argument error is
            // an input error (exit 1), keeping 2 free for non-bijective seeds.
            return if e.use_stderr() {
                ExitCode::from(Exit::Input.code())
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads = raw.trim().parse::<usize>().map_err(|e| e.to_string());
        if let Err(msg) = threads.and_then(configure_threads) {
            eprintln!("error: {THREADS_ENV}={raw:?}: {msg}");
            return ExitCode::from(Exit::Input.code());
        }
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let exit = match run(cli, &mut out, &mut err) {
        Ok(exit) => exit,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.exit
        }
    };
    let _ = out.flush();
    ExitCode::from(exit.code())
}
