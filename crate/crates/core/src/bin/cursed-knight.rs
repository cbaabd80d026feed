use std::process::ExitCode;

use clap::Parser;
use cursed_knight::cli::{init_threads, run, Cli, EXIT_CONFIG};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG as u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = init_threads().and_then(|()| run(cli));
    match outcome {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
