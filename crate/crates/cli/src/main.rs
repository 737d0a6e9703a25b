use std::io;
use std::process::ExitCode;

use coreviz_cli::{parse_flags, run, CliError};

fn main() -> ExitCode {
    let result = parse_flags(std::env::args_os()).and_then(|config| {
        let stdout = io::stdout();
        run(&config, &mut io::stdin().lock(), &mut stdout.lock())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match &err {
                CliError::Usage(e) => {
                    let _ = e.print();
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
