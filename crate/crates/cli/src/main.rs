use std::process::ExitCode;

use aufhebung::commands::{run, EXIT_ERROR};
use aufhebung::config::RunConfig;

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse_from(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    match run(&cfg) {
        Ok(outcome) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.output)
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(outcome.code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_ERROR)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
