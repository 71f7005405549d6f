use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use twk_cli::{run, Exit, RunConfig};

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => Exit::BadInput as u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(&cfg);
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    let written = match &cfg.output {
        Some(path) if !outcome.output.is_empty() => std::fs::write(path, &outcome.output)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        _ => std::io::stdout()
            .write_all(outcome.output.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    };
    if let Err(e) = written {
        eprintln!("{e}");
        return ExitCode::from(Exit::Internal as u8);
    }
    ExitCode::from(outcome.exit as u8)
}
