//! Command-line front end: argument handling, exact JSON and numeric CSV
//! export, and the full audit.

pub mod commands;
pub mod config;
pub mod error;
pub mod export;
pub mod verify;

use std::io::Write;

pub use commands::{execute, Document, Outcome, Tally};
pub use config::{Command, Format, RunConfig};
pub use error::CliError;

fn write_document(config: &RunConfig, document: &Document) -> Result<(), CliError> {
    let text = match document {
        Document::Json(v) => export::render(v),
        Document::Csv(s) => s.clone(),
    };
    match config.resolved_output() {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                    path: dir.to_path_buf(),
                    source,
                })?;
            }
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Runs one command and returns its exit code: 0 when every audited
/// relation passes, 1 on any failure, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::parse(argv) {
        Ok(c) => c,
        Err(Ok(text)) => {
            print!("{text}");
            return 0;
        }
        Err(Err(e)) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    let outcome = match execute(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if let Err(e) = write_document(&config, &outcome.document) {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    let t = outcome.tally;
    if t.pass + t.caveat + t.fail > 0 {
        eprintln!(
            "{}: {} pass, {} pass_with_caveat, {} fail",
            config.command.name(),
            t.pass,
            t.caveat,
            t.fail
        );
    }
    t.exit_code(config.strict)
}
