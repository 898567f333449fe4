//! The `gqd` command-line tool.
//!
//! Exit status is 0 on success, 1 for domain, numeric and I/O errors, and 2
//! for usage errors. Identical arguments and constants always produce
//! identical bytes.

mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::Parser;
use thiserror::Error;

use gqd_core::PhysicalConstants;

pub use args::{Cli, Command, Sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gqd_core::Error),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn file(path: &std::path::Path) -> impl FnOnce(io::Error) -> CliError + '_ {
        move |source| CliError::File {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the exit status. Results go to `stdout` or the `--output` file.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let rendered = err.render().to_string();
            if code == EXIT_OK {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            EXIT_FAILURE
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let consts = load_constants(cli.constants.as_deref())?;
    let result = commands::dispatch(&cli.command, &consts)?;
    match &cli.output {
        Some(path) => {
            let mut buf = Vec::new();
            result.write(cli.format, &mut buf)?;
            fs::write(path, buf).map_err(CliError::file(path))?;
        }
        None => {
            result.write(cli.format, stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn load_constants(path: Option<&std::path::Path>) -> Result<PhysicalConstants, CliError> {
    match path {
        None => Ok(PhysicalConstants::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(CliError::file(p))?;
            log::info!("loaded constants from {}", p.display());
            Ok(PhysicalConstants::from_config_str(&text)?)
        }
    }
}
