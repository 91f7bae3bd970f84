//! The `dpcolor` command line.
//!
//! Exit status: 0 when the property holds (or the value was computed),
//! 1 when it fails, 2 on usage or input errors, 3 when a budget ran out.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, Format};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// A finished command: its exit status and the report in every format it supports.
pub(crate) struct Report {
    pub exit: i32,
    pub text: String,
    pub json: serde_json::Value,
    pub csv: Option<String>,
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_HOLDS
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let report = match commands::execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let body = match cli.global.format {
        Format::Text => report.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => match report.csv {
            Some(csv) => csv,
            None => {
                let _ = writeln!(err, "error: this command has no csv output");
                return EXIT_USAGE;
            }
        },
    };
    let _ = out.write_all(body.as_bytes());
    report.exit
}
