//! Command-line front end for `zhelobenko-core`: argument parsing, job
//! dispatch and versioned JSON or text reports.

pub mod config;
pub mod report;
pub mod run;

pub use config::{Cli, Command, Format};
pub use report::{Item, Report, Verdict, SCHEMA};

/// Exit status for a finished run.
pub fn exit_code(report: &Report) -> i32 {
    if report.verdict.is_pass() {
        0
    } else {
        1
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}
