//! Library half of the `knotorder` command-line tool: file formats, certificate
//! documents, and the report builders behind each subcommand.
//!
//! Every command is a pure function from parsed input to a [`CommandOutput`],
//! so the binary only handles argument parsing and I/O.

pub mod certificate;
pub mod commands;
pub mod formats;

use thiserror::Error;

pub use certificate::{load_documents, CertificateDocument};
pub use commands::{
    run_analyze, run_certify, run_family, run_ring_demo, run_table, AnalyzeReport, CommandOutput, FamilyReport,
    OutputFormat, TableReport,
};
pub use formats::{emit_knot_table, emit_seifert_file, parse_knot_table, parse_seifert_file};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Record {
        line: usize,
        #[source]
        source: knotorder::Error,
    },

    #[error(transparent)]
    Knot(#[from] knotorder::Error),

    #[error("invalid certificate document: {0}")]
    Certificate(String),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("usage: {0}")]
    Usage(String),
}

/// Process exit codes. Verdict classes get their own codes for scripting.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ERROR: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const NO_METABOLIZER: i32 = 3;
    pub const BUDGET_EXCEEDED: i32 = 4;
    pub const INCONCLUSIVE: i32 = 5;
    pub const ORDER4_CANDIDATE: i32 = 6;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Knot(knotorder::Error::BudgetExceeded { .. }) => exit::BUDGET_EXCEEDED,
            _ => exit::ERROR,
        }
    }
}
