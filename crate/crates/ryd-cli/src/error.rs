//! Process-level error classification.
//!
//! Every failure falls into one of two buckets, matching the exit-code
//! contract: rejected input (exit 1) or a violated internal invariant
//! (exit 2).  The second bucket means two computation paths that must
//! agree did not, so the result cannot be trusted.

use std::fmt;
use std::io;

#[derive(Debug)]
pub enum CliError {
    /// Flags, JSON, or the described combinatorial objects were rejected.
    Input(String),
    /// An internal cross-check contradicted the underlying combinatorics.
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Invariant(msg) => write!(f, "internal invariant violation: {msg}"),
        }
    }
}

impl From<ryd_core::Error> for CliError {
    fn from(e: ryd_core::Error) -> CliError {
        match e {
            // These two only arise when an exact computation produced a
            // value the mathematics forbids; everything else rejects input.
            ryd_core::Error::NegativeCoefficient(_)
            | ryd_core::Error::NonIntegralCoefficient(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError::Input(format!("invalid JSON input: {e}"))
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Input(format!("io error: {e}"))
    }
}

/// Mark a core-library error as an invariant violation rather than an
/// input error: for calls whose arguments were already validated, any
/// failure means the library contradicted itself.
pub fn invariant(e: impl fmt::Display) -> CliError {
    CliError::Invariant(e.to_string())
}

pub type Result<T> = std::result::Result<T, CliError>;
