//! Command-line front end for the spinbath library: parameter sweeps to
//! CSV, figure-preset regeneration, and the oracle validation report.
//!
//! All numerics run at f64. Output is deterministic: fixed evaluation order,
//! fixed 17-significant-digit float formatting, `\n` line endings.

pub mod presets;
pub mod sweep;
pub mod validate;

use std::fmt;

/// Errors surfaced by the CLI layer, keyed to process exit codes:
/// arguments → 2, I/O → 3, non-convergence → 4.
#[derive(Debug)]
pub enum CliError {
    Args(String),
    Io(String),
    NonConvergence { t: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Args(_) => 2,
            CliError::Io(_) => 3,
            CliError::NonConvergence { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Args(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::NonConvergence { t } => {
                write!(f, "eigensolver failed to converge at t = {t}")
            }
        }
    }
}

impl std::error::Error for CliError {}

/// Round-trip-exact decimal float with 17 significant digits.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}
