use std::path::PathBuf;

use legendrian_core::front::{FrontError, MoveError};
use legendrian_core::legskein::LegSkeinError;
use legendrian_core::toposkein::SkeinError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Front { path: PathBuf, message: String, source: FrontError },
    #[error("{0}")]
    Move(#[from] MoveError),
    #[error("{0}")]
    LegSkein(#[from] LegSkeinError),
    #[error("{0}")]
    Skein(#[from] SkeinError),
    #[error("{path}: {crossings} crossings exceeds the limit of {limit}; pass --force to evaluate anyway")]
    TooLarge { path: PathBuf, crossings: usize, limit: usize },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Stable identifier printed in front of the message.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "IO_ERROR",
            CliError::Front { source, .. } => match source {
                FrontError::NotClosed { .. } => "NOT_CLOSED",
                FrontError::IndexOutOfRange { .. } => "INVALID_FRONT",
                FrontError::UnknownToken { .. } | FrontError::BadOrientation { .. } => "PARSE_ERROR",
            },
            CliError::Move(_) => "MOVE_ERROR",
            CliError::LegSkein(LegSkeinError::FuelExhausted(_)) => "FUEL_EXHAUSTED",
            CliError::LegSkein(LegSkeinError::NotClosed(_)) => "NOT_CLOSED",
            CliError::LegSkein(LegSkeinError::PatternMismatch { .. }) => "PATTERN_MISMATCH",
            CliError::Skein(SkeinError::InternalInconsistency(_)) => "INTERNAL_INCONSISTENCY",
            CliError::Skein(SkeinError::EmptyDiagram) => "EMPTY_DIAGRAM",
            CliError::TooLarge { .. } => "TOO_LARGE",
            CliError::Usage(_) => "USAGE",
        }
    }

    /// Wraps a front error, pointing at the offending token when the error
    /// only knows its letter number.
    pub fn front(path: PathBuf, text: &str, source: FrontError) -> Self {
        let message = match &source {
            FrontError::IndexOutOfRange { position, .. } => match token_location(text, *position) {
                Some((line, column)) => format!("line {line}, column {column}: {source}"),
                None => source.to_string(),
            },
            _ => source.to_string(),
        };
        CliError::Front { path, message, source }
    }
}

/// Line and column (both 1-based) of the `n`-th letter token of a `.front`
/// file.
fn token_location(text: &str, n: usize) -> Option<(usize, usize)> {
    let mut seen = 0;
    for (ln, line) in text.lines().enumerate() {
        let t = line.trim_start();
        if t.starts_with('#') || t.starts_with("orient:") {
            continue;
        }
        let mut col = 0;
        for piece in line.split_inclusive(char::is_whitespace) {
            if !piece.trim_end().is_empty() {
                seen += 1;
                if seen == n {
                    return Some((ln + 1, col + 1));
                }
            }
            col += piece.chars().count();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locates_tokens_past_comments() {
        let text = "# note\norient: 1=+\nl1  r1\n  l1 r3\n";
        assert_eq!(token_location(text, 1), Some((3, 1)));
        assert_eq!(token_location(text, 2), Some((3, 5)));
        assert_eq!(token_location(text, 4), Some((4, 6)));
        assert_eq!(token_location(text, 5), None);
    }
}
