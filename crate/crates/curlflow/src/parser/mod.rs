//! Expression grammar and the system-definition file format — the only
//! ingestion path into the toolkit.

mod expr;
mod lexer;
mod render;
mod system;

pub use expr::{parse_expression, parse_expression_at};
pub use render::{render, render_laurent};
pub use system::{parse_system, SystemDef, SystemError};

use serde::Serialize;
use thiserror::Error;

/// What went wrong while parsing an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParseErrorKind {
    Syntax,
    NonMonomialDenominator,
    UnknownIdentifier,
    NonIntegerExponent,
    LogOfNonVariable,
    WrongArity,
}

/// Expression parse failure with a position into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[cfg(test)]
mod tests;
