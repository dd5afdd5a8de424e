//! A small expression language for elements of `A`, `sl2`, `L` and `L̂`,
//! used by the command line. Canonical renderings parse back to the same
//! element.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;

use thiserror::Error;

pub use ast::{Generator, Kind, Node, Symbol, Ty};
pub use eval::{evaluate, type_of, EvalOptions, Images, Model, Value};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {}: expected {expected}, found {found}", pos + 1)]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("type error at column {}: {message}", pos + 1)]
    Type { pos: usize, message: String },
    #[error("cannot evaluate at column {}: {message}", pos + 1)]
    Eval { pos: usize, message: String },
}

impl ExprError {
    pub(crate) fn syntax(
        pos: usize,
        expected: impl Into<String>,
        found: impl Into<String>,
    ) -> Self {
        ExprError::Syntax {
            pos,
            expected: expected.into(),
            found: found.into(),
        }
    }

    /// Zero-based character offset of the error.
    pub fn position(&self) -> usize {
        match self {
            ExprError::Syntax { pos, .. }
            | ExprError::Type { pos, .. }
            | ExprError::Eval { pos, .. } => *pos,
        }
    }
}

/// Parses and type checks.
pub fn parse(text: &str) -> Result<Node, ExprError> {
    let node = parser::parse_untyped(text)?;
    type_of(&node)?;
    Ok(node)
}

/// Parses, evaluates, and renders canonically.
pub fn eval_str(text: &str, opts: &EvalOptions) -> Result<String, ExprError> {
    Ok(evaluate(&parse(text)?, opts)?.to_string())
}
