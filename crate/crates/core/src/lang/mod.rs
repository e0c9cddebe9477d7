//! Expression language: lexer, parser with static slot checking, evaluator
//! and REPL session state.
//!
//! ```
//! use spinorqc_core::lang::{eval_str, Value};
//! use spinorqc_core::Scalar;
//!
//! let v: Value<Scalar> = eval_str("N(exp(1, g1*g0*g2*g0))").unwrap();
//! assert_eq!(v.to_string(), "1");
//! ```

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{BinOp, Constant, Expr, Func};
pub use eval::{eval, eval_str, Session, Value};
pub use parser::{parse, MAX_DEPTH, MAX_POWER};

/// Syntax or slot-arity error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into(), expected: Vec::new() }
    }

    pub(crate) fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
