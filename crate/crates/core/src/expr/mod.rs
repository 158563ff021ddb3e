//! Surface syntax: tokenizer, recursive-descent parser and evaluator.
//!
//! ```text
//! sum   := prod (("+" | "-") prod)*
//! prod  := unary (("*" | "/") unary)*
//! unary := "-" unary | atom
//! atom  := "up" "(" sum ")" | "down" "(" sum ")" | "|" sum "|" | "(" sum ")"
//!        | NUMBER | "i" | NUMBER "i"
//! ```
//!
//! `↑` and `↓` are accepted for `up` and `down`. Bare literals are Vastavic.

mod eval;
mod parse;
mod token;

pub use eval::eval;
pub use parse::{parse, Expr};
pub use token::{tokenize, Token, TokenKind};

use crate::algebra::{EvalValue, Mode};
use crate::error::Result;

/// Tokenize, parse and evaluate in one step.
pub fn evaluate(source: &str, mode: Mode) -> Result<EvalValue> {
    let tokens = tokenize(source)?;
    let expr = parse(&tokens)?;
    eval(&expr, mode)
}

/// Canonical text for a value. Every non-void result evaluates back to
/// itself.
pub fn format(value: &EvalValue) -> String {
    value.to_string()
}
