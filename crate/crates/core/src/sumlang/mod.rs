//! A small language for finite and infinite sums over harmonic numbers.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ('^' factor)?
//! atom   := number | ratlit | ident | call | sum | '(' expr ')'
//! call   := ident '(' expr (',' expr)* ')'
//! sum    := 'sum' '(' ident '=' expr '..' (expr | 'inf') ',' expr ')'
//! ```
//!
//! `a/b` written without spaces is a single rational literal, except directly
//! after `^`. `(-1)^(x-1)` is kept as a dedicated sign node.

mod ast;
pub(crate) mod eval;
mod format;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{is_reserved, Bound, Builtin, Expr};
pub use eval::{eval_exact, eval_exact_batch, eval_real, BoundKind, Bindings, EvalError, EvalReport, Method};
pub(crate) use eval::RealBackend;
pub use format::format;
pub use parser::{parse, parse_bytes, MAX_DEPTH, MAX_INPUT};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub(crate) fn at(src: &str, offset: usize, message: &str, expected: &[&str]) -> ParseError {
        let offset = offset.min(src.len());
        let before = &src.as_bytes()[..offset];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let line_start = before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
        let column = String::from_utf8_lossy(&before[line_start..]).chars().count() + 1;
        ParseError {
            offset,
            line,
            column,
            message: message.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// The offending line with a caret under the error position.
    pub fn render(&self, src: &str) -> String {
        let line_text = src.lines().nth(self.line - 1).unwrap_or("");
        let pad = " ".repeat(self.column.saturating_sub(1));
        format!("error: {}\n  {}\n  {}^", self, line_text, pad)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[cfg(test)]
mod tests;
