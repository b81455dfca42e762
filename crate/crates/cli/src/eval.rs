//! `harmid eval`.

use harmid_core::sumlang::{eval_exact, eval_real, format, parse, Bindings, EvalError};
use harmid_core::{Rational, Real};
use serde::Serialize;

use crate::config::RunConfig;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalOutput {
    /// Canonical form of the input.
    pub expr: String,
    /// Exact value as a fraction, when the expression has one.
    pub exact: Option<String>,
    pub decimal: String,
    pub error_bound: f64,
    pub bound_kind: String,
    pub method: String,
    pub terms_used: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvalFailure {
    /// Rendered diagnostic with a caret under the error.
    Parse(String),
    Eval(EvalError),
}

/// Parses `name=value` with a rational value.
pub fn parse_binding(s: &str) -> Result<(String, Rational), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let k = k.trim();
    if k.is_empty() || !k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("bad variable name `{k}`"));
    }
    let v: Rational = v.trim().parse().map_err(|e| format!("bad value for {k}: {e}"))?;
    Ok((k.to_string(), v))
}

pub fn evaluate(src: &str, bindings: &Bindings, cfg: &RunConfig) -> Result<EvalOutput, EvalFailure> {
    let e = parse(src).map_err(|err| EvalFailure::Parse(err.render(src)))?;
    let expr = format(&e);
    match eval_exact(&e, bindings) {
        Ok(q) => {
            let decimal = Real::from_rational(&q, cfg.ctx()).to_decimal_string(cfg.digits as usize);
            return Ok(EvalOutput {
                expr,
                exact: Some(q.to_string()),
                decimal,
                error_bound: 0.0,
                bound_kind: "rigorous".into(),
                method: "exact".into(),
                terms_used: 0,
            });
        }
        Err(EvalError::TranscendentalInExactContext(_) | EvalError::InfiniteSumInExactContext) => {}
        Err(err) => return Err(EvalFailure::Eval(err)),
    }
    let r = eval_real(&e, bindings, cfg.ctx(), &cfg.policy()).map_err(EvalFailure::Eval)?;
    Ok(EvalOutput {
        expr,
        exact: None,
        decimal: r.value.to_decimal_string(cfg.digits as usize),
        error_bound: r.error_bound,
        bound_kind: r.bound_kind.name().into(),
        method: r.method.name().into(),
        terms_used: r.terms_used,
    })
}

impl EvalOutput {
    pub fn to_text(&self) -> String {
        match &self.exact {
            Some(q) => format!("{q}\n  ~ {}\n", self.decimal),
            None => format!(
                "{}\n  +/- {:.1e} ({}, {})\n",
                self.decimal, self.error_bound, self.bound_kind, self.method
            ),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("| expression | value | error bound | method |\n|---|---|---|---|\n| `{}` | ", self.expr);
        match &self.exact {
            Some(q) => s += &format!("{q} ({}) | 0 | exact |\n", self.decimal),
            None => s += &format!("{} | {:.1e} ({}) | {} |\n", self.decimal, self.error_bound, self.bound_kind, self.method),
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializes") + "\n"
    }
}
