//! A second evaluator for sumlang expressions, written to be obviously right
//! rather than fast.

use std::fmt;

use harmid_core::registry::IdentityRecord;
use harmid_core::sumlang::{Bindings, Bound, Builtin, Expr};
use harmid_core::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// A node this evaluator does not handle (transcendental calls,
    /// Bernoulli and Euler numbers).
    Unsupported(String),
    Unbound(String),
    NotAnInteger(String),
    DivisionByZero,
    /// Summation bounds with `upper < lower - 1`, or a negative harmonic index.
    BadRange(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Unsupported(s) => write!(f, "unsupported in the oracle: {s}"),
            OracleError::Unbound(s) => write!(f, "unbound variable {s}"),
            OracleError::NotAnInteger(s) => write!(f, "{s} is not an integer"),
            OracleError::DivisionByZero => write!(f, "division by zero"),
            OracleError::BadRange(s) => write!(f, "bad range: {s}"),
        }
    }
}

impl std::error::Error for OracleError {}

type Scope = Vec<(String, Rational)>;

fn lookup(scope: &Scope, name: &str) -> Option<Rational> {
    scope.iter().rev().find(|(k, _)| k == name).map(|(_, v)| v.clone())
}

fn as_int(q: &Rational, what: &str) -> Result<i64, OracleError> {
    if !q.is_integer() {
        return Err(OracleError::NotAnInteger(format!("{what} {q}")));
    }
    q.to_i64().ok_or_else(|| OracleError::NotAnInteger(format!("{what} {q}")))
}

/// `x^k` by repeated multiplication.
fn power(x: &Rational, k: i64) -> Result<Rational, OracleError> {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc = &acc * x;
    }
    if k < 0 {
        if acc.is_zero() {
            return Err(OracleError::DivisionByZero);
        }
        acc = &Rational::one() / &acc;
    }
    Ok(acc)
}

/// Harmonic-type sum recomputed from scratch: `Σ_{r≤n} sign(r) / base(r)^m`.
fn harmonic(f: Builtin, n: i64, m: i64) -> Result<Rational, OracleError> {
    if n < 0 {
        return Err(OracleError::BadRange(format!("{}({n},{m})", f.name())));
    }
    let mut total = Rational::zero();
    for r in 1..=n {
        let base = match f {
            Builtin::H | Builtin::Hbar => r,
            _ => 2 * r - 1,
        };
        let mut t = power(&Rational::from_int(base), -m)?;
        if matches!(f, Builtin::Hbar | Builtin::SmallHbar) && r % 2 == 0 {
            t = -t;
        }
        total += &t;
    }
    Ok(total)
}

fn eval(e: &Expr, scope: &mut Scope, inf: Option<i64>) -> Result<Rational, OracleError> {
    let two = |scope: &mut Scope, a: &Expr, b: &Expr| -> Result<(Rational, Rational), OracleError> {
        Ok((eval(a, scope, inf)?, eval(b, scope, inf)?))
    };
    match e {
        Expr::Int(i) => Ok(Rational::from(i.clone())),
        Expr::Rat(q) => Ok(q.clone()),
        Expr::Var(v) => lookup(scope, v).ok_or_else(|| OracleError::Unbound(v.clone())),
        Expr::Add(a, b) => two(scope, a, b).map(|(x, y)| &x + &y),
        Expr::Sub(a, b) => two(scope, a, b).map(|(x, y)| &x - &y),
        Expr::Mul(a, b) => two(scope, a, b).map(|(x, y)| &x * &y),
        Expr::Div(a, b) => {
            let (x, y) = two(scope, a, b)?;
            if y.is_zero() {
                return Err(OracleError::DivisionByZero);
            }
            Ok(&x / &y)
        }
        Expr::Neg(a) => Ok(-eval(a, scope, inf)?),
        Expr::Pow(a, b) => {
            let (x, k) = two(scope, a, b)?;
            power(&x, as_int(&k, "exponent")?)
        }
        Expr::AltSign(a) => {
            let k = as_int(&eval(a, scope, inf)?, "sign index")?;
            power(&Rational::from_int(-1), (k - 1).rem_euclid(2))
        }
        Expr::Sum { var, lower, upper, body } => {
            let lo = as_int(&eval(lower, scope, inf)?, "lower bound")?;
            let hi = match upper {
                Bound::Finite(u) => as_int(&eval(u, scope, inf)?, "upper bound")?,
                Bound::Inf => inf.ok_or_else(|| OracleError::Unsupported("infinite sum".into()))?,
            };
            if hi < lo - 1 {
                return Err(OracleError::BadRange(format!("{var}={lo}..{hi}")));
            }
            let mut total = Rational::zero();
            for k in lo..=hi {
                scope.push((var.clone(), Rational::from_int(k)));
                let t = eval(body, scope, inf);
                scope.pop();
                total += &t?;
            }
            Ok(total)
        }
        Expr::Call(f, args) => match f {
            Builtin::H | Builtin::SmallH | Builtin::Hbar | Builtin::SmallHbar => {
                let n = as_int(&eval(&args[0], scope, inf)?, "harmonic index")?;
                let m = as_int(&eval(&args[1], scope, inf)?, "harmonic order")?;
                harmonic(*f, n, m)
            }
            Builtin::Parity => {
                let k = as_int(&eval(&args[0], scope, inf)?, "parity argument")?;
                Ok(Rational::from_int(if k % 2 == 0 { 0 } else { 1 }))
            }
            Builtin::Fact => {
                let k = as_int(&eval(&args[0], scope, inf)?, "factorial argument")?;
                if k < 0 {
                    return Err(OracleError::BadRange(format!("fact({k})")));
                }
                let mut acc = Rational::one();
                for j in 1..=k {
                    acc = &acc * &Rational::from_int(j);
                }
                Ok(acc)
            }
            Builtin::Abs => Ok(eval(&args[0], scope, inf)?.abs()),
            other => Err(OracleError::Unsupported(other.name().to_string())),
        },
    }
}

/// Evaluates `e` with every infinite upper bound replaced by `inf` (when given).
pub fn naive_eval(e: &Expr, bindings: &Bindings, inf: Option<i64>) -> Result<Rational, OracleError> {
    let mut scope: Scope = bindings.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    eval(e, &mut scope, inf)
}

/// Left-hand side of a finite record at one parameter point.
pub fn naive_lhs(record: &IdentityRecord, params: &Bindings) -> Result<Rational, OracleError> {
    naive_eval(&record.lhs, params, None)
}

/// Left-hand side of an infinite record with every infinite sum cut at `n`.
pub fn naive_partial_lhs(record: &IdentityRecord, params: &Bindings, n: i64) -> Result<Rational, OracleError> {
    naive_eval(&record.lhs, params, Some(n))
}
