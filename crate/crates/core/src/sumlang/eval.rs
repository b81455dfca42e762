//! Exact and numeric evaluation.
//!
//! Both evaluators share one tree walk ([`eval_node`]) over a [`Backend`]
//! that supplies the arithmetic. Finite sums keep prefix tables keyed by the
//! sum node and the values of the summand's free variables, so a nested
//! `sum(s=1..r, ...)` costs one new term per outer step.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::ast::{Bound, Builtin, Expr};
use crate::harmonic::HarmonicKind;
use crate::numerics::{const_log2, const_pi, ln_rational, NumericsError, PrecisionContext, Rational, Real};
use crate::series::SeriesPolicy;
use crate::special::{
    bernoulli, beta_const, catalan, eta_const, euler_number, factorial, polygamma_quarter, polylog, zeta,
    QuarterBase, SpecialError,
};

/// Parameter values by name.
pub type Bindings = BTreeMap<String, Rational>;

pub(crate) type Env = Vec<(String, Rational)>;

const MAX_TERMS: i64 = 10_000_000;
const MAX_EXPONENT: i64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("`{0}` has no exact rational value")]
    TranscendentalInExactContext(String),
    #[error("infinite sums need numeric evaluation")]
    InfiniteSumInExactContext,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    NonInteger(String),
    #[error("{0}")]
    InvalidBound(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("unsupported term shape: {0}")]
    UnsupportedTermShape(String),
    #[error("{0}")]
    DomainError(String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("{0}")]
    TooLarge(String),
}

impl From<SpecialError> for EvalError {
    fn from(e: SpecialError) -> Self {
        match e {
            SpecialError::DomainError(m) => EvalError::DomainError(m),
            other => EvalError::InvalidArgument(other.to_string()),
        }
    }
}

impl From<NumericsError> for EvalError {
    fn from(e: NumericsError) -> Self {
        match e {
            NumericsError::DivisionByZero => EvalError::DivisionByZero,
            NumericsError::LogDomain => EvalError::DomainError("logarithm of a non-positive number".into()),
            other => EvalError::InvalidArgument(other.to_string()),
        }
    }
}

/// How far the reported error bound can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    Rigorous,
    /// Size of the first omitted asymptotic or geometric term.
    Estimate,
    /// Extrapolation; no guarantee.
    Heuristic,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Rigorous => "rigorous",
            BoundKind::Estimate => "estimate",
            BoundKind::Heuristic => "heuristic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Direct,
    TailCorrected,
    EulerBoole,
    Paired,
    Richardson,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::TailCorrected => "tail-corrected",
            Method::EulerBoole => "euler-boole",
            Method::Paired => "paired",
            Method::Richardson => "richardson",
        }
    }
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    pub value: Real,
    pub error_bound: f64,
    pub bound_kind: BoundKind,
    pub terms_used: u64,
    pub method: Method,
}

/// Value carried by the numeric evaluator: a rounded real plus an absolute error estimate.
#[derive(Debug, Clone)]
pub struct Approx {
    pub v: Real,
    pub err: f64,
}

type MemoKey = (usize, i64, Vec<Rational>);

pub(crate) struct SumMemo<V> {
    prefix: HashMap<MemoKey, Vec<V>>,
    free: HashMap<usize, Vec<String>>,
}

impl<V> Default for SumMemo<V> {
    fn default() -> Self {
        SumMemo { prefix: HashMap::new(), free: HashMap::new() }
    }
}

pub(crate) trait Backend {
    type Val: Clone;
    fn lit(&self, q: &Rational) -> Self::Val;
    fn add(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn sub(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn mul(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn neg(&self, a: &Self::Val) -> Self::Val;
    fn div(&self, a: &Self::Val, b: &Self::Val) -> Result<Self::Val, EvalError>;
    fn powi(&self, a: &Self::Val, e: i64) -> Result<Self::Val, EvalError>;
    fn abs(&self, a: &Self::Val) -> Self::Val;
    fn harmonic(&mut self, kind: HarmonicKind, n: u64, m: i64) -> Self::Val;
    fn transcendental(&mut self, f: Builtin, args: &[Expr], env: &mut Env) -> Result<Self::Val, EvalError>;
    fn infinite_sum(&mut self, node: &Expr, env: &mut Env) -> Result<Self::Val, EvalError>;
    fn memo(&mut self) -> &mut SumMemo<Self::Val>;
    fn exact(&mut self) -> &mut ExactBackend;
    /// Evaluate exact subtrees with rationals and convert once.
    fn exact_shortcut(&mut self, _e: &Expr, _env: &mut Env) -> Option<Result<Self::Val, EvalError>> {
        None
    }
}

fn lookup(env: &Env, name: &str) -> Option<Rational> {
    env.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v.clone())
}

pub(crate) fn env_from(bindings: &Bindings) -> Env {
    bindings.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

/// Evaluates `e` exactly and demands an integer.
pub(crate) fn exact_int<B: Backend>(b: &mut B, e: &Expr, env: &mut Env, what: &str) -> Result<i64, EvalError> {
    let v = eval_node(b.exact(), e, env)?;
    if !v.is_integer() {
        return Err(EvalError::NonInteger(format!("{what} must be an integer, got {v}")));
    }
    v.to_i64().ok_or_else(|| EvalError::TooLarge(format!("{what} {v} is out of range")))
}

pub(crate) fn exact_rat<B: Backend>(b: &mut B, e: &Expr, env: &mut Env) -> Result<Rational, EvalError> {
    eval_node(b.exact(), e, env)
}

pub(crate) fn eval_node<B: Backend>(b: &mut B, e: &Expr, env: &mut Env) -> Result<B::Val, EvalError> {
    if let Some(r) = b.exact_shortcut(e, env) {
        return r;
    }
    match e {
        Expr::Int(v) => Ok(b.lit(&Rational::from_int(v.clone()))),
        Expr::Rat(q) => Ok(b.lit(q)),
        Expr::Var(name) => match lookup(env, name) {
            Some(v) => Ok(b.lit(&v)),
            None => Err(EvalError::UnboundVariable(name.clone())),
        },
        Expr::Add(x, y) => {
            let (p, q) = (eval_node(b, x, env)?, eval_node(b, y, env)?);
            Ok(b.add(&p, &q))
        }
        Expr::Sub(x, y) => {
            let (p, q) = (eval_node(b, x, env)?, eval_node(b, y, env)?);
            Ok(b.sub(&p, &q))
        }
        Expr::Mul(x, y) => {
            let (p, q) = (eval_node(b, x, env)?, eval_node(b, y, env)?);
            Ok(b.mul(&p, &q))
        }
        Expr::Div(x, y) => {
            let (p, q) = (eval_node(b, x, env)?, eval_node(b, y, env)?);
            b.div(&p, &q)
        }
        Expr::Neg(x) => {
            let p = eval_node(b, x, env)?;
            Ok(b.neg(&p))
        }
        Expr::Pow(base, ex) => {
            let k = exact_int(b, ex, env, "exponent")?;
            if k.abs() > MAX_EXPONENT {
                return Err(EvalError::TooLarge(format!("exponent {k} is too large")));
            }
            let p = eval_node(b, base, env)?;
            b.powi(&p, k)
        }
        Expr::AltSign(x) => {
            let k = exact_int(b, x, env, "sign index")?;
            let s = if (k - 1).rem_euclid(2) == 0 { 1 } else { -1 };
            Ok(b.lit(&Rational::from_int(s)))
        }
        Expr::Sum { upper: Bound::Inf, .. } => b.infinite_sum(e, env),
        Expr::Sum { var, lower, upper: Bound::Finite(upper), body } => {
            let lo = exact_int(b, lower, env, "lower summation bound")?;
            let hi = exact_int(b, upper, env, "upper summation bound")?;
            if hi < lo - 1 {
                return Err(EvalError::InvalidBound(format!(
                    "sum over {var}={lo}..{hi} needs lower <= upper + 1"
                )));
            }
            if hi - lo + 1 > MAX_TERMS {
                return Err(EvalError::TooLarge(format!("sum over {var}={lo}..{hi} has too many terms")));
            }
            prefix_upto(b, e, var, lo, body, env, (hi - lo + 1) as usize)
        }
        Expr::Call(f, args) => eval_call(b, *f, args, env),
    }
}

/// `Σ_{var=lo}^{lo+count-1} body`, extending the cached prefix table as needed.
pub(crate) fn prefix_upto<B: Backend>(
    b: &mut B,
    node: &Expr,
    var: &str,
    lo: i64,
    body: &Expr,
    env: &mut Env,
    count: usize,
) -> Result<B::Val, EvalError> {
    let id = node as *const Expr as usize;
    let free = match b.memo().free.get(&id) {
        Some(f) => f.clone(),
        None => {
            let mut f: Vec<String> = body.free_vars().into_iter().filter(|v| v != var).collect();
            f.sort();
            b.memo().free.insert(id, f.clone());
            f
        }
    };
    let mut vals = Vec::with_capacity(free.len());
    for name in &free {
        vals.push(lookup(env, name).ok_or_else(|| EvalError::UnboundVariable(name.clone()))?);
    }
    let key = (id, lo, vals);
    let mut table = match b.memo().prefix.remove(&key) {
        Some(t) => t,
        None => vec![b.lit(&Rational::zero())],
    };
    let mut result = Ok(());
    while table.len() <= count {
        let s = lo + table.len() as i64 - 1;
        env.push((var.to_string(), Rational::from_int(s)));
        let t = eval_node(b, body, env);
        env.pop();
        match t {
            Ok(t) => {
                let next = b.add(table.last().expect("nonempty"), &t);
                table.push(next);
            }
            Err(err) => {
                result = Err(err);
                break;
            }
        }
    }
    let out = result.map(|_| table[count].clone());
    b.memo().prefix.insert(key, table);
    out
}

fn eval_call<B: Backend>(b: &mut B, f: Builtin, args: &[Expr], env: &mut Env) -> Result<B::Val, EvalError> {
    match f {
        Builtin::H | Builtin::SmallH | Builtin::Hbar | Builtin::SmallHbar => {
            let n = exact_int(b, &args[0], env, "harmonic index")?;
            let m = exact_int(b, &args[1], env, "harmonic order")?;
            if n < 0 {
                return Err(EvalError::InvalidArgument(format!("{}({n},{m}) needs a nonnegative index", f.name())));
            }
            if n > MAX_TERMS || m.abs() > 10_000 {
                return Err(EvalError::TooLarge(format!("{}({n},{m}) is out of range", f.name())));
            }
            let kind = match f {
                Builtin::H => HarmonicKind::Plain,
                Builtin::SmallH => HarmonicKind::Odd,
                Builtin::Hbar => HarmonicKind::Alt,
                _ => HarmonicKind::AltOdd,
            };
            Ok(b.harmonic(kind, n as u64, m))
        }
        Builtin::B | Builtin::E => {
            let k = exact_int(b, &args[0], env, "index")?;
            if !(0..=crate::special::TABLE_MAX as i64).contains(&k) {
                return Err(EvalError::InvalidArgument(format!("{}({k}) is outside the table", f.name())));
            }
            let v = if f == Builtin::B {
                bernoulli(k as u32)?
            } else {
                Rational::from_int(euler_number(k as u32)?)
            };
            Ok(b.lit(&v))
        }
        Builtin::Parity => {
            let k = exact_int(b, &args[0], env, "parity argument")?;
            Ok(b.lit(&Rational::from_int(k.rem_euclid(2))))
        }
        Builtin::Fact => {
            let k = exact_int(b, &args[0], env, "factorial argument")?;
            if !(0..=2000).contains(&k) {
                return Err(EvalError::InvalidArgument(format!("fact({k}) needs 0 <= k <= 2000")));
            }
            Ok(b.lit(&Rational::from_int(factorial(k as u64))))
        }
        Builtin::Abs => {
            let v = eval_node(b, &args[0], env)?;
            Ok(b.abs(&v))
        }
        _ => b.transcendental(f, args, env),
    }
}

/// Rational arithmetic; transcendental calls and infinite sums are errors.
#[derive(Default)]
pub struct ExactBackend {
    harmonic: HashMap<(HarmonicKind, i64), Vec<Rational>>,
    memo: SumMemo<Rational>,
}

impl ExactBackend {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Backend for ExactBackend {
    type Val = Rational;

    fn lit(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn div(&self, a: &Rational, b: &Rational) -> Result<Rational, EvalError> {
        Ok(a.checked_div(b)?)
    }
    fn powi(&self, a: &Rational, e: i64) -> Result<Rational, EvalError> {
        Ok(a.pow(e)?)
    }
    fn abs(&self, a: &Rational) -> Rational {
        a.abs()
    }
    fn harmonic(&mut self, kind: HarmonicKind, n: u64, m: i64) -> Rational {
        let t = self.harmonic.entry((kind, m)).or_insert_with(|| vec![Rational::zero()]);
        while t.len() as u64 <= n {
            let r = t.len() as u64;
            let next = t.last().expect("nonempty") + &kind.term(r, m);
            t.push(next);
        }
        t[n as usize].clone()
    }
    fn transcendental(&mut self, f: Builtin, _args: &[Expr], _env: &mut Env) -> Result<Rational, EvalError> {
        Err(EvalError::TranscendentalInExactContext(f.name().to_string()))
    }
    fn infinite_sum(&mut self, _node: &Expr, _env: &mut Env) -> Result<Rational, EvalError> {
        Err(EvalError::InfiniteSumInExactContext)
    }
    fn memo(&mut self) -> &mut SumMemo<Rational> {
        &mut self.memo
    }
    fn exact(&mut self) -> &mut ExactBackend {
        self
    }
}

/// Numeric evaluation with error tracking.
pub struct RealBackend {
    pub(crate) ctx: PrecisionContext,
    pub(crate) policy: SeriesPolicy,
    pub(crate) exact: ExactBackend,
    pub(crate) prefer_exact: bool,
    harmonic: HashMap<(HarmonicKind, i64), Vec<Real>>,
    constants: HashMap<(Builtin, Vec<Rational>), Real>,
    memo: SumMemo<Approx>,
    pub(crate) terms_used: u64,
    pub(crate) method: Method,
    pub(crate) bound_kind: BoundKind,
}

impl RealBackend {
    /// `ctx` is the working context; callers usually widen the guard first.
    pub fn new(ctx: PrecisionContext, policy: SeriesPolicy) -> Self {
        RealBackend {
            ctx,
            policy,
            exact: ExactBackend::new(),
            prefer_exact: true,
            harmonic: HashMap::new(),
            constants: HashMap::new(),
            memo: SumMemo::default(),
            terms_used: 0,
            method: Method::Direct,
            bound_kind: BoundKind::Rigorous,
        }
    }

    pub(crate) fn real(&self, q: &Rational) -> Real {
        Real::from_rational(q, self.ctx)
    }

    pub(crate) fn note(&mut self, terms: u64, method: Method, kind: BoundKind) {
        self.terms_used = self.terms_used.max(terms);
        self.method = self.method.max(method);
        self.bound_kind = self.bound_kind.max(kind);
    }

    pub(crate) fn eval(&mut self, e: &Expr, env: &mut Env) -> Result<Approx, EvalError> {
        eval_node(self, e, env)
    }

    /// Evaluates with exact subtrees disabled, as needed for long direct sums.
    pub(crate) fn eval_numeric(&mut self, e: &Expr, env: &mut Env) -> Result<Approx, EvalError> {
        let saved = std::mem::replace(&mut self.prefer_exact, false);
        let out = eval_node(self, e, env);
        self.prefer_exact = saved;
        out
    }

    pub(crate) fn prefix_numeric(
        &mut self,
        node: &Expr,
        var: &str,
        lo: i64,
        body: &Expr,
        env: &mut Env,
        count: usize,
    ) -> Result<Approx, EvalError> {
        let saved = std::mem::replace(&mut self.prefer_exact, false);
        let out = prefix_upto(self, node, var, lo, body, env, count);
        self.prefer_exact = saved;
        out
    }

    fn constant(&mut self, f: Builtin, args: Vec<Rational>) -> Result<Real, EvalError> {
        if let Some(v) = self.constants.get(&(f, args.clone())) {
            return Ok(v.clone());
        }
        let ctx = self.ctx;
        let int = |q: &Rational| -> Result<i64, EvalError> {
            q.to_i64()
                .filter(|_| q.is_integer())
                .ok_or_else(|| EvalError::NonInteger(format!("{} needs integer arguments, got {q}", f.name())))
        };
        let v = match f {
            Builtin::Pi => const_pi(ctx),
            Builtin::Log2 => const_log2(ctx),
            Builtin::Catalan => catalan(ctx),
            Builtin::Zeta => {
                let n = int(&args[0])?;
                if n < 2 {
                    return Err(EvalError::DomainError(format!("zeta({n}) needs n >= 2")));
                }
                zeta(n, ctx)?
            }
            Builtin::Eta => {
                let n = int(&args[0])?;
                if n < 1 {
                    return Err(EvalError::DomainError(format!("eta({n}) needs n >= 1")));
                }
                eta_const(n, ctx)?
            }
            Builtin::Beta => {
                let n = int(&args[0])?;
                if n < 1 {
                    return Err(EvalError::DomainError(format!("beta({n}) needs n >= 1")));
                }
                beta_const(n, ctx)?
            }
            Builtin::Li => {
                let n = int(&args[0])?;
                polylog(n, &args[1], ctx)?
            }
            Builtin::Psi => {
                let order = int(&args[0])?;
                if order < 1 {
                    return Err(EvalError::DomainError("psi needs order >= 1".into()));
                }
                let x = &args[1] + &Rational::from_int(int(&args[2])?);
                if x.is_integer() {
                    // (-1)^(m+1) m! (zeta(m+1) - H(x-1, m+1)) from the running table
                    let xi = int(&x)?;
                    let h = Backend::harmonic(self, HarmonicKind::Plain, (xi - 1) as u64, order + 1).v;
                    let diff = self.constant(Builtin::Zeta, vec![Rational::from_int(order + 1)])? - h;
                    let mut fact = Rational::one();
                    for j in 2..=order {
                        fact = &fact * &Rational::from_int(j);
                    }
                    if order % 2 == 0 {
                        fact = -fact;
                    }
                    let v = diff.mul_rational(&fact);
                    self.constants.insert((f, args), v.clone());
                    return Ok(v);
                }
                let four_x = &x * &Rational::from_int(4);
                if !four_x.is_integer() || x.signum() <= 0 {
                    return Err(EvalError::DomainError(format!("psi is only available at positive multiples of 1/4, got {x}")));
                }
                // split x = base + k with base in {1/4, 1/2, 3/4, 1}
                let n4 = four_x.to_i64().ok_or_else(|| EvalError::TooLarge("psi argument too large".into()))?;
                let k = (n4 - 1).div_euclid(4);
                let base = &x - &Rational::from_int(k);
                let qb = QuarterBase::from_rational(&base)?;
                polygamma_quarter(order as u32, qb, k as u64, ctx)?
            }
            Builtin::Log => ln_rational(&args[0], ctx)?,
            other => return Err(EvalError::InvalidArgument(format!("`{}` is not a constant", other.name()))),
        };
        self.constants.insert((f, args), v.clone());
        Ok(v)
    }
}

fn exact_value(e: &Expr) -> bool {
    e.is_exact()
}

/// Largest harmonic index or sum length evaluated with rationals inside a
/// numeric evaluation; beyond it the denominators grow faster than it pays.
const EXACT_LIMIT: i64 = 2000;

fn cheap_exact(x: &mut ExactBackend, e: &Expr, env: &mut Env) -> bool {
    let small = |x: &mut ExactBackend, a: &Expr, env: &mut Env| {
        eval_node(x, a, env).ok().and_then(|v| v.to_i64()).is_some_and(|v| v.abs() <= EXACT_LIMIT)
    };
    match e {
        Expr::Call(Builtin::H | Builtin::SmallH | Builtin::Hbar | Builtin::SmallHbar, args) => {
            small(x, &args[0], env) && cheap_exact(x, &args[1], env)
        }
        Expr::Sum { var, lower, upper: Bound::Finite(upper), body } => {
            if !small(x, lower, env) || !small(x, upper, env) || !cheap_exact(x, lower, env) || !cheap_exact(x, upper, env) {
                return false;
            }
            let (Ok(lo), Ok(hi)) = (eval_node(x, lower, env), eval_node(x, upper, env)) else { return false };
            if (&hi - &lo).to_i64().is_none_or(|d| d > EXACT_LIMIT) {
                return false;
            }
            // the body is checked at the largest index
            env.push((var.clone(), hi));
            let ok = cheap_exact(x, body, env);
            env.pop();
            ok
        }
        Expr::Sum { .. } => false,
        Expr::Int(_) | Expr::Rat(_) | Expr::Var(_) => true,
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
            cheap_exact(x, a, env) && cheap_exact(x, b, env)
        }
        Expr::Neg(a) | Expr::AltSign(a) => cheap_exact(x, a, env),
        Expr::Call(_, args) => args.iter().all(|a| cheap_exact(x, a, env)),
    }
}

impl Backend for RealBackend {
    type Val = Approx;

    fn lit(&self, q: &Rational) -> Approx {
        Approx { v: self.real(q), err: 0.0 }
    }
    fn add(&self, a: &Approx, b: &Approx) -> Approx {
        Approx { v: &a.v + &b.v, err: a.err + b.err }
    }
    fn sub(&self, a: &Approx, b: &Approx) -> Approx {
        Approx { v: &a.v - &b.v, err: a.err + b.err }
    }
    fn mul(&self, a: &Approx, b: &Approx) -> Approx {
        let err = if a.err == 0.0 && b.err == 0.0 {
            0.0
        } else {
            a.v.abs().to_f64() * b.err + b.v.abs().to_f64() * a.err + a.err * b.err
        };
        Approx { v: &a.v * &b.v, err }
    }
    fn neg(&self, a: &Approx) -> Approx {
        Approx { v: -&a.v, err: a.err }
    }
    fn div(&self, a: &Approx, b: &Approx) -> Result<Approx, EvalError> {
        if b.v.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        let q = &a.v / &b.v;
        let err = if a.err == 0.0 && b.err == 0.0 {
            0.0
        } else {
            let bb = b.v.abs().to_f64();
            (a.err + q.abs().to_f64() * b.err) / bb
        };
        Ok(Approx { v: q, err })
    }
    fn powi(&self, a: &Approx, e: i64) -> Result<Approx, EvalError> {
        if e < 0 && a.v.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        let v = a.v.powi(e);
        let err = if a.err == 0.0 || e == 0 {
            0.0
        } else {
            (e.abs() as f64) * a.v.abs().powi(e - 1).to_f64().abs() * a.err
        };
        Ok(Approx { v, err })
    }
    fn abs(&self, a: &Approx) -> Approx {
        Approx { v: a.v.abs(), err: a.err }
    }
    fn harmonic(&mut self, kind: HarmonicKind, n: u64, m: i64) -> Approx {
        let ctx = self.ctx;
        let t = self.harmonic.entry((kind, m)).or_insert_with(|| vec![Real::zero(ctx)]);
        while t.len() as u64 <= n {
            let r = t.len() as u64;
            let next = t.last().expect("nonempty") + &Real::from_rational(&kind.term(r, m), ctx);
            t.push(next);
        }
        Approx { v: t[n as usize].clone(), err: 0.0 }
    }
    fn transcendental(&mut self, f: Builtin, args: &[Expr], env: &mut Env) -> Result<Approx, EvalError> {
        let mut vals = Vec::with_capacity(args.len());
        for a in args {
            vals.push(exact_rat(self, a, env).map_err(|e| match e {
                EvalError::TranscendentalInExactContext(_) | EvalError::InfiniteSumInExactContext => {
                    EvalError::InvalidArgument(format!("arguments of `{}` must be exact rationals", f.name()))
                }
                other => other,
            })?);
        }
        Ok(Approx { v: self.constant(f, vals)?, err: 0.0 })
    }
    fn infinite_sum(&mut self, node: &Expr, env: &mut Env) -> Result<Approx, EvalError> {
        crate::series::infinite_sum(self, node, env)
    }
    fn memo(&mut self) -> &mut SumMemo<Approx> {
        &mut self.memo
    }
    fn exact(&mut self) -> &mut ExactBackend {
        &mut self.exact
    }
    fn exact_shortcut(&mut self, e: &Expr, env: &mut Env) -> Option<Result<Approx, EvalError>> {
        if !self.prefer_exact || matches!(e, Expr::Int(_) | Expr::Rat(_) | Expr::Var(_)) || !exact_value(e) {
            return None;
        }
        if !cheap_exact(&mut self.exact, e, env) {
            return None;
        }
        let r = eval_node(&mut self.exact, e, env);
        Some(r.map(|q| Approx { v: Real::from_rational(&q, self.ctx), err: 0.0 }))
    }
}

/// Exact value of `expr` with all free variables bound.
pub fn eval_exact(expr: &Expr, bindings: &Bindings) -> Result<Rational, EvalError> {
    let mut b = ExactBackend::new();
    let mut env = env_from(bindings);
    eval_node(&mut b, expr, &mut env)
}

/// Exact values of `expr` at many points. Harmonic tables and finite-sum
/// prefixes are shared between the points, so a grid over `N` costs about
/// as much as its largest point.
pub fn eval_exact_batch(expr: &Expr, points: &[Bindings]) -> Vec<Result<Rational, EvalError>> {
    let mut b = ExactBackend::new();
    points
        .iter()
        .map(|p| {
            let mut env = env_from(p);
            eval_node(&mut b, expr, &mut env)
        })
        .collect()
}

/// Extra guard digits used internally by [`eval_real`].
pub const WORKING_GUARD: u32 = 20;

pub(crate) fn working_ctx(ctx: PrecisionContext) -> PrecisionContext {
    PrecisionContext::with_guard(ctx.digits(), ctx.guard() + WORKING_GUARD).expect("digits already validated")
}

/// Numeric value with an error bound; infinite sums go to the series engine.
pub fn eval_real(
    expr: &Expr,
    bindings: &Bindings,
    ctx: PrecisionContext,
    policy: &SeriesPolicy,
) -> Result<EvalReport, EvalError> {
    let mut b = RealBackend::new(working_ctx(ctx), policy.clone());
    let mut env = env_from(bindings);
    let a = eval_node(&mut b, expr, &mut env)?;
    let rounding = a.v.abs().to_f64().max(1.0) * ctx.working_epsilon();
    Ok(EvalReport {
        value: a.v.with_ctx(ctx),
        error_bound: a.err + rounding,
        bound_kind: b.bound_kind,
        terms_used: b.terms_used,
        method: b.method,
    })
}
