//! Summation of infinite series.
//!
//! Positive series are summed directly to `trunc_n` and the tail is taken
//! from the Euler–Maclaurin expansion of the summand. Alternating series use
//! the Euler–Boole expansion of the tail, which yields the Abel value and so
//! also covers summands that do not tend to zero. Geometric summands are
//! summed until the geometric tail estimate drops below the working epsilon.
//! Anything the expander cannot handle falls back to Richardson
//! extrapolation of partial sums, flagged heuristic.

pub(crate) mod asym;
mod expand;
mod verify;

use num_traits::ToPrimitive;

use crate::numerics::{PrecisionContext, Rational, Real};
use crate::sumlang::eval::{env_from, exact_int, working_ctx, Approx, Env};
use crate::sumlang::{
    eval_exact, BoundKind, Bound, Bindings, Builtin, EvalError, EvalReport, Expr, Method, RealBackend,
};
use expand::Expander;

pub use verify::{
    format_point, numeric_tolerance, verify_finite, verify_numeric, verify_numeric_on, verify_record, Status,
    VerificationResult,
};

/// Numeric policy for infinite sums.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPolicy {
    /// Terms summed directly before the tail correction.
    pub trunc_n: u64,
    /// Orders of the tail expansion beyond its leading term.
    pub tail_order: u32,
    /// Smallest tolerance used by numeric verification.
    pub tol_floor: f64,
    pub richardson_levels: u32,
    /// Raise `tail_order` when the working precision needs it.
    pub adaptive_order: bool,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy { trunc_n: 10_000, tail_order: 10, tol_floor: 1e-12, richardson_levels: 4, adaptive_order: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    PositiveDecay,
    PowerWeighted,
    AlternatingPaired,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::PositiveDecay => "positive-decay",
            SeriesKind::PowerWeighted => "power-weighted",
            SeriesKind::AlternatingPaired => "alternating-paired",
        }
    }
}

/// An infinite sum `Σ_{var ≥ lower} term` together with its decay hints.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub var: String,
    pub lower: Expr,
    pub term: Expr,
    pub kind: SeriesKind,
    /// `s` in a `1/r^s` tail, if known.
    pub leading_power: Option<i64>,
    /// Harmonic calls whose index runs with the summation variable.
    pub harmonic_factors: Vec<Expr>,
    node: Expr,
}

impl SeriesSpec {
    pub fn new(var: &str, lower: Expr, term: Expr) -> Result<Self, EvalError> {
        let node = Expr::Sum { var: var.to_string(), lower: Box::new(lower.clone()), upper: Bound::Inf, body: Box::new(term.clone()) };
        Self::from_expr(&node)
    }

    /// Reads the spec off a `sum(r=lo..inf, term)` node.
    pub fn from_expr(e: &Expr) -> Result<Self, EvalError> {
        let Expr::Sum { var, lower, upper: Bound::Inf, body } = e else {
            return Err(EvalError::InvalidArgument("expected an infinite sum".into()));
        };
        let kind = match shape(var, body) {
            Shape::Geometric => SeriesKind::PowerWeighted,
            Shape::Alternating => SeriesKind::AlternatingPaired,
            Shape::Plain => SeriesKind::PositiveDecay,
            Shape::Mixed => return Err(EvalError::UnsupportedTermShape("sign factor inside a sum or call".into())),
        };
        let mut harmonic_factors = Vec::new();
        body.walk(&mut |n| {
            if let Expr::Call(Builtin::H | Builtin::SmallH | Builtin::Hbar | Builtin::SmallHbar, args) = n {
                if args[0].mentions(var) && !harmonic_factors.contains(n) {
                    harmonic_factors.push(n.clone());
                }
            }
        });
        Ok(SeriesSpec {
            var: var.clone(),
            lower: (**lower).clone(),
            term: (**body).clone(),
            kind,
            leading_power: None,
            harmonic_factors,
            node: e.clone(),
        })
    }

    pub fn with_leading_power(mut self, s: i64) -> Self {
        self.leading_power = Some(s);
        self
    }

    /// The sum as an expression.
    pub fn expr(&self) -> &Expr {
        &self.node
    }

    /// Checks the hints against the term.
    pub fn validate(&self, bindings: &Bindings) -> Result<(), EvalError> {
        for f in &self.harmonic_factors {
            let mut found = false;
            self.term.walk(&mut |n| found |= n == f);
            if !found {
                return Err(EvalError::InvalidArgument(format!("harmonic factor {f} does not occur in the term")));
            }
        }
        let expected = match shape(&self.var, &self.term) {
            Shape::Geometric => SeriesKind::PowerWeighted,
            Shape::Alternating => SeriesKind::AlternatingPaired,
            _ => SeriesKind::PositiveDecay,
        };
        if expected != self.kind {
            return Err(EvalError::InvalidArgument(format!(
                "term looks {}, spec says {}",
                expected.name(),
                self.kind.name()
            )));
        }
        if let Some(s) = self.leading_power {
            let ctx = PrecisionContext::new(30).expect("valid digits");
            let mut b = RealBackend::new(working_ctx(ctx), SeriesPolicy::default());
            let mut env = env_from(bindings);
            let f = Expander::new(&mut b, &self.var, 20).expand(&self.term, &mut env)?;
            if f.lead().map(i64::from) != Some(s) {
                return Err(EvalError::InvalidArgument(format!(
                    "term decays like r^-{:?}, not r^-{s}",
                    f.lead()
                )));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// classification

enum Shape {
    Plain,
    Geometric,
    Alternating,
    /// A sign factor outside a product; only partial sums can handle it.
    Mixed,
}

fn shape(var: &str, body: &Expr) -> Shape {
    if has_geometric(var, body) {
        return Shape::Geometric;
    }
    match sign_count(var, body) {
        Some(n) if n % 2 == 1 => Shape::Alternating,
        Some(_) => Shape::Plain,
        None => Shape::Mixed,
    }
}

fn has_geometric(var: &str, e: &Expr) -> bool {
    let mut found = false;
    e.walk(&mut |n| {
        if let Expr::Pow(base, ex) = n {
            if ex.mentions(var) && !base.mentions(var) {
                found = true;
            }
        }
    });
    found
}

fn depends_sign(var: &str, e: &Expr) -> bool {
    let mut found = false;
    e.walk(&mut |n| {
        if let Expr::AltSign(x) = n {
            found |= x.mentions(var);
        }
    });
    found
}

/// Number of index-dependent signs with odd index coefficient in product
/// position, or `None` when a sign sits anywhere else.
fn sign_count(var: &str, e: &Expr) -> Option<u32> {
    if !depends_sign(var, e) {
        return Some(0);
    }
    match e {
        Expr::Mul(a, b) | Expr::Div(a, b) => Some(sign_count(var, a)? + sign_count(var, b)?),
        Expr::Neg(a) => sign_count(var, a),
        Expr::AltSign(x) => {
            let (c, _) = affine_coeff(var, x)?;
            Some(if c.rem_euclid(2) == 1 { 1 } else { 0 })
        }
        Expr::Pow(base, ex) if !ex.mentions(var) => {
            let k = eval_exact(ex, &Bindings::new()).ok()?.to_i64()?;
            Some(sign_count(var, base)? * k.unsigned_abs() as u32)
        }
        _ => None,
    }
}

/// Integer coefficients `(c, a)` of `c*var + a` when they are literal.
fn affine_coeff(var: &str, e: &Expr) -> Option<(i64, i64)> {
    match e {
        Expr::Var(v) if v == var => Some((1, 0)),
        Expr::Int(v) => Some((0, v.to_i64()?)),
        Expr::Var(_) => Some((0, 0)),
        Expr::Add(a, b) => {
            let (c1, a1) = affine_coeff(var, a)?;
            let (c2, a2) = affine_coeff(var, b)?;
            Some((c1 + c2, a1 + a2))
        }
        Expr::Sub(a, b) => {
            let (c1, a1) = affine_coeff(var, a)?;
            let (c2, a2) = affine_coeff(var, b)?;
            Some((c1 - c2, a1 - a2))
        }
        Expr::Neg(a) => affine_coeff(var, a).map(|(c, a)| (-c, -a)),
        Expr::Mul(a, b) => match (&**a, &**b) {
            (Expr::Int(k), x) | (x, Expr::Int(k)) => {
                let k = k.to_i64()?;
                affine_coeff(var, x).map(|(c, a)| (k * c, k * a))
            }
            _ => None,
        },
        _ => None,
    }
}

/// `ln ρ` for the geometric factors of `e`, combined through products.
fn log_ratio(b: &mut RealBackend, var: &str, e: &Expr, env: &mut Env) -> Result<f64, EvalError> {
    if !e.mentions(var) {
        return Ok(0.0);
    }
    Ok(match e {
        Expr::Mul(x, y) => log_ratio(b, var, x, env)? + log_ratio(b, var, y, env)?,
        Expr::Div(x, y) => log_ratio(b, var, x, env)? - log_ratio(b, var, y, env)?,
        Expr::Neg(x) => log_ratio(b, var, x, env)?,
        Expr::Add(x, y) | Expr::Sub(x, y) => log_ratio(b, var, x, env)?.max(log_ratio(b, var, y, env)?),
        Expr::Pow(base, ex) if ex.mentions(var) && !base.mentions(var) => {
            let mut xp = Expander::new(b, var, 0);
            let (c, _) = xp
                .affine(ex, env)
                .ok_or_else(|| EvalError::UnsupportedTermShape("geometric exponent is not affine in the index".into()))?;
            let base = b.eval(base, env)?.v.abs();
            if base.is_zero() {
                return Err(EvalError::UnsupportedTermShape("zero base with an index-dependent exponent".into()));
            }
            let lb = match base.ilog2() {
                // to_f64 of very small or large bases would underflow
                Some(l) if l.abs() > 1000 => l as f64 * std::f64::consts::LN_2,
                _ => base.to_f64().ln(),
            };
            c.to_f64() * lb
        }
        Expr::Pow(base, ex) => {
            let mut ex_env = env.clone();
            let k = exact_int(b, ex, &mut ex_env, "exponent")?;
            k as f64 * log_ratio(b, var, base, env)?
        }
        _ => 0.0,
    })
}

// ---------------------------------------------------------------------------
// dispatch

fn unsupported(e: &EvalError) -> bool {
    matches!(e, EvalError::UnsupportedTermShape(_))
}

fn parts(node: &Expr) -> (&str, &Expr, &Expr) {
    match node {
        Expr::Sum { var, lower, upper: Bound::Inf, body } => (var, lower, body),
        _ => unreachable!("infinite_sum is only called on infinite sums"),
    }
}

/// Value of an infinite `sum` node; called from the numeric evaluator.
pub(crate) fn infinite_sum(b: &mut RealBackend, node: &Expr, env: &mut Env) -> Result<Approx, EvalError> {
    let (var, lower, body) = parts(node);
    let lo = exact_int(b, lower, env, "lower summation bound")?;
    match shape(var, body) {
        Shape::Geometric => {
            let lr = log_ratio(b, var, body, env)?;
            if lr > 1e-12 {
                return Err(EvalError::Divergent("geometric ratio exceeds 1".into()));
            }
            if lr < -1e-12 {
                return power_series(b, node, lo, lr.exp(), env);
            }
            plain(b, node, lo, env)
        }
        Shape::Alternating => match euler_boole(b, node, lo, env) {
            Err(e) if unsupported(&e) => {
                let t = paired(b, node, lo, env)?;
                Ok(Approx { v: t.v.div_i64(2), err: t.err / 2.0 })
            }
            r => r,
        },
        Shape::Plain => plain(b, node, lo, env),
        Shape::Mixed => {
            let t = paired(b, node, lo, env)?;
            Ok(Approx { v: t.v.div_i64(2), err: t.err / 2.0 })
        }
    }
}

fn plain(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env) -> Result<Approx, EvalError> {
    match tail_corrected(b, node, lo, env) {
        Err(e) if unsupported(&e) => extrapolated(b, node, lo, env),
        r => r,
    }
}

/// Truncation point and tail order for the current policy and precision.
fn truncation(b: &RealBackend, lo: i64) -> (i64, i32) {
    let n = (b.policy.trunc_n as i64).max(lo + 10).max(16);
    let mut k = b.policy.tail_order.max(1) as i32;
    if b.policy.adaptive_order {
        let need = (b.ctx.working_digits() as f64 / (n as f64).log10()).ceil() as i32;
        k = k.max(need).min(48);
    }
    (n, k)
}

/// Partial sum over the first `count` terms, rounding included in the error.
fn partial(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env, count: usize) -> Result<Approx, EvalError> {
    let (var, _, body) = parts(node);
    let s = b.prefix_numeric(node, var, lo, body, env, count)?;
    let rounding = count as f64 * s.v.abs().to_f64().max(1.0) * b.ctx.working_epsilon();
    Ok(Approx { v: s.v, err: s.err + rounding })
}

fn log_point(x: i64, ctx: PrecisionContext) -> Result<(Real, Real), EvalError> {
    let lx = crate::numerics::ln_rational(&Rational::from_int(x), ctx)?;
    Ok((Real::from_i64(x, ctx), lx))
}

const CAP_RETRIES: usize = 5;

/// Direct sum to `N` minus the Euler–Maclaurin tail `A(N)`.
fn tail_corrected(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env) -> Result<Approx, EvalError> {
    let (var, _, body) = parts(node);
    let (n, k) = truncation(b, lo);
    let mut cap = k + 12;
    for _ in 0..CAP_RETRIES {
        let f = Expander::new(b, var, cap).expand(body, env)?;
        let Some(lead) = f.lead() else {
            if f.is_exact() {
                return Ok(Approx { v: Real::zero(b.ctx), err: 0.0 });
            }
            cap += 8;
            continue;
        };
        if lead <= 1 {
            return Err(EvalError::Divergent(format!("summand decays no faster than 1/{var}")));
        }
        let a = f.em_sum(cap)?;
        let hi = lead - 1 + k;
        if !a.is_exact() && a.jmax < hi + 2 {
            cap += 8;
            continue;
        }
        let s = partial(b, node, lo, env, (n - lo + 1) as usize)?;
        let (x, lx) = log_point(n, b.ctx)?;
        let tail = a.eval_range(&x, &lx, i32::MIN, hi);
        let bound = a.abs_range(&x, &lx, hi + 1, hi + 2);
        b.note((n - lo + 1) as u64, Method::TailCorrected, BoundKind::Estimate);
        return Ok(Approx { v: &s.v - &tail, err: s.err + bound });
    }
    Err(EvalError::UnsupportedTermShape("tail expansion did not reach the requested order".into()))
}

/// Abel value of an alternating sum: partial sum plus the Euler–Boole tail.
fn euler_boole(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env) -> Result<Approx, EvalError> {
    let (var, _, body) = parts(node);
    let (n, k) = truncation(b, lo);
    let mut cap = k + 12;
    for _ in 0..CAP_RETRIES {
        // signs become constants; the body equals (-1)^(r-1) f(r)
        let f = Expander::new(b, var, cap).expand(body, env)?;
        let Some(lead) = f.lead() else {
            if f.is_exact() {
                return Ok(Approx { v: Real::zero(b.ctx), err: 0.0 });
            }
            cap += 8;
            continue;
        };
        let eb = f.euler_boole(cap)?;
        let hi = lead + k;
        if !eb.is_exact() && eb.jmax < hi + 2 {
            cap += 8;
            continue;
        }
        // terms lo..n-1 directly, then Σ_{r≥n} (-1)^(r-1) f(r) = (-1)^(n-1) EB(n)
        let s = partial(b, node, lo, env, (n - lo) as usize)?;
        let (x, lx) = log_point(n, b.ctx)?;
        let mut tail = eb.eval_range(&x, &lx, i32::MIN, hi);
        if (n - 1).rem_euclid(2) == 1 {
            tail = -tail;
        }
        let bound = eb.abs_range(&x, &lx, hi + 1, hi + 2);
        b.note((n - lo) as u64, Method::EulerBoole, BoundKind::Estimate);
        return Ok(Approx { v: &s.v + &tail, err: s.err + bound });
    }
    Err(EvalError::UnsupportedTermShape("tail expansion did not reach the requested order".into()))
}

const MAX_POWER_TERMS: i64 = 2_000_000;

/// Direct summation until the geometric tail estimate is below the working epsilon.
fn power_series(b: &mut RealBackend, node: &Expr, lo: i64, rho: f64, env: &mut Env) -> Result<Approx, EvalError> {
    let (var, _, body) = parts(node);
    let eps = b.ctx.working_epsilon();
    let mut s = Approx { v: Real::zero(b.ctx), err: 0.0 };
    let mut last = [0.0f64; 3];
    let mut r = lo;
    loop {
        env.push((var.to_string(), Rational::from_int(r)));
        let t = b.eval_numeric(body, env);
        env.pop();
        let t = t?;
        s = Approx { v: &s.v + &t.v, err: s.err + t.err };
        let used = r - lo + 1;
        last[(used % 3) as usize] = t.v.abs().to_f64();
        if used >= 3 {
            let n = r.max(1) as f64;
            let rho_e = rho * (1.0 + 1.0 / n).powi(8);
            if rho_e < 1.0 {
                let biggest = last.iter().cloned().fold(0.0, f64::max);
                let tail = biggest * rho_e / (1.0 - rho_e);
                if tail <= eps * s.v.abs().to_f64().max(1.0) {
                    let rounding = used as f64 * s.v.abs().to_f64().max(1.0) * eps;
                    b.note(used as u64, Method::Direct, BoundKind::Estimate);
                    return Ok(Approx { v: s.v, err: s.err + tail + rounding });
                }
            }
        }
        if used >= MAX_POWER_TERMS {
            return Err(EvalError::TooLarge("power series converges too slowly".into()));
        }
        r += 1;
    }
}

/// Ladder of truncation points `N/2^(L-1) … N/2, N`.
fn ladder(top: i64, levels: u32) -> Vec<i64> {
    let levels = levels.clamp(1, 12);
    (0..levels).map(|i| (top >> (levels - 1 - i)).max(1)).collect()
}

/// Neville extrapolation to `1/n → 0` over the last `order + 1` points.
/// Returns the value and the gap to the extrapolant of one order less.
fn neville(ns: &[i64], values: &[Real], order: usize) -> (Real, f64) {
    assert_eq!(ns.len(), values.len());
    assert!(order < values.len(), "Richardson order needs more ladder points");
    let start = values.len() - 1 - order;
    let xs: Vec<Rational> = ns[start..].iter().map(|&n| Rational::new(1, n).expect("n > 0")).collect();
    let mut p: Vec<Real> = values[start..].to_vec();
    let mut prev_top = p.last().cloned().expect("nonempty");
    for k in 1..p.len() {
        prev_top = p.last().cloned().expect("nonempty");
        for i in (k..p.len()).rev() {
            let num = &p[i].mul_rational(&xs[i - k]) - &p[i - 1].mul_rational(&xs[i]);
            let den = &xs[i - k] - &xs[i];
            p[i] = num.mul_rational(&den.recip().expect("distinct ladder points"));
        }
    }
    let top = p.last().cloned().expect("nonempty");
    let gap = (&top - &prev_top).abs().to_f64();
    (top, gap)
}

/// Richardson extrapolation of values at `N, 2N, 4N, …` in powers of `1/N`.
pub fn richardson(values: &[Real], order: usize) -> Real {
    let ns: Vec<i64> = (0..values.len()).map(|i| 1i64 << i).collect();
    neville(&ns, values, order).0
}

/// Richardson extrapolation of values sampled at arbitrary truncation points.
pub fn richardson_at(ns: &[i64], values: &[Real], order: usize) -> Real {
    neville(ns, values, order).0
}

/// Extrapolated limit of the partial sums.
fn extrapolated(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env) -> Result<Approx, EvalError> {
    let (n, _) = truncation(b, lo);
    let ns = ladder(n, b.policy.richardson_levels);
    let mut vals = Vec::with_capacity(ns.len());
    let mut err: f64 = 0.0;
    for &m in &ns {
        let s = partial(b, node, lo, env, m as usize)?;
        err = err.max(s.err);
        vals.push(s.v);
    }
    let (v, gap) = neville(&ns, &vals, ns.len() - 1);
    b.note(n as u64, Method::Richardson, BoundKind::Heuristic);
    Ok(Approx { v, err: err + gap })
}

/// Extrapolated limit of `T_N = S_{2N-1} + S_{2N}`.
fn paired(b: &mut RealBackend, node: &Expr, lo: i64, env: &mut Env) -> Result<Approx, EvalError> {
    let (n, _) = truncation(b, lo);
    let ns = ladder(n, b.policy.richardson_levels);
    let mut vals = Vec::with_capacity(ns.len());
    let mut err: f64 = 0.0;
    for &m in &ns {
        let odd = partial(b, node, lo, env, (2 * m - 1) as usize)?;
        let even = partial(b, node, lo, env, (2 * m) as usize)?;
        err = err.max(odd.err + even.err);
        vals.push(&odd.v + &even.v);
    }
    let (v, gap) = neville(&ns, &vals, ns.len() - 1);
    let method = if ns.len() > 1 { Method::Richardson } else { Method::Paired };
    let kind = if ns.len() > 1 { BoundKind::Heuristic } else { BoundKind::Estimate };
    b.note(2 * n as u64, method, kind);
    Ok(Approx { v, err: err + gap })
}

// ---------------------------------------------------------------------------
// public entry points

fn backend(ctx: PrecisionContext, policy: SeriesPolicy) -> RealBackend {
    RealBackend::new(working_ctx(ctx), policy)
}

fn report(b: &RealBackend, a: Approx, ctx: PrecisionContext) -> EvalReport {
    let rounding = a.v.abs().to_f64().max(1.0) * ctx.working_epsilon();
    EvalReport {
        value: a.v.with_ctx(ctx),
        error_bound: a.err + rounding,
        bound_kind: b.bound_kind,
        terms_used: b.terms_used,
        method: b.method,
    }
}

fn spec_lower(spec: &SeriesSpec, bindings: &Bindings) -> Result<i64, EvalError> {
    let v = eval_exact(&spec.lower, bindings)?;
    v.to_i64()
        .filter(|_| v.is_integer())
        .ok_or_else(|| EvalError::NonInteger(format!("lower bound must be an integer, got {v}")))
}

fn finite_node(spec: &SeriesSpec, count: u64) -> Expr {
    let upper = Expr::Add(Box::new(spec.lower.clone()), Box::new(Expr::int(count as i64 - 1)));
    Expr::Sum {
        var: spec.var.clone(),
        lower: Box::new(spec.lower.clone()),
        upper: Bound::Finite(Box::new(upper)),
        body: Box::new(spec.term.clone()),
    }
}

/// Exact sum of the first `n` terms.
pub fn sum_direct_exact(spec: &SeriesSpec, n: u64, bindings: &Bindings) -> Result<Rational, EvalError> {
    eval_exact(&finite_node(spec, n), bindings)
}

/// Numeric sum of the first `n` terms.
pub fn sum_direct(spec: &SeriesSpec, n: u64, bindings: &Bindings, ctx: PrecisionContext) -> Result<EvalReport, EvalError> {
    crate::sumlang::eval_real(&finite_node(spec, n), bindings, ctx, &SeriesPolicy::default())
}

/// Partial sum to `n` plus the Euler–Maclaurin tail with `k` orders beyond the leading one.
pub fn sum_tail_corrected(
    spec: &SeriesSpec,
    n: u64,
    k: u32,
    bindings: &Bindings,
    ctx: PrecisionContext,
) -> Result<EvalReport, EvalError> {
    let policy = SeriesPolicy { trunc_n: n, tail_order: k, adaptive_order: false, ..SeriesPolicy::default() };
    let mut b = backend(ctx, policy);
    let mut env = env_from(bindings);
    let lo = spec_lower(spec, bindings)?;
    let a = tail_corrected(&mut b, &spec.node, lo, &mut env)?;
    Ok(report(&b, a, ctx))
}

/// Abel value of an alternating series via the Euler–Boole tail.
pub fn sum_euler_boole(
    spec: &SeriesSpec,
    bindings: &Bindings,
    ctx: PrecisionContext,
    policy: &SeriesPolicy,
) -> Result<EvalReport, EvalError> {
    let mut b = backend(ctx, policy.clone());
    let mut env = env_from(bindings);
    let lo = spec_lower(spec, bindings)?;
    let a = euler_boole(&mut b, &spec.node, lo, &mut env)?;
    Ok(report(&b, a, ctx))
}

/// Limit of `T_N = S_{2N-1} + S_{2N}` from `N = n_pairs` down a Richardson ladder.
pub fn sum_paired_alternating(
    spec: &SeriesSpec,
    n_pairs: u64,
    bindings: &Bindings,
    ctx: PrecisionContext,
    levels: u32,
) -> Result<EvalReport, EvalError> {
    let policy = SeriesPolicy { trunc_n: n_pairs, richardson_levels: levels, adaptive_order: false, ..SeriesPolicy::default() };
    let mut b = backend(ctx, policy);
    let mut env = env_from(bindings);
    let lo = spec_lower(spec, bindings)?;
    let a = paired(&mut b, &spec.node, lo, &mut env)?;
    Ok(report(&b, a, ctx))
}

/// Exact `T_N = S_{2N-1} + S_{2N}`.
pub fn paired_partial_exact(spec: &SeriesSpec, n: u64, bindings: &Bindings) -> Result<Rational, EvalError> {
    if n == 0 {
        return Err(EvalError::InvalidArgument("paired partial sums need N >= 1".into()));
    }
    let odd = sum_direct_exact(spec, 2 * n - 1, bindings)?;
    let even = sum_direct_exact(spec, 2 * n, bindings)?;
    Ok(&odd + &even)
}

/// `Σ term` with the variable `z` bound to `z`; needs `|z| ≤ 3/4`.
pub fn sum_power_series(
    spec: &SeriesSpec,
    z: &Rational,
    bindings: &Bindings,
    ctx: PrecisionContext,
) -> Result<EvalReport, EvalError> {
    if z.abs() > Rational::new(3, 4).expect("nonzero") {
        return Err(EvalError::DomainError(format!("power series needs |z| <= 3/4, got {z}")));
    }
    let mut bind = bindings.clone();
    bind.insert("z".to_string(), z.clone());
    crate::sumlang::eval_real(&spec.node, &bind, ctx, &SeriesPolicy::default())
}

/// Numeric value of any expression with the given policy.
pub fn evaluate(expr: &Expr, bindings: &Bindings, ctx: PrecisionContext, policy: &SeriesPolicy) -> Result<EvalReport, EvalError> {
    crate::sumlang::eval_real(expr, bindings, ctx, policy)
}

#[cfg(test)]
mod tests;
