//! Asymptotic expansion of a summand in its summation index.

use std::collections::HashMap;

use super::asym::AsymSeries;
use crate::harmonic::HarmonicKind;
use crate::numerics::{ln_rational, Rational, Real};
use crate::special::zeta;
use crate::sumlang::eval::{exact_int, exact_rat, Env};
use crate::sumlang::{Bound, Builtin, EvalError, Expr, RealBackend};

/// Point where integration constants of inner sums are fitted.
pub(crate) const FIT_POINT: i64 = 1000;

fn unsupported(msg: impl Into<String>) -> EvalError {
    EvalError::UnsupportedTermShape(msg.into())
}

pub(crate) struct Expander<'a> {
    pub b: &'a mut RealBackend,
    pub var: String,
    pub cap: i32,
    cache: HashMap<(HarmonicKind, i64), AsymSeries>,
}

impl<'a> Expander<'a> {
    pub fn new(b: &'a mut RealBackend, var: &str, cap: i32) -> Self {
        Expander { b, var: var.to_string(), cap, cache: HashMap::new() }
    }

    /// `(c, a)` with `e = c*var + a`, if `e` is affine in the index.
    pub fn affine(&mut self, e: &Expr, env: &mut Env) -> Option<(Rational, Rational)> {
        if !e.mentions(&self.var) {
            return exact_rat(&mut *self.b, e, env).ok().map(|v| (Rational::zero(), v));
        }
        match e {
            Expr::Var(v) if *v == self.var => Some((Rational::one(), Rational::zero())),
            Expr::Add(x, y) | Expr::Sub(x, y) => {
                let (c1, a1) = self.affine(x, env)?;
                let (c2, a2) = self.affine(y, env)?;
                if matches!(e, Expr::Add(..)) {
                    Some((&c1 + &c2, &a1 + &a2))
                } else {
                    Some((&c1 - &c2, &a1 - &a2))
                }
            }
            Expr::Neg(x) => {
                let (c, a) = self.affine(x, env)?;
                Some((-c, -a))
            }
            Expr::Mul(x, y) => {
                let (c1, a1) = self.affine(x, env)?;
                let (c2, a2) = self.affine(y, env)?;
                if c1.is_zero() {
                    Some((&a1 * &c2, &a1 * &a2))
                } else if c2.is_zero() {
                    Some((&c1 * &a2, &a1 * &a2))
                } else {
                    None
                }
            }
            Expr::Div(x, y) => {
                let (c1, a1) = self.affine(x, env)?;
                let (c2, a2) = self.affine(y, env)?;
                if !c2.is_zero() || a2.is_zero() {
                    return None;
                }
                Some((&c1 / &a2, &a1 / &a2))
            }
            _ => None,
        }
    }

    pub fn expand(&mut self, e: &Expr, env: &mut Env) -> Result<AsymSeries, EvalError> {
        let ctx = self.b.ctx;
        if !e.mentions(&self.var) {
            let v = self.b.eval(e, env)?;
            return Ok(AsymSeries::constant(v.v));
        }
        let cap = self.cap;
        match e {
            Expr::Var(_) => Ok(AsymSeries::var(ctx)),
            Expr::Add(x, y) => Ok(self.expand(x, env)?.add(&self.expand(y, env)?)),
            Expr::Sub(x, y) => Ok(self.expand(x, env)?.sub(&self.expand(y, env)?)),
            Expr::Neg(x) => Ok(self.expand(x, env)?.neg()),
            Expr::Mul(x, y) => {
                let a = self.expand(x, env)?;
                let b = self.expand(y, env)?;
                Ok(a.mul(&b, cap))
            }
            Expr::Div(x, y) => {
                let a = self.expand(x, env)?;
                let b = self.expand(y, env)?.inverse(cap)?;
                Ok(a.mul(&b, cap))
            }
            Expr::Pow(base, ex) => {
                if ex.mentions(&self.var) {
                    return Err(unsupported("summation index in an exponent"));
                }
                let k = exact_int(&mut *self.b, ex, env, "exponent")?;
                self.expand(base, env)?.powi(k, cap)
            }
            Expr::AltSign(x) => {
                // the alternating factor itself is handled by the caller
                let (c, a) = self.affine(x, env).ok_or_else(|| unsupported("sign with a non-affine index"))?;
                if !c.is_integer() || !a.is_integer() {
                    return Err(unsupported("sign with a fractional index"));
                }
                let odd = |q: &Rational| q.to_i64().map(|v| v.rem_euclid(2) == 1).unwrap_or(false);
                let negative = if odd(&c) { odd(&a) } else { !odd(&a) };
                Ok(AsymSeries::constant(Real::from_i64(if negative { -1 } else { 1 }, ctx)))
            }
            Expr::Call(f @ (Builtin::H | Builtin::SmallH), args) => {
                if args[1].mentions(&self.var) {
                    return Err(unsupported("harmonic order depends on the summation index"));
                }
                let m = exact_int(&mut *self.b, &args[1], env, "harmonic order")?;
                let (c, a) = self
                    .affine(&args[0], env)
                    .ok_or_else(|| unsupported("harmonic index is not affine in the summation index"))?;
                let kind = if *f == Builtin::H { HarmonicKind::Plain } else { HarmonicKind::Odd };
                let s = self.harmonic_series(kind, m)?;
                s.compose_affine(&c, &a, cap)
            }
            Expr::Call(Builtin::Psi, args) => {
                if args[0].mentions(&self.var) || args[1].mentions(&self.var) {
                    return Err(unsupported("polygamma order or base depends on the summation index"));
                }
                let m = exact_int(&mut *self.b, &args[0], env, "polygamma order")?;
                if m < 1 {
                    return Err(unsupported("digamma of the summation index"));
                }
                let x = exact_rat(&mut *self.b, &args[1], env)?;
                let (c, a) = self
                    .affine(&args[2], env)
                    .ok_or_else(|| unsupported("polygamma offset is not affine in the summation index"))?;
                // psi_m(y) = (-1)^(m+1) m! (zeta(m+1) - H(y-1, m+1))
                let h = self.harmonic_series(HarmonicKind::Plain, m + 1)?;
                let shift = &(&a + &x) - &Rational::one();
                let h = h.compose_affine(&c, &shift, cap)?;
                let tail = AsymSeries::constant(zeta(m + 1, ctx)?).sub(&h);
                let mut f = Rational::one();
                for j in 2..=m {
                    f = &f * &Rational::from_int(j);
                }
                if m % 2 == 0 {
                    f = -f;
                }
                Ok(tail.mul(&AsymSeries::constant(Real::from_rational(&f, ctx)), cap))
            }
            Expr::Call(f, _) => Err(unsupported(format!("`{}` of the summation index", f.name()))),
            Expr::Sum { var, lower, upper: Bound::Finite(upper), body } => {
                self.inner_sum(e, var, lower, upper, body, env)
            }
            Expr::Sum { .. } => Err(unsupported("infinite inner sum depending on the summation index")),
            Expr::Int(_) | Expr::Rat(_) => unreachable!("literals never mention the index"),
        }
    }

    /// `H(y,m)` or `h(y,m)` as a series in `y`.
    fn harmonic_series(&mut self, kind: HarmonicKind, m: i64) -> Result<AsymSeries, EvalError> {
        if let Some(s) = self.cache.get(&(kind, m)) {
            return Ok(s.clone());
        }
        let ctx = self.b.ctx;
        let cap = self.cap;
        let power = AsymSeries::monomial(m as i32, 0, Real::one(ctx));
        let g = match kind {
            HarmonicKind::Plain => power,
            _ => power.compose_affine(&Rational::from_int(2), &Rational::from_int(-1), cap)?,
        };
        let a = g.em_sum(cap)?;
        let constant = if m >= 2 {
            let z = zeta(m, ctx)?;
            match kind {
                HarmonicKind::Plain => z,
                _ => {
                    let f = &Rational::one() - &Rational::from_int(2).pow(-m)?;
                    z.mul_rational(&f)
                }
            }
        } else {
            let u = if g.is_polynomial() { 1 } else { FIT_POINT };
            let s = crate::sumlang::eval::Backend::harmonic(&mut *self.b, kind, u as u64, m).v;
            s - eval_all(&a, u)?
        };
        let out = a.add(&AsymSeries::constant(constant));
        self.cache.insert((kind, m), out.clone());
        Ok(out)
    }

    /// `sum(s=lo..upper, g(s))` with `upper` affine in the outer index.
    fn inner_sum(
        &mut self,
        node: &Expr,
        var: &str,
        lower: &Expr,
        upper: &Expr,
        body: &Expr,
        env: &mut Env,
    ) -> Result<AsymSeries, EvalError> {
        if lower.mentions(&self.var) || body.mentions(&self.var) {
            return Err(unsupported("inner sum whose summand or lower bound depends on the outer index"));
        }
        let lo = exact_int(&mut *self.b, lower, env, "lower summation bound")?;
        let (c, a) = self
            .affine(upper, env)
            .ok_or_else(|| unsupported("inner upper bound is not affine in the summation index"))?;
        let cap = self.cap;
        let g = Expander::new(&mut *self.b, var, cap).expand(body, env)?;
        let big_a = g.em_sum(cap)?;
        let u = if g.is_polynomial() { lo } else { lo.max(1) + FIT_POINT - 1 };
        let count = (u - lo + 1) as usize;
        let s = self.b.prefix_numeric(node, var, lo, body, env, count)?.v;
        let constant = s - eval_all(&big_a, u)?;
        big_a.add(&AsymSeries::constant(constant)).compose_affine(&c, &a, cap)
    }
}

/// Every term of `s` at integer `x`.
fn eval_all(s: &AsymSeries, x: i64) -> Result<Real, EvalError> {
    let ctx = s.ctx;
    let xr = Real::from_i64(x, ctx);
    let lx = if s.max_log_power() > 0 {
        ln_rational(&Rational::from_int(x), ctx)?
    } else {
        Real::zero(ctx)
    };
    Ok(s.eval_range(&xr, &lx, i32::MIN, i32::MAX))
}
