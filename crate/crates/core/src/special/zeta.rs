//! ζ, η and Dirichlet β at integer arguments.
//!
//! Even ζ and odd β come from their Bernoulli/Euler closed forms. The other
//! parities go through the alternating series accelerated with the
//! Cohen–Rodriguez Villegas–Zagier weights, which are exact rationals here.

use num_bigint::BigInt;
use num_traits::Signed;

use super::numbers::{bernoulli, euler_number, factorial};
use super::SpecialError;
use crate::numerics::{const_log2, const_pi, PrecisionContext, Rational, Real};

/// Exact weights `w_k` and denominator `d` so that `Σ (-1)^k a_k ≈ Σ w_k a_k / d`.
fn cvz_weights(n: usize) -> (Vec<Rational>, Rational) {
    // d = T_n(3)
    let (mut t0, mut t1) = (BigInt::from(1), BigInt::from(3));
    for _ in 0..n {
        let t2 = &t1 * 6 - &t0;
        t0 = t1;
        t1 = t2;
    }
    let d = Rational::from_int(t0);
    let mut b = Rational::from_int(-1);
    let mut c = -d.clone();
    let mut w = Vec::with_capacity(n);
    let n_i = n as i64;
    for k in 0..n_i {
        c = &b - &c;
        w.push(c.clone());
        let num = Rational::from_int(2 * (k + n_i) * (k - n_i));
        let den = Rational::from_int((2 * k + 1) * (k + 1));
        b = &(&b * &num) / &den;
    }
    (w, d)
}

fn cvz_terms(ctx: PrecisionContext) -> usize {
    // error ~ (3+√8)^-n
    ((ctx.bits() + 16) as f64 * std::f64::consts::LN_2 / (3.0 + 8f64.sqrt()).ln()).ceil() as usize
}

/// Accelerated `Σ_{k≥0} (-1)^k a_k` for a totally monotone sequence `a`.
pub fn alternating_sum_accelerated(ctx: PrecisionContext, a: impl Fn(u64) -> Real) -> Real {
    let n = cvz_terms(ctx);
    let (w, d) = cvz_weights(n);
    let mut s = Real::zero(ctx);
    for (k, wk) in w.iter().enumerate() {
        s = s + a(k as u64).mul_rational(wk);
    }
    s.mul_rational(&d.recip().expect("T_n(3) > 0"))
}

fn inv_pow(base: u64, s: u32, ctx: PrecisionContext) -> Real {
    let den = BigInt::from(base).pow(s);
    Real::from_rational(&Rational::new(1, den).expect("positive"), ctx)
}

/// `η(s) = Σ (-1)^(k-1) k^-s` by the accelerated series, `s ≥ 1`.
pub fn eta_series(s: u32, ctx: PrecisionContext) -> Real {
    alternating_sum_accelerated(ctx, |k| inv_pow(k + 1, s, ctx))
}

/// `β(s) = Σ (-1)^k (2k+1)^-s` by the accelerated series, `s ≥ 1`.
pub fn beta_series(s: u32, ctx: PrecisionContext) -> Real {
    alternating_sum_accelerated(ctx, |k| inv_pow(2 * k + 1, s, ctx))
}

fn eta_factor(n: u32) -> Rational {
    // 1 - 2^(1-n)
    one_minus_pow2(1 - n as i64)
}

/// `ζ(n)` through `η(n)/(1 - 2^(1-n))`, any `n ≥ 2`.
pub fn zeta_series(n: u32, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n < 2 {
        return Err(SpecialError::InvalidArgument(format!("zeta({n}) is not defined here")));
    }
    Ok(eta_series(n, ctx).mul_rational(&eta_factor(n).recip().expect("n >= 2")))
}

/// `ζ(n) = |B_n| (2π)^n / (2 n!)` for even `n ≥ 2`.
pub fn zeta_even_closed(n: u32, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n < 2 || n % 2 == 1 {
        return Err(SpecialError::InvalidArgument(format!("closed form needs even n >= 2, got {n}")));
    }
    let b = bernoulli(n)?.abs();
    let two_pi = const_pi(ctx).mul_pow2(1);
    let coeff = &b / &Rational::from_int(factorial(n as u64) * 2);
    Ok(two_pi.powi(n as i64).mul_rational(&coeff))
}

pub fn zeta(n: i64, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n < 2 {
        return Err(SpecialError::InvalidArgument(format!("zeta({n}) needs n >= 2")));
    }
    let n = n as u32;
    if n % 2 == 0 && n <= super::numbers::TABLE_MAX {
        zeta_even_closed(n, ctx)
    } else {
        zeta_series(n, ctx)
    }
}

/// Dirichlet η; `η(1) = log 2`.
pub fn eta_const(n: i64, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    match n {
        n if n < 1 => Err(SpecialError::InvalidArgument(format!("eta({n}) needs n >= 1"))),
        1 => Ok(const_log2(ctx)),
        _ => Ok(zeta(n, ctx)?.mul_rational(&eta_factor(n as u32))),
    }
}

/// `β(2k+1) = |E_2k| π^(2k+1) / (2^(2k+2) (2k)!)`.
pub fn beta_odd_closed(n: u32, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n % 2 == 0 {
        return Err(SpecialError::InvalidArgument(format!("closed form needs odd n, got {n}")));
    }
    let e = euler_number(n - 1)?.abs();
    let coeff = Rational::new(e, factorial(n as u64 - 1)).expect("nonzero factorial");
    Ok(const_pi(ctx).powi(n as i64).mul_rational(&coeff).mul_pow2(-(n as i64) - 1))
}

pub fn beta_const(n: i64, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n < 1 {
        return Err(SpecialError::InvalidArgument(format!("beta({n}) needs n >= 1")));
    }
    let n = n as u32;
    if n % 2 == 1 && n <= super::numbers::TABLE_MAX + 1 {
        beta_odd_closed(n, ctx)
    } else {
        Ok(beta_series(n, ctx))
    }
}

/// Catalan's constant `G = β(2)`.
pub fn catalan(ctx: PrecisionContext) -> Real {
    beta_series(2, ctx)
}

/// `1 - 2^e`.
pub(crate) fn one_minus_pow2(e: i64) -> Rational {
    let p = Rational::from_int(2).pow(e).expect("two is nonzero");
    &Rational::one() - &p
}
