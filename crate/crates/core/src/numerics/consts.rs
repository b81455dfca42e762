//! π, log 2 and logarithms of rationals from arctangent-type series in fixed point.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{NumericsError, PrecisionContext, Rational, Real};

const EXTRA_BITS: u64 = 32;

fn fixed_to_real(v: BigInt, bits: u64, ctx: PrecisionContext) -> Real {
    Real::from_bigint(v, ctx).mul_pow2(-(bits as i64))
}

/// `Σ ± u^(2n+1)/(2n+1)` for `u = p/q`, scaled by `2^bits`.
fn arctan_series_fixed(p: &BigInt, q: &BigInt, bits: u64, alternating: bool) -> BigInt {
    let p2 = p * p;
    let q2 = q * q;
    let mut power = (p << bits) / q;
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * n + 1);
        if alternating && n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power = power * &p2 / &q2;
        n += 1;
    }
    sum
}

fn atan_inv_fixed(k: u64, bits: u64) -> BigInt {
    arctan_series_fixed(&BigInt::one(), &BigInt::from(k), bits, true)
}

fn atanh_inv_fixed(k: u64, bits: u64) -> BigInt {
    arctan_series_fixed(&BigInt::one(), &BigInt::from(k), bits, false)
}

fn pi_fixed(bits: u64) -> BigInt {
    // Machin: π/4 = 4 atan(1/5) − atan(1/239)
    (atan_inv_fixed(5, bits) * 16) - (atan_inv_fixed(239, bits) * 4)
}

fn log2_fixed(bits: u64) -> BigInt {
    atanh_inv_fixed(3, bits) * 2
}

/// `atan(1/k)`.
pub fn atan_inv(k: u64, ctx: PrecisionContext) -> Real {
    let bits = ctx.bits() + EXTRA_BITS;
    fixed_to_real(atan_inv_fixed(k, bits), bits, ctx)
}

/// `atanh(1/k)` for `k ≥ 2`.
pub fn atanh_inv(k: u64, ctx: PrecisionContext) -> Real {
    assert!(k >= 2, "atanh(1/k) needs k >= 2");
    let bits = ctx.bits() + EXTRA_BITS;
    fixed_to_real(atanh_inv_fixed(k, bits), bits, ctx)
}

pub fn const_pi(ctx: PrecisionContext) -> Real {
    let bits = ctx.bits() + EXTRA_BITS;
    fixed_to_real(pi_fixed(bits), bits, ctx)
}

pub fn const_log2(ctx: PrecisionContext) -> Real {
    let bits = ctx.bits() + EXTRA_BITS;
    fixed_to_real(log2_fixed(bits), bits, ctx)
}

/// Natural logarithm of a positive rational.
///
/// Splits off a power of two so the remaining factor `y` sits in `[2/3, 4/3]`,
/// then uses `log y = 2 atanh((y-1)/(y+1))`.
pub fn ln_rational(q: &Rational, ctx: PrecisionContext) -> Result<Real, NumericsError> {
    if q.signum() <= 0 {
        return Err(NumericsError::LogDomain);
    }
    let mut e = q.numer().bits() as i64 - q.denom().bits() as i64;
    let two = Rational::from_int(2);
    let mut y = q * &two.pow(-e)?;
    let hi = Rational::new(4, 3)?;
    let lo = Rational::new(2, 3)?;
    while y > hi {
        y = &y / &two;
        e += 1;
    }
    while y < lo {
        y = &y * &two;
        e -= 1;
    }
    let u = (&y - &Rational::one()).checked_div(&(&y + &Rational::one()))?;
    let bits = ctx.bits() + EXTRA_BITS + 64 - (e.unsigned_abs().leading_zeros() as u64);
    let mut acc: BigInt = arctan_series_fixed(u.numer(), u.denom(), bits, false) * BigInt::from(2);
    if e != 0 {
        acc += log2_fixed(bits) * BigInt::from(e);
    }
    if acc.is_negative() && acc.abs() < BigInt::one() {
        acc = BigInt::zero();
    }
    Ok(fixed_to_real(acc, bits, ctx))
}
