//! Polygamma functions at `q + k/4`.
//!
//! Base values at 1 and 1/2 are multiples of ζ(m+1). At 1/4 and 3/4 the
//! difference is a multiple of β(m+1) and the sum follows from the
//! duplication formula, so `ψ_m(1/4) + ψ_m(3/4) = 2^(m+1) ψ_m(1/2)`.
//! Integer offsets add an exact rational from `ψ_m(z+1) = ψ_m(z) + (-1)^m m!/z^(m+1)`.


use super::numbers::factorial;
use super::zeta::{beta_const, one_minus_pow2, zeta};
use super::SpecialError;
use crate::numerics::{PrecisionContext, Rational, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuarterBase {
    Quarter,
    Half,
    ThreeQuarters,
    One,
}

impl QuarterBase {
    pub fn from_rational(x: &Rational) -> Result<Self, SpecialError> {
        match (x.numer().to_string().as_str(), x.denom().to_string().as_str()) {
            ("1", "4") => Ok(QuarterBase::Quarter),
            ("1", "2") => Ok(QuarterBase::Half),
            ("3", "4") => Ok(QuarterBase::ThreeQuarters),
            ("1", "1") => Ok(QuarterBase::One),
            _ => Err(SpecialError::UnsupportedBasePoint(x.to_string())),
        }
    }

    pub fn as_rational(self) -> Rational {
        let (p, q) = match self {
            QuarterBase::Quarter => (1, 4),
            QuarterBase::Half => (1, 2),
            QuarterBase::ThreeQuarters => (3, 4),
            QuarterBase::One => (1, 1),
        };
        Rational::new(p, q).expect("nonzero denominator")
    }
}

fn sign_factorial(m: u32, extra: u32) -> Rational {
    // (-1)^(m+extra) m!
    let f = Rational::from_int(factorial(m as u64));
    if (m + extra) % 2 == 0 {
        f
    } else {
        -f
    }
}

/// `ψ_m` at one of the base points.
pub fn polygamma_base(order: u32, base: QuarterBase, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if order == 0 {
        return Err(SpecialError::InvalidArgument("digamma (order 0) is not supported".into()));
    }
    let m = order as i64;
    let c = sign_factorial(order, 1);
    let z = zeta(m + 1, ctx)?;
    let at_one = z.mul_rational(&c);
    // ψ_m(1/2) = (2^(m+1) - 1) ψ_m(1)
    let half_factor = -one_minus_pow2(m + 1);
    let at_half = at_one.mul_rational(&half_factor);
    Ok(match base {
        QuarterBase::One => at_one,
        QuarterBase::Half => at_half,
        QuarterBase::Quarter | QuarterBase::ThreeQuarters => {
            let sum = at_half.mul_pow2(m + 1);
            let diff = beta_const(m + 1, ctx)?.mul_rational(&c).mul_pow2(2 * (m + 1));
            let v = match base {
                QuarterBase::Quarter => sum + diff,
                _ => sum - diff,
            };
            v.mul_pow2(-1)
        }
    })
}

/// Exact `ψ_m(x + k) - ψ_m(x) = (-1)^m m! Σ_{i<k} (x+i)^-(m+1)`.
pub fn polygamma_offset_correction(order: u32, base: QuarterBase, offset: u64) -> Rational {
    let x = base.as_rational();
    let mut acc = Rational::zero();
    for i in 0..offset {
        let t = &x + &Rational::from_int(i as i64);
        acc += &t.pow(-(order as i64 + 1)).expect("positive base");
    }
    if acc.is_zero() {
        return acc;
    }
    acc * sign_factorial(order, 0)
}

/// The value split as (transcendental base, exact rational correction).
pub fn polygamma_parts(
    order: u32,
    base: QuarterBase,
    offset: u64,
    ctx: PrecisionContext,
) -> Result<(Real, Rational), SpecialError> {
    Ok((polygamma_base(order, base, ctx)?, polygamma_offset_correction(order, base, offset)))
}

/// `ψ_order(base + offset)`.
pub fn polygamma_quarter(order: u32, base: QuarterBase, offset: u64, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    let (b, corr) = polygamma_parts(order, base, offset, ctx)?;
    Ok(b + Real::from_rational(&corr, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::const_pi;
    use crate::special::{bernoulli, catalan};

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    /// ψ_m(y) = (-1)^(m+1) m! ζ(m+1, y), with the Hurwitz tail done by Euler–Maclaurin.
    fn hurwitz_oracle(order: u32, y: &Rational, c: PrecisionContext) -> Real {
        let s = order as i64 + 1;
        let k = 200i64;
        let mut acc = Real::zero(c);
        for i in 0..k {
            let t = y + &Rational::from_int(i);
            acc = acc + Real::from_rational(&t.pow(-s).unwrap(), c);
        }
        let yk = y + &Rational::from_int(k);
        let ykr = Real::from_rational(&yk, c);
        // y^(1-s)/(s-1) + y^-s/2 + Σ B_2j/(2j)! s(s+1)…(s+2j-2) y^(-s-2j+1)
        let mut tail = ykr.powi(1 - s).div_i64(s - 1) + ykr.powi(-s).mul_pow2(-1);
        for j in 1..=12i64 {
            let mut rising = Rational::one();
            for t in 0..(2 * j - 1) {
                rising = rising * Rational::from_int(s + t);
            }
            let coef = &(&bernoulli(2 * j as u32).unwrap() * &rising) / &Rational::from_int(factorial(2 * j as u64));
            tail = tail + ykr.powi(-s - 2 * j + 1).mul_rational(&coef);
        }
        (acc + tail).mul_rational(&sign_factorial(order, 1))
    }

    #[test]
    fn trigamma_quarter_is_pi_squared_plus_eight_catalan() {
        let c = ctx(25);
        let v = polygamma_quarter(1, QuarterBase::Quarter, 0, c).unwrap();
        let expect = const_pi(c).square() + catalan(c).mul_i64(8);
        assert!(v.approx_eq(&expect, 1e-30));
        let quarter = Rational::new(1, 4).unwrap();
        assert!(v.approx_eq(&hurwitz_oracle(1, &quarter, c), 1e-25));
    }

    #[test]
    fn base_points_match_hurwitz_oracle() {
        let c = ctx(25);
        for order in 1..=4u32 {
            for base in [QuarterBase::Quarter, QuarterBase::Half, QuarterBase::ThreeQuarters, QuarterBase::One] {
                let v = polygamma_quarter(order, base, 0, c).unwrap();
                let o = hurwitz_oracle(order, &base.as_rational(), c);
                assert!(v.approx_eq(&o, 1e-22 * o.to_f64().abs().max(1.0)), "order {order} base {base:?}");
            }
        }
    }

    #[test]
    fn trigamma_one_is_zeta_two() {
        let c = ctx(20);
        let v = polygamma_quarter(1, QuarterBase::One, 0, c).unwrap();
        assert!(v.approx_eq(&zeta(2, c).unwrap(), 1e-25));
    }

    #[test]
    fn offset_recurrence_is_exact() {
        for order in 1..=5u32 {
            for base in [QuarterBase::Quarter, QuarterBase::ThreeQuarters, QuarterBase::One] {
                for k in 0..6u64 {
                    let step = &polygamma_offset_correction(order, base, k + 1) - &polygamma_offset_correction(order, base, k);
                    let z = &base.as_rational() + &Rational::from_int(k as i64);
                    let expect = z.pow(-(order as i64) - 1).unwrap() * sign_factorial(order, 0);
                    assert_eq!(step, expect);
                }
            }
        }
    }

    #[test]
    fn unsupported_points() {
        assert!(QuarterBase::from_rational(&Rational::new(1, 3).unwrap()).is_err());
        assert!(polygamma_base(0, QuarterBase::Half, ctx(20)).is_err());
    }
}
