//! `Li_n(z)` for rational `|z| ≤ 3/4` by direct summation.


use super::SpecialError;
use crate::numerics::{PrecisionContext, Rational, Real};

pub fn polylog(n: i64, z: &Rational, ctx: PrecisionContext) -> Result<Real, SpecialError> {
    if n < 1 {
        return Err(SpecialError::InvalidArgument(format!("Li_{n} needs n >= 1")));
    }
    let limit = Rational::new(3, 4).expect("nonzero denominator");
    if z.abs() > limit {
        return Err(SpecialError::DomainError(format!("Li_{n}({z}) outside |z| <= 3/4")));
    }
    let zr = Real::from_rational(z, ctx);
    let az = z.abs().to_f64();
    let mut sum = Real::zero(ctx);
    if az == 0.0 {
        return Ok(sum);
    }
    // stop once |z|^(K+1)/(1-|z|) is below the working epsilon
    let eps = ctx.working_epsilon() * 1e-3;
    let mut power = zr.clone();
    let mut k: i64 = 1;
    loop {
        let kn = Real::from_i64(k, ctx).powi(n);
        sum = sum + &power / &kn;
        if az.powi(k as i32 + 1) / (1.0 - az) <= eps {
            break;
        }
        power = &power * &zr;
        k += 1;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{const_log2, const_pi, ln_rational};
    use crate::special::zeta;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    #[test]
    fn half_argument_closed_forms() {
        let c = ctx(30);
        let half = Rational::new(1, 2).unwrap();
        let l2 = const_log2(c);
        let pi2 = const_pi(c).square();
        assert!(polylog(1, &half, c).unwrap().approx_eq(&l2, 1e-35));
        let li2 = pi2.div_i64(12) - l2.square().mul_pow2(-1);
        assert!(polylog(2, &half, c).unwrap().approx_eq(&li2, 1e-35));
        let li3 = zeta(3, c).unwrap().mul_rational(&"7/8".parse().unwrap()) - (&pi2 * &l2).div_i64(12) + l2.powi(3).div_i64(6);
        assert!(polylog(3, &half, c).unwrap().approx_eq(&li3, 1e-35));
    }

    #[test]
    fn negative_argument() {
        // Li_1(-1/3) = -log(4/3)
        let c = ctx(30);
        let v = polylog(1, &"-1/3".parse().unwrap(), c).unwrap();
        let expect = -ln_rational(&"4/3".parse().unwrap(), c).unwrap();
        assert!(v.approx_eq(&expect, 1e-35));
    }

    #[test]
    fn domain_is_enforced() {
        let c = ctx(20);
        assert!(matches!(polylog(2, &"4/5".parse().unwrap(), c), Err(SpecialError::DomainError(_))));
        assert!(polylog(2, &"3/4".parse().unwrap(), c).is_ok());
        assert!(polylog(0, &"1/2".parse().unwrap(), c).is_err());
    }
}
