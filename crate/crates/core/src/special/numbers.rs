//! Bernoulli and Euler numbers, built once from their recurrences.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SpecialError;
use crate::numerics::Rational;

/// Largest index served by [`bernoulli`] and [`euler_number`].
pub const TABLE_MAX: u32 = 64;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{j=0..m} C(m+1, j) B_j = 0
        let mut b: Vec<Rational> = vec![Rational::one()];
        for m in 1..=TABLE_MAX as u64 {
            if m > 1 && m % 2 == 1 {
                b.push(Rational::zero());
                continue;
            }
            let mut s = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    s += &(bj * &Rational::from_int(binomial(m + 1, j as u64)));
                }
            }
            let bm = -(&s / &Rational::from_int(BigInt::from(m + 1)));
            b.push(bm);
        }
        b
    })
}

fn euler_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{k} C(m, 2k) E_{2k} = 0 for even m ≥ 2
        let mut e: Vec<BigInt> = vec![BigInt::one()];
        for m in 1..=TABLE_MAX as u64 {
            if m % 2 == 1 {
                e.push(BigInt::zero());
                continue;
            }
            let mut s = BigInt::zero();
            for k in (0..m).step_by(2) {
                s += binomial(m, k) * &e[k as usize];
            }
            e.push(-s);
        }
        e
    })
}

/// `B_m` with the `B_1 = -1/2` convention.
pub fn bernoulli(m: u32) -> Result<Rational, SpecialError> {
    bernoulli_table()
        .get(m as usize)
        .cloned()
        .ok_or(SpecialError::OutOfTable { index: m, max: TABLE_MAX })
}

pub fn euler_number(m: u32) -> Result<BigInt, SpecialError> {
    euler_table()
        .get(m as usize)
        .cloned()
        .ok_or(SpecialError::OutOfTable { index: m, max: TABLE_MAX })
}

/// Bernoulli polynomial `B_k(a) = Σ_j C(k,j) B_j a^(k-j)`.
pub fn bernoulli_poly(k: u32, a: &Rational) -> Result<Rational, SpecialError> {
    let mut acc = Rational::zero();
    let mut apow = Rational::one();
    // walk j downward so the power of a grows
    for j in (0..=k).rev() {
        let bj = bernoulli(j)?;
        if !bj.is_zero() {
            acc += &(&bj * &apow * Rational::from_int(binomial(k as u64, j as u64)));
        }
        apow = &apow * a;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn small_bernoulli_values() {
        assert_eq!(bernoulli(0).unwrap(), q("1"));
        assert_eq!(bernoulli(1).unwrap(), q("-1/2"));
        assert_eq!(bernoulli(2).unwrap(), q("1/6"));
        assert_eq!(bernoulli(12).unwrap(), q("-691/2730"));
        assert_eq!(bernoulli(13).unwrap(), q("0"));
        assert!(bernoulli(65).is_err());
    }

    #[test]
    fn akiyama_tanigawa_agrees() {
        // independent algorithm; produces B_1 = +1/2, so compare from index 2
        let n = 30usize;
        let mut a: Vec<Rational> = Vec::new();
        let mut out = Vec::new();
        for m in 0..=n {
            a.push(Rational::new(1, m as i64 + 1).unwrap());
            for j in (1..=m).rev() {
                a[j - 1] = Rational::from_int(j as i64) * (&a[j - 1] - &a[j]);
            }
            out.push(a[0].clone());
        }
        for (m, v) in out.iter().enumerate().skip(2) {
            assert_eq!(&bernoulli(m as u32).unwrap(), v, "B_{m}");
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0).unwrap(), BigInt::from(1));
        assert_eq!(euler_number(2).unwrap(), BigInt::from(-1));
        assert_eq!(euler_number(6).unwrap(), BigInt::from(-61));
        assert_eq!(euler_number(10).unwrap(), BigInt::from(-50521));
        assert_eq!(euler_number(7).unwrap(), BigInt::from(0));
    }

    #[test]
    fn secant_numbers_from_boustrophedon() {
        // Seidel's triangle gives the zigzag numbers; even ones are |E_2k|
        let n = 40;
        let mut row = vec![BigInt::one()];
        let mut zigzag = vec![BigInt::one()];
        for _ in 1..=n {
            let mut next = vec![BigInt::zero()];
            for v in row.iter().rev() {
                let last = next.last().unwrap().clone();
                next.push(last + v);
            }
            zigzag.push(next.last().unwrap().clone());
            row = next;
        }
        for k in (0..=n).step_by(2) {
            let e = euler_number(k as u32).unwrap();
            let sign = if k % 4 == 0 { 1 } else { -1 };
            assert_eq!(e, &zigzag[k] * sign, "E_{k}");
        }
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_eq!(bernoulli_poly(1, &q("1/4")).unwrap(), q("-1/4"));
        assert_eq!(bernoulli_poly(2, &q("1/2")).unwrap(), q("-1/12"));
        // B_k(1) = B_k for k ≥ 2
        assert_eq!(bernoulli_poly(10, &q("1")).unwrap(), bernoulli(10).unwrap());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }
}
