//! Exact generalized harmonic numbers and their odd and alternating variants.
//!
//! * `H(N,m) = Σ_{r≤N} r^-m`
//! * `h(N,m) = Σ_{r≤N} (2r-1)^-m`
//! * `Hbar`, `hbar`: the same sums weighted by `(-1)^(r-1)`
//!
//! Orders `m ≤ 0` are power sums, so `H(N,0) = N` and `h(N,-1) = N²`.

use std::collections::HashMap;

use thiserror::Error;

use crate::numerics::{PrecisionContext, Rational, Real};
use crate::special::{bernoulli, factorial, zeta, SpecialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarmonicError {
    #[error("expansion order {0} exceeds the maximum of 30")]
    OrderTooHigh(u32),
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HarmonicKind {
    /// `H`
    Plain,
    /// `h`
    Odd,
    /// `Hbar`
    Alt,
    /// `hbar`
    AltOdd,
}

impl HarmonicKind {
    pub const ALL: [HarmonicKind; 4] = [HarmonicKind::Plain, HarmonicKind::Odd, HarmonicKind::Alt, HarmonicKind::AltOdd];

    pub fn name(self) -> &'static str {
        match self {
            HarmonicKind::Plain => "H",
            HarmonicKind::Odd => "h",
            HarmonicKind::Alt => "Hbar",
            HarmonicKind::AltOdd => "hbar",
        }
    }

    /// The `r`-th summand.
    pub fn term(self, r: u64, m: i64) -> Rational {
        let base = match self {
            HarmonicKind::Plain | HarmonicKind::Alt => r,
            HarmonicKind::Odd | HarmonicKind::AltOdd => 2 * r - 1,
        };
        let t = Rational::inv_power(base, m);
        match self {
            HarmonicKind::Alt | HarmonicKind::AltOdd if r % 2 == 0 => -t,
            _ => t,
        }
    }

    pub fn eval(self, n: u64, m: i64) -> Rational {
        (1..=n).map(|r| self.term(r, m)).sum()
    }
}

pub fn harmonic(n: u64, m: i64) -> Rational {
    HarmonicKind::Plain.eval(n, m)
}

pub fn odd_harmonic(n: u64, m: i64) -> Rational {
    HarmonicKind::Odd.eval(n, m)
}

pub fn alt_harmonic(n: u64, m: i64) -> Rational {
    HarmonicKind::Alt.eval(n, m)
}

pub fn alt_odd_harmonic(n: u64, m: i64) -> Rational {
    HarmonicKind::AltOdd.eval(n, m)
}

/// `r` together with `a_r = r mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityIndex {
    pub r: u64,
    pub a_r: u8,
}

impl ParityIndex {
    pub fn new(r: u64) -> Self {
        ParityIndex { r, a_r: (r % 2) as u8 }
    }

    /// `(r - a_r)/2`, the number of even indices up to `r`.
    pub fn evens(self) -> u64 {
        (self.r - self.a_r as u64) / 2
    }

    /// `(r + a_r)/2`, the number of odd indices up to `r`.
    pub fn odds(self) -> u64 {
        (self.r + self.a_r as u64) / 2
    }
}

/// Prefix tables for all four kinds over a range of orders.
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    max_index: u64,
    tables: HashMap<(HarmonicKind, i64), Vec<Rational>>,
}

impl HarmonicCache {
    pub fn warm(max_index: u64, orders: impl IntoIterator<Item = i64>) -> Self {
        let mut tables = HashMap::new();
        for m in orders {
            for kind in HarmonicKind::ALL {
                let mut v = Vec::with_capacity(max_index as usize + 1);
                let mut acc = Rational::zero();
                v.push(acc.clone());
                for r in 1..=max_index {
                    acc += &kind.term(r, m);
                    v.push(acc.clone());
                }
                tables.insert((kind, m), v);
            }
        }
        HarmonicCache { max_index, tables }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    pub fn contains(&self, kind: HarmonicKind, n: u64, m: i64) -> bool {
        n <= self.max_index && self.tables.contains_key(&(kind, m))
    }

    /// Cached value, or direct summation outside the warmed range.
    pub fn get(&self, kind: HarmonicKind, n: u64, m: i64) -> Rational {
        match self.tables.get(&(kind, m)) {
            Some(t) if (n as usize) < t.len() => t[n as usize].clone(),
            _ => kind.eval(n, m),
        }
    }

    pub fn orders(&self) -> Vec<i64> {
        let mut o: Vec<i64> = self.tables.keys().map(|(_, m)| *m).collect();
        o.sort_unstable();
        o.dedup();
        o
    }
}

/// `H(2N,m) - 2^-m H(N,m)`, which equals `h(N,m)`.
pub fn odd_from_plain(n: u64, m: i64) -> Rational {
    let half = Rational::from_int(2).pow(-m).expect("two is nonzero");
    &harmonic(2 * n, m) - &(&half * &harmonic(n, m))
}

/// `H(2N-1,m) - 2^-m H(N-1,m)`, the odd-length variant; needs `N ≥ 1`.
pub fn odd_from_plain_shifted(n: u64, m: i64) -> Option<Rational> {
    if n == 0 {
        return None;
    }
    let half = Rational::from_int(2).pow(-m).expect("two is nonzero");
    Some(&harmonic(2 * n - 1, m) - &(&half * &harmonic(n - 1, m)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `Hbar(2N,m)` or `Hbar(2N-1,m)` from plain and odd harmonic numbers.
pub fn alt_split(n: u64, m: i64, parity: Parity) -> Result<Rational, HarmonicError> {
    if n == 0 {
        return Err(HarmonicError::InvalidArgument("alt_split needs N >= 1".into()));
    }
    let half = Rational::from_int(2).pow(-m).expect("two is nonzero");
    let plain = match parity {
        Parity::Even => harmonic(n, m),
        Parity::Odd => harmonic(n - 1, m),
    };
    Ok(&odd_harmonic(n, m) - &(&half * &plain))
}

/// Euler–Maclaurin value of `H(N,m)` for `m ≥ 2` with `K` Bernoulli terms.
///
/// Returns the value and the magnitude of the first omitted term, which
/// bounds the truncation error.
pub fn asymptotic_harmonic(n: u64, m: i64, k: u32, ctx: PrecisionContext) -> Result<(Real, f64), HarmonicError> {
    if k > 30 {
        return Err(HarmonicError::OrderTooHigh(k));
    }
    if n < 2 || m < 2 {
        return Err(HarmonicError::InvalidArgument(format!(
            "asymptotic expansion needs N >= 2 and m >= 2, got N={n}, m={m}"
        )));
    }
    let nr = Real::from_i64(n as i64, ctx);
    let inv = nr.recip();
    // Σ_{r>N} r^-m ~ N^(1-m)/(m-1) - N^-m/2 + Σ_j B_2j/(2j)! (m)_(2j-1) N^(-m-2j+1)
    let mut tail = inv.powi(m - 1).div_i64(m - 1) - inv.powi(m).mul_pow2(-1);
    let term = |j: i64| -> Result<Real, HarmonicError> {
        let mut rising = Rational::one();
        for t in 0..(2 * j - 1) {
            rising = rising * Rational::from_int(m + t);
        }
        let coef = &(&bernoulli(2 * j as u32)? * &rising) / &Rational::from_int(factorial(2 * j as u64));
        Ok(inv.powi(m + 2 * j - 1).mul_rational(&coef))
    };
    for j in 1..=k as i64 {
        tail = tail + term(j)?;
    }
    let omitted = term(k as i64 + 1)?.abs().to_f64();
    Ok((zeta(m, ctx)? - tail, omitted))
}

/// `asymptotic_harmonic` without the bound.
pub fn asymptotic_h(n: u64, m: i64, k: u32, ctx: PrecisionContext) -> Result<Real, HarmonicError> {
    asymptotic_harmonic(n, m, k, ctx).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(harmonic(3, 1), q("11/6"));
        assert_eq!(harmonic(0, 5), q("0"));
        assert_eq!(harmonic(4, 2), q("205/144"));
        assert_eq!(odd_harmonic(2, 1), q("4/3"));
        assert_eq!(odd_harmonic(1, 7), q("1"));
        assert_eq!(odd_harmonic(3, 2), q("259/225"));
        assert_eq!(alt_harmonic(3, 1), q("5/6"));
        assert_eq!(alt_odd_harmonic(2, 2), q("8/9"));
        assert_eq!(alt_harmonic(1, 9), q("1"));
    }

    #[test]
    fn power_sums_at_nonpositive_orders() {
        for n in 0..20u64 {
            let nn = n as i64;
            assert_eq!(harmonic(n, 0), Rational::from_int(nn));
            assert_eq!(harmonic(n, -1), Rational::from_int(nn * (nn + 1) / 2));
            assert_eq!(harmonic(n, -2), Rational::from_int(nn * (nn + 1) * (2 * nn + 1) / 6));
            assert_eq!(odd_harmonic(n, 0), Rational::from_int(nn));
            assert_eq!(odd_harmonic(n, -1), Rational::from_int(nn * nn));
        }
    }

    #[test]
    fn cache_increments() {
        let cache = HarmonicCache::warm(60, -2..=6);
        for m in -2..=6 {
            for n in 1..=60u64 {
                let d = &cache.get(HarmonicKind::Plain, n, m) - &cache.get(HarmonicKind::Plain, n - 1, m);
                assert_eq!(d, Rational::inv_power(n, m));
                let d = &cache.get(HarmonicKind::Odd, n, m) - &cache.get(HarmonicKind::Odd, n - 1, m);
                assert_eq!(d, Rational::inv_power(2 * n - 1, m));
            }
        }
        assert_eq!(cache.get(HarmonicKind::Plain, 70, 2), harmonic(70, 2));
        assert_eq!(cache.orders(), (-2..=6).collect::<Vec<_>>());
    }

    #[test]
    fn parity_split_of_plain_sums() {
        let cache = HarmonicCache::warm(200, [-1, 1, 2, 3]);
        for r in 1..=200u64 {
            let p = ParityIndex::new(r);
            assert_eq!(p.a_r as u64, r % 2);
            for m in [-1i64, 1, 2, 3] {
                let half = Rational::from_int(2).pow(-m).unwrap();
                let split = &(&half * &cache.get(HarmonicKind::Plain, p.evens(), m)) + &cache.get(HarmonicKind::Odd, p.odds(), m);
                assert_eq!(split, cache.get(HarmonicKind::Plain, r, m), "r={r} m={m}");
            }
        }
    }

    #[test]
    fn odd_from_plain_matches() {
        assert_eq!(odd_from_plain(2, 1), q("4/3"));
        assert_eq!(odd_from_plain(0, 1), q("0"));
        assert_eq!(odd_from_plain_shifted(3, 2).unwrap(), q("259/225"));
        for n in 0..=25u64 {
            for m in -2..=6 {
                assert_eq!(odd_from_plain(n, m), odd_harmonic(n, m));
                if n >= 1 {
                    assert_eq!(odd_from_plain_shifted(n, m).unwrap(), odd_harmonic(n, m));
                }
            }
        }
        // the same reduction over the full range, read from prefix tables
        let cache = HarmonicCache::warm(400, -2..=6);
        for n in 1..=200u64 {
            for m in -2..=6 {
                let half = Rational::from_int(2).pow(-m).unwrap();
                let h = cache.get(HarmonicKind::Odd, n, m);
                let even = &cache.get(HarmonicKind::Plain, 2 * n, m) - &(&half * &cache.get(HarmonicKind::Plain, n, m));
                let odd = &cache.get(HarmonicKind::Plain, 2 * n - 1, m) - &(&half * &cache.get(HarmonicKind::Plain, n - 1, m));
                assert_eq!(even, h);
                assert_eq!(odd, h);
            }
        }
    }

    #[test]
    fn alternating_split() {
        assert_eq!(alt_split(1, 1, Parity::Even).unwrap(), q("1/2"));
        assert_eq!(alt_split(1, 4, Parity::Odd).unwrap(), q("1"));
        assert_eq!(alt_split(2, 2, Parity::Even).unwrap(), q("115/144"));
        assert!(alt_split(0, 2, Parity::Even).is_err());
        for n in 1..=20u64 {
            for m in -2..=5 {
                assert_eq!(alt_split(n, m, Parity::Even).unwrap(), alt_harmonic(2 * n, m));
                assert_eq!(alt_split(n, m, Parity::Odd).unwrap(), alt_harmonic(2 * n - 1, m));
            }
        }
        let cache = HarmonicCache::warm(200, -2..=5);
        for n in 1..=100u64 {
            for m in -2..=5 {
                let half = Rational::from_int(2).pow(-m).unwrap();
                let h = cache.get(HarmonicKind::Odd, n, m);
                let even = &h - &(&half * &cache.get(HarmonicKind::Plain, n, m));
                let odd = &h - &(&half * &cache.get(HarmonicKind::Plain, n - 1, m));
                assert_eq!(even, cache.get(HarmonicKind::Alt, 2 * n, m));
                assert_eq!(odd, cache.get(HarmonicKind::Alt, 2 * n - 1, m));
            }
        }
    }

    #[test]
    fn asymptotic_expansion() {
        let c = PrecisionContext::new(30).unwrap();
        let exact = Real::from_rational(&harmonic(100, 2), c);
        let (v, bound) = asymptotic_harmonic(100, 2, 8, c).unwrap();
        let err = (&v - &exact).abs().to_f64();
        assert!(err <= 1e-18, "err {err}");
        assert!(err <= bound * 1.01 + 1e-35);

        let exact = Real::from_rational(&harmonic(10, 2), c);
        let e0 = (asymptotic_h(10, 2, 0, c).unwrap() - &exact).abs();
        let e4 = (asymptotic_h(10, 2, 4, c).unwrap() - &exact).abs();
        assert!(e4 < e0);

        assert!(matches!(asymptotic_harmonic(100, 2, 31, c), Err(HarmonicError::OrderTooHigh(31))));
        assert!(asymptotic_harmonic(100, 1, 4, c).is_err());
    }
}
