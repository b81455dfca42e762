//! Truncated asymptotic series `Σ c_{j,k} x^-j (log x)^k` in a large variable `x`.
//!
//! `jmax` is the largest `j` whose coefficients are complete; anything above
//! it has been dropped. Exact finite expressions carry `jmax = JINF`.

use std::collections::BTreeMap;

use crate::numerics::{ln_rational, PrecisionContext, Rational, Real};
use crate::special::{bernoulli, factorial};
use crate::sumlang::EvalError;

pub(crate) const JINF: i32 = i32::MAX / 4;

#[derive(Clone, Debug)]
pub(crate) struct AsymSeries {
    pub terms: BTreeMap<(i32, u32), Real>,
    pub jmax: i32,
    pub ctx: PrecisionContext,
}

fn clamp(j: i64) -> i32 {
    j.clamp(-(JINF as i64), JINF as i64) as i32
}

/// Accumulates coefficients and drops those lost to cancellation.
struct Acc {
    map: BTreeMap<(i32, u32), (Real, i64)>,
    drop_bits: i64,
}

impl Acc {
    fn new(ctx: PrecisionContext) -> Self {
        Acc { map: BTreeMap::new(), drop_bits: ctx.bits() as i64 - 40 }
    }

    fn push(&mut self, key: (i32, u32), v: Real) {
        let Some(scale) = v.ilog2() else { return };
        match self.map.get_mut(&key) {
            Some((acc, s)) => {
                *acc = &*acc + &v;
                *s = (*s).max(scale);
            }
            None => {
                self.map.insert(key, (v, scale));
            }
        }
    }

    fn finish(self, jmax: i32, ctx: PrecisionContext) -> AsymSeries {
        let drop_bits = self.drop_bits;
        let terms = self
            .map
            .into_iter()
            .filter(|((j, _), (v, s))| *j <= jmax && v.ilog2().is_some_and(|l| l > s - drop_bits))
            .map(|(k, (v, _))| (k, v))
            .collect();
        AsymSeries { terms, jmax, ctx }
    }
}

impl AsymSeries {
    pub fn zero(ctx: PrecisionContext) -> Self {
        AsymSeries { terms: BTreeMap::new(), jmax: JINF, ctx }
    }

    pub fn monomial(j: i32, k: u32, c: Real) -> Self {
        let ctx = c.ctx();
        let mut s = Self::zero(ctx);
        if !c.is_zero() {
            s.terms.insert((j, k), c);
        }
        s
    }

    pub fn constant(c: Real) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `x`
    pub fn var(ctx: PrecisionContext) -> Self {
        Self::monomial(-1, 0, Real::one(ctx))
    }

    pub fn lead(&self) -> Option<i32> {
        self.terms.keys().next().map(|(j, _)| *j)
    }

    fn lead_or_next(&self) -> i64 {
        self.lead().map_or(self.jmax as i64 + 1, |j| j as i64)
    }

    pub fn is_exact(&self) -> bool {
        self.jmax >= JINF
    }

    /// Exact and free of negative powers and logarithms.
    pub fn is_polynomial(&self) -> bool {
        self.is_exact() && self.terms.keys().all(|(j, k)| *j <= 0 && *k == 0)
    }

    pub fn max_log_power(&self) -> u32 {
        self.terms.keys().map(|(_, k)| *k).max().unwrap_or(0)
    }

    pub fn truncated(mut self, cap: i32) -> Self {
        self.jmax = self.jmax.min(cap);
        let jm = self.jmax;
        self.terms.retain(|(j, _), _| *j <= jm);
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let jmax = self.jmax.min(o.jmax);
        let mut acc = Acc::new(self.ctx);
        for (k, v) in self.terms.iter().chain(o.terms.iter()) {
            if k.0 <= jmax {
                acc.push(*k, v.clone());
            }
        }
        acc.finish(jmax, self.ctx)
    }

    pub fn neg(&self) -> Self {
        AsymSeries { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(), jmax: self.jmax, ctx: self.ctx }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Real) -> Self {
        if c.is_zero() {
            return AsymSeries { terms: BTreeMap::new(), jmax: self.jmax, ctx: self.ctx };
        }
        AsymSeries { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(), jmax: self.jmax, ctx: self.ctx }
    }

    pub fn scale_rat(&self, q: &Rational) -> Self {
        self.scale(&Real::from_rational(q, self.ctx))
    }

    /// Multiplies by `x^-shift`.
    pub fn shift(&self, shift: i32) -> Self {
        let jmax = if self.is_exact() { JINF } else { clamp(self.jmax as i64 + shift as i64) };
        AsymSeries {
            terms: self.terms.iter().map(|((j, k), v)| ((j + shift, *k), v.clone())).collect(),
            jmax,
            ctx: self.ctx,
        }
    }

    pub fn mul(&self, o: &Self, cap: i32) -> Self {
        let la = self.lead_or_next();
        let lb = o.lead_or_next();
        let jmax = clamp((la + o.jmax as i64).min(lb + self.jmax as i64)).min(if self.is_exact() && o.is_exact() {
            JINF
        } else {
            cap
        });
        let limit = jmax.min(cap);
        let mut acc = Acc::new(self.ctx);
        for ((ja, ka), va) in &self.terms {
            for ((jb, kb), vb) in &o.terms {
                let j = ja + jb;
                if j <= limit {
                    acc.push((j, ka + kb), va * vb);
                }
            }
        }
        // exact products stay exact only if nothing was cut
        let dropped = self.terms.keys().any(|(ja, _)| o.terms.keys().any(|(jb, _)| ja + jb > limit));
        let jmax = if dropped { jmax.min(cap) } else { jmax };
        acc.finish(jmax, self.ctx)
    }

    pub fn inverse(&self, cap: i32) -> Result<Self, EvalError> {
        let Some(((j0, k0), c0)) = self.terms.iter().next() else {
            return Err(EvalError::DivisionByZero);
        };
        let j0 = *j0;
        if *k0 != 0 || self.terms.keys().filter(|(j, _)| *j == j0).count() > 1 {
            return Err(EvalError::UnsupportedTermShape("division by a leading logarithm".into()));
        }
        let inv_c0 = c0.recip();
        let mut u = AsymSeries::zero(self.ctx);
        for ((j, k), v) in self.terms.iter().skip(1) {
            u.terms.insert((j - j0, *k), v * &inv_c0);
        }
        u.jmax = if self.is_exact() { JINF } else { clamp(self.jmax as i64 - j0 as i64) };
        let cap_u = clamp((cap as i64 + j0 as i64).min(u.jmax as i64));
        let neg_u = u.neg();
        let mut acc = AsymSeries::constant(Real::one(self.ctx));
        if !u.terms.is_empty() {
            let mut pw = AsymSeries::constant(Real::one(self.ctx));
            loop {
                pw = pw.mul(&neg_u, cap_u);
                if pw.terms.is_empty() || pw.lead_or_next() > cap_u as i64 {
                    break;
                }
                acc = acc.add(&pw);
            }
            acc = acc.truncated(cap_u);
        } else if !u.is_exact() {
            acc = acc.truncated(cap_u);
        }
        Ok(acc.shift(-j0).scale(&inv_c0))
    }

    pub fn powi(&self, e: i64, cap: i32) -> Result<Self, EvalError> {
        if e < 0 {
            return self.inverse(cap)?.powi(-e, cap);
        }
        let mut acc = AsymSeries::constant(Real::one(self.ctx));
        let mut sq = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq, cap);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq, cap);
            }
        }
        Ok(acc)
    }

    /// Substitutes `x -> c x + a` with `c > 0`.
    pub fn compose_affine(&self, c: &Rational, a: &Rational, cap: i32) -> Result<Self, EvalError> {
        if c.signum() <= 0 {
            return Err(EvalError::UnsupportedTermShape("argument must grow with the summation index".into()));
        }
        if *c == 1 && a.is_zero() {
            return Ok(self.clone());
        }
        let ctx = self.ctx;
        let t = a.checked_div(c)?;
        let limit = cap.min(self.jmax);
        // log(c x + a) = log c + log x + Σ (-1)^(n+1) t^n x^-n / n
        let mut log_y = AsymSeries::monomial(0, 1, Real::one(ctx));
        if *c != 1 {
            log_y = log_y.add(&AsymSeries::constant(ln_rational(c, ctx)?));
        }
        if !t.is_zero() {
            let mut tn = Rational::one();
            for n in 1..=(limit.max(0) as i64 + 1) {
                tn = &tn * &t;
                let mut coef = &tn / &Rational::from_int(n);
                if n % 2 == 0 {
                    coef = -coef;
                }
                log_y.terms.insert((n as i32, 0), Real::from_rational(&coef, ctx));
            }
            log_y.jmax = limit.max(0) + 1;
        }
        let mut log_pows: Vec<AsymSeries> = vec![AsymSeries::constant(Real::one(ctx))];
        let mut out = AsymSeries::zero(ctx);
        let mut all_exact = true;
        for ((j, k), v) in &self.terms {
            if *j > limit {
                all_exact = false;
                continue;
            }
            while log_pows.len() <= *k as usize {
                let next = log_pows.last().expect("nonempty").mul(&log_y, limit);
                log_pows.push(next);
            }
            // (c x + a)^-j = c^-j x^-j (1 + t/x)^-j
            let mut binom = AsymSeries::zero(ctx);
            let mut coef = Rational::one();
            let mut n: i64 = 0;
            let mut finite = true;
            loop {
                if *j as i64 + n > limit as i64 {
                    finite = coef.is_zero();
                    break;
                }
                if coef.is_zero() {
                    break;
                }
                binom.terms.insert((n as i32, 0), Real::from_rational(&coef, ctx));
                if t.is_zero() {
                    break;
                }
                // C(-j, n+1) t^(n+1) from C(-j, n) t^n
                coef = &(&coef * &Rational::from_int(-(*j as i64) - n)) * &t;
                coef = &coef / &Rational::from_int(n + 1);
                n += 1;
            }
            if !finite {
                all_exact = false;
            }
            binom.jmax = if finite { JINF } else { clamp(limit as i64 - *j as i64) };
            let scale = Real::from_rational(&c.pow(-(*j as i64))?, ctx) * v;
            let mut piece = binom.shift(*j).scale(&scale);
            if *k > 0 {
                if !log_pows[*k as usize].is_exact() {
                    all_exact = false;
                }
                piece = piece.mul(&log_pows[*k as usize], limit);
            }
            out = out.add(&piece.truncated(if all_exact { JINF } else { limit }));
        }
        let jmax = if self.is_exact() && all_exact { JINF } else { limit };
        Ok(AsymSeries { jmax, ..out }.truncated(jmax))
    }

    pub fn derivative(&self) -> Self {
        let mut acc = Acc::new(self.ctx);
        for ((j, k), v) in &self.terms {
            if *j != 0 {
                acc.push((j + 1, *k), v.mul_i64(-(*j as i64)));
            }
            if *k > 0 {
                acc.push((j + 1, k - 1), v.mul_i64(*k as i64));
            }
        }
        let jmax = if self.is_exact() { JINF } else { self.jmax + 1 };
        acc.finish(jmax, self.ctx)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        fn anti(j: i32, k: u32, c: Rational, out: &mut Vec<((i32, u32), Rational)>) {
            if j == 1 {
                out.push(((0, k + 1), &c / &Rational::from_int(k as i64 + 1)));
                return;
            }
            // ∫ x^(p-1) L^k = x^p L^k / p - (k/p) ∫ x^(p-1) L^(k-1),  p = 1 - j
            let p = Rational::from_int(1 - j as i64);
            out.push(((j - 1, k), &c / &p));
            if k > 0 {
                let next = -(&(&c * &Rational::from_int(k as i64)) / &p);
                anti(j, k - 1, next, out);
            }
        }
        let mut acc = Acc::new(self.ctx);
        for ((j, k), v) in &self.terms {
            let mut parts = Vec::new();
            anti(*j, *k, Rational::one(), &mut parts);
            for (key, q) in parts {
                acc.push(key, v.mul_rational(&q));
            }
        }
        let jmax = if self.is_exact() { JINF } else { self.jmax - 1 };
        acc.finish(jmax, self.ctx)
    }

    /// `A` with `Σ_{s≤y} f(s) = C + A(y)`: Euler–Maclaurin without the constant.
    pub fn em_sum(&self, cap: i32) -> Result<Self, EvalError> {
        let target = if self.is_exact() { cap } else { (self.jmax - 1).min(cap) };
        let lead = self.lead_or_next();
        let mut out = self.antiderivative().add(&self.scale_rat(&Rational::new(1, 2)?));
        let poly = self.is_polynomial();
        let mut d = self.derivative();
        let mut i: u32 = 1;
        while !d.terms.is_empty() && lead + 2 * i as i64 - 1 <= target as i64 {
            if 2 * i > crate::special::TABLE_MAX {
                return Err(EvalError::TooLarge("Euler-Maclaurin order exceeds the Bernoulli table".into()));
            }
            let coef = &bernoulli(2 * i)? / &Rational::from_int(factorial(2 * i as u64));
            let piece = d.scale_rat(&coef);
            out = out.add(&if poly { piece } else { piece.truncated(target) });
            d = d.derivative().derivative();
            i += 1;
        }
        if poly && d.terms.is_empty() {
            return Ok(out);
        }
        Ok(out.truncated(target))
    }

    /// `Σ_{k≥0} (-1)^k f(x+k)` as an expansion in `x` (Euler–Boole).
    pub fn euler_boole(&self, cap: i32) -> Result<Self, EvalError> {
        let target = if self.is_exact() { cap } else { self.jmax.min(cap) };
        let lead = self.lead_or_next();
        let mut out = self.scale_rat(&Rational::new(1, 2)?);
        let mut d = self.derivative();
        let mut n: u32 = 1;
        while !d.terms.is_empty() && lead + 2 * n as i64 - 1 <= target as i64 {
            if 2 * n > crate::special::TABLE_MAX {
                return Err(EvalError::TooLarge("Euler-Boole order exceeds the Bernoulli table".into()));
            }
            let two = Rational::from_int(2).pow(2 * n as i64)?;
            let coef = &(&(&two - &Rational::one()) * &bernoulli(2 * n)?) / &Rational::from_int(factorial(2 * n as u64));
            out = out.sub(&d.scale_rat(&coef).truncated(target));
            d = d.derivative().derivative();
            n += 1;
        }
        Ok(out.truncated(target))
    }

    fn powers(x: &Real, j: i32) -> Real {
        x.powi(-(j as i64))
    }

    /// Sum of the terms with `j` in `lo..=hi` at `x`, given `log x`.
    pub fn eval_range(&self, x: &Real, log_x: &Real, lo: i32, hi: i32) -> Real {
        let mut total = Real::zero(self.ctx);
        for ((j, k), v) in self.terms.range((lo, 0)..=(hi, u32::MAX)) {
            total = total + v * &Self::powers(x, *j) * log_x.powi(*k as i64);
        }
        total
    }

    /// Σ |terms| over `j` in `lo..=hi`.
    pub fn abs_range(&self, x: &Real, log_x: &Real, lo: i32, hi: i32) -> f64 {
        self.terms
            .range((lo, 0)..=(hi, u32::MAX))
            .map(|((j, k), v)| (v * &Self::powers(x, *j) * log_x.powi(*k as i64)).abs().to_f64())
            .sum()
    }
}
