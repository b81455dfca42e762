//! The double-sum rearrangement and its corollaries, by literal loops.
//!
//! The loops run over integers: every input is first written over the least
//! common denominator of the data, so the sums need no gcd. Indices in
//! comments are 1-based; the arrays are 0-based.

use harmid_core::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Numerators of `xs` over their least common denominator.
fn common<'a>(xs: impl Iterator<Item = &'a Rational> + Clone) -> (Vec<BigInt>, BigInt) {
    let den = xs.clone().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let nums = xs.map(|q| q.numer() * (&den / q.denom())).collect();
    (nums, den)
}

fn ratio(num: BigInt, den: &BigInt) -> Rational {
    Rational::new(num, den.clone()).expect("nonzero denominator")
}

/// Both sides of
/// `Σ_{r≤N} Σ_{s≤r} (f_rs + f_sr) = Σ_r f_rr + Σ_r Σ_s f_sr`.
pub fn master_sides(f: &[Vec<Rational>]) -> (Rational, Rational) {
    let n = f.len();
    let (flat, den) = common(f.iter().flatten());
    let a = |r: usize, s: usize| &flat[r * n + s];
    let mut lhs = BigInt::zero();
    for r in 0..n {
        for s in 0..=r {
            lhs += a(r, s);
            lhs += a(s, r);
        }
    }
    let mut rhs = BigInt::zero();
    for r in 0..n {
        rhs += a(r, r);
    }
    for r in 0..n {
        for s in 0..n {
            rhs += a(s, r);
        }
    }
    (ratio(lhs, &den), ratio(rhs, &den))
}

/// Exact check of the master identity for a square matrix.
pub fn check_master_identity(f: &[Vec<Rational>]) -> bool {
    assert!(f.iter().all(|row| row.len() == f.len()), "matrix must be square");
    let (l, r) = master_sides(f);
    l == r
}

/// Symmetric summand `f_rs = g_r h_s + g_s h_r`:
/// `2 Σ_r Σ_{s≤r} f_rs = Σ_r f_rr + Σ_r Σ_s f_rs`.
pub fn corollary_symmetric(g: &[Rational], h: &[Rational]) -> (Rational, Rational) {
    let n = g.len();
    let (a, da) = common(g.iter());
    let (b, db) = common(h.iter());
    // f over the denominator da*db
    let p: Vec<Vec<BigInt>> = (0..n).map(|r| (0..n).map(|s| &a[r] * &b[s]).collect()).collect();
    let f = |r: usize, s: usize| &p[r][s] + &p[s][r];
    let mut lhs = BigInt::zero();
    for r in 0..n {
        for s in 0..=r {
            lhs += f(r, s);
        }
    }
    lhs *= 2;
    let mut rhs = BigInt::zero();
    for r in 0..n {
        rhs += f(r, r);
        for s in 0..n {
            rhs += f(r, s);
        }
    }
    let den = &da * &db;
    (ratio(lhs, &den), ratio(rhs, &den))
}

/// `Σ_r g_r Σ_{s≤r} h_s + Σ_r h_r Σ_{s≤r} g_s = Σ_r g_r h_r + (Σ g)(Σ h)`.
pub fn corollary_factorable(g: &[Rational], h: &[Rational]) -> (Rational, Rational) {
    let n = g.len();
    let (a, da) = common(g.iter());
    let (b, db) = common(h.iter());
    let mut lhs = BigInt::zero();
    for r in 0..n {
        let mut inner_b = BigInt::zero();
        let mut inner_a = BigInt::zero();
        for s in 0..=r {
            inner_b += &b[s];
            inner_a += &a[s];
        }
        lhs += &a[r] * &inner_b;
        lhs += &b[r] * &inner_a;
    }
    let mut diag = BigInt::zero();
    let (mut sa, mut sb) = (BigInt::zero(), BigInt::zero());
    for r in 0..n {
        diag += &a[r] * &b[r];
        sa += &a[r];
        sb += &b[r];
    }
    let den = &da * &db;
    (ratio(lhs, &den), ratio(diag + sa * sb, &den))
}

/// `2 Σ_r g_r Σ_{s≤r} g_s = Σ_r g_r² + (Σ g)²`.
pub fn corollary_square(g: &[Rational]) -> (Rational, Rational) {
    let n = g.len();
    let (a, d) = common(g.iter());
    let mut lhs = BigInt::zero();
    for r in 0..n {
        let mut inner = BigInt::zero();
        for s in 0..=r {
            inner += &a[s];
        }
        lhs += &a[r] * &inner;
    }
    lhs *= 2;
    let mut sq = BigInt::zero();
    let mut total = BigInt::zero();
    for r in 0..n {
        sq += &a[r] * &a[r];
        total += &a[r];
    }
    let den = &d * &d;
    (ratio(lhs, &den), ratio(sq + &total * &total, &den))
}

/// `Σ_r Σ_{s≤r} g_s = (N+1) Σ_r g_r − Σ_r r g_r`.
pub fn corollary_partial_sums(g: &[Rational]) -> (Rational, Rational) {
    let n = g.len();
    let (a, d) = common(g.iter());
    let mut lhs = BigInt::zero();
    for r in 0..n {
        for s in 0..=r {
            lhs += &a[s];
        }
    }
    let mut total = BigInt::zero();
    let mut weighted = BigInt::zero();
    for r in 0..n {
        total += &a[r];
        weighted += &a[r] * (r + 1);
    }
    (ratio(lhs, &d), ratio(total * (n + 1) - weighted, &d))
}

/// All four corollaries for the sequence pair; the single-sequence forms are
/// checked for both `g` and `h`.
pub fn check_corollaries(g: &[Rational], h: &[Rational]) -> bool {
    assert_eq!(g.len(), h.len(), "sequences must have the same length");
    let eq = |(l, r): (Rational, Rational)| l == r;
    eq(corollary_symmetric(g, h))
        && eq(corollary_factorable(g, h))
        && eq(corollary_square(g))
        && eq(corollary_square(h))
        && eq(corollary_partial_sums(g))
        && eq(corollary_partial_sums(h))
}
