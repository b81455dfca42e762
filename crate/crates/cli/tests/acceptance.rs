//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.
//!
//! Criterion 6 compares one power series against the right-hand side as it
//! is usually quoted, with `log2^2` in the middle term. That form is off by
//! about 0.35 and is expected to fail; the corrected form, with a single
//! power of log2, is checked alongside it and must pass.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use harmid_core::registry::{registry, IdentityClass};
use harmid_core::series::{evaluate, verify_finite, SeriesPolicy, Status};
use harmid_core::special::{
    beta_odd_closed, beta_series, bernoulli, euler_number, factorial, zeta_even_closed, zeta_series,
};
use harmid_core::sumlang::{eval_exact, format, parse, parse_bytes, Bindings};
use harmid_core::{PrecisionContext, Rational, Real};
use harmid_oracle::{naive_lhs, random_expr, rng, DEFAULT_SEED};
use rand::Rng;

/// Criteria whose failure is understood and recorded.
const EXPECTED_FAILURES: &[u32] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).unwrap()
}

fn policy() -> SeriesPolicy {
    SeriesPolicy { trunc_n: 10_000, tail_order: 10, adaptive_order: false, ..SeriesPolicy::default() }
}

fn value(src: &str, digits: u32) -> Real {
    let e = parse(src).unwrap_or_else(|e| panic!("{src}: {e:?}"));
    evaluate(&e, &Bindings::new(), ctx(digits), &policy()).unwrap_or_else(|e| panic!("{src}: {e}")).value
}

fn delta(a: &Real, b: &Real) -> f64 {
    (a.clone() - b.clone()).abs().to_f64()
}

/// `|lhs - rhs|` at 30 digits, or a failure line when it exceeds `tol`.
fn close(lhs: &str, rhs: &str, tol: f64) -> Result<f64, String> {
    let d = delta(&value(lhs, 30), &value(rhs, 30));
    if d <= tol {
        Ok(d)
    } else {
        Err(format!("{lhs} = {rhs}: |delta| = {d:.3e} > {tol:e}"))
    }
}

fn batch(cases: &[(&str, &str)], tol: f64) -> Outcome {
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for (l, r) in cases {
        match close(l, r, tol) {
            Ok(d) => worst = worst.max(d),
            Err(msg) => bad.push(msg),
        }
    }
    if bad.is_empty() {
        Outcome::new(true, format!("{} identities, worst delta {worst:.2e}", cases.len()))
    } else {
        Outcome::new(false, bad.join("; "))
    }
}

fn c1_general_identities() -> Outcome {
    let t = Instant::now();
    let checks = harmid::run::general_checks(DEFAULT_SEED);
    let el = t.elapsed();
    let ok = checks.iter().all(|c| c.status == Status::Pass);
    let trials: usize = checks.iter().map(|c| c.trials).sum();
    Outcome::new(ok && el < Duration::from_secs(30), format!("{trials} exact trials in {:.1}s", el.as_secs_f64()))
}

fn c2_finite_suite() -> Outcome {
    let t = Instant::now();
    let recs = registry().enumerate(Some(IdentityClass::FiniteExact));
    let mut points = 0;
    let mut failed = Vec::new();
    for rec in &recs {
        for r in verify_finite(rec, &rec.default_grid()) {
            points += 1;
            if r.status == Status::Fail {
                failed.push(format!("{} at {}", r.id, r.point));
            }
        }
    }
    let el = t.elapsed();
    let ok = failed.is_empty() && recs.len() >= 55 && el < Duration::from_secs(120);
    let mut detail = format!("{} identities, {points} points in {:.1}s", recs.len(), el.as_secs_f64());
    if !failed.is_empty() {
        detail += &format!(", failures: {}", failed.join(", "));
    }
    Outcome::new(ok, detail)
}

fn c3_naive_agreement() -> Outcome {
    let mut points = 0;
    let mut bad = Vec::new();
    for rec in registry().enumerate(Some(IdentityClass::FiniteExact)) {
        for p in rec.default_grid().points() {
            if p.get("N").is_some_and(|n| *n > 30) {
                continue;
            }
            points += 1;
            match (eval_exact(&rec.lhs, &p), naive_lhs(rec, &p)) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => bad.push(format!("{} at {p:?}: {a:?} vs {b:?}", rec.id)),
            }
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { format!("{points} points agree") } else { bad.join("; ") })
}

fn c4_quadratic_sums() -> Outcome {
    batch(
        &[
            ("sum(r=1..inf, H(r,2)^2/r^2)", "19*pi^6/22680 + zeta(3)^2"),
            ("sum(r=1..inf, H(r,2)^2/(r+1)^2)", "59*pi^6/22680 - zeta(3)^2"),
            ("sum(r=1..inf, H(r,2)^2/(r*(r+1)))", "pi^2*zeta(3) - 10*zeta(5)"),
            ("sum(r=1..inf, H(r,3)^2/(r*(r+1)))", "35*zeta(7) - 10*pi^2/3*zeta(5)"),
            ("sum(r=1..inf, h(r,2)^2/(4*r^2-1))", "3*pi^2/64*zeta(3)"),
        ],
        1e-12,
    )
}

fn c5_nested_sums() -> Outcome {
    let reg = registry();
    let lhs = |id: &str| format(&reg.lookup(id).unwrap().lhs);
    let (a, b) = (lhs("I.RHGE266"), lhs("I.E6PZKE8"));
    batch(&[(a.as_str(), "pi^4/30"), (b.as_str(), "31*pi^6/15120")], 1e-12)
}

fn c6_power_series() -> Outcome {
    const QUOTED: &str = "7/4*zeta(3) - pi^2*log2^2/6 + log2^3/3";
    const CORRECTED: &str = "7/4*zeta(3) - pi^2*log2/6 + log2^3/3";
    let h3 = "sum(r=1..inf, H(r,3)/2^r)";
    let mut out = batch(
        &[("sum(r=1..inf, H(r,2)/2^r)", "pi^2/6 - log2^2"), ("sum(r=1..inf, H(r,1)/2^r)", "2*log2"), (h3, QUOTED)],
        1e-20,
    );
    let fixed = close(h3, CORRECTED, 1e-20);
    out.pass &= fixed.is_ok();
    out.detail += &match fixed {
        Ok(d) => format!("; corrected H_(r,3) form passes, delta {d:.2e}"),
        Err(msg) => format!("; corrected form also fails: {msg}"),
    };
    if !out.pass {
        out.detail += "; the quoted right-hand side squares log2 in the middle term, the series value is 1.0744263872...";
    }
    out
}

fn c7_alternating() -> Outcome {
    let mut cases: Vec<(String, String)> = vec![("2*sum(r=1..inf, (-1)^(r-1)*H(r,1))".into(), "log2".into())];
    for n in 2..=4 {
        cases.push((format!("2*sum(r=1..inf, (-1)^(r-1)*H(r,{n}))"), format!("(1-2^(1-{n}))*zeta({n})")));
    }
    for n in [2, 4] {
        cases.push((format!("2*sum(r=1..inf, (-1)^(r-1)*h(r,{n}))"), format!("beta({n})")));
    }
    for (k, rhs) in [(1, "pi/4"), (2, "catalan"), (3, "pi^3/32")] {
        cases.push((format!("2*sum(r=1..inf, (-1)^(r-1)*h(r,{k}))"), rhs.into()));
    }
    for n in 1..=2 {
        cases.push((
            format!("2*sum(r=1..inf, (-1)^(r-1)*H(r,{n})*H(r-1,{n}))"),
            format!("-(2^(2*{n}-1)-1)/fact(2*{n})*abs(B(2*{n}))*pi^(2*{n})"),
        ));
    }
    for (l, r) in [
        ("2*sum(r=1..inf, (-1)^(r-1)*H(r,1)^2)", "pi^2/12 - log2^2"),
        ("2*sum(r=1..inf, (-1)^(r-1)*h(r,1)*h(r-1,1))", "-catalan"),
        ("2*sum(r=1..inf, (-1)^(r-1)*h(r,1)^2)", "pi*log2/4"),
        ("2*sum(r=1..inf, (-1)^(r-1)*r*H(r,2))", "log2 - pi^2/24"),
        ("2*sum(r=1..inf, (-1)^(r-1)*r*H(r,3))", "(1-2^(2-3))*zeta(2) - (1-2^(1-3))*zeta(3)/2"),
    ] {
        cases.push((l.into(), r.into()));
    }
    let refs: Vec<(&str, &str)> = cases.iter().map(|(l, r)| (l.as_str(), r.as_str())).collect();
    batch(&refs, 1e-12)
}

/// One unit in the 30th significant digit of `v`.
fn ulp30(v: &Real) -> f64 {
    10f64.powi(v.abs().to_f64().log10().floor() as i32 - 29)
}

fn c8_special_functions() -> Outcome {
    let c = ctx(30);
    let mut bad = Vec::new();
    for n in [2, 4, 6, 8] {
        let (a, b) = (zeta_even_closed(n, c).unwrap(), zeta_series(n, c).unwrap());
        if delta(&a, &b) > ulp30(&a) {
            bad.push(format!("zeta({n}) differs by {:.2e}", delta(&a, &b)));
        }
    }
    for n in [1, 3, 5] {
        let (a, b) = (beta_odd_closed(n, c).unwrap(), beta_series(n, c));
        if delta(&a, &b) > ulp30(&a) {
            bad.push(format!("beta({n}) differs by {:.2e}", delta(&a, &b)));
        }
    }
    let fact = |k: u32| Rational::from(factorial(k as u64));
    // t/(e^t - 1) * (e^t - 1)/t = 1, coefficients up to t^12
    let b: Vec<Rational> = (0..=12).map(|m| bernoulli(m).unwrap()).collect();
    for k in 0..=12u32 {
        let c: Rational = (0..=k).map(|m| &(&b[m as usize] / &fact(m)) / &fact(k - m + 1)).sum();
        if c != i64::from(k == 0) {
            bad.push(format!("Bernoulli generating product has t^{k} coefficient {c}"));
        }
    }
    // sech t * cosh t = 1, coefficients up to t^10
    let e: Vec<Rational> = (0..=10).map(|m| Rational::from(euler_number(m).unwrap())).collect();
    for k in (0..=10u32).step_by(2) {
        let c: Rational = (0..=k).step_by(2).map(|m| &(&e[m as usize] / &fact(m)) / &fact(k - m)).sum();
        if c != i64::from(k == 0) {
            bad.push(format!("Euler generating product has t^{k} coefficient {c}"));
        }
    }
    if b[12] != "-691/2730".parse::<Rational>().unwrap() {
        bad.push(format!("B_12 = {}", b[12]));
    }
    if e[10] != -50521 {
        bad.push(format!("E_10 = {}", e[10]));
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "zeta, beta within 1 ulp; B_12, E_10 confirmed".into() } else { bad.join("; ") })
}

fn c9_parser() -> Outcome {
    let mut r = rng(DEFAULT_SEED);
    let mut bad = Vec::new();
    for _ in 0..10_000 {
        let e = random_expr(&mut r, 6);
        let text = format(&e);
        if parse(&text).as_ref() != Ok(&e) {
            bad.push(format!("random tree `{text}` does not round-trip"));
        }
    }
    let alphabet = b"sumHhbar(r=1..inf,)^*/+-0123456789NnpizetalogBE \t";
    let mut panics = 0;
    for i in 0..10_000 {
        let len = r.gen_range(0..64);
        let bytes: Vec<u8> = (0..len)
            .map(|_| if i % 2 == 0 { alphabet[r.gen_range(0..alphabet.len())] } else { r.gen() })
            .collect();
        if catch_unwind(AssertUnwindSafe(|| parse_bytes(&bytes))).is_err() {
            panics += 1;
        }
    }
    if panics > 0 {
        bad.push(format!("{panics} fuzz inputs panicked"));
    }
    let mut exprs = 0;
    for rec in registry().enumerate(None) {
        for e in [&rec.lhs, &rec.rhs] {
            exprs += 1;
            if parse(&format(e)).as_ref() != Ok(e) {
                bad.push(format!("{} does not round-trip", rec.id));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() { format!("10000 trees, 10000 fuzz inputs, {exprs} registry expressions") } else { bad.join("; ") },
    )
}

fn verify_json(jobs: &str) -> (Option<i32>, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_harmid"))
        .args(["verify", "--format", "json", "--jobs", jobs])
        .env_remove("HARMID_DIGITS")
        .env_remove("HARMID_INJECT_FAULT")
        .output()
        .expect("runs");
    (o.status.code(), o.stdout)
}

fn c10_deterministic_report() -> Outcome {
    let t = Instant::now();
    let (c1, one) = verify_json("1");
    let (c8, eight) = verify_json("8");
    let same = one == eight;
    Outcome::new(
        same && c1 == Some(0) && c8 == Some(0),
        format!(
            "jobs 1 vs 8: {} ({} bytes), exit {:?}/{:?}, {:.1}s",
            if same { "identical" } else { "different" },
            one.len(),
            c1,
            c8,
            t.elapsed().as_secs_f64()
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "general identities", c1_general_identities),
        (2, "finite identity suite", c2_finite_suite),
        (3, "naive oracle agreement", c3_naive_agreement),
        (4, "quadratic series", c4_quadratic_sums),
        (5, "nested series", c5_nested_sums),
        (6, "power series", c6_power_series),
        (7, "alternating series", c7_alternating),
        (8, "special functions", c8_special_functions),
        (9, "parser round trip and fuzz", c9_parser),
        (10, "deterministic report", c10_deterministic_report),
    ];
    let mut failed = BTreeSet::new();
    for (n, name, check) in criteria {
        let out = check();
        // straight to stdout so the lines survive the harness's capture
        let line = format!("criterion {n:>2} {:4} {name}: {}\n", if out.pass { "PASS" } else { "FAIL" }, out.detail);
        let _ = std::io::stdout().lock().write_all(line.as_bytes());
        if !out.pass {
            failed.insert(n);
        }
    }
    let expected: BTreeSet<u32> = EXPECTED_FAILURES.iter().copied().collect();
    assert_eq!(failed, expected, "unexpected set of failing criteria");
}
