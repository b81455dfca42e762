use super::*;
use crate::numerics::{const_log2, const_pi, Real};
use crate::registry::{registry, ParameterGrid};
use crate::special::{catalan, zeta};
use crate::sumlang::parse;

fn ctx(d: u32) -> PrecisionContext {
    PrecisionContext::new(d).unwrap()
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn bind(pairs: &[(&str, i64)]) -> Bindings {
    pairs.iter().map(|(k, v)| (k.to_string(), Rational::from_int(*v))).collect()
}

fn spec(term: &str) -> SeriesSpec {
    SeriesSpec::new("r", Expr::int(1), parse(term).unwrap()).unwrap()
}

fn value(src: &str, c: PrecisionContext) -> Real {
    evaluate(&parse(src).unwrap(), &Bindings::new(), c, &SeriesPolicy::default()).unwrap().value
}

fn gap(a: &Real, b: &Real) -> f64 {
    (a - b).abs().to_f64()
}

#[test]
fn finite_examples() {
    let reg = registry();
    let one = |id: &str, b: Bindings| {
        let r = verify_finite(reg.lookup(id).unwrap(), &ParameterGrid::single(&b));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Pass, "{id}: {:?}", r[0]);
        r[0].lhs.clone().unwrap()
    };
    assert_eq!(one("F.KB1GFMQ", bind(&[("N", 3), ("n", 2)])), "65/18");
    assert_eq!(one("F.HGTFTRE", bind(&[("N", 1)])), "1");
    assert_eq!(one("F.X0K3M6M", bind(&[("N", 2)])), "50/9");
}

#[test]
fn finite_singular_point_is_skipped() {
    let rec = registry().lookup("F.KB1GFMQ").unwrap();
    let mut b = bind(&[("N", 3), ("n", 2)]);
    b.insert("N".into(), q("1/2"));
    let r = verify_finite(rec, &ParameterGrid::single(&b));
    assert_eq!(r[0].status, Status::Skipped);
    assert!(r[0].reason.as_deref().unwrap().starts_with("lhs:"));
}

#[test]
fn direct_sums() {
    let none = Bindings::new();
    assert_eq!(sum_direct_exact(&spec("1/r^2"), 4, &none).unwrap(), q("205/144"));
    assert_eq!(sum_direct_exact(&spec("(-1)^(r-1)"), 5, &none).unwrap(), Rational::one());
    let want = &(&q("1/2") + &q("5/16")) + &q("49/288");
    assert_eq!(sum_direct_exact(&spec("H(r,2)/2^r"), 3, &none).unwrap(), want);
    let r = sum_direct(&spec("1/r^2"), 4, &none, ctx(30)).unwrap();
    assert!(gap(&r.value, &Real::from_rational(&q("205/144"), ctx(30))) < 1e-29);
    assert_eq!(r.method, Method::Direct);
}

#[test]
fn tail_corrected_quadratic() {
    let c = ctx(30);
    let r = sum_tail_corrected(&spec("H(r,2)^2/r^2"), 10_000, 10, &Bindings::new(), c).unwrap();
    assert!(gap(&r.value, &value("19*pi^6/22680 + zeta(3)^2", c)) < 1e-15);
    assert_eq!(r.method, Method::TailCorrected);
    assert!(r.error_bound < 1e-15);
    let r = sum_tail_corrected(&spec("H(r,2)/r^4"), 10_000, 10, &Bindings::new(), c).unwrap();
    assert!(gap(&r.value, &value("zeta(3)^2 - pi^6/2835", c)) < 1e-15);
}

#[test]
fn tail_of_a_pure_power_is_zeta() {
    let c = ctx(30);
    let r = sum_tail_corrected(&spec("1/r^4"), 100, 10, &Bindings::new(), c).unwrap();
    assert!(gap(&r.value, &zeta(4, c).unwrap()) < 1e-28);
}

#[test]
fn tail_error_shrinks_with_order() {
    let c = ctx(30);
    let want = value("19*pi^6/22680 + zeta(3)^2", c);
    let mut last = f64::INFINITY;
    for k in 2..=10 {
        let r = sum_tail_corrected(&spec("H(r,2)^2/r^2"), 1000, k, &Bindings::new(), c).unwrap();
        let d = gap(&r.value, &want);
        assert!(d <= last.max(1e-28), "K={k}: {d} after {last}");
        last = d;
    }
    assert!(last < 1e-25);
}

#[test]
fn paired_examples() {
    let c = ctx(30);
    let none = Bindings::new();
    let r = sum_paired_alternating(&spec("(-1)^(r-1)*H(r,1)"), 10_000, &none, c, 4).unwrap();
    assert!(gap(&r.value, &const_log2(c)) < 1e-12);
    assert_eq!(r.bound_kind, BoundKind::Heuristic);
    let pi = const_pi(c);
    let r = sum_paired_alternating(&spec("(-1)^(r-1)*H(r,2)"), 10_000, &none, c, 4).unwrap();
    assert!(gap(&r.value, &(&(&pi * &pi) / &Real::from_i64(12, c))) < 1e-12);
    // log(r)/r corrections defeat Richardson here, so the paired limit is
    // only good to a few digits; the Abel value is exact to working precision
    let s = spec("(-1)^(r-1)*h(r,1)*h(r-1,1)");
    let r = sum_paired_alternating(&s, 10_000, &none, c, 4).unwrap();
    assert!(gap(&r.value, &-catalan(c)) < 1e-4);
    let abel = sum_euler_boole(&s, &none, c, &SeriesPolicy::default()).unwrap();
    assert!(gap(&(&abel.value * &Real::from_i64(2, c)), &-catalan(c)) < 1e-25);
}

#[test]
fn paired_partial_sums_match_closed_forms() {
    for n in 0..=5 {
        let s = spec(&format!("(-1)^(r-1)*H(r,{n})"));
        for big_n in 1..=100i64 {
            let b = bind(&[("N", big_n), ("n", n)]);
            let want = eval_exact(&parse("h(N,n) - H(N,n)/2^n").unwrap(), &b).unwrap();
            assert_eq!(paired_partial_exact(&s, big_n as u64, &Bindings::new()).unwrap(), want, "N={big_n} n={n}");
        }
    }
}

#[test]
fn abel_and_paired_values_of_weighted_sums() {
    // r H_{r,2}: the Abel value matches the closed form log2 - pi^2/24,
    // while the paired limit lands on log2 - pi^2/8.
    let c = ctx(30);
    let s = spec("(-1)^(r-1)*r*H(r,2)");
    let abel = sum_euler_boole(&s, &Bindings::new(), c, &SeriesPolicy::default()).unwrap();
    let twice = &abel.value * &Real::from_i64(2, c);
    assert!(gap(&twice, &value("log2 - pi^2/24", c)) < 1e-20);
    let paired = sum_paired_alternating(&s, 4096, &Bindings::new(), c, 4).unwrap();
    assert!(gap(&paired.value, &value("log2 - pi^2/8", c)) < 1e-6);
}

#[test]
fn power_series_examples() {
    let c = ctx(30);
    let none = Bindings::new();
    let r = sum_power_series(&spec("z^r*H(r,2)"), &q("1/2"), &none, c).unwrap();
    assert!(gap(&r.value, &value("pi^2/6 - log2^2", c)) < 1e-25);
    let r = sum_power_series(&spec("z^r*H(r,1)"), &q("1/2"), &none, c).unwrap();
    assert!(gap(&r.value, &(&const_log2(c) * &Real::from_i64(2, c))) < 1e-25);
    // log 3 = 2 atanh(1/2), summed independently
    let mut atanh = Real::zero(c);
    let mut pw = Real::from_rational(&q("1/2"), c);
    let quarter = Real::from_rational(&q("1/4"), c);
    for k in 0..120 {
        atanh = &atanh + &pw.div_i64(2 * k + 1);
        pw = &pw * &quarter;
    }
    let want = atanh.mul_rational(&q("8/3"));
    let r = sum_power_series(&spec("2*z^(2*r-1)*h(r,1)"), &q("1/2"), &none, c).unwrap();
    assert!(gap(&r.value, &want) < 1e-25);
    assert!(matches!(
        sum_power_series(&spec("z^r*H(r,1)"), &q("9/10"), &none, c),
        Err(EvalError::DomainError(_))
    ));
}

#[test]
fn richardson_examples() {
    let c = ctx(30);
    let inv: Vec<Real> = [1, 2, 4].iter().map(|&n| Real::from_rational(&Rational::new(1, n).unwrap(), c)).collect();
    assert!(richardson(&inv, 1).abs().to_f64() < 0.3);
    assert!(richardson(&inv, 2).abs().to_f64() < 1e-25);
    let ns = [100i64, 1000, 10_000];
    let vals: Vec<Real> = ns
        .iter()
        .map(|&n| value(&format!("H({},1) - H({n},1)", 2 * n), c))
        .collect();
    assert!(gap(&richardson_at(&ns, &vals, 2), &const_log2(c)) < 1e-9);
    let k = vec![Real::from_i64(7, c); 4];
    assert!(gap(&richardson(&k, 3), &Real::from_i64(7, c)) < 1e-28);
}

#[test]
fn numeric_examples() {
    let reg = registry();
    let pol = SeriesPolicy::default();
    for (id, tol) in [("I.HTUJPPT", 1e-15), ("A.LOG2", 1e-12), ("I.RHGE266", 1e-12)] {
        let r = verify_numeric(reg.lookup(id).unwrap(), ctx(30), &pol);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::Pass, "{id}");
        assert!(r[0].delta.unwrap() <= tol, "{id}: {:?}", r[0].delta);
    }
}

#[test]
fn numeric_tolerance_rule() {
    let c = ctx(30);
    let rep = |err: f64, kind| EvalReport { value: Real::zero(c), error_bound: err, bound_kind: kind, terms_used: 0, method: Method::Direct };
    let pol = SeriesPolicy::default();
    let t = numeric_tolerance(30, &rep(0.0, BoundKind::Rigorous), &rep(0.0, BoundKind::Rigorous), &pol);
    assert!((t - 1e-20).abs() < 1e-30);
    let t = numeric_tolerance(30, &rep(1e-14, BoundKind::Estimate), &rep(0.0, BoundKind::Rigorous), &pol);
    assert!((t - 2e-14).abs() < 1e-24);
    let t = numeric_tolerance(30, &rep(0.0, BoundKind::Heuristic), &rep(0.0, BoundKind::Rigorous), &pol);
    assert_eq!(t, 1e-12);
}

#[test]
fn spec_classification() {
    assert_eq!(spec("H(r,2)/r^3").kind, SeriesKind::PositiveDecay);
    assert_eq!(spec("z^r*H(r,2)").kind, SeriesKind::PowerWeighted);
    assert_eq!(spec("(-1)^(r-1)*h(r,2)").kind, SeriesKind::AlternatingPaired);
    let s = spec("H(r,2)^2/(r+1)^2");
    assert_eq!(s.harmonic_factors.len(), 1);
    s.validate(&Bindings::new()).unwrap();
    assert!(spec("H(r,2)/r^3").with_leading_power(3).validate(&Bindings::new()).is_ok());
    assert!(spec("H(r,2)/r^3").with_leading_power(5).validate(&Bindings::new()).is_err());
    assert!(SeriesSpec::from_expr(&parse("sum(r=1..5, r)").unwrap()).is_err());
}

#[test]
fn divergent_series_are_reported() {
    let c = ctx(20);
    let pol = SeriesPolicy::default();
    for src in ["sum(r=1..inf, 1/r)", "sum(r=1..inf, H(r,2)/r)", "sum(r=1..inf, 3^r/r^2)"] {
        let e = evaluate(&parse(src).unwrap(), &Bindings::new(), c, &pol);
        assert!(matches!(e, Err(EvalError::Divergent(_))), "{src}: {e:?}");
    }
}
