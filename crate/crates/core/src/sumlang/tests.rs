use proptest::prelude::*;

use super::*;
use crate::numerics::{PrecisionContext, Rational};
use crate::series::SeriesPolicy;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn exact(src: &str) -> Result<Rational, EvalError> {
    eval_exact(&parse(src).unwrap(), &Bindings::new())
}

fn with(src: &str, pairs: &[(&str, i64)]) -> Rational {
    let b: Bindings = pairs.iter().map(|(k, v)| (k.to_string(), Rational::from_int(*v))).collect();
    eval_exact(&parse(src).unwrap(), &b).unwrap()
}

#[test]
fn parses_a_sum() {
    let e = parse("sum(r=1..N, H(r,2)/r^2)").unwrap();
    let Expr::Sum { var, lower, upper, body } = &e else { panic!("{e:?}") };
    assert_eq!(var, "r");
    assert!(lower.is_int(1));
    assert_eq!(*upper, Bound::Finite(Box::new(Expr::var("N"))));
    let want = Expr::Div(
        Box::new(Expr::Call(Builtin::H, vec![Expr::var("r"), Expr::int(2)])),
        Box::new(Expr::Pow(Box::new(Expr::var("r")), Box::new(Expr::int(2)))),
    );
    assert_eq!(**body, want);
}

#[test]
fn round_trips_shapes() {
    for src in [
        "(N+1)*H(N,1)^2 - (2*N+1)*H(N,1) + 2*N",
        "3*pi^2/64 * zeta(3)",
        "sum(r=1..inf, (-1)^(r-1)*h(r,1)*h(r-1,1))",
        "-x^2",
        "2^-n",
        "a - (b-c)",
        "a/(b*c)",
        "x^y^z",
        "(x^y)^z",
        "sum(r=1..N, sum(s=1..r, H(s,1)))",
        "psi(1,3/4,N) - Li(2,-1/2)",
    ] {
        let e = parse(src).unwrap();
        assert_eq!(format(&e), src, "{src}");
        assert_eq!(parse(&format(&e)).unwrap(), e);
    }
}

#[test]
fn unary_minus_binds_looser_than_power() {
    let e = parse("-x^2").unwrap();
    assert!(matches!(&e, Expr::Neg(inner) if matches!(**inner, Expr::Pow(..))));
    assert_eq!(format(&e), "-x^2");
    assert_eq!(with("-x^2", &[("x", 3)]), Rational::from_int(-9));
}

#[test]
fn power_is_right_associative() {
    assert_eq!(exact("2^3^2").unwrap(), Rational::from_int(512));
}

#[test]
fn rational_literal_lexing() {
    assert_eq!(parse("1/2").unwrap(), Expr::Rat(q("1/2")));
    // with spaces it is a division
    assert!(matches!(parse("1 / 2").unwrap(), Expr::Div(..)));
    // after a caret the slash divides
    assert_eq!(exact("2^3/4").unwrap(), q("2"));
}

#[test]
fn malformed_range_is_an_error() {
    let err = parse("sum(r=1.., H(r,2))").unwrap_err();
    assert_eq!(err.offset, 9);
    assert_eq!((err.line, err.column), (1, 10));
    assert!(!err.expected.is_empty());
    let shown = err.render("sum(r=1.., H(r,2))");
    assert!(shown.ends_with("         ^"), "{shown}");
}

#[test]
fn reserved_words_are_not_variables() {
    assert!(parse("sum(pi=1..3, pi)").is_err());
    assert!(parse("zeta + 1").is_err());
    assert!(is_reserved("parity"));
    assert!(!is_reserved("N"));
}

#[test]
fn arity_is_checked() {
    assert!(parse("H(3)").is_err());
    assert!(parse("psi(1,2)").is_err());
    assert!(parse("pi(1)").is_err());
}

#[test]
fn inf_only_as_upper_bound() {
    assert!(parse("inf").is_err());
    assert!(parse("sum(r=inf..3, r)").is_err());
}

#[test]
fn deep_nesting_is_bounded() {
    let deep = "(".repeat(MAX_DEPTH + 5) + "1" + &")".repeat(MAX_DEPTH + 5);
    assert!(parse(&deep).is_err());
    assert!(parse(&"1+".repeat(40_000)).is_err());
}

#[test]
fn invalid_utf8_is_reported() {
    let err = parse_bytes(b"1+\xff").unwrap_err();
    assert_eq!(err.offset, 2);
}

#[test]
fn exact_examples() {
    assert_eq!(exact("sum(r=1..3, 1/r)").unwrap(), q("11/6"));
    assert_eq!(exact("sum(r=1..0, 1/r)").unwrap(), Rational::zero());
    assert_eq!(exact("sum(r=1..2, (-1)^(r-1)*h(r,1))").unwrap(), q("-1/3"));
    assert_eq!(exact("sum(r=1..10, H(r,1))").unwrap(), q("55991/2520"));
    assert_eq!(exact("Hbar(4,1) + hbar(2,2)").unwrap(), &q("7/12") + &q("8/9"));
    assert_eq!(exact("parity(7) + parity(8)").unwrap(), Rational::one());
    assert_eq!(exact("B(12)").unwrap(), q("-691/2730"));
    assert_eq!(exact("E(10)").unwrap(), Rational::from_int(-50521));
    assert_eq!(exact("fact(6)").unwrap(), Rational::from_int(720));
}

#[test]
fn exact_errors() {
    assert_eq!(exact("zeta(2)"), Err(EvalError::TranscendentalInExactContext("zeta".into())));
    assert!(matches!(exact("N + 1"), Err(EvalError::UnboundVariable(_))));
    assert_eq!(exact("1/(2-2)"), Err(EvalError::DivisionByZero));
    assert_eq!(exact("sum(r=1..inf, 1/r^2)"), Err(EvalError::InfiniteSumInExactContext));
    assert!(exact("sum(r=1..1/2, r)").is_err());
    assert!(exact("H(1/2, 1)").is_err());
}

#[test]
fn sum_variables_shadow() {
    assert_eq!(with("sum(N=1..N, N)", &[("N", 4)]), Rational::from_int(10));
    assert_eq!(with("sum(r=1..N, sum(s=1..r, 1))", &[("N", 4)]), Rational::from_int(10));
}

#[test]
fn real_examples() {
    let ctx = PrecisionContext::new(30).unwrap();
    let pol = SeriesPolicy::default();
    let ev = |s: &str| eval_real(&parse(s).unwrap(), &Bindings::new(), ctx, &pol).unwrap();
    let d = |a: &EvalReport, b: &EvalReport| (&a.value - &b.value).abs().to_f64();
    assert!(d(&ev("zeta(2)"), &ev("pi^2/6")) < 1e-29);
    let r = ev("sum(r=1..inf, H(r,2)^2/(r^2))");
    assert!(d(&r, &ev("19*pi^6/22680 + zeta(3)^2")) < 1e-15);
    assert!(r.error_bound < 1e-15);
    let g = ev("2*sum(r=1..inf, (-1)^(r-1)*h(r,2))");
    assert!(d(&g, &ev("catalan")) < 1e-12);
    // finite parts stay exact
    let f = ev("sum(r=1..10, H(r,1))");
    assert_eq!(f.method, Method::Direct);
    assert_eq!(f.value.to_decimal_string(10), "22.21865079");
}

#[test]
fn real_errors() {
    let ctx = PrecisionContext::new(20).unwrap();
    let pol = SeriesPolicy::default();
    let ev = |s: &str| eval_real(&parse(s).unwrap(), &Bindings::new(), ctx, &pol);
    assert!(matches!(ev("Li(2, 9/10)"), Err(EvalError::DomainError(_))));
    assert!(matches!(ev("sum(r=1..inf, 1/r)"), Err(EvalError::Divergent(_))));
    assert!(matches!(ev("sum(r=1..inf, 2^r)"), Err(EvalError::Divergent(_))));
}

#[test]
fn exact_and_real_agree_on_finite_records() {
    let ctx = PrecisionContext::new(30).unwrap();
    let pol = SeriesPolicy::default();
    for r in crate::registry::registry().enumerate(Some(crate::registry::IdentityClass::FiniteExact)) {
        let pts = r.default_grid().points();
        for b in pts.iter().step_by(97).take(3) {
            for side in [&r.lhs, &r.rhs] {
                let Ok(e) = eval_exact(side, b) else { continue };
                let v = eval_real(side, b, ctx, &pol).unwrap();
                let rel = (&v.value - &crate::numerics::Real::from_rational(&e, ctx)).abs().to_f64();
                assert!(rel <= 1e-25 * e.abs().to_f64().max(1.0), "{} at {b:?}", r.id);
            }
        }
    }
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..50).prop_map(Expr::int),
        (1i64..9, 2i64..9).prop_map(|(a, b)| Expr::Rat(Rational::new(a, b).unwrap())).prop_filter("proper", |e| !matches!(e, Expr::Rat(r) if r.is_integer())),
        prop::sample::select(vec!["N", "n", "x"]).prop_map(Expr::var),
        Just(Expr::Call(Builtin::Pi, vec![])),
    ];
    leaf.prop_recursive(5, 40, 3, |inner| {
        let b = |e| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Pow(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::AltSign(b(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Call(Builtin::H, vec![x, y])),
            (inner.clone(), inner.clone()).prop_map(move |(lo, body)| Expr::Sum {
                var: "r".into(),
                lower: b(lo),
                upper: Bound::Inf,
                body: b(body),
            }),
        ]
    })
    .prop_filter("(-1)^e always parses as a sign node", |e| !has_minus_one_base(e))
}

fn has_minus_one_base(e: &Expr) -> bool {
    let mut found = false;
    e.walk(&mut |n| {
        if let Expr::Pow(b, _) = n {
            found |= matches!(&**b, Expr::Neg(x) if x.is_int(1));
        }
    });
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn format_then_parse_is_identity(e in arb_expr()) {
        let text = format(&e);
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn parser_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = parse_bytes(&bytes);
    }

    #[test]
    fn parser_never_panics_on_tokens(parts in prop::collection::vec(
        prop::sample::select(vec!["sum", "(", ")", "r", "=", "..", ",", "inf", "1", "2/3", "^", "-", "+", "*", "/", "H", "pi", " "]),
        0..60,
    )) {
        let _ = parse(&parts.concat());
    }
}
