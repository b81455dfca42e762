use harmid_core::harmonic::{harmonic, odd_harmonic};
use harmid_core::registry::{registry, IdentityClass};
use harmid_core::series::{evaluate, verify_finite, verify_record, SeriesPolicy, Status};
use harmid_core::sumlang::{eval_exact, eval_exact_batch, parse, Bindings, EvalError};
use harmid_core::{PrecisionContext, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn n(v: i64) -> Bindings {
    [("N".to_string(), Rational::from_int(v))].into_iter().collect()
}

#[test]
fn harmonic_numbers_from_the_public_api() {
    assert_eq!(harmonic(10, 1), q("7381/2520"));
    assert_eq!(harmonic(3, 2), q("49/36"));
    assert_eq!(odd_harmonic(2, 1), q("4/3"));
    assert_eq!(harmonic(0, 3), Rational::zero());
}

#[test]
fn exact_evaluation_of_a_finite_sum() {
    let e = parse("sum(r=1..N, H(r,1))").unwrap();
    assert_eq!(eval_exact(&e, &n(10)).unwrap(), q("55991/2520"));
    // (N+1) H_N - N
    let closed = parse("(N+1)*H(N,1) - N").unwrap();
    let pts: Vec<Bindings> = (1..=40).map(n).collect();
    let a = eval_exact_batch(&e, &pts);
    let b = eval_exact_batch(&closed, &pts);
    assert_eq!(a, b);
}

#[test]
fn exact_context_rejects_transcendentals_and_infinite_sums() {
    let none = Bindings::new();
    assert!(matches!(eval_exact(&parse("pi").unwrap(), &none), Err(EvalError::TranscendentalInExactContext(_))));
    assert!(matches!(
        eval_exact(&parse("sum(r=1..inf, 1/r^2)").unwrap(), &none),
        Err(EvalError::InfiniteSumInExactContext)
    ));
    assert!(matches!(eval_exact(&parse("H(N,1)").unwrap(), &none), Err(EvalError::UnboundVariable(_))));
}

#[test]
fn numeric_series_reaches_the_target_accuracy() {
    let ctx = PrecisionContext::new(30).unwrap();
    let policy = SeriesPolicy::default();
    let none = Bindings::new();
    let l = evaluate(&parse("sum(r=1..inf, H(r,1)/r^2)").unwrap(), &none, ctx, &policy).unwrap();
    let r = evaluate(&parse("2*zeta(3)").unwrap(), &none, ctx, &policy).unwrap();
    assert!((l.value - r.value).abs().to_f64() < 1e-25);
    let d = evaluate(&parse("sum(r=1..inf, 1/r)").unwrap(), &none, ctx, &policy);
    assert!(matches!(d, Err(EvalError::Divergent(_))));
}

#[test]
fn registry_records_verify() {
    let reg = registry();
    let ctx = PrecisionContext::new(30).unwrap();
    let policy = SeriesPolicy::default();
    for id in ["F.HGTFTRE", "I.HTUJPPT", "P.H2HALF", "A.LOG2"] {
        let rec = reg.lookup(id).unwrap();
        let res = verify_record(rec, ctx, &policy);
        assert!(!res.is_empty());
        assert!(res.iter().all(|r| r.status == Status::Pass), "{id}: {res:?}");
    }
    assert!(reg.lookup("F.NOPE").is_err());
}

#[test]
fn a_wrong_right_hand_side_fails() {
    let mut rec = registry().enumerate(Some(IdentityClass::FiniteExact))[0].clone();
    rec.rhs = parse(&format!("({}) + 1/1000", harmid_core::sumlang::format(&rec.rhs))).unwrap();
    let res = verify_finite(&rec, &rec.default_grid());
    assert!(res.iter().any(|r| r.status == Status::Fail));
}
