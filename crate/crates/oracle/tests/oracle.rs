use harmid_core::registry::{registry, IdentityClass};
use harmid_core::series::{sum_direct_exact, SeriesSpec};
use harmid_core::sumlang::{eval_exact, format, parse, Bindings, Bound, Expr};
use harmid_core::Rational;
use harmid_oracle::*;

fn b(pairs: &[(&str, i64)]) -> Bindings {
    pairs.iter().map(|(k, v)| (k.to_string(), Rational::from_int(*v))).collect()
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ones(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

#[test]
fn master_identity_trivial_and_random() {
    let one = RandomSequenceSpec::new(1, 7).matrix();
    let (l, r) = master_sides(&one);
    assert_eq!(l, &one[0][0] * &Rational::from_int(2));
    assert_eq!(l, r);
    for seed in 0..100 {
        assert!(check_master_identity(&RandomSequenceSpec::new(20, seed).matrix()), "seed {seed}");
    }
}

#[test]
fn perturbed_matrix_is_caught() {
    let mut f = RandomSequenceSpec::new(6, 3).matrix();
    let (lhs, _) = master_sides(&f);
    f[2][4] += &Rational::one();
    let (_, rhs) = master_sides(&f);
    assert_ne!(lhs, rhs);
}

#[test]
fn corollary_examples() {
    let (l, r) = corollary_square(&ones(3));
    assert_eq!((l.clone(), r), (Rational::from_int(12), Rational::from_int(12)));
    let g: Vec<Rational> = (1..=5).map(|s| Rational::new(1, s).unwrap()).collect();
    let (l, r) = corollary_partial_sums(&g);
    let want = Rational::new(87, 10).unwrap();
    assert_eq!(l, want);
    assert_eq!(r, want);
    assert!(check_corollaries(&ones(4), &g[..4]));
}

#[test]
fn corollaries_hold_for_random_pairs() {
    for seed in 0..100 {
        let (g, h) = RandomSequenceSpec::new(25, seed).pair();
        assert!(check_corollaries(&g, &h), "seed {seed}");
    }
}

#[test]
fn corollaries_reject_a_broken_side() {
    let (g, h) = RandomSequenceSpec::new(5, 11).pair();
    let (l, r) = corollary_factorable(&g, &h);
    assert_ne!(&l + &Rational::one(), r);
}

#[test]
fn random_sequences_are_reproducible_and_bounded() {
    let s = RandomSequenceSpec::new(50, 42);
    assert_eq!(s.sequence(), s.sequence());
    assert_ne!(s.sequence(), RandomSequenceSpec::new(50, 43).sequence());
    for q in s.sequence() {
        assert!(q.numer().magnitude() <= &MAX_NUM.unsigned_abs().into());
        assert!(q.denom() <= &MAX_DEN.into());
    }
}

#[test]
fn naive_matches_registry_examples() {
    let reg = registry();
    for (id, p) in [("F.UO7JLJO", b(&[("N", 4), ("n", 2)])), ("F.RIKV1U5", b(&[("N", 3), ("n", 1)]))] {
        let rec = reg.lookup(id).unwrap();
        assert_eq!(naive_lhs(rec, &p).unwrap(), eval_exact(&rec.lhs, &p).unwrap(), "{id}");
    }
}

#[test]
fn naive_matches_truncated_series() {
    let rec = registry().lookup("I.KHVARP3").unwrap();
    let p = b(&[("n", 3)]);
    let Expr::Mul(two, sum) = &rec.lhs else { panic!("unexpected shape {}", format(&rec.lhs)) };
    assert!(matches!(&**sum, Expr::Sum { upper: Bound::Inf, .. }));
    let spec = SeriesSpec::from_expr(sum).unwrap();
    let partial = &eval_exact(two, &p).unwrap() * &sum_direct_exact(&spec, 50, &p).unwrap();
    assert_eq!(naive_partial_lhs(rec, &p, 50).unwrap(), partial);
}

#[test]
fn naive_evaluator_basics() {
    let v = |s: &str, p: &Bindings| naive_eval(&parse(s).unwrap(), p, None);
    let none = Bindings::new();
    assert_eq!(v("sum(r=1..3, 1/r)", &none).unwrap(), q("11/6"));
    assert_eq!(v("sum(r=1..0, r)", &none).unwrap(), Rational::zero());
    assert_eq!(v("sum(r=1..2, (-1)^(r-1)*h(r,1))", &none).unwrap(), q("-1/3"));
    assert_eq!(v("Hbar(4,1) + hbar(2,2) + H(3,-2)", &none).unwrap(), &(&q("7/12") + &q("8/9")) + &Rational::from_int(14));
    assert_eq!(v("fact(5) + parity(3)", &none).unwrap(), Rational::from_int(121));
    assert!(matches!(v("zeta(2)", &none), Err(OracleError::Unsupported(_))));
    assert!(matches!(v("N", &none), Err(OracleError::Unbound(_))));
    assert_eq!(v("1/(1-1)", &none), Err(OracleError::DivisionByZero));
    assert!(matches!(v("sum(r=1..-3, r)", &none), Err(OracleError::BadRange(_))));
    assert_eq!(naive_eval(&parse("sum(r=1..inf, 1/r^2)").unwrap(), &none, Some(4)).unwrap(), q("205/144"));
}

#[test]
fn naive_agrees_on_a_sample_of_every_finite_record() {
    for rec in registry().enumerate(Some(IdentityClass::FiniteExact)) {
        let pts = rec.default_grid().points();
        for p in pts.iter().step_by(pts.len().div_ceil(5).max(1)) {
            if p.get("N").is_some_and(|n| *n > 12) {
                continue;
            }
            let fast = eval_exact(&rec.lhs, p);
            let slow = naive_lhs(rec, p);
            match (fast, slow) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "{} at {p:?}", rec.id),
                (Err(_), Err(_)) => {}
                (a, b) => panic!("{} at {p:?}: {a:?} vs {b:?}", rec.id),
            }
        }
    }
}

#[test]
fn random_trees_round_trip() {
    let mut rng = rng(DEFAULT_SEED);
    for _ in 0..2000 {
        let e = random_expr(&mut rng, 6);
        assert!(e.depth() <= 6);
        let text = format(&e);
        assert_eq!(parse(&text).unwrap(), e, "{text}");
    }
}

#[test]
fn core_does_not_depend_on_the_oracle() {
    let manifest = include_str!("../../core/Cargo.toml");
    assert!(!manifest.contains("oracle"));
}
