use harmid_core::sumlang::{Bound, Builtin, Expr};
use harmid_core::Rational;
use rand::seq::SliceRandom;
use rand::Rng;

const VARS: [&str; 5] = ["N", "n", "m", "x", "z"];
const SUM_VARS: [&str; 3] = ["r", "s", "k"];

fn leaf(rng: &mut impl Rng) -> Expr {
    match rng.gen_range(0..5) {
        0 | 1 => Expr::int(rng.gen_range(0..100)),
        2 => loop {
            let q = Rational::new(rng.gen_range(1..50), rng.gen_range(2..50)).expect("positive denominator");
            if !q.is_integer() {
                break Expr::Rat(q);
            }
        },
        3 => Expr::var(VARS.choose(rng).expect("nonempty")),
        _ => Expr::Call(*[Builtin::Pi, Builtin::Log2, Builtin::Catalan].choose(rng).expect("nonempty"), vec![]),
    }
}

/// Random syntax tree of at most `depth` levels (a leaf has depth 1).
///
/// Trees are the kind the parser can produce: no `(-1)^e` written as a plain
/// power, no integer-valued rational literals, calls at their fixed arity.
pub fn random_expr(rng: &mut impl Rng, depth: usize) -> Expr {
    if depth <= 1 || rng.gen_bool(0.25) {
        return leaf(rng);
    }
    let sub = |rng: &mut _| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..10) {
        0 => Expr::Add(sub(rng), sub(rng)),
        1 => Expr::Sub(sub(rng), sub(rng)),
        2 => Expr::Mul(sub(rng), sub(rng)),
        3 => Expr::Div(sub(rng), sub(rng)),
        4 => Expr::Neg(sub(rng)),
        5 => {
            let base = sub(rng);
            let exp = sub(rng);
            if matches!(&*base, Expr::Neg(x) if x.is_int(1)) {
                Expr::AltSign(exp)
            } else {
                Expr::Pow(base, exp)
            }
        }
        6 => Expr::AltSign(sub(rng)),
        7 => {
            let f = *Builtin::ALL.choose(rng).expect("nonempty");
            let args = (0..f.arity()).map(|_| random_expr(rng, depth - 1)).collect();
            Expr::Call(f, args)
        }
        _ => {
            let upper = if rng.gen_bool(0.5) { Bound::Inf } else { Bound::Finite(sub(rng)) };
            Expr::Sum {
                var: SUM_VARS.choose(rng).expect("nonempty").to_string(),
                lower: sub(rng),
                upper,
                body: sub(rng),
            }
        }
    }
}
