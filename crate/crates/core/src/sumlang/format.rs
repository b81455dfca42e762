use super::ast::{Bound, Expr};
use super::lexer::{tokenize, Tok};

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => ADD,
        Expr::Mul(..) | Expr::Div(..) => MUL,
        Expr::Neg(_) => NEG,
        Expr::Pow(..) | Expr::AltSign(_) => POW,
        _ => ATOM,
    }
}

/// Canonical text; `parse(format(e)) == e`.
pub fn format(e: &Expr) -> String {
    fmt(e, true)
}

fn wrap(e: &Expr, min: u8, top: bool) -> String {
    if level(e) < min {
        format!("({})", fmt(e, false))
    } else {
        fmt(e, top)
    }
}

/// Operand of `^` on either side; rational literals need parentheses there.
fn pow_operand(e: &Expr, min: u8) -> String {
    if matches!(e, Expr::Rat(_)) {
        format!("({})", fmt(e, false))
    } else {
        wrap(e, min, false)
    }
}

/// Whether `l/r` written without spaces still lexes a `/` at the join.
fn slash_survives(l: &str, r: &str) -> bool {
    let joined = format!("{l}/{r}");
    match tokenize(&joined) {
        Ok(toks) => toks.iter().any(|t| t.tok == Tok::Slash && t.offset == l.len()),
        Err(_) => false,
    }
}

fn fmt(e: &Expr, top: bool) -> String {
    match e {
        Expr::Int(v) => v.to_string(),
        Expr::Rat(q) => format!("{}/{}", q.numer(), q.denom()),
        Expr::Var(v) => v.clone(),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let op = if matches!(e, Expr::Add(..)) { "+" } else { "-" };
            let l = wrap(a, ADD, top);
            let r = wrap(b, MUL, top);
            if top {
                format!("{l} {op} {r}")
            } else {
                format!("{l}{op}{r}")
            }
        }
        Expr::Mul(a, b) => {
            let l = wrap(a, MUL, top);
            let r = wrap(b, NEG, top);
            if top && matches!(**a, Expr::Div(..)) {
                format!("{l} * {r}")
            } else {
                format!("{l}*{r}")
            }
        }
        Expr::Div(a, b) => {
            let l = wrap(a, MUL, top);
            let r = wrap(b, NEG, top);
            if slash_survives(&l, &r) {
                format!("{l}/{r}")
            } else {
                format!("{l} / {r}")
            }
        }
        Expr::Neg(a) => format!("-{}", wrap(a, NEG, top)),
        Expr::Pow(b, x) => format!("{}^{}", pow_operand(b, ATOM), pow_operand(x, NEG)),
        Expr::AltSign(x) => {
            let exp = match &**x {
                Expr::Add(e, one) if one.is_int(1) && !matches!(&**e, Expr::Sub(_, o) if o.is_int(1)) => {
                    pow_operand(e, NEG)
                }
                other => {
                    let sub = Expr::Sub(Box::new(other.clone()), Box::new(Expr::int(1)));
                    pow_operand(&sub, NEG)
                }
            };
            format!("(-1)^{exp}")
        }
        Expr::Sum { var, lower, upper, body } => {
            let hi = match upper {
                Bound::Finite(u) => fmt(u, false),
                Bound::Inf => "inf".to_string(),
            };
            format!("sum({var}={}..{hi}, {})", fmt(lower, false), fmt(body, true))
        }
        Expr::Call(b, args) => {
            if args.is_empty() {
                b.name().to_string()
            } else {
                let parts: Vec<String> = args.iter().map(|a| fmt(a, false)).collect();
                format!("{}({})", b.name(), parts.join(","))
            }
        }
    }
}
