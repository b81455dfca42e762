use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::numerics::Rational;

/// Built-in functions and constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    H,
    SmallH,
    Hbar,
    SmallHbar,
    Zeta,
    Beta,
    Eta,
    Pi,
    Log2,
    Catalan,
    Li,
    Psi,
    B,
    E,
    Parity,
    Log,
    Fact,
    Abs,
}

impl Builtin {
    pub const ALL: [Builtin; 18] = [
        Builtin::H,
        Builtin::SmallH,
        Builtin::Hbar,
        Builtin::SmallHbar,
        Builtin::Zeta,
        Builtin::Beta,
        Builtin::Eta,
        Builtin::Pi,
        Builtin::Log2,
        Builtin::Catalan,
        Builtin::Li,
        Builtin::Psi,
        Builtin::B,
        Builtin::E,
        Builtin::Parity,
        Builtin::Log,
        Builtin::Fact,
        Builtin::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::H => "H",
            Builtin::SmallH => "h",
            Builtin::Hbar => "Hbar",
            Builtin::SmallHbar => "hbar",
            Builtin::Zeta => "zeta",
            Builtin::Beta => "beta",
            Builtin::Eta => "eta",
            Builtin::Pi => "pi",
            Builtin::Log2 => "log2",
            Builtin::Catalan => "catalan",
            Builtin::Li => "Li",
            Builtin::Psi => "psi",
            Builtin::B => "B",
            Builtin::E => "E",
            Builtin::Parity => "parity",
            Builtin::Log => "log",
            Builtin::Fact => "fact",
            Builtin::Abs => "abs",
        }
    }

    pub fn from_name(s: &str) -> Option<Builtin> {
        Builtin::ALL.iter().copied().find(|b| b.name() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::Pi | Builtin::Log2 | Builtin::Catalan => 0,
            Builtin::Zeta
            | Builtin::Beta
            | Builtin::Eta
            | Builtin::B
            | Builtin::E
            | Builtin::Parity
            | Builtin::Log
            | Builtin::Fact
            | Builtin::Abs => 1,
            Builtin::H | Builtin::SmallH | Builtin::Hbar | Builtin::SmallHbar | Builtin::Li => 2,
            Builtin::Psi => 3,
        }
    }

    /// Constants and functions with no exact rational value.
    pub fn is_transcendental(self) -> bool {
        matches!(
            self,
            Builtin::Zeta
                | Builtin::Beta
                | Builtin::Eta
                | Builtin::Pi
                | Builtin::Log2
                | Builtin::Catalan
                | Builtin::Li
                | Builtin::Psi
                | Builtin::Log
        )
    }
}

/// Words that cannot be used as variable names.
pub fn is_reserved(word: &str) -> bool {
    word == "sum" || word == "inf" || Builtin::from_name(word).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(Box<Expr>),
    Inf,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Rat(Rational),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    /// `(-1)^(x-1)`
    AltSign(Box<Expr>),
    Sum { var: String, lower: Box<Expr>, upper: Bound, body: Box<Expr> },
    Call(Builtin, Vec<Expr>),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Int(BigInt::from(v))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn is_int(&self, v: i64) -> bool {
        matches!(self, Expr::Int(i) if *i == BigInt::from(v))
    }

    /// Free variables, sorted.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Expr::Int(_) | Expr::Rat(_) => {}
            Expr::Var(v) => {
                if !bound.iter().any(|b| b == v) {
                    out.insert(v.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Expr::Neg(a) | Expr::AltSign(a) => a.collect_free(bound, out),
            Expr::Sum { var, lower, upper, body } => {
                lower.collect_free(bound, out);
                if let Bound::Finite(u) = upper {
                    u.collect_free(bound, out);
                }
                bound.push(var.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_free(bound, out)),
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.free_vars().contains(name)
    }

    /// Visits every node, parents before children.
    pub fn walk(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Int(_) | Expr::Rat(_) | Expr::Var(_) => {}
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.walk(f);
                b.walk(f);
            }
            Expr::Neg(a) | Expr::AltSign(a) => a.walk(f),
            Expr::Sum { lower, upper, body, .. } => {
                lower.walk(f);
                if let Bound::Finite(u) = upper {
                    u.walk(f);
                }
                body.walk(f);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.walk(f)),
        }
    }

    /// True when the expression has an exact rational value once its variables are bound.
    pub fn is_exact(&self) -> bool {
        let mut ok = true;
        self.walk(&mut |e| match e {
            Expr::Call(b, _) if b.is_transcendental() => ok = false,
            Expr::Sum { upper: Bound::Inf, .. } => ok = false,
            _ => {}
        });
        ok
    }

    pub fn has_infinite_sum(&self) -> bool {
        let mut found = false;
        self.walk(&mut |e| {
            if let Expr::Sum { upper: Bound::Inf, .. } = e {
                found = true;
            }
        });
        found
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Int(_) | Expr::Rat(_) | Expr::Var(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                1 + a.depth().max(b.depth())
            }
            Expr::Neg(a) | Expr::AltSign(a) => 1 + a.depth(),
            Expr::Sum { lower, upper, body, .. } => {
                let u = match upper {
                    Bound::Finite(u) => u.depth(),
                    Bound::Inf => 1,
                };
                1 + lower.depth().max(u).max(body.depth())
            }
            Expr::Call(_, args) => 1 + args.iter().map(Expr::depth).max().unwrap_or(0),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format(self))
    }
}
