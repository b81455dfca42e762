use super::ast::{is_reserved, Bound, Builtin, Expr};
use super::lexer::{tokenize, Tok, Token};
use super::ParseError;
use crate::numerics::Rational;

pub const MAX_INPUT: usize = 64 * 1024;
pub const MAX_DEPTH: usize = 200;

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    if src.len() > MAX_INPUT {
        return Err(ParseError::at(src, MAX_INPUT, "input longer than 64 KiB", &[]));
    }
    let toks = tokenize(src)?;
    let mut p = Parser { src, toks, pos: 0, depth: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.error("unexpected input after the expression", &["operator", "end of input"]));
    }
    Ok(e)
}

/// Byte-level entry point; invalid UTF-8 is reported as a parse error.
pub fn parse_bytes(bytes: &[u8]) -> Result<Expr, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(s) => parse(s),
        Err(e) => {
            let valid = e.valid_up_to();
            let prefix = std::str::from_utf8(&bytes[..valid]).unwrap_or("");
            Err(ParseError::at(prefix, valid, "input is not valid UTF-8", &[]))
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str, expected: &[&str]) -> ParseError {
        let msg = format!("{msg}, found {}", self.peek().describe());
        ParseError::at(self.src, self.offset(), &msg, expected)
    }

    fn expect(&mut self, t: Tok, what: &str, context: &str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected {what} {context}"), &[what]))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::at(self.src, self.offset(), "expression nested too deeply", &[]));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let out = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.factor()?))
        } else {
            let base = self.atom()?;
            if *self.peek() == Tok::Caret {
                self.bump();
                let exp = self.factor()?;
                make_pow(base, exp)
            } else {
                base
            }
        };
        self.depth -= 1;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::Rat(a, b) => {
                self.bump();
                Ok(Expr::Rat(Rational::new(a, b).expect("lexer rejects zero denominators")))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`", "to close the parenthesis")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if name == "sum" {
                    return self.sum();
                }
                if name == "inf" {
                    return Err(self.error("`inf` is only allowed as a sum upper bound", &["expression"]));
                }
                self.bump();
                if let Some(b) = Builtin::from_name(&name) {
                    return self.call(b);
                }
                Ok(Expr::Var(name))
            }
            _ => Err(self.error("expected an expression", &["number", "identifier", "`(`", "`sum`"])),
        }
    }

    fn call(&mut self, b: Builtin) -> Result<Expr, ParseError> {
        let arity = b.arity();
        if arity == 0 {
            if *self.peek() == Tok::LParen {
                return Err(self.error(&format!("`{}` is a constant and takes no arguments", b.name()), &["operator"]));
            }
            return Ok(Expr::Call(b, vec![]));
        }
        self.expect(Tok::LParen, "`(`", &format!("after `{}`", b.name()))?;
        let mut args = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.expr()?);
        }
        if args.len() != arity {
            let what = if args.len() < arity { "`,`" } else { "`)`" };
            return Err(self.error(
                &format!("`{}` takes {arity} argument(s), got {}", b.name(), args.len()),
                &[what],
            ));
        }
        self.expect(Tok::RParen, "`)`", &format!("to close the `{}` call", b.name()))?;
        Ok(Expr::Call(b, args))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.bump();
        self.expect(Tok::LParen, "`(`", "after `sum`")?;
        let var = match self.peek().clone() {
            Tok::Ident(v) if !is_reserved(&v) => {
                self.bump();
                v
            }
            Tok::Ident(v) => return Err(self.error(&format!("`{v}` is reserved and cannot be a summation index"), &["identifier"])),
            _ => return Err(self.error("expected the summation index", &["identifier"])),
        };
        self.expect(Tok::Eq, "`=`", "after the summation index")?;
        let lower = self.expr()?;
        self.expect(Tok::DotDot, "`..`", "in the summation range")?;
        let upper = match self.peek() {
            Tok::Ident(s) if s == "inf" => {
                self.bump();
                Bound::Inf
            }
            Tok::Comma | Tok::RParen | Tok::End => {
                return Err(self.error("malformed range: missing upper bound", &["expression", "`inf`"]));
            }
            _ => Bound::Finite(Box::new(self.expr()?)),
        };
        self.expect(Tok::Comma, "`,`", "between the range and the summand")?;
        let body = self.expr()?;
        self.expect(Tok::RParen, "`)`", "to close `sum`")?;
        Ok(Expr::Sum { var, lower: Box::new(lower), upper, body: Box::new(body) })
    }
}

/// `(-1)^e` becomes a sign node.
fn make_pow(base: Expr, exp: Expr) -> Expr {
    if let Expr::Neg(inner) = &base {
        if inner.is_int(1) {
            return match exp {
                Expr::Sub(x, one) if one.is_int(1) => Expr::AltSign(x),
                e => Expr::AltSign(Box::new(Expr::Add(Box::new(e), Box::new(Expr::int(1))))),
            };
        }
    }
    Expr::Pow(Box::new(base), Box::new(exp))
}
