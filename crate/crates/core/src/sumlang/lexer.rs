use num_bigint::BigInt;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    /// `a/b` written without spaces.
    Rat(BigInt, BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    DotDot,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number `{v}`"),
            Tok::Rat(a, b) => format!("rational `{a}/{b}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::DotDot => "`..`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub offset: usize,
}

fn digits_end(b: &[u8], mut i: usize) -> usize {
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    i
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let b = src.as_bytes();
    let mut out: Vec<Token> = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(t) = simple {
            out.push(Token { tok: t, offset: start });
            i += 1;
            continue;
        }
        if c == b'.' {
            if b.get(i + 1) == Some(&b'.') {
                out.push(Token { tok: Tok::DotDot, offset: start });
                i += 2;
                continue;
            }
            return Err(ParseError::at(src, start, "a lone `.`; ranges are written `a..b`", &["`..`"]));
        }
        if c.is_ascii_digit() {
            let end = digits_end(b, i);
            let num: BigInt = src[i..end].parse().expect("ascii digits");
            let after_caret = matches!(out.last(), Some(Token { tok: Tok::Caret, .. }));
            if !after_caret && b.get(end) == Some(&b'/') && b.get(end + 1).is_some_and(u8::is_ascii_digit) {
                let dend = digits_end(b, end + 1);
                let den: BigInt = src[end + 1..dend].parse().expect("ascii digits");
                if den == BigInt::from(0) {
                    return Err(ParseError::at(src, end + 1, "zero denominator in rational literal", &["nonzero integer"]));
                }
                out.push(Token { tok: Tok::Rat(num, den), offset: start });
                i = dend;
            } else {
                out.push(Token { tok: Tok::Int(num), offset: start });
                i = end;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let mut end = i + 1;
            while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'_') {
                end += 1;
            }
            out.push(Token { tok: Tok::Ident(src[i..end].to_string()), offset: start });
            i = end;
            continue;
        }
        let ch = src[i..].chars().next().unwrap_or('?');
        return Err(ParseError::at(src, start, &format!("unexpected character `{ch}`"), &["expression"]));
    }
    out.push(Token { tok: Tok::End, offset: b.len() });
    Ok(out)
}
