//! Text form of Laurent polynomials and `t`-polynomials.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['+' | '-'] integer]
//! atom   := integer | 'A' | 't' | 'S_' integer | '(' expr ')'
//! ```
//!
//! An expression using `S_k` tokens and no `t` is read in the Chebyshev
//! basis; anything mentioning `t` ends up in the monomial basis. Printing is
//! highest degree first and re-parses to the same value and basis.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chebyshev::{to_monomial, Basis, TPoly};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    A,
    T,
    S(u32),
    Caret,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let mut toks = Vec::new();
    let err = |line, column, message: &str| ParseError {
        line,
        column,
        message: message.to_string(),
    };
    while i < chars.len() {
        let ch = chars[i];
        let (l0, c0) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let single = match ch {
            'A' => Some(Tok::A),
            't' => Some(Tok::T),
            '^' => Some(Tok::Caret),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, l0, c0));
            i += 1;
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            toks.push((Tok::Int(s.parse().unwrap()), l0, c0));
            continue;
        }
        if ch == 'S' {
            if chars.get(i + 1) != Some(&'_') {
                return Err(err(l0, c0 + 1, "expected '_' after 'S'"));
            }
            let start = i + 2;
            let mut j = start;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == start {
                return Err(err(l0, c0 + 2, "expected index after 'S_'"));
            }
            let s: String = chars[start..j].iter().collect();
            let k = s
                .parse::<u32>()
                .map_err(|_| err(l0, c0 + 2, "Chebyshev index too large"))?;
            col += j - i;
            i = j;
            toks.push((Tok::S(k), l0, c0));
            continue;
        }
        return Err(err(l0, c0, &alloc::format!("unexpected character '{ch}'")));
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

#[derive(Debug, Clone)]
enum Val {
    Scalar(LaurentPoly),
    Poly(TPoly),
}

impl Val {
    fn into_poly(self, basis: Basis) -> TPoly {
        match self {
            Val::Scalar(c) => TPoly::constant(basis, c),
            Val::Poly(p) => p,
        }
    }

    fn add(self, other: Val) -> Val {
        match (self, other) {
            (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(&a + &b),
            (Val::Scalar(a), Val::Poly(p)) | (Val::Poly(p), Val::Scalar(a)) => {
                let basis = p.basis();
                Val::Poly(p.add(&TPoly::constant(basis, a)).unwrap())
            }
            (Val::Poly(p), Val::Poly(q)) => {
                if p.basis() == q.basis() {
                    Val::Poly(p.add(&q).unwrap())
                } else {
                    Val::Poly(to_monomial(&p).add(&to_monomial(&q)).unwrap())
                }
            }
        }
    }

    fn neg(self) -> Val {
        match self {
            Val::Scalar(a) => Val::Scalar(-a),
            Val::Poly(p) => Val::Poly(p.scale(&LaurentPoly::constant(-1))),
        }
    }

    fn mul(self, other: Val) -> Val {
        match (self, other) {
            (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(&a * &b),
            (Val::Scalar(a), Val::Poly(p)) | (Val::Poly(p), Val::Scalar(a)) => Val::Poly(p.scale(&a)),
            (Val::Poly(p), Val::Poly(q)) => Val::Poly(to_monomial(&p).mul(&to_monomial(&q)).unwrap()),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn error(&self, message: &str) -> ParseError {
        let (_, line, column) = self.toks[self.pos];
        ParseError {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Int(_) | Tok::A | Tok::T | Tok::S(_) | Tok::LParen
        )
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                acc = acc.mul(self.factor()?);
            } else if self.starts_atom() {
                acc = acc.mul(self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        match self.peek().clone() {
            Tok::Int(k) => {
                let k = k.to_i64().ok_or_else(|| self.error("exponent out of range"))?;
                self.bump();
                Ok(if negative { -k } else { k })
            }
            _ => Err(self.error("expected integer exponent")),
        }
    }

    fn factor(&mut self) -> Result<Val, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.pos;
        let e = self.exponent()?;
        let fail = |p: &Parser, msg: &str| {
            let (_, line, column) = p.toks[at];
            ParseError {
                line,
                column,
                message: msg.to_string(),
            }
        };
        match base {
            Val::Scalar(c) => {
                if e >= 0 {
                    let e = u32::try_from(e).map_err(|_| fail(self, "exponent out of range"))?;
                    Ok(Val::Scalar(c.pow(e)))
                } else {
                    c.unit_pow(e)
                        .map(Val::Scalar)
                        .ok_or_else(|| fail(self, "negative power of a non-unit"))
                }
            }
            Val::Poly(p) => {
                if e < 0 {
                    return Err(fail(self, "negative power of a t-polynomial"));
                }
                let mut acc = Val::Scalar(LaurentPoly::one());
                for _ in 0..e {
                    acc = acc.mul(Val::Poly(p.clone()));
                }
                Ok(acc)
            }
        }
    }

    fn atom(&mut self) -> Result<Val, ParseError> {
        match self.peek().clone() {
            Tok::Int(k) => {
                self.bump();
                Ok(Val::Scalar(LaurentPoly::constant(k)))
            }
            Tok::A => {
                self.bump();
                Ok(Val::Scalar(LaurentPoly::a_pow(1)))
            }
            Tok::T => {
                self.bump();
                Ok(Val::Poly(TPoly::t()))
            }
            Tok::S(k) => {
                self.bump();
                Ok(Val::Poly(TPoly::term(Basis::Chebyshev, k, LaurentPoly::one())))
            }
            Tok::LParen => {
                self.bump();
                let v = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(v)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            _ => Err(self.error("expected a term")),
        }
    }
}

fn parse_val(text: &str) -> Result<Val, ParseError> {
    let lexer = lex(text)?;
    let mut p = Parser {
        toks: lexer.toks,
        pos: 0,
    };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses a `t`-polynomial; pure Laurent input gives a monomial-basis
/// constant.
pub fn parse_tpoly(text: &str) -> Result<TPoly, ParseError> {
    Ok(parse_val(text)?.into_poly(Basis::Monomial))
}

pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    match parse_val(text)? {
        Val::Scalar(c) => Ok(c),
        Val::Poly(_) => Err(ParseError {
            line: 1,
            column: 1,
            message: "expected a polynomial in A alone".to_string(),
        }),
    }
}

fn write_signed_term(f: &mut fmt::Formatter<'_>, first: bool, negative: bool, body: &str) -> fmt::Result {
    match (first, negative) {
        (true, true) => write!(f, "-{body}"),
        (true, false) => write!(f, "{body}"),
        (false, true) => write!(f, " - {body}"),
        (false, false) => write!(f, " + {body}"),
    }
}

impl fmt::Display for TPoly {
    /// Highest index first: `t^2 - 1`, `(A^3 + A^-3)S_2 - 2S_0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return match self.basis() {
                Basis::Monomial => f.write_str("0"),
                Basis::Chebyshev => f.write_str("0*S_0"),
            };
        }
        let mut first = true;
        for (n, c) in self.coeffs().rev() {
            let element = match (self.basis(), n) {
                (Basis::Monomial, 0) => String::new(),
                (Basis::Monomial, 1) => String::from("t"),
                (Basis::Monomial, _) => alloc::format!("t^{n}"),
                (Basis::Chebyshev, _) => alloc::format!("S_{n}"),
            };
            if element.is_empty() {
                // constant term: one signed term per power of A
                for (e, k) in c.terms().rev() {
                    let body = LaurentPoly::monomial(k.abs(), e).to_string();
                    write_signed_term(f, first, k.is_negative(), &body)?;
                    first = false;
                }
                continue;
            }
            if c.num_terms() == 1 {
                let (e, k) = c.terms().next().unwrap();
                let mag = LaurentPoly::monomial(k.abs(), e);
                let body = if mag.is_one() {
                    element
                } else {
                    alloc::format!("{mag}{element}")
                };
                write_signed_term(f, first, k.is_negative(), &body)?;
            } else {
                write_signed_term(f, first, false, &alloc::format!("({c}){element}"))?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Helper for callers that want an integer out of a constant polynomial.
pub fn as_integer(p: &LaurentPoly) -> Option<BigInt> {
    match p.num_terms() {
        0 => Some(BigInt::zero()),
        1 if p.min_exp() == Some(0) => Some(p.coeff(0)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::chebyshev_s;

    #[test]
    fn parse_examples() {
        let r2 = parse_tpoly("(A^3+A^-3)*(t^2-2) - 2A - 2A^-1").unwrap();
        let c = LaurentPoly::sym_sum(3);
        let expect = TPoly::from_coeffs(
            Basis::Monomial,
            [
                (2, c.clone()),
                (
                    0,
                    &c.scale(&(-2).into()) - &LaurentPoly::sym_sum(1).scale(&2.into()),
                ),
            ],
        );
        assert_eq!(r2, expect);

        let s = parse_tpoly("S_2 + S_0").unwrap();
        assert_eq!(s.basis(), Basis::Chebyshev);
        assert!(s.same_value(&parse_tpoly("t^2").unwrap()));

        let e = parse_tpoly("t^").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_tpoly("A +\n  (t ^ 2").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        assert!(parse_tpoly("(A+1)^-1").is_err());
        assert!(parse_laurent("t").is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(chebyshev_s(2).to_string(), "t^2 - 1");
        assert_eq!(
            parse_laurent("A^-3 + 2A^-1 + 2A + A^3").unwrap().to_string(),
            "A^3 + 2A + 2A^-1 + A^-3"
        );
        assert_eq!(TPoly::zero(Basis::Chebyshev).to_string(), "0*S_0");
        let p = parse_tpoly("-A^2 S_3 + (A+1) S_1 - 2 S_0").unwrap();
        assert_eq!(p.to_string(), "-A^2S_3 + (A + 1)S_1 - 2S_0");
        assert_eq!(parse_tpoly(&p.to_string()).unwrap(), p);
    }
}
