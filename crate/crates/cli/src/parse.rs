//! Equation grammar: rational literals, the variables of the caller's
//! choice, `+ - * ^` and parentheses. No implicit multiplication.

use puiseux_core::algnum::{Alg, Rational, Tower};
use puiseux_core::poly::BivPoly;
use puiseux_core::{Error, Result};

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Var(String),
    Op(char),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            let digits = |i: &mut usize| {
                let s = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                chars[s..*i].iter().collect::<String>()
            };
            let num: BigInt = digits(&mut i).parse().unwrap();
            let mut den = BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                if i >= chars.len() || !chars[i].is_ascii_digit() {
                    return Err(err(i, "expected a denominator"));
                }
                den = digits(&mut i).parse().unwrap();
                if den == BigInt::from(0) {
                    return Err(err(start, "zero denominator"));
                }
            }
            out.push((start, Tok::Num(Rational::new(num, den))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((start, Tok::Var(chars[start..i].iter().collect())));
        } else if "+-*^()".contains(c) || c == '−' {
            out.push((i, Tok::Op(if c == '−' { '-' } else { c })));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [(&'a str, (u32, u32))],
    tw: Tower,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<BivPoly> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<BivPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            acc = acc.mul(&self.tw, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BivPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(e)) if e.is_integer() => {
                self.at += 1;
                let e: u32 = e.to_integer().try_into().map_err(|_| err(pos, "exponent too large"))?;
                Ok(base.pow(&self.tw, e))
            }
            _ => Err(err(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<BivPoly> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.at += 1;
                Ok(BivPoly::constant(Alg::from_rational(r)))
            }
            Some(Tok::Var(v)) => {
                self.at += 1;
                match self.vars.iter().find(|(name, _)| *name == v) {
                    Some((_, (i, j))) => Ok(BivPoly::monomial(*i, *j, Alg::one())),
                    None => Err(err(pos, format!("unknown variable '{v}'"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(err(self.pos(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(err(pos, format!("unexpected '{c}'"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

fn parse_with(src: &str, vars: &[(&str, (u32, u32))]) -> Result<BivPoly> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.chars().count(), vars, tw: Tower::rationals() };
    let out = p.sum()?;
    if p.at < p.toks.len() {
        let pos = p.pos();
        return Err(match &p.toks[p.at].1 {
            Tok::Op(c) => err(pos, format!("unexpected '{c}'")),
            _ => err(pos, "missing operator (implicit multiplication is not allowed)"),
        });
    }
    Ok(out)
}

/// `F(y, p)` with `p` standing for `y'`.
pub fn parse_equation(src: &str) -> Result<BivPoly> {
    parse_with(src, &[("y", (1, 0)), ("p", (0, 1))])
}

/// A univariate polynomial in `z`, coefficients low to high.
pub fn parse_univariate(src: &str) -> Result<Vec<Alg>> {
    let f = parse_with(src, &[("z", (1, 0))])?;
    Ok((0..=f.deg_y()).map(|i| f.coeff(i, 0)).collect())
}
