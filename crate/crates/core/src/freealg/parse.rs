use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{FreeAlgebra, NCPoly, DEGREE_CAP};
use crate::coeffs::{CoefPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Num(BigInt),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Name(chars[start..i].iter().map(|p| p.1).collect())));
        } else if "+-*^()[],/".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    alg: &'a FreeAlgebra,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse { pos: self.pos(), msg: format!("expected `{c}`") })
        }
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let e = match self.peek() {
            Some(Tok::Num(n)) => n.clone(),
            _ => return Err(Error::Parse { pos, msg: "expected a natural exponent".into() }),
        };
        self.at += 1;
        let deg = base.degree().unwrap_or(0);
        let e = match e.to_usize() {
            Some(e) if deg == 0 || e.saturating_mul(deg) <= DEGREE_CAP => e,
            _ if deg == 0 => {
                return Err(Error::Parse { pos, msg: "exponent too large".into() });
            }
            other => return Err(Error::DegreeCap(other.unwrap_or(usize::MAX).saturating_mul(deg))),
        };
        base.pow(e as u32)
    }

    fn atom(&mut self) -> Result<NCPoly> {
        let pos = self.pos();
        let tok = self
            .toks
            .get(self.at)
            .map(|t| t.1.clone())
            .ok_or(Error::Parse { pos, msg: "unexpected end of input".into() })?;
        self.at += 1;
        match tok {
            Tok::Name(name) => {
                if let Some(i) = self.alg.gen_index(&name) {
                    Ok(self.alg.gen(i))
                } else if self.alg.params().index_of(&name).is_some() {
                    self.alg.param(&name)
                } else {
                    Err(Error::UnknownSymbol { name, pos })
                }
            }
            Tok::Num(n) => {
                let mut value = Rational::from_integer(n);
                if self.eat('/') {
                    let dpos = self.pos();
                    match self.peek() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            value /= Rational::from_integer(d.clone());
                            self.at += 1;
                        }
                        _ => return Err(Error::Parse { pos: dpos, msg: "expected a nonzero denominator".into() }),
                    }
                }
                Ok(self.alg.from_coef(CoefPoly::constant(self.alg.params(), value)))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                a.commutator(&b)
            }
            Tok::Sym(c) => Err(Error::Parse { pos, msg: format!("unexpected `{c}`") }),
        }
    }
}

/// Parses an element of `alg`.
///
/// Accepted syntax: `+ - *`, natural powers `^n`, parentheses, commutators `[a,b]`,
/// rational literals `n/d`, generator names and parameter names.
pub fn parse_poly(text: &str, alg: &FreeAlgebra) -> Result<NCPoly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), alg };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::Parse { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(out)
}
