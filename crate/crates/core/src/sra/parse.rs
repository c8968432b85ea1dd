//! Element literals such as `y*x - t + 2*c1*s`.
//!
//! Grammar: sums and differences of products, `^` for non-negative integer powers, parentheses,
//! rational literals (`3`, `2/5`), parameter names (`t`, `c1`.., or `c` when there is a single
//! parameter besides `t`), generator names of `V` and group element names of the algebra.

use super::{SRAElement, SRAlgebra};
use crate::coeffs::{ParamPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Num(chars[start..i].iter().collect())));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Name(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Token::Op(ch)));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {ch:?} at offset {i}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a SRAlgebra,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.offset()))
    }

    fn expr(&mut self) -> Result<SRAElement> {
        let mut acc = match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SRAElement> {
        let mut acc = self.power()?;
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            let rhs = self.power()?;
            acc = self.alg.mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<SRAElement> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n.parse().map_err(|_| self.err("exponent too large"))?;
                    return Ok(self.alg.pow(&base, k));
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SRAElement> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if let Some(Token::Op('/')) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Num(d)) => {
                            self.pos += 1;
                            text = format!("{text}/{d}");
                        }
                        _ => return Err(self.err("expected a denominator")),
                    }
                }
                let q: Rational = text.parse()?;
                Ok(self.alg.scalar(ParamPoly::constant(self.alg.arity(), q)))
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                self.resolve(&name).ok_or_else(|| Error::Parse(format!("unknown name {name:?}")))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn resolve(&self, name: &str) -> Option<SRAElement> {
        let alg = self.alg;
        if let Some(i) = alg.generator_names().iter().position(|n| n == name) {
            return Some(alg.generator(i));
        }
        if name == "t" {
            return Some(alg.param(0));
        }
        if name == "c" && alg.arity() == 2 {
            return Some(alg.param(1));
        }
        if let Some(idx) = name.strip_prefix('c').and_then(|r| r.parse::<usize>().ok()) {
            if idx >= 1 && idx < alg.arity() {
                return Some(alg.param(idx));
            }
        }
        if name == "e" {
            return Some(alg.spherical_idempotent());
        }
        alg.group_element_by_name(name).map(|g| alg.group_element(g))
    }
}

/// Parse an element literal against the algebra's naming scheme.
pub fn parse_element(alg: &SRAlgebra, src: &str) -> Result<SRAElement> {
    let tokens = tokenize(src)?;
    let mut p = Parser { alg, tokens, pos: 0, len: src.len() };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FiniteSymplecticGroup, SymmetricRep};
    use std::sync::Arc;

    fn s2() -> SRAlgebra {
        SRAlgebra::new(Arc::new(FiniteSymplecticGroup::symmetric(2, SymmetricRep::Reflection).unwrap()))
    }

    #[test]
    fn literal_round_trip() {
        let alg = s2();
        let e = parse_element(&alg, "y*x - t - c1*s").unwrap();
        assert_eq!(alg.format(&e), "x*y");
        let f = parse_element(&alg, "(x + 2/3*y)^2 - s*x").unwrap();
        assert_eq!(alg.format(&f), "4/9*y^2 + 4/3*x*y + x^2 + x*s + 2/3*t + 2/3*c1*s");
    }

    #[test]
    fn parse_errors_carry_locations() {
        let alg = s2();
        for bad in ["x +", "q*x", "1/0", "x^y", "(x", "x $ y"] {
            assert!(matches!(parse_element(&alg, bad), Err(Error::Parse(_)) | Err(Error::DivisionByZero)), "{bad}");
        }
    }
}
