//! Parsers for scalar literals and Hecke-Clifford element expressions.
//!
//! Scalars: integers, `v`, `u`, `i`, parentheses and `+ - * / ^` (integer
//! exponents, possibly negative). Elements:
//!
//! ```text
//! EXPR   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [coeff ['*']] factor ('*'? factor)*   (coeff or a factor)
//! factor := 'T' INT | 'c' INT
//! ```
//!
//! e.g. `(v-1)/2 * T1 T2 c1 c3 + c2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hecke_clifford::{Element, Generator};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    V,
    U,
    I,
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |mut k: usize| {
        let start = k;
        while k < b.len() && b[k].is_ascii_digit() {
            k += 1;
        }
        (start, k)
    };
    while k < b.len() {
        let ch = b[k];
        let pos = k;
        match ch {
            b' ' | b'\t' | b'\n' => {
                k += 1;
                continue;
            }
            b'0'..=b'9' => {
                let (a, e) = digits(k);
                out.push((pos, Tok::Int(s[a..e].parse().unwrap())));
                k = e;
                continue;
            }
            b'T' | b'c' => {
                let (a, e) = digits(k + 1);
                if a == e {
                    return Err(err(pos, format!("expected index after '{}'", ch as char)));
                }
                let idx: usize = s[a..e]
                    .parse()
                    .map_err(|_| err(a, "generator index too large"))?;
                let g = if ch == b'T' {
                    Generator::T(idx)
                } else {
                    Generator::C(idx)
                };
                out.push((pos, Tok::Gen(g)));
                k = e;
                continue;
            }
            b'v' => out.push((pos, Tok::V)),
            b'u' => out.push((pos, Tok::U)),
            b'i' => out.push((pos, Tok::I)),
            b'+' => out.push((pos, Tok::Plus)),
            b'-' => out.push((pos, Tok::Minus)),
            b'*' => out.push((pos, Tok::Star)),
            b'/' => out.push((pos, Tok::Slash)),
            b'^' => out.push((pos, Tok::Caret)),
            b'(' => out.push((pos, Tok::LParen)),
            b')' => out.push((pos, Tok::RParen)),
            _ => return Err(err(pos, format!("unexpected character '{}'", ch as char))),
        }
        k += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(s)?,
            at: 0,
            end: s.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.at + k).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(err(self.pos(), format!("unexpected token {t:?}"))),
        }
    }

    fn scalar_expr(&mut self) -> Result<Scalar> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -self.scalar_term(false)?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.scalar_term(false)?
            }
            _ => self.scalar_term(false)?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.scalar_term(false)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.scalar_term(false)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Product/quotient chain. With `stop_at_gen`, a `*` followed by a
    /// generator (or a bare generator) ends the chain.
    fn scalar_term(&mut self, stop_at_gen: bool) -> Result<Scalar> {
        let mut acc = self.scalar_power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    if stop_at_gen && matches!(self.peek_at(1), Some(Tok::Gen(_))) {
                        return Ok(acc);
                    }
                    self.bump();
                    acc = &acc * &self.scalar_power()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.scalar_power()?;
                    acc = acc.checked_div(&d).map_err(|e| err(pos, e.to_string()))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn scalar_power(&mut self) -> Result<Scalar> {
        let base = self.scalar_atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let e = match self.bump() {
            Some(Tok::Int(k)) => i64::try_from(k).map_err(|_| err(pos, "exponent too large"))?,
            _ => return Err(err(pos, "expected integer exponent")),
        };
        base.pow(if neg { -e } else { e })
            .map_err(|x| err(pos, x.to_string()))
    }

    fn scalar_atom(&mut self) -> Result<Scalar> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(k)) => Ok(Scalar::from_bigint(k)),
            Some(Tok::V) => Ok(Scalar::v()),
            Some(Tok::U) => Ok(Scalar::u()),
            Some(Tok::I) => Ok(Scalar::i()),
            Some(Tok::LParen) => {
                let x = self.scalar_expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(x),
                    _ => Err(err(self.pos_before(), "expected ')'")),
                }
            }
            Some(Tok::Minus) => Ok(-self.scalar_power()?),
            Some(t) => Err(err(pos, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }

    fn pos_before(&self) -> usize {
        self.toks
            .get(self.at.saturating_sub(1))
            .map_or(self.end, |t| t.0)
    }

    fn element_expr(&mut self, n: usize) -> Result<Element> {
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -1
            }
            Some(Tok::Plus) => {
                self.bump();
                1
            }
            _ => 1,
        };
        let mut acc = Element::zero(n);
        loop {
            let t = self.element_term(n)?;
            if sign < 0 {
                acc = &acc - &t;
            } else {
                acc = &acc + &t;
            }
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                None => return Ok(acc),
                Some(t) => return Err(err(self.pos(), format!("unexpected token {t:?}"))),
            }
            self.bump();
        }
    }

    fn element_term(&mut self, n: usize) -> Result<Element> {
        let coeff = if matches!(self.peek(), Some(Tok::Gen(_))) {
            Scalar::one()
        } else {
            let c = self.scalar_term(true)?;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            }
            c
        };
        let mut word = Vec::new();
        loop {
            if !word.is_empty() && self.peek() == Some(&Tok::Star) {
                self.bump();
                if !matches!(self.peek(), Some(Tok::Gen(_))) {
                    return Err(err(self.pos(), "expected a generator after '*'"));
                }
            }
            let Some(Tok::Gen(g)) = self.peek() else { break };
            let g = *g;
            let pos = self.pos();
            g.check(n).map_err(|e| err(pos, e.to_string()))?;
            word.push(g);
            self.bump();
        }
        Element::from_word(n, &word, coeff)
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let mut p = Parser::new(s)?;
    if p.peek().is_none() {
        return Err(err(0, "empty scalar"));
    }
    let x = p.scalar_expr()?;
    p.expect_end()?;
    Ok(x)
}

pub fn parse_element(n: usize, s: &str) -> Result<Element> {
    let mut p = Parser::new(s)?;
    if p.peek().is_none() {
        return Err(err(0, "empty expression"));
    }
    let x = p.element_expr(n)?;
    p.expect_end()?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starred_factors() {
        assert_eq!(parse_element(2, "T1*c1").unwrap(), parse_element(2, "T1 c1").unwrap());
        match parse_element(2, "T1*(") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("3/6").unwrap(), Scalar::from_ratio(1, 2));
        assert_eq!(parse_scalar("v^2-2*v+1").unwrap(), Scalar::v_poly(&[1, -2, 1]));
        assert_eq!(parse_scalar("-(v)").unwrap(), Scalar::v_poly(&[0, -1]));
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_scalar("v + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_scalar("(v+1") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_scalar("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_scalar("v$"), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn element_grammar() {
        let e = parse_element(4, "(v-1)/2 * T1 T2 c1 c3 + c2").unwrap();
        let a = Element::from_word(
            4,
            &[Generator::T(1), Generator::T(2), Generator::C(1), Generator::C(3)],
            parse_scalar("(v-1)/2").unwrap(),
        )
        .unwrap();
        let b = Element::generator(4, Generator::C(2)).unwrap();
        assert_eq!(e, &a + &b);
        assert_eq!(parse_element(2, "T1").unwrap(), Element::generator(2, Generator::T(1)).unwrap());
        assert_eq!(parse_element(2, "- 3 T1 + 2").unwrap().terms().count(), 2);
    }

    #[test]
    fn element_index_out_of_range() {
        assert!(matches!(parse_element(2, "T2"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_element(2, "c1 c3"), Err(Error::Parse { pos: 3, .. })));
    }
}
