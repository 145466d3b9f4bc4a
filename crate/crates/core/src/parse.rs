//! Text input for polynomials and field elements.
//!
//! Expressions use `+ - * / ^`, parentheses, integer literals and the
//! variable `x` (also `t`, `a` or `theta`), with juxtaposition as
//! multiplication (`3x^2`). A bracketed list `[c0, c1, ...]` gives
//! coefficients from low to high degree.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::{QPoly, Rational, ZPoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Op(char),
    Open,
    Close,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[st..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| err(format!("bad number {text}")))?));
        } else if c.is_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_alphanumeric() {
                i += 1;
            }
            let word: String = cs[st..i].iter().collect();
            match word.as_str() {
                "x" | "t" | "a" | "theta" | "θ" => out.push(Tok::Var),
                _ => return Err(err(format!("unknown symbol '{word}'"))),
            }
        } else {
            match c {
                '+' | '-' | '*' | '/' | '^' => out.push(Tok::Op(c)),
                '(' => out.push(Tok::Open),
                ')' => out.push(Tok::Close),
                _ => return Err(err(format!("unexpected character '{c}'"))),
            }
            i += 1;
        }
    }
    Ok(out)
}

/// Arithmetic needed by the evaluator.
trait Ring: Clone {
    fn num(&self, n: &BigInt) -> Self;
    fn var(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;
    fn pow(&self, e: i64) -> Result<Self>;
}

struct Parser<'a, R: Ring> {
    toks: &'a [Tok],
    pos: usize,
    proto: R,
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<R> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<R> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                Some(Tok::Num(_) | Tok::Var | Tok::Open) => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<R> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                let v = self.unary()?;
                Ok(self.proto.num(&BigInt::zero()).sub(&v))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<R> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.to_i64().ok_or_else(|| err("exponent too large"))?,
                _ => return Err(err("expected an integer exponent")),
            };
            self.pos += 1;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<R> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.proto.num(&n))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(self.proto.var())
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err("missing ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(err(format!("unexpected token {t:?}"))),
            None => Err(err("unexpected end of input")),
        }
    }
}

fn evaluate<R: Ring>(s: &str, proto: R) -> Result<R> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(err("empty expression"));
    }
    let mut p = Parser { toks: &toks, pos: 0, proto };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(err(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(v)
}

impl Ring for QPoly {
    fn num(&self, n: &BigInt) -> Self {
        QPoly::constant(Rational::from_integer(n.clone()))
    }
    fn var(&self) -> Self {
        QPoly::x()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self> {
        match o.degree() {
            Some(0) => Ok(self.scale(&(Rational::from_integer(1.into()) / o.coeff(0)))),
            None => Err(Error::DivisionByZero),
            _ => Err(err("polynomials can only be divided by constants")),
        }
    }
    fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return Err(err("negative exponent in a polynomial"));
        }
        Ok(Poly::pow(self, e as u32))
    }
}

use crate::poly::Poly;

#[derive(Clone)]
struct Elem<'a> {
    k: &'a NumberField,
    v: FieldElement,
}

impl Ring for Elem<'_> {
    fn num(&self, n: &BigInt) -> Self {
        Elem { k: self.k, v: self.k.from_int(n.clone()) }
    }
    fn var(&self) -> Self {
        Elem { k: self.k, v: self.k.theta() }
    }
    fn add(&self, o: &Self) -> Self {
        Elem { k: self.k, v: self.k.add(&self.v, &o.v) }
    }
    fn sub(&self, o: &Self) -> Self {
        Elem { k: self.k, v: self.k.sub(&self.v, &o.v) }
    }
    fn mul(&self, o: &Self) -> Self {
        Elem { k: self.k, v: self.k.mul(&self.v, &o.v) }
    }
    fn div(&self, o: &Self) -> Result<Self> {
        Ok(Elem { k: self.k, v: self.k.div(&self.v, &o.v)? })
    }
    fn pow(&self, e: i64) -> Result<Self> {
        Ok(Elem { k: self.k, v: self.k.pow(&self.v, e)? })
    }
}

/// Rationals in a bracketed, comma-separated list.
fn parse_list(s: &str) -> Option<Result<Vec<Rational>>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
    Some(
        inner
            .split(',')
            .map(|c| {
                let p = evaluate(c, QPoly::zero())?;
                match p.degree() {
                    None => Ok(Rational::zero()),
                    Some(0) => Ok(p.coeff(0)),
                    _ => Err(err(format!("'{}' is not a number", c.trim()))),
                }
            })
            .collect(),
    )
}

pub fn parse_qpoly(s: &str) -> Result<QPoly> {
    if let Some(cs) = parse_list(s) {
        return Ok(QPoly::new(cs?));
    }
    evaluate(s, QPoly::zero())
}

/// An integer polynomial.
pub fn parse_poly(s: &str) -> Result<ZPoly> {
    parse_qpoly(s)?
        .to_integer()
        .ok_or_else(|| err(format!("'{s}' does not have integer coefficients")))
}

/// The field defined by a polynomial written as an expression or list.
pub fn parse_field(s: &str) -> Result<NumberField> {
    NumberField::new(parse_poly(s)?)
}

/// An element of K, with the variable standing for θ.
pub fn parse_element(k: &NumberField, s: &str) -> Result<FieldElement> {
    if let Some(cs) = parse_list(s) {
        let cs = cs?;
        if cs.len() > k.degree {
            return Err(err(format!("{} coordinates given for a degree-{} field", cs.len(), k.degree)));
        }
        return Ok(k.elem(cs));
    }
    Ok(evaluate(s, Elem { k, v: k.zero() })?.v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("x^3 - x^2 + 1").unwrap(), ZPoly::from_i64s(&[1, 0, -1, 1]));
        assert_eq!(parse_poly("[1, 0, -1, 1]").unwrap(), ZPoly::from_i64s(&[1, 0, -1, 1]));
        assert_eq!(parse_poly("(x-1)(x+1)").unwrap(), ZPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(parse_poly("2x^2/2 - 2").unwrap(), ZPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(parse_poly("x").unwrap(), ZPoly::from_i64s(&[0, 1]));
        assert!(parse_poly("x^2 + 1/2").is_err());
        assert!(parse_poly("x^2 +").is_err());
        assert!(parse_poly("y^2").is_err());
    }

    #[test]
    fn elements() {
        let k = parse_field("x^2 - 2").unwrap();
        let e = parse_element(&k, "1/(1+x)").unwrap();
        assert_eq!(e, k.elem_i64(&[-1, 1]));
        assert_eq!(parse_element(&k, "[3/2, 1]").unwrap(), k.elem(vec![Rational::new(3.into(), 2.into()), Rational::from_integer(1.into())]));
        assert_eq!(parse_element(&k, "x^-2").unwrap(), k.from_rational(Rational::new(1.into(), 2.into())));
        assert_eq!(parse_element(&k, "1/0").unwrap_err(), Error::DivisionByZero);
    }
}
