//! Expression grammar for field elements and curve data.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' integer)?
//! base   := integer | variable | '(' expr ')' | '-' factor
//! ```
//! Whitespace is insignificant. Integers are arbitrary precision.

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};

use super::element::FieldElement;
use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::ConstantField;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(src[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                position: i,
                message: format!("unexpected character `{}`", src[i..].chars().next().unwrap()),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let Some(e) = n.to_u32() else {
                        return self.err("exponent too large");
                    };
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => self.err("expected a non-negative integer exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

fn int_into<T: Field>(n: &BigInt, one: &T) -> T {
    // base 10^9 digits, most significant first
    let chunk = BigInt::from(1_000_000_000u64);
    let mut digits = Vec::new();
    let mut m = if n < &BigInt::zero() { -n.clone() } else { n.clone() };
    while !m.is_zero() {
        digits.push((&m % &chunk).to_i64().unwrap());
        m /= &chunk;
    }
    let base = one.from_i64_like(1_000_000_000);
    let mut acc = one.zero_like();
    for d in digits.iter().rev() {
        acc = acc * &base + &one.from_i64_like(*d);
    }
    if n < &BigInt::zero() {
        -acc
    } else {
        acc
    }
}

impl Expr {
    /// Evaluates in a field `T`, resolving variables through `var`.
    pub fn eval<T: Field>(&self, one: &T, var: &dyn Fn(&str) -> Option<T>) -> Result<T> {
        Ok(match self {
            Expr::Int(n) => int_into(n, one),
            Expr::Var(name) => var(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?,
            Expr::Neg(a) => -a.eval(one, var)?,
            Expr::Add(a, b) => a.eval(one, var)? + b.eval(one, var)?,
            Expr::Sub(a, b) => a.eval(one, var)? - b.eval(one, var)?,
            Expr::Mul(a, b) => a.eval(one, var)? * b.eval(one, var)?,
            Expr::Div(a, b) => {
                let d = b.eval(one, var)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval(one, var)? / d
            }
            Expr::Pow(a, e) => a.eval(one, var)?.pow_u64(*e as u64),
        })
    }
}

/// Parses a rational function in the single variable `var`.
pub fn parse_field_element(src: &str, k: ConstantField, var: &str) -> Result<FieldElement> {
    let e = parse_expr(src)?;
    let t = FieldElement::var(k);
    let one = FieldElement::from_i64(k, 1);
    e.eval(&one, &|name| (name == var).then(|| t.clone()))
}

/// Parses a polynomial in `x` whose coefficients are rational functions of `var`.
pub fn parse_x_polynomial(src: &str, k: ConstantField, var: &str) -> Result<Poly<FieldElement>> {
    let e = parse_expr(src)?;
    let kone = FieldElement::from_i64(k, 1);
    let one: RatFunc<FieldElement> = RatFunc::constant(kone.clone());
    let t: RatFunc<FieldElement> = RatFunc::constant(FieldElement::var(k));
    let x: RatFunc<FieldElement> = RatFunc::variable(&kone);
    let v = e.eval(&one, &|name| {
        if name == var {
            Some(t.clone())
        } else if name == "x" {
            Some(x.clone())
        } else {
            None
        }
    })?;
    if !v.is_polynomial() {
        return Err(Error::Input(format!("`{src}` is not a polynomial in x")));
    }
    let c = v.den().coeff(0).unwrap().clone();
    Ok(v.num().scale(&c.inv()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;

    #[test]
    fn legendre_cubic() {
        let q = ConstantField::Rationals;
        let f = parse_x_polynomial("x^3 - (1+t)*x^2 + t*x", q, "t").unwrap();
        let t = FieldElement::var(q);
        let one = FieldElement::from_i64(q, 1);
        assert_eq!(f.coeffs().len(), 4);
        assert!(f.coeffs()[0].is_zero());
        assert_eq!(f.coeffs()[1], t);
        assert_eq!(f.coeffs()[2], -(one.clone() + &t));
        assert_eq!(f.coeffs()[3], one);
    }

    #[test]
    fn exact_fraction() {
        let q = ConstantField::Rationals;
        let v = parse_field_element("1/4", q, "t").unwrap();
        assert_eq!(
            v.as_constant().unwrap().as_rational().unwrap(),
            &BigRational::new(1.into(), 4.into())
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_expr("x^^2"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_expr("(t+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("t $ 2"), Err(Error::Parse { position: 2, .. })));
        let q = ConstantField::Rationals;
        assert_eq!(parse_field_element("1/(t-t)", q, "t"), Err(Error::DivisionByZero));
        assert_eq!(
            parse_field_element("u+1", q, "t"),
            Err(Error::UnknownVariable("u".into()))
        );
    }

    #[test]
    fn mod_p_reduction() {
        let k = ConstantField::prime(5).unwrap();
        let v = parse_field_element("1/18", k, "t").unwrap();
        assert_eq!(v, FieldElement::from_i64(k, 2));
        assert_eq!(parse_field_element("1/5", k, "t"), Err(Error::DivisionByZero));
    }
}
