//! The function field K = k(t) of the base line and its printing.

use std::fmt::Write as _;

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::{ConstantField, Scalar};

/// A rational function p(t)/q(t) over ℚ or 𝔽_p: the scalars of every
/// curve in this crate.
pub type FieldElement = RatFunc<Scalar>;

impl RatFunc<Scalar> {
    pub fn constant_field(&self) -> ConstantField {
        self.template().field()
    }

    pub fn from_i64(k: ConstantField, n: i64) -> Self {
        RatFunc::constant(k.from_i64(n))
    }

    /// `n/d` as a constant function.
    pub fn from_ratio(k: ConstantField, n: i64, d: i64) -> Self {
        RatFunc::constant(k.from_i64(n) / k.from_i64(d))
    }

    pub fn var(k: ConstantField) -> Self {
        RatFunc::variable(&k.one())
    }

    /// Canonical text `num/(den)` in the grammar accepted by the parser.
    pub fn to_expr(&self, var: &str) -> String {
        let num = self.num().to_expr(var);
        if self.den().is_constant() {
            return num;
        }
        let num = if term_count(self.num()) > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = self.den().to_expr(var);
        if term_count(self.den()) > 1 {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }
}

fn term_count<F: Field>(p: &Poly<F>) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

impl Poly<Scalar> {
    pub fn to_expr(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                let _ = write!(out, "{a}");
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{a}*{mono}");
            }
        }
        out
    }
}

impl Poly<FieldElement> {
    /// Text in the parser grammar, as a polynomial in `x` with coefficients
    /// in `var`.
    pub fn to_expr(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let c = c.to_expr(var);
            let term = if k == 0 {
                wrap(&c)
            } else if c == "1" {
                mono
            } else if c == "-1" {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", wrap(&c))
            };
            terms.push(term);
        }
        terms.join(" + ").replace(" + -", " - ")
    }
}

impl RatFunc<FieldElement> {
    pub fn to_expr(&self, var: &str) -> String {
        let num = self.num().to_expr(var);
        if self.den().is_constant() {
            // the denominator is monic, so it is 1
            return num;
        }
        format!("({num})/({})", self.den().to_expr(var))
    }
}

/// Parenthesizes anything but a single signed term.
fn wrap(s: &str) -> String {
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let q = ConstantField::Rationals;
        let s = FieldElement::var(q);
        let one = FieldElement::from_i64(q, 1);
        let f = FieldElement::from_i64(q, -8)
            / (s.clone()
                * &(s.clone() * &s - &FieldElement::from_i64(q, 4))
                * &(s.clone() * &s - &FieldElement::from_i64(q, 2)));
        assert_eq!(f.to_expr("s"), "-8/(s^5 - 6*s^3 + 8*s)");
        let g = (s.clone() + &one) / (s.clone() * &s);
        assert_eq!(g.to_expr("s"), "(s + 1)/s^2");
        let h = FieldElement::from_ratio(q, 3, 4) * &s;
        assert_eq!(h.to_expr("s"), "3/4*s");
    }

    #[test]
    fn x_polynomials_round_trip() {
        let q = ConstantField::Rationals;
        for src in [
            "x^3 - (1+t)*x^2 + t*x",
            "-x^3 + 3/2*x - t",
            "(t^2+1)/(t-3)*x^2 - 2*t*x + 1/t",
            "x",
        ] {
            let f = crate::funcfield::parse_x_polynomial(src, q, "t").unwrap();
            let printed = f.to_expr("t");
            assert_eq!(
                crate::funcfield::parse_x_polynomial(&printed, q, "t").unwrap(),
                f,
                "{printed}"
            );
        }
    }
}
