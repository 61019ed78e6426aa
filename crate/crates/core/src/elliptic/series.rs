use std::ops::{Add, Mul, Neg, Sub};

use crate::funcfield::{Field, Poly};

/// Truncated Laurent series `Σ cᵢ z^(valuation + i)`, known modulo
/// `z^(valuation + coeffs.len())`.
///
/// The leading coefficient may be zero only when the series carries no
/// information (all known coefficients vanish).
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<F> {
    valuation: i64,
    coeffs: Vec<F>,
    template: F,
}

impl<F: Field> LaurentSeries<F> {
    pub fn new(valuation: i64, coeffs: Vec<F>, template: &F) -> Self {
        LaurentSeries {
            valuation,
            coeffs,
            template: template.zero_like(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 && lead < self.coeffs.len() {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        self
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// First exponent not determined by the truncation.
    pub fn precision(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `z^e`; `None` if beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<F> {
        if e >= self.precision() {
            None
        } else if e < self.valuation {
            Some(self.template.zero_like())
        } else {
            Some(self.coeffs[(e - self.valuation) as usize].clone())
        }
    }

    /// True if all known coefficients vanish.
    pub fn is_indeterminate_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact order, if some known coefficient is nonzero.
    pub fn order(&self) -> Option<i64> {
        (!self.is_indeterminate_zero()).then_some(self.valuation)
    }

    pub fn truncate(mut self, precision: i64) -> Self {
        let keep = (precision - self.valuation).max(0) as usize;
        self.coeffs.truncate(keep);
        self
    }

    /// Series of a polynomial `N(x)` with `x = z⁻²`, to relative precision `n`.
    pub fn from_poly_in_inverse_square(p: &Poly<F>, n: usize, template: &F) -> Self {
        let d = p.degree().expect("nonzero polynomial") as i64;
        let mut coeffs = vec![template.zero_like(); n];
        for (k, c) in p.coeffs().iter().enumerate() {
            let idx = 2 * (d - k as i64) as usize;
            if idx < n {
                coeffs[idx] = c.clone();
            }
        }
        LaurentSeries::new(-2 * d, coeffs, template)
    }

    /// `1 + …` raised to the 1/2, for a series with valuation 0 and constant
    /// term 1; characteristic ≠ 2.
    pub fn sqrt_one_plus(&self) -> Self {
        assert!(self.valuation == 0 && self.coeffs[0].is_one());
        let n = self.coeffs.len();
        let two = self.template.from_i64_like(2);
        let mut r = vec![self.template.zero_like(); n];
        r[0] = self.template.one_like();
        // r² = a: 2 r₀ rₖ = aₖ − Σ_{0<i<k} rᵢ r_{k−i}
        for k in 1..n {
            let mut s = self.coeffs[k].clone();
            for i in 1..k {
                s = s - &(r[i].clone() * &r[k - i]);
            }
            r[k] = s / &two;
        }
        LaurentSeries::new(0, r, &self.template)
    }

    /// Multiplicative inverse; the leading coefficient must be nonzero.
    pub fn inverse(&self) -> Self {
        assert!(!self.coeffs[0].is_zero(), "inverting a series with unknown order");
        let n = self.coeffs.len();
        let a0inv = self.coeffs[0].inv();
        let mut b = vec![self.template.zero_like(); n];
        b[0] = a0inv.clone();
        for k in 1..n {
            let mut s = self.template.zero_like();
            for i in 1..=k {
                s = s + &(self.coeffs[i].clone() * &b[k - i]);
            }
            b[k] = -(s * &a0inv);
        }
        LaurentSeries::new(-self.valuation, b, &self.template)
    }

    pub fn shift(mut self, by: i64) -> Self {
        self.valuation += by;
        self
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G, template: &G) -> LaurentSeries<G> {
        LaurentSeries::new(self.valuation, self.coeffs.iter().map(f).collect(), template)
    }
}

impl<F: Field> Add<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn add(self, rhs: &LaurentSeries<F>) -> LaurentSeries<F> {
        let v = self.valuation.min(rhs.valuation);
        let prec = self.precision().min(rhs.precision());
        let coeffs = (v..prec)
            .map(|e| self.coeff(e).unwrap() + &rhs.coeff(e).unwrap())
            .collect();
        LaurentSeries::new(v, coeffs, &self.template)
    }
}

impl<F: Field> Neg for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn neg(self) -> LaurentSeries<F> {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            template: self.template.clone(),
        }
    }
}

impl<F: Field> Sub<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn sub(self, rhs: &LaurentSeries<F>) -> LaurentSeries<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn mul(self, rhs: &LaurentSeries<F>) -> LaurentSeries<F> {
        // relative precision is the smaller of the two
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut c = vec![self.template.zero_like(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                c[i + j] = c[i + j].clone() + &(a.clone() * b);
            }
        }
        LaurentSeries::new(self.valuation + rhs.valuation, c, &self.template)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::{ConstantField, Scalar};

    fn q(n: i64) -> Scalar {
        ConstantField::Rationals.from_i64(n)
    }

    #[test]
    fn inverse_of_geometric() {
        // 1 − z has inverse 1 + z + z² + …
        let s = LaurentSeries::new(0, vec![q(1), q(-1), q(0), q(0), q(0)], &q(0));
        let inv = s.inverse();
        assert_eq!(inv.coeffs(), &[q(1), q(1), q(1), q(1), q(1)]);
        let one = &s * &inv;
        assert_eq!(one.coeffs(), &[q(1), q(0), q(0), q(0), q(0)]);
    }

    #[test]
    fn square_root_squares_back() {
        let s = LaurentSeries::new(0, vec![q(1), q(3), q(-2), q(5), q(7), q(0)], &q(0));
        let r = s.sqrt_one_plus();
        assert_eq!((&r * &r).coeffs(), s.coeffs());
    }

    #[test]
    fn addition_aligns_valuations() {
        let a = LaurentSeries::new(-2, vec![q(1), q(0), q(2)], &q(0));
        let b = LaurentSeries::new(0, vec![q(-2), q(4)], &q(0));
        let c = &a + &b;
        assert_eq!(c.valuation(), -2);
        assert_eq!(c.precision(), 1);
        assert_eq!(c.coeff(0), Some(q(0)));
    }
}
