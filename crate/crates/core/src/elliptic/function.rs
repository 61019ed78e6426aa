use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::funcfield::{parse_expr, CoverMap, Field, FieldElement, Poly, RatFunc};

use super::model::WeierstrassModel;
use super::point::CurvePoint;
use super::series::LaurentSeries;

type XFunc = RatFunc<FieldElement>;

/// An element `R₁(x) + y·R₂(x)` of the function field K(x, y) of the curve
/// `y² = f(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFunction {
    r1: XFunc,
    r2: XFunc,
    f: Arc<Poly<FieldElement>>,
}

impl CurveFunction {
    pub fn from_parts(model: &WeierstrassModel, r1: XFunc, r2: XFunc) -> Self {
        CurveFunction {
            r1,
            r2,
            f: Arc::new(model.cubic()),
        }
    }

    pub fn constant(model: &WeierstrassModel, c: FieldElement) -> Self {
        let zero = RatFunc::constant(c.zero_like());
        Self::from_parts(model, RatFunc::constant(c), zero)
    }

    pub fn x(model: &WeierstrassModel) -> Self {
        let one = FieldElement::from_i64(model.constant_field(), 1);
        Self::from_parts(model, RatFunc::variable(&one), RatFunc::constant(one.zero_like()))
    }

    pub fn y(model: &WeierstrassModel) -> Self {
        let one = FieldElement::from_i64(model.constant_field(), 1);
        Self::from_parts(model, RatFunc::constant(one.zero_like()), RatFunc::constant(one))
    }

    /// Parses an expression in `x`, `y` and the base variable.
    pub fn parse(src: &str, model: &WeierstrassModel, var: &str) -> Result<Self> {
        let e = parse_expr(src)?;
        let k = model.constant_field();
        let one = Self::constant(model, FieldElement::from_i64(k, 1));
        let t = Self::constant(model, FieldElement::var(k));
        let (x, y) = (Self::x(model), Self::y(model));
        e.eval(&one, &|name| match name {
            "x" => Some(x.clone()),
            "y" => Some(y.clone()),
            n if n == var => Some(t.clone()),
            _ => None,
        })
    }

    pub fn r1(&self) -> &XFunc {
        &self.r1
    }

    pub fn r2(&self) -> &XFunc {
        &self.r2
    }

    /// Text `R₁ + y·R₂` in the parser grammar.
    pub fn to_expr(&self, var: &str) -> String {
        let r1 = (!self.r1.is_zero()).then(|| self.r1.to_expr(var));
        let r2 = (!self.r2.is_zero()).then(|| {
            let s = self.r2.to_expr(var);
            if s == "1" {
                "y".to_string()
            } else {
                format!("y*({s})")
            }
        });
        match (r1, r2) {
            (Some(a), Some(b)) => format!("({a}) + {b}"),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => "0".to_string(),
        }
    }

    /// The cubic f(x) of the model this function lives on.
    pub fn cubic(&self) -> &Poly<FieldElement> {
        &self.f
    }

    fn f_rat(&self) -> XFunc {
        RatFunc::from_poly((*self.f).clone(), self.r1.template())
    }

    fn with(&self, r1: XFunc, r2: XFunc) -> Self {
        CurveFunction {
            r1,
            r2,
            f: self.f.clone(),
        }
    }

    /// Multiplies by an element of K.
    pub fn scale(&self, c: &FieldElement) -> Self {
        let c = RatFunc::constant(c.clone());
        self.with(self.r1.clone() * &c, self.r2.clone() * &c)
    }

    /// Value at a point; `PoleAtPoint` when the representation has a pole
    /// there.
    pub fn eval_at(&self, p: &CurvePoint) -> Result<FieldElement> {
        match p {
            CurvePoint::Zero => self.value_at_o(),
            CurvePoint::Affine { x, y } => {
                let a = self.r1.eval(x).ok_or(Error::PoleAtPoint)?;
                let b = if self.r2.is_zero() {
                    x.zero_like()
                } else {
                    self.r2.eval(x).ok_or(Error::PoleAtPoint)?
                };
                Ok(a + &(b * y))
            }
        }
    }

    /// d/dx, using `dy/dx = f'(x)/(2y)`.
    pub fn d_dx(&self) -> Self {
        let fr = self.f_rat();
        let two = self.r1.from_i64_like(2);
        let df = RatFunc::from_poly(self.f.derivative(), self.r1.template());
        let r2 = self.r2.derivative() + &(self.r2.clone() * &df / &(two * &fr));
        self.with(self.r1.derivative(), r2)
    }

    /// Extends a derivation δ of K to K(x, y) with δx = 0, so that
    /// `δy = δf(x)/(2y)`.
    pub fn derive_base(&self, delta: &dyn Fn(&FieldElement) -> FieldElement) -> Self {
        let dpoly = |p: &Poly<FieldElement>| p.map(delta);
        let dr1 = self.r1.derive_with(dpoly);
        let dr2 = self.r2.derive_with(dpoly);
        if self.r2.is_zero() {
            return self.with(dr1, dr2);
        }
        let df = RatFunc::from_poly(self.f.map(delta), self.r1.template());
        let two = self.r1.from_i64_like(2);
        let r2 = dr2 + &(self.r2.clone() * &df / &(two * &self.f_rat()));
        self.with(dr1, r2)
    }

    pub fn pullback(&self, phi: &CoverMap) -> Self {
        let m = |c: &FieldElement| phi.pullback(c);
        CurveFunction {
            r1: self.r1.map_coeffs(m),
            r2: self.r2.map_coeffs(m),
            f: Arc::new(self.f.map(m)),
        }
    }

    /// ord_O, from the parities: `ord_O R(x)` is even and `ord_O y·R(x)` odd,
    /// so the two parts never cancel.
    pub fn ord_at_o(&self) -> Option<i64> {
        let part =
            |r: &XFunc, shift: i64| (!r.is_zero()).then(|| -2 * (r.num().degree_i64() - r.den().degree_i64()) - shift);
        match (part(&self.r1, 0), part(&self.r2, 3)) {
            (None, b) => b,
            (a, None) => a,
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    pub fn value_at_o(&self) -> Result<FieldElement> {
        let zero = self.r1.template().zero_like();
        match self.ord_at_o() {
            None => Ok(zero),
            Some(o) if o < 0 => Err(Error::PoleAtInfinity),
            Some(o) if o > 0 => Ok(zero),
            Some(_) => {
                // order 0 comes from R₁ and deg num = deg den
                let n = self.r1.num().leading().unwrap().clone();
                let d = self.r1.den().leading().unwrap().clone();
                Ok(n / d)
            }
        }
    }

    /// Laurent expansion in the uniformizer `z = x/y` at O, correct modulo
    /// `z^(order + 1)`.
    pub fn expand_at_infinity(&self, order: i64) -> LaurentSeries<FieldElement> {
        let tmpl = self.r1.template().clone();
        let mut terms = Vec::new();
        if let Some(s) = rat_series(&self.r1, 0, order, &tmpl) {
            terms.push(s);
        }
        if !self.r2.is_zero() {
            let v2 = -2 * (self.r2.num().degree_i64() - self.r2.den().degree_i64()) - 3;
            let w = order + 1 - v2;
            if w > 0 {
                let w = w as usize;
                let r2 = rat_series(&self.r2, 3, order, &tmpl).unwrap();
                let y = y_series(&self.f, w, &tmpl);
                terms.push(&r2 * &y);
            }
        }
        let lo = terms.iter().map(|s| s.valuation()).min().unwrap_or(order + 1);
        let mut coeffs = vec![tmpl.zero_like(); (order + 1 - lo).max(0) as usize];
        for s in &terms {
            for (i, c) in coeffs.iter_mut().enumerate() {
                if let Some(v) = s.coeff(lo + i as i64) {
                    *c = c.clone() + &v;
                }
            }
        }
        LaurentSeries::new(lo, coeffs, &tmpl)
    }
}

/// Series of `R(x)` with `x = z⁻²`, with enough terms that a later product
/// with a series of valuation `−extra` is correct through `z^order`.
fn rat_series(r: &XFunc, extra: i64, order: i64, tmpl: &FieldElement) -> Option<LaurentSeries<FieldElement>> {
    if r.is_zero() {
        return None;
    }
    let v = -2 * (r.num().degree_i64() - r.den().degree_i64());
    let w = order + 1 - v + extra;
    if w <= 0 {
        return None;
    }
    let w = w as usize;
    let n = LaurentSeries::from_poly_in_inverse_square(r.num(), w, tmpl);
    let d = LaurentSeries::from_poly_in_inverse_square(r.den(), w, tmpl);
    Some(&n * &d.inverse())
}

/// `y = z⁻³ (1 + c₂z² + c₁z⁴ + c₀z⁶)^(1/2)`.
fn y_series(f: &Poly<FieldElement>, w: usize, tmpl: &FieldElement) -> LaurentSeries<FieldElement> {
    let mut a = vec![tmpl.zero_like(); w.max(1)];
    a[0] = tmpl.one_like();
    for (k, c) in f.coeffs().iter().enumerate().take(3) {
        let idx = 2 * (3 - k);
        if idx < a.len() {
            a[idx] = c.clone();
        }
    }
    LaurentSeries::new(0, a, tmpl).sqrt_one_plus().shift(-3)
}

impl Neg for CurveFunction {
    type Output = CurveFunction;
    fn neg(self) -> CurveFunction {
        CurveFunction {
            r1: -self.r1,
            r2: -self.r2,
            f: self.f,
        }
    }
}

impl Add<&CurveFunction> for CurveFunction {
    type Output = CurveFunction;
    fn add(self, rhs: &CurveFunction) -> CurveFunction {
        CurveFunction {
            r1: self.r1 + &rhs.r1,
            r2: self.r2 + &rhs.r2,
            f: self.f,
        }
    }
}

impl Sub<&CurveFunction> for CurveFunction {
    type Output = CurveFunction;
    fn sub(self, rhs: &CurveFunction) -> CurveFunction {
        CurveFunction {
            r1: self.r1 - &rhs.r1,
            r2: self.r2 - &rhs.r2,
            f: self.f,
        }
    }
}

impl Mul<&CurveFunction> for CurveFunction {
    type Output = CurveFunction;
    fn mul(self, rhs: &CurveFunction) -> CurveFunction {
        let fr = self.f_rat();
        let r1 = self.r1.clone() * &rhs.r1 + &(fr * &self.r2 * &rhs.r2);
        let r2 = self.r1 * &rhs.r2 + &(self.r2 * &rhs.r1);
        CurveFunction { r1, r2, f: self.f }
    }
}

impl Div<&CurveFunction> for CurveFunction {
    type Output = CurveFunction;
    fn div(self, rhs: &CurveFunction) -> CurveFunction {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CurveFunction> for CurveFunction {
            type Output = CurveFunction;
            fn $m(self, rhs: CurveFunction) -> CurveFunction {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Field for CurveFunction {
    fn zero_like(&self) -> Self {
        self.with(self.r1.zero_like(), self.r1.zero_like())
    }

    fn one_like(&self) -> Self {
        self.with(self.r1.one_like(), self.r1.zero_like())
    }

    fn is_zero(&self) -> bool {
        self.r1.is_zero() && self.r2.is_zero()
    }

    fn inv(&self) -> Self {
        // 1/(a + yb) = (a − yb)/(a² − f b²)
        let norm = self.r1.clone() * &self.r1 - &(self.f_rat() * &self.r2 * &self.r2);
        assert!(!norm.is_zero(), "division by zero in the function field of the curve");
        self.with(self.r1.clone() / &norm, -(self.r2.clone() / &norm))
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.with(self.r1.from_i64_like(n), self.r1.zero_like())
    }

    fn characteristic(&self) -> u64 {
        self.r1.characteristic()
    }
}
