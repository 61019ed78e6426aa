use crate::error::{Error, Result};
use crate::funcfield::{ConstantField, CoverMap, Field, FieldElement, Poly};

use super::point::CurvePoint;

/// `y² = x³ + c₂x² + c₁x + c₀` over K = k(t).
///
/// The model is short when `c₂ = 0`, in which case `a₄ = c₁`, `a₆ = c₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    field: ConstantField,
    c2: FieldElement,
    c1: FieldElement,
    c0: FieldElement,
}

impl WeierstrassModel {
    pub fn new(c2: FieldElement, c1: FieldElement, c0: FieldElement) -> Result<Self> {
        let field = c2.constant_field();
        let e = WeierstrassModel { field, c2, c1, c0 };
        if e.cubic_discriminant().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(e)
    }

    pub fn short(a4: FieldElement, a6: FieldElement) -> Result<Self> {
        let zero = a4.zero_like();
        Self::new(zero, a4, a6)
    }

    pub fn from_cubic(f: &Poly<FieldElement>) -> Result<Self> {
        let describe = || format!("polynomial of degree {}", f.degree_i64());
        if f.degree() != Some(3) || !f.leading().unwrap().is_one() {
            return Err(Error::NotMonicCubic(describe()));
        }
        let c = f.coeffs();
        Self::new(c[2].clone(), c[1].clone(), c[0].clone())
    }

    /// `y² = x(x − 1)(x − t)`
    pub fn legendre(k: ConstantField) -> Self {
        let t = FieldElement::var(k);
        let one = FieldElement::from_i64(k, 1);
        Self::new(-(one + &t), t, FieldElement::from_i64(k, 0)).unwrap()
    }

    pub fn constant_field(&self) -> ConstantField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn coefficients(&self) -> (&FieldElement, &FieldElement, &FieldElement) {
        (&self.c2, &self.c1, &self.c0)
    }

    pub fn cubic(&self) -> Poly<FieldElement> {
        Poly::from_coeffs(vec![
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.c0.one_like(),
        ])
    }

    pub fn eval_cubic(&self, x: &FieldElement) -> FieldElement {
        ((x.clone() + &self.c2) * x + &self.c1) * x + &self.c0
    }

    pub fn is_short(&self) -> bool {
        self.c2.is_zero()
    }

    pub fn a4(&self) -> Result<&FieldElement> {
        self.is_short().then_some(&self.c1).ok_or(Error::NotShort)
    }

    pub fn a6(&self) -> Result<&FieldElement> {
        self.is_short().then_some(&self.c0).ok_or(Error::NotShort)
    }

    fn k(&self, n: i64) -> FieldElement {
        FieldElement::from_i64(self.field, n)
    }

    /// The substitution x = X − c₂/3 brings the model to short form; returns
    /// the short model and `r = c₂/3` so that X = x + r.
    pub fn depressed(&self) -> (WeierstrassModel, FieldElement) {
        if self.is_short() {
            return (self.clone(), self.c2.zero_like());
        }
        let r = self.c2.clone() / &self.k(3);
        let (a4, a6) = self.short_coefficients();
        (
            WeierstrassModel {
                field: self.field,
                c2: self.c2.zero_like(),
                c1: a4,
                c0: a6,
            },
            r,
        )
    }

    /// (a₄, a₆) of the depressed model.
    pub fn short_coefficients(&self) -> (FieldElement, FieldElement) {
        let (c2, c1, c0) = (&self.c2, &self.c1, &self.c0);
        let c2sq = c2.clone() * c2;
        let a4 = c1.clone() - &(c2sq.clone() / &self.k(3));
        let a6 = c0.clone() - &(c1.clone() * c2 / &self.k(3)) + &(c2sq * c2 * &self.k(2) / &self.k(27));
        (a4, a6)
    }

    /// Discriminant of the cubic: Π (rᵢ − rⱼ)².
    pub fn cubic_discriminant(&self) -> FieldElement {
        let (b, c, d) = (&self.c2, &self.c1, &self.c0);
        let k = |n| self.k(n);
        k(18) * b * c * d - &(k(4) * b * b * b * d) + &(b.clone() * b * c * c) - &(k(4) * c * c * c) - &(k(27) * d * d)
    }

    /// Δ = 16 · disc(f).
    pub fn discriminant(&self) -> FieldElement {
        self.k(16) * &self.cubic_discriminant()
    }

    pub fn c4(&self) -> FieldElement {
        self.k(-48) * &self.short_coefficients().0
    }

    pub fn c6(&self) -> FieldElement {
        self.k(-864) * &self.short_coefficients().1
    }

    pub fn j_invariant(&self) -> FieldElement {
        let c4 = self.c4();
        c4.clone() * &c4 * &c4 / &self.discriminant()
    }

    pub fn is_isotrivial(&self) -> bool {
        self.j_invariant().is_constant()
    }

    /// Model for x' = c²x, y' = c³y.
    pub fn scaled(&self, c: &FieldElement) -> WeierstrassModel {
        let c2 = c.clone() * c;
        let c4 = c2.clone() * &c2;
        WeierstrassModel {
            field: self.field,
            c2: self.c2.clone() * &c2,
            c1: self.c1.clone() * &c4,
            c0: self.c0.clone() * &(c4 * &c2),
        }
    }

    pub fn scale_point(&self, p: &CurvePoint, c: &FieldElement) -> CurvePoint {
        match p {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine { x, y } => {
                let c2 = c.clone() * c;
                CurvePoint::Affine {
                    x: x.clone() * &c2,
                    y: y.clone() * &(c2 * c),
                }
            }
        }
    }

    /// Model for x' = x + r.
    pub fn shifted(&self, r: &FieldElement) -> WeierstrassModel {
        // f(x' − r)
        let f = self.cubic();
        let lin = Poly::from_coeffs(vec![-r.clone(), r.one_like()]);
        let g = f.compose(&lin);
        let c = g.coeffs();
        WeierstrassModel {
            field: self.field,
            c2: c[2].clone(),
            c1: c[1].clone(),
            c0: c[0].clone(),
        }
    }

    pub fn shift_point(&self, p: &CurvePoint, r: &FieldElement) -> CurvePoint {
        match p {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone() + r,
                y: y.clone(),
            },
        }
    }

    pub fn pullback(&self, phi: &CoverMap) -> WeierstrassModel {
        WeierstrassModel {
            field: self.field,
            c2: phi.pullback(&self.c2),
            c1: phi.pullback(&self.c1),
            c0: phi.pullback(&self.c0),
        }
    }

    pub fn pullback_point(&self, p: &CurvePoint, phi: &CoverMap) -> CurvePoint {
        match p {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: phi.pullback(x),
                y: phi.pullback(y),
            },
        }
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Zero => true,
            CurvePoint::Affine { x, y } => y.clone() * y == self.eval_cubic(x),
        }
    }

    /// Builds an affine point, checking the curve equation.
    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<CurvePoint> {
        let p = CurvePoint::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve(
                "y^2 differs from f(x) at the given coordinates".into(),
            ))
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y.clone(),
            },
        }
    }

    /// Chord–tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Zero, _) => return q.clone(),
            (_, CurvePoint::Zero) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            let ysum = y1.clone() + y2;
            if ysum.is_zero() {
                return CurvePoint::Zero;
            }
            // tangent: (3x² + 2c₂x + c₁) / 2y
            (self.k(3) * x1 * x1 + &(self.k(2) * &self.c2 * x1) + &self.c1) / &(self.k(2) * y1)
        } else {
            (y2.clone() - y1) / &(x2.clone() - x1)
        };
        let x3 = slope.clone() * &slope - &self.c2 - x1 - x2;
        let y3 = slope * &(x1.clone() - &x3) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &self.negate(q))
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { self.negate(p) } else { p.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Zero;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Multiples P, 2P, …, nP.
    pub fn multiples(&self, p: &CurvePoint, n: usize) -> Vec<CurvePoint> {
        let mut out = Vec::with_capacity(n);
        let mut acc = CurvePoint::Zero;
        for _ in 0..n {
            acc = self.add(&acc, p);
            out.push(acc.clone());
        }
        out
    }
}
