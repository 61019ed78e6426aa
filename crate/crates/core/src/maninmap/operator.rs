use crate::elliptic::{CurveFunction, WeierstrassModel};
use crate::error::{Error, Result};
use crate::funcfield::{null_space, ConstantField, CoverMap, Derivation, Field, FieldElement, Poly, RatFunc};

/// `L = Aδ² + Bδ + C` together with a witness F ∈ K(E) such that
/// `L(dx/y) = dF`, where δ acts on K(E) with x fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct PFOperator {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub f: CurveFunction,
    pub derivation: Derivation,
}

impl PFOperator {
    /// Operator for the standard derivation d/dt.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, f: CurveFunction) -> Self {
        let derivation = Derivation::standard(&a);
        PFOperator { a, b, c, f, derivation }
    }

    /// The classical operator `t(1−t)δ² + (1−2t)δ − 1/4` for `y² = x(x−1)(x−t)`
    /// with witness `y/(2(x−t)²)`.
    pub fn legendre(k: ConstantField) -> (WeierstrassModel, PFOperator) {
        let e = WeierstrassModel::legendre(k);
        let fe = |s: &str| crate::funcfield::parse_field_element(s, k, "t").unwrap();
        let f = CurveFunction::parse("y/(2*(x-t)^2)", &e, "t").unwrap();
        let op = PFOperator::new(fe("t*(1-t)"), fe("1-2*t"), fe("-1/4"), f);
        (e, op)
    }

    /// `c·L` with witness `c·F`.
    pub fn scaled(&self, c: &FieldElement) -> PFOperator {
        PFOperator {
            a: self.a.clone() * c,
            b: self.b.clone() * c,
            c: self.c.clone() * c,
            f: self.f.scale(c),
            derivation: self.derivation.clone(),
        }
    }

    /// The same operator written in terms of another derivation δ′, where
    /// δ = g δ′: `A′ = A g²`, `B′ = A g δ′(g) + B g`, `C′ = C`.
    pub fn with_derivation(&self, new: &Derivation) -> PFOperator {
        let g = self.derivation.scale().clone() / new.scale();
        let a = self.a.clone() * &g * &g;
        let b = self.a.clone() * &g * &new.apply(&g) + &(self.b.clone() * &g);
        PFOperator {
            a,
            b,
            c: self.c.clone(),
            f: self.f.clone(),
            derivation: new.clone(),
        }
    }
}

fn require_char_0(e: &WeierstrassModel) -> Result<()> {
    if e.characteristic() != 0 {
        return Err(Error::RequiresCharacteristicZero);
    }
    Ok(())
}

/// `y·N(x)/f^k`: the shape of every function the exactness condition
/// involves. Derivatives stay in this shape without any gcd in K[x].
#[derive(Clone, Debug, PartialEq)]
struct YForm {
    num: Poly<FieldElement>,
    k: u32,
}

impl YForm {
    /// δ(y N/f^k) = y (f δN + (1/2 − k) N δf) / f^(k+1), with δx = 0.
    fn derive(&self, f: &Poly<FieldElement>, delta: &Derivation) -> YForm {
        let d = |c: &FieldElement| delta.apply(c);
        let dn = self.num.map(d);
        let df = f.map(d);
        YForm {
            num: &(f * &dn) + &(&self.num * &df).scale(&half_minus(f, self.k)),
            k: self.k + 1,
        }
    }

    /// ∂/∂x (y N/f^k) = y (f N′ + (1/2 − k) N f′) / f^(k+1).
    fn d_dx(&self, f: &Poly<FieldElement>) -> YForm {
        YForm {
            num: &(f * &self.num.derivative()) + &(&self.num * &f.derivative()).scale(&half_minus(f, self.k)),
            k: self.k + 1,
        }
    }

    /// Numerator over f^k for a larger k.
    fn lifted(&self, f: &Poly<FieldElement>, k: u32) -> Poly<FieldElement> {
        &self.num * &f.pow(k - self.k)
    }
}

fn half_minus(f: &Poly<FieldElement>, k: u32) -> FieldElement {
    let one = f.coeffs()[3].clone();
    one.clone() / &one.from_i64_like(2) - &one.from_i64_like(k as i64)
}

/// `1/y = y/f`, `δ(1/y)`, `δ²(1/y)`, all over f³.
fn inverse_y_derivatives(e: &WeierstrassModel, delta: &Derivation) -> [Poly<FieldElement>; 3] {
    let f = e.cubic();
    let w = YForm {
        num: Poly::constant(f.coeffs()[3].clone()),
        k: 1,
    };
    let dw = w.derive(&f, delta);
    let d2w = dw.derive(&f, delta);
    [w.lifted(&f, 3), dw.lifted(&f, 3), d2w.num]
}

/// Numerator over f³ of `A δ²(1/y) + B δ(1/y) + C/y`.
fn applied_numerator(e: &WeierstrassModel, op_abc: [&FieldElement; 3], delta: &Derivation) -> Poly<FieldElement> {
    let [w, dw, d2w] = inverse_y_derivatives(e, delta);
    let [a, b, c] = op_abc;
    &(&d2w.scale(a) + &dw.scale(b)) + &w.scale(c)
}

/// Checks `A δ²(1/y) + B δ(1/y) + C/y = ∂F/∂x`.
pub fn verify_pf(e: &WeierstrassModel, op: &PFOperator) -> Result<bool> {
    require_char_0(e)?;
    let f = e.cubic();
    if op.f.cubic() != &f || op.a.is_zero() {
        return Ok(false);
    }
    // the x-part of F must be constant in x
    if !op.f.r1().is_constant() {
        return Ok(false);
    }
    let lhs = applied_numerator(e, [&op.a, &op.b, &op.c], &op.derivation);
    // ∂/∂x (y N/D) = y (2f(N′D − ND′) + N D f′) / (2 f D²)
    let (n, d) = (op.f.r2().num(), op.f.r2().den());
    let two = op.a.from_i64_like(2);
    let rhs_num =
        &(&f * &(&(&n.derivative() * d) - &(n * &d.derivative()))).scale(&two) + &(&(n * d) * &f.derivative());
    let rhs_den = (&f * &(d * d)).scale(&two);
    Ok(&lhs * &rhs_den == &rhs_num * &f.pow(3))
}

/// Number of witness coefficients: F = y·N(x)/f², deg N ≤ 4.
const WITNESS_TERMS: usize = 5;

/// Numerators over f³ of ∂/∂x (y xⁱ/f²).
fn witness_columns(e: &WeierstrassModel) -> Vec<Poly<FieldElement>> {
    let f = e.cubic();
    let one = f.coeffs()[3].clone();
    (0..WITNESS_TERMS)
        .map(|i| {
            YForm {
                num: Poly::monomial(one.clone(), i),
                k: 2,
            }
            .d_dx(&f)
            .num
        })
        .collect()
}

/// Rows of the linear system whose columns are the given polynomials.
fn system(cols: &[Poly<FieldElement>], zero: &FieldElement) -> Vec<Vec<FieldElement>> {
    let height = cols.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    (0..height)
        .map(|i| {
            cols.iter()
                .map(|c| c.coeff(i).cloned().unwrap_or_else(|| zero.clone()))
                .collect()
        })
        .collect()
}

fn witness_from(e: &WeierstrassModel, n: &[FieldElement]) -> CurveFunction {
    let f = e.cubic();
    let one = f.coeffs()[3].clone();
    let num = Poly::from_coeffs(n.to_vec());
    let r2 = RatFunc::new(num, f.pow(2));
    CurveFunction::from_parts(e, RatFunc::constant(one.zero_like()), r2)
}

/// Solves for a Picard–Fuchs operator by undetermined coefficients: the
/// unknowns are A, B, C ∈ K and the coefficients of N with F = y·N(x)/f².
/// The result is normalized so that A, B, C are polynomials with no common
/// factor and A is monic; their degrees must not exceed `pole_bound`.
pub fn find_pf(e: &WeierstrassModel, pole_bound: usize) -> Result<PFOperator> {
    require_char_0(e)?;
    if e.is_isotrivial() {
        return Err(Error::PicardFuchsNotFound("the curve is isotrivial".into()));
    }
    let one = e.cubic().coeffs()[3].clone();
    let delta = Derivation::standard(&one);
    let [w, dw, d2w] = inverse_y_derivatives(e, &delta);
    let mut cols = vec![d2w, dw, w];
    cols.extend(witness_columns(e).iter().map(|c| -c.clone()));
    let rows = system(&cols, &one.zero_like());
    let kernel = null_space(&rows, &one);
    if kernel.len() != 1 {
        return Err(Error::PicardFuchsNotFound(format!(
            "solution space has dimension {}",
            kernel.len()
        )));
    }
    let v = &kernel[0];
    if v[0].is_zero() {
        return Err(Error::PicardFuchsNotFound("solution has A = 0".into()));
    }
    // clear denominators and common factors of A, B, C
    let mut scale = one.clone();
    for c in &v[..3] {
        let d = c.den();
        let g = Poly::gcd(scale.num(), d);
        scale = scale * &RatFunc::from_poly(d.exact_div(&g).unwrap(), d.leading().unwrap());
    }
    let mut g = Poly::zero();
    for c in &v[..3] {
        let n = (c.clone() * &scale).num().clone();
        g = if g.is_zero() { n.monic() } else { Poly::gcd(&g, &n) };
    }
    let lead = (v[0].clone() * &scale).num().leading().unwrap().clone();
    let g = RatFunc::from_poly(g.scale(&lead), &lead);
    let scale = scale / &g;
    let v: Vec<FieldElement> = v.iter().map(|c| c.clone() * &scale).collect();
    let degree = v[..3].iter().map(|c| c.num().degree_i64()).max().unwrap();
    if degree > pole_bound as i64 {
        return Err(Error::PicardFuchsNotFound(format!(
            "coefficients of degree {degree} exceed the bound {pole_bound}"
        )));
    }
    let op = PFOperator::new(v[0].clone(), v[1].clone(), v[2].clone(), witness_from(e, &v[3..]));
    if !verify_pf(e, &op)? {
        return Err(Error::Inconsistent("solved operator fails verification".into()));
    }
    Ok(op)
}

/// Given A, B, C and δ, finds F with `L(dx/y) = dF` of the form y·N(x)/f².
pub fn find_witness(
    e: &WeierstrassModel,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    delta: &Derivation,
) -> Result<PFOperator> {
    require_char_0(e)?;
    let lhs = applied_numerator(e, [a, b, c], delta);
    let mut cols = witness_columns(e);
    cols.push(-lhs);
    let rows = system(&cols, &a.zero_like());
    let kernel = null_space(&rows, a);
    let v = kernel
        .iter()
        .find(|v| !v[WITNESS_TERMS].is_zero())
        .ok_or_else(|| Error::PicardFuchsNotFound("L(dx/y) is not exact for this ansatz".into()))?;
    let norm = v[WITNESS_TERMS].inv();
    let n: Vec<FieldElement> = v[..WITNESS_TERMS].iter().map(|c| c.clone() * &norm).collect();
    let op = PFOperator {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        f: witness_from(e, &n),
        derivation: delta.clone(),
    };
    if !verify_pf(e, &op)? {
        return Err(Error::Inconsistent("solved witness fails verification".into()));
    }
    Ok(op)
}

/// Transports an operator along a cover t = r(u), returning it in terms of
/// d/du: with δ = h·d/dt, `δ = (h∘r / r′)·d/du` on the pulled-back curve.
pub fn pullback_pf(op: &PFOperator, phi: &CoverMap) -> Result<PFOperator> {
    let rp = phi.derivative();
    if rp.is_zero() {
        return Err(Error::ZeroDerivation);
    }
    let h = phi.pullback(op.derivation.scale()) / &rp;
    let lifted = PFOperator {
        a: phi.pullback(&op.a),
        b: phi.pullback(&op.b),
        c: phi.pullback(&op.c),
        f: op.f.pullback(phi),
        derivation: Derivation::new(h)?,
    };
    Ok(lifted.with_derivation(&Derivation::standard(&rp)))
}

/// Operator for the model `x′ = c²x, y′ = c³y`: since `dx′/y′ = c⁻¹ dx/y`,
/// the new operator is `L ∘ c`; the witness is solved afresh.
pub fn rescale_model(
    e: &WeierstrassModel,
    op: &PFOperator,
    c: &FieldElement,
) -> Result<(WeierstrassModel, PFOperator)> {
    let d = &op.derivation;
    let dc = d.apply(c);
    let d2c = d.apply(&dc);
    let a = op.a.clone() * c;
    let b = op.a.clone() * &dc * &c.from_i64_like(2) + &(op.b.clone() * c);
    let cc = op.a.clone() * &d2c + &(op.b.clone() * &dc) + &(op.c.clone() * c);
    let e2 = e.scaled(c);
    let op2 = find_witness(&e2, &a, &b, &cc, d)?;
    Ok((e2, op2))
}

/// Operator for the model `x′ = x + r`: the form dx/y is unchanged, so only
/// the witness changes.
pub fn shift_model(e: &WeierstrassModel, op: &PFOperator, r: &FieldElement) -> Result<(WeierstrassModel, PFOperator)> {
    let e2 = e.shifted(r);
    let op2 = find_witness(&e2, &op.a, &op.b, &op.c, &op.derivation)?;
    Ok((e2, op2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::parse_field_element;

    fn fe(s: &str) -> FieldElement {
        parse_field_element(s, ConstantField::Rationals, "t").unwrap()
    }

    #[test]
    fn legendre_operator_verifies() {
        let (e, op) = PFOperator::legendre(ConstantField::Rationals);
        assert!(verify_pf(&e, &op).unwrap());
        let mut bad = op.clone();
        bad.c = fe("-1/3");
        assert!(!verify_pf(&e, &bad).unwrap());
    }

    #[test]
    fn legendre_operator_is_found() {
        let (e, op) = PFOperator::legendre(ConstantField::Rationals);
        let found = find_pf(&e, 2).unwrap();
        let ratio = found.a.clone() / &op.a;
        assert!(ratio.is_constant());
        assert_eq!(found.b, op.b.clone() * &ratio);
        assert_eq!(found.c, op.c.clone() * &ratio);
        assert!(matches!(find_pf(&e, 1), Err(Error::PicardFuchsNotFound(_))));
    }

    #[test]
    fn isotrivial_has_no_operator() {
        let e = WeierstrassModel::short(fe("t^2"), fe("t^3")).unwrap();
        assert!(matches!(find_pf(&e, 4), Err(Error::PicardFuchsNotFound(_))));
    }

    #[test]
    fn derivation_change_preserves_verification() {
        let (e, op) = PFOperator::legendre(ConstantField::Rationals);
        let d = Derivation::new(fe("t^2+1")).unwrap();
        let op2 = op.with_derivation(&d);
        assert!(verify_pf(&e, &op2).unwrap());
        assert_eq!(op2.with_derivation(&op.derivation), op);
    }

    #[test]
    fn pullback_matches_chain_rule() {
        let (e, op) = PFOperator::legendre(ConstantField::Rationals);
        let s = parse_field_element("2 - s^2/2", ConstantField::Rationals, "s").unwrap();
        let phi = CoverMap::new("s", "t", s).unwrap();
        let op2 = pullback_pf(&op, &phi).unwrap();
        assert!(verify_pf(&e.pullback(&phi), &op2).unwrap());
        // Ã = A∘r/(r′)²
        let rp = phi.derivative();
        assert_eq!(op2.a, phi.pullback(&op.a) / &(rp.clone() * &rp));
    }

    #[test]
    fn model_changes_keep_an_operator() {
        let (e, op) = PFOperator::legendre(ConstantField::Rationals);
        let (e2, op2) = rescale_model(&e, &op, &fe("t-1")).unwrap();
        assert!(verify_pf(&e2, &op2).unwrap());
        let (e3, op3) = shift_model(&e, &op, &fe("(t+1)/3")).unwrap();
        assert!(verify_pf(&e3, &op3).unwrap());
    }
}
