use crate::elliptic::{CurvePoint, WeierstrassModel};
use crate::error::{Error, Result};
use crate::funcfield::{Field, FieldElement};
use crate::sections::{Frame, GradedSection};

use super::operator::PFOperator;

/// `M(P) = F(P) − F(O) + A·(δx·(−δf)(x)/(2y³) + δ(δx/y)) + B·(δx/y)` in the
/// coordinates x = x(P), y = y(P), where δf differentiates the coefficients
/// of f.
pub fn manin_m(e: &WeierstrassModel, op: &PFOperator, pt: &CurvePoint) -> Result<FieldElement> {
    if e.characteristic() != 0 {
        return Err(Error::RequiresCharacteristicZero);
    }
    if !e.contains(pt) {
        return Err(Error::NotOnCurve("point is not on the model".into()));
    }
    let zero = op.a.zero_like();
    let (x, y) = match pt {
        CurvePoint::Zero => return Ok(zero),
        CurvePoint::Affine { x, y } => (x, y),
    };
    if y.is_zero() {
        return Ok(zero);
    }
    let d = |c: &FieldElement| op.derivation.apply(c);
    let fo = op.f.value_at_o()?;
    let fp = op.f.eval_at(pt)?;
    let xp = d(x);
    let df = e.cubic().map(d).eval(x);
    let two = x.from_i64_like(2);
    let ratio = xp.clone() / y;
    let a_term = -(xp * &df) / &(two * y * y * y) + &d(&ratio);
    Ok(fp - &fo + &(op.a.clone() * &a_term) + &(op.b.clone() * &ratio))
}

/// 𝓜(P) = M(P)/(A h²) · (dt)²/(dx/y) for δ = h·d/dt: κ = −1, m = 2, stored
/// in the `dx/y` frame.
pub fn manin_section(e: &WeierstrassModel, op: &PFOperator, pt: &CurvePoint) -> Result<GradedSection> {
    let m = manin_m(e, op, pt)?;
    let h = op.derivation.scale();
    let value = m / &(op.a.clone() * h * h);
    Ok(GradedSection::new(value, -1, 2, e).with_frame(Frame::Dx))
}
