use std::fmt;

use crate::error::{Error, Result};
use crate::funcfield::{ord_at, support_candidates, Field, FieldElement, Place};

use super::model::WeierstrassModel;
use super::point::CurvePoint;

/// Kodaira–Néron fiber type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// I_n, n ≥ 0.
    I(u32),
    II,
    III,
    IV,
    /// I*_n, n ≥ 0.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn is_good(self) -> bool {
        self == KodairaType::I(0)
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(self, KodairaType::I(n) if n > 0)
    }

    pub fn is_additive(self) -> bool {
        !matches!(self, KodairaType::I(_))
    }

    pub fn is_semistable(self) -> bool {
        !self.is_additive()
    }

    /// Order of the component group of the Néron model fiber.
    pub fn component_group_order(self) -> u64 {
        match self {
            KodairaType::I(n) => n.max(1) as u64,
            KodairaType::II | KodairaType::IIStar => 1,
            KodairaType::III | KodairaType::IIIStar => 2,
            KodairaType::IV | KodairaType::IVStar => 3,
            KodairaType::IStar(_) => 4,
        }
    }

    /// ord Δ of a minimal model (residue characteristic ≠ 2, 3).
    pub fn discriminant_order(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(n) => n + 6,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

/// A model of E that is minimal at one place.
///
/// Obtained from the depressed model `y² = x³ + a₄x + a₆` by
/// `x_min = π^(2k) x`, `y_min = π^(3k) y`, where π is the uniformizer and
/// k the twist exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMinimalModel {
    pub place: Place,
    pub twist: i64,
    /// r with x_depressed = x + r.
    pub shift: FieldElement,
    pub uniformizer: FieldElement,
    pub a4: FieldElement,
    pub a6: FieldElement,
    pub ord_a4: Option<i64>,
    pub ord_a6: Option<i64>,
    pub ord_disc: i64,
}

impl LocalMinimalModel {
    /// ord of c₄ = −48a₄ on the minimal model; `None` when a₄ = 0.
    pub fn ord_c4(&self) -> Option<i64> {
        self.ord_a4
    }

    /// Coordinates of a point of E on this model.
    pub fn transform_point(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Zero => CurvePoint::Zero,
            CurvePoint::Affine { x, y } => {
                let s2 = self.uniformizer.pow_i64(2 * self.twist);
                let s3 = self.uniformizer.pow_i64(3 * self.twist);
                CurvePoint::Affine {
                    x: (x.clone() + &self.shift) * &s2,
                    y: y.clone() * &s3,
                }
            }
        }
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// k = −min(⌊ord a₄/4⌋, ⌊ord a₆/6⌋), ignoring vanishing coefficients.
pub fn twist_exponent(ord_a4: Option<i64>, ord_a6: Option<i64>) -> i64 {
    let m = [ord_a4.map(|o| floor_div(o, 4)), ord_a6.map(|o| floor_div(o, 6))]
        .into_iter()
        .flatten()
        .min()
        .expect("a4 and a6 both zero");
    -m
}

pub fn minimal_model_at(e: &WeierstrassModel, v: &Place) -> LocalMinimalModel {
    let k = e.constant_field();
    let (short, shift) = e.depressed();
    let (a4, a6) = (short.a4().unwrap().clone(), short.a6().unwrap().clone());
    let (o4, o6) = (ord_at(&a4, v), ord_at(&a6, v));
    let twist = twist_exponent(o4, o6);
    let pi = v.uniformizer(k);
    let disc = short.discriminant();
    let ord_disc = ord_at(&disc, v).expect("nonsingular model") + 12 * twist;
    LocalMinimalModel {
        place: v.clone(),
        twist,
        shift,
        a4: a4 * &pi.pow_i64(4 * twist),
        a6: a6 * &pi.pow_i64(6 * twist),
        uniformizer: pi,
        ord_a4: o4.map(|o| o + 4 * twist),
        ord_a6: o6.map(|o| o + 6 * twist),
        ord_disc,
    }
}

/// Tate's classification in residue characteristic ≠ 2, 3 from
/// (ord c₄, ord Δ) on the minimal model.
pub fn kodaira_from_orders(ord_c4: Option<i64>, ord_disc: i64) -> Result<KodairaType> {
    let c4 = ord_c4.unwrap_or(i64::MAX);
    let bad = || {
        Error::Inconsistent(format!(
            "no fiber type with ord c4 = {c4}, ord disc = {ord_disc} on a minimal model"
        ))
    };
    if ord_disc < 0 {
        return Err(bad());
    }
    if ord_disc == 0 {
        return Ok(KodairaType::I(0));
    }
    if c4 == 0 {
        return Ok(KodairaType::I(ord_disc as u32));
    }
    Ok(match ord_disc {
        2 => KodairaType::II,
        3 => KodairaType::III,
        4 => KodairaType::IV,
        6 => KodairaType::IStar(0),
        n if n > 6 && c4 == 2 => KodairaType::IStar((n - 6) as u32),
        8 => KodairaType::IVStar,
        9 => KodairaType::IIIStar,
        10 => KodairaType::IIStar,
        _ => return Err(bad()),
    })
}

pub fn kodaira_type(e: &WeierstrassModel, v: &Place) -> Result<KodairaType> {
    let m = minimal_model_at(e, v);
    kodaira_from_orders(m.ord_c4(), m.ord_disc)
}

/// Places where a₄, a₆ or Δ have zeros or poles, together with ∞. Every
/// place of bad reduction is among them.
pub fn candidate_places(e: &WeierstrassModel) -> Result<Vec<Place>> {
    let (a4, a6) = e.short_coefficients();
    let disc = e.discriminant();
    support_candidates(&[&a4, &a6, &disc])
}

/// Places of bad reduction with their fiber types, sorted.
pub fn bad_places(e: &WeierstrassModel) -> Result<Vec<(Place, KodairaType)>> {
    let mut out = Vec::new();
    for v in candidate_places(e)? {
        let ty = kodaira_type(e, &v)?;
        if !ty.is_good() {
            out.push((v, ty));
        }
    }
    Ok(out)
}

/// d = deg ω = (1/12) Σ_v deg(v) · ord_v Δ_min.
pub fn deg_omega(e: &WeierstrassModel) -> Result<i64> {
    let mut total = 0;
    for v in candidate_places(e)? {
        total += v.degree() as i64 * minimal_model_at(e, &v).ord_disc;
    }
    if total % 12 != 0 {
        return Err(Error::Inconsistent(format!(
            "minimal discriminant degree {total} is not divisible by 12"
        )));
    }
    Ok(total / 12)
}

/// Local intersection number (P · O)_v at a semistable place, computed on
/// the minimal model: `max(0, −ord x_min / 2)`.
pub fn intersection_with_zero(e: &WeierstrassModel, p: &CurvePoint, v: &Place) -> Result<u64> {
    if p.is_zero() {
        return Err(Error::PointIsZero);
    }
    let m = minimal_model_at(e, v);
    let ty = kodaira_from_orders(m.ord_c4(), m.ord_disc)?;
    if ty.is_additive() {
        return Err(Error::AdditivePlace(format!("{} (type {ty})", v.to_expr("t"))));
    }
    let (x, y) = match m.transform_point(p) {
        CurvePoint::Affine { x, y } => (x, y),
        CurvePoint::Zero => unreachable!(),
    };
    let ox = match ord_at(&x, v) {
        Some(o) if o < 0 => o,
        _ => return Ok(0),
    };
    let oy = ord_at(&y, v).unwrap_or(i64::MAX);
    if ox % 2 != 0 || 2 * oy != 3 * ox {
        return Err(Error::Inconsistent(format!(
            "pole orders of x ({ox}) and y ({oy}) do not match a point near O"
        )));
    }
    Ok((-ox / 2) as u64)
}

/// Σ_v deg(v) (P · O)_v over the given places.
pub fn height_contribution(e: &WeierstrassModel, p: &CurvePoint, places: &[Place]) -> Result<u64> {
    let mut total = 0;
    for v in places {
        total += v.degree() * intersection_with_zero(e, p, v)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::{parse_field_element, ConstantField, Poly};

    fn fe(s: &str) -> FieldElement {
        parse_field_element(s, ConstantField::Rationals, "t").unwrap()
    }

    fn at0() -> Place {
        Place::at(ConstantField::Rationals, 0)
    }

    #[test]
    fn legendre_fibers() {
        let e = WeierstrassModel::legendre(ConstantField::Rationals);
        let bad = bad_places(&e).unwrap();
        let k = ConstantField::Rationals;
        assert_eq!(
            bad,
            vec![
                (Place::at(k, 1), KodairaType::I(2)),
                (Place::at(k, 0), KodairaType::I(2)),
                (Place::Infinity, KodairaType::IStar(2)),
            ]
        );
        assert_eq!(deg_omega(&e).unwrap(), 1);
    }

    #[test]
    fn cusp_fiber() {
        let e = WeierstrassModel::short(fe("0"), fe("t")).unwrap();
        assert_eq!(kodaira_type(&e, &at0()).unwrap(), KodairaType::II);
    }

    #[test]
    fn twist_exponents() {
        // a4 = t⁴ scales to a unit at t
        let e = WeierstrassModel::short(fe("t^4"), fe("1")).unwrap();
        let m = minimal_model_at(&e, &at0());
        assert_eq!(m.twist, 0);
        let e = WeierstrassModel::short(fe("t^4"), fe("t^6")).unwrap();
        let m = minimal_model_at(&e, &at0());
        assert_eq!(m.twist, -1);
        assert_eq!(m.ord_a4, Some(0));
        assert_eq!(m.a4, fe("1"));
        // poles at infinity need a positive twist
        let m = minimal_model_at(&e, &Place::Infinity);
        assert_eq!(m.twist, 1);
        assert_eq!(m.ord_a6, Some(0));
        assert_eq!(twist_exponent(Some(-5), None), 2);
    }

    #[test]
    fn table_of_orders() {
        let cases = [
            (Some(0), 0, KodairaType::I(0)),
            (Some(0), 5, KodairaType::I(5)),
            (Some(1), 2, KodairaType::II),
            (Some(1), 3, KodairaType::III),
            (Some(2), 4, KodairaType::IV),
            (Some(2), 6, KodairaType::IStar(0)),
            (None, 6, KodairaType::IStar(0)),
            (Some(2), 9, KodairaType::IStar(3)),
            (Some(3), 8, KodairaType::IVStar),
            (Some(3), 9, KodairaType::IIIStar),
            (None, 10, KodairaType::IIStar),
        ];
        for (c4, d, ty) in cases {
            assert_eq!(kodaira_from_orders(c4, d).unwrap(), ty);
        }
        assert!(kodaira_from_orders(Some(1), 5).is_err());
    }

    #[test]
    fn intersection_of_polar_point() {
        let k = ConstantField::Rationals;
        let e = WeierstrassModel::legendre(k);
        let p = e.point(fe("0"), fe("0")).unwrap();
        assert_eq!(intersection_with_zero(&e, &p, &Place::at(k, 0)).unwrap(), 0);
        let v = Place::finite(Poly::from_coeffs(vec![k.from_i64(-2), k.zero(), k.one()]));
        assert_eq!(v.degree(), 2);
        assert_eq!(
            intersection_with_zero(&e, &p, &Place::Infinity),
            Err(Error::AdditivePlace("infinity (type I2*)".into()))
        );
    }
}
