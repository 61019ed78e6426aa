//! Sections of ω^κ ⊗ (Ω¹)^m on the base line.
//!
//! A [`GradedSection`] is `value · (dt)^m · (dx/2y)^κ` (or with `dx/y`, see
//! [`Frame`]) for a fixed Weierstrass model. Orders are taken on the model
//! that is minimal at each place, which makes them model independent.

use std::fmt;
use std::ops::Mul;

use crate::elliptic::{candidate_places, deg_omega, minimal_model_at, WeierstrassModel};
use crate::error::{Error, Result};
use crate::funcfield::{ord_at, ord_dt, support_candidates, Field, FieldElement, Place};

/// Which invariant differential the weight κ refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// `dx/2y`
    HalfDx,
    /// `dx/y`
    Dx,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSection {
    pub value: FieldElement,
    pub weight: i64,
    pub diff_degree: i64,
    pub model: WeierstrassModel,
    pub frame: Frame,
}

impl GradedSection {
    pub fn new(value: FieldElement, weight: i64, diff_degree: i64, model: &WeierstrassModel) -> Self {
        GradedSection {
            value,
            weight,
            diff_degree,
            model: model.clone(),
            frame: Frame::HalfDx,
        }
    }

    pub fn with_frame(mut self, frame: Frame) -> Self {
        self.frame = frame;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The same section expressed in another frame: `(dx/y)^κ = 2^κ (dx/2y)^κ`.
    pub fn in_frame(&self, frame: Frame) -> GradedSection {
        if frame == self.frame {
            return self.clone();
        }
        let two = self.value.from_i64_like(2).pow_i64(self.weight);
        let value = match frame {
            Frame::HalfDx => self.value.clone() * &two,
            Frame::Dx => self.value.clone() / &two,
        };
        GradedSection {
            value,
            frame,
            ..self.clone()
        }
    }

    /// Order at `v`: `ord_v(value) + κ·k + m·ord_v(dt)`, where k is the twist
    /// exponent of the v-minimal model.
    pub fn ord_at(&self, v: &Place) -> Result<i64> {
        let o = ord_at(&self.value, v).ok_or(Error::ZeroSection)?;
        let k = minimal_model_at(&self.model, v).twist;
        Ok(o + self.weight * k + self.diff_degree * ord_dt(v))
    }

    /// `−2m + κ·d`, the degree any nonzero section must have.
    pub fn expected_degree(&self) -> Result<i64> {
        Ok(-2 * self.diff_degree + self.weight * deg_omega(&self.model)?)
    }

    pub fn divisor(&self) -> Result<DivisorReport> {
        if self.is_zero() {
            return Err(Error::ZeroSection);
        }
        let mut places = support_candidates(&[&self.value])?;
        places.extend(candidate_places(&self.model)?);
        places.sort();
        places.dedup();
        let mut entries = Vec::new();
        for v in places {
            let ord = self.ord_at(&v)?;
            if ord != 0 {
                entries.push(DivisorEntry {
                    degree: v.degree(),
                    place: v,
                    ord,
                });
            }
        }
        Ok(DivisorReport::from_entries(entries))
    }
}

impl Mul<&GradedSection> for &GradedSection {
    type Output = GradedSection;

    /// Panics if the sections live on different models.
    fn mul(self, rhs: &GradedSection) -> GradedSection {
        assert_eq!(self.model, rhs.model, "sections on different models");
        let rhs = rhs.in_frame(self.frame);
        GradedSection {
            value: self.value.clone() * &rhs.value,
            weight: self.weight + rhs.weight,
            diff_degree: self.diff_degree + rhs.diff_degree,
            model: self.model.clone(),
            frame: self.frame,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorEntry {
    pub place: Place,
    pub ord: i64,
    pub degree: u64,
}

/// A divisor on the base line with its degree-weighted total.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DivisorReport {
    pub entries: Vec<DivisorEntry>,
    pub degree: i64,
}

impl DivisorReport {
    pub fn from_entries(mut entries: Vec<DivisorEntry>) -> Self {
        entries.retain(|e| e.ord != 0);
        entries.sort_by(|a, b| a.place.cmp(&b.place));
        let degree = entries.iter().map(|e| e.degree as i64 * e.ord).sum();
        DivisorReport { entries, degree }
    }

    pub fn from_pairs(pairs: Vec<(Place, i64)>) -> Self {
        Self::from_entries(
            pairs
                .into_iter()
                .map(|(place, ord)| DivisorEntry {
                    degree: place.degree(),
                    place,
                    ord,
                })
                .collect(),
        )
    }

    pub fn ord(&self, v: &Place) -> i64 {
        self.entries.iter().find(|e| &e.place == v).map_or(0, |e| e.ord)
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.entries.iter().map(|e| &e.place)
    }

    pub fn is_effective(&self) -> bool {
        self.entries.iter().all(|e| e.ord >= 0)
    }

    pub fn zeros(&self) -> DivisorReport {
        Self::from_entries(self.entries.iter().filter(|e| e.ord > 0).cloned().collect())
    }

    pub fn poles(&self) -> DivisorReport {
        Self::from_entries(
            self.entries
                .iter()
                .filter(|e| e.ord < 0)
                .map(|e| DivisorEntry {
                    ord: -e.ord,
                    ..e.clone()
                })
                .collect(),
        )
    }

    pub fn scaled(&self, n: i64) -> DivisorReport {
        Self::from_entries(
            self.entries
                .iter()
                .map(|e| DivisorEntry {
                    ord: e.ord * n,
                    ..e.clone()
                })
                .collect(),
        )
    }

    pub fn plus(&self, other: &DivisorReport) -> DivisorReport {
        let mut entries = self.entries.clone();
        for e in &other.entries {
            match entries.iter_mut().find(|x| x.place == e.place) {
                Some(x) => x.ord += e.ord,
                None => entries.push(e.clone()),
            }
        }
        Self::from_entries(entries)
    }

    pub fn display(&self, var: &str) -> String {
        DisplayDivisor { d: self, var }.to_string()
    }
}

struct DisplayDivisor<'a> {
    d: &'a DivisorReport,
    var: &'a str,
}

impl fmt::Display for DisplayDivisor<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, e) in self.d.entries.iter().enumerate() {
            let sign = if e.ord < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let n = e.ord.abs();
            if n != 1 {
                write!(f, "{n}")?;
            }
            write!(f, "({})", e.place.to_expr(self.var))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::{parse_field_element, ConstantField};

    fn fe(k: ConstantField, s: &str) -> FieldElement {
        parse_field_element(s, k, "t").unwrap()
    }

    #[test]
    fn a4_class_is_unit_on_minimal_model() {
        let k = ConstantField::Rationals;
        let e = WeierstrassModel::short(fe(k, "t^4"), fe(k, "t^6")).unwrap();
        let s = GradedSection::new(fe(k, "t^4"), 4, 0, &e);
        assert_eq!(s.ord_at(&Place::at(k, 0)).unwrap(), 0);
    }

    #[test]
    fn dt_has_degree_minus_two() {
        let k = ConstantField::Rationals;
        let e = WeierstrassModel::legendre(k);
        let s = GradedSection::new(fe(k, "1"), 0, 1, &e);
        let d = s.divisor().unwrap();
        assert_eq!(d.degree, -2);
        assert_eq!(d.display("t"), "-2(infinity)");
    }

    #[test]
    fn frame_conversion_round_trips() {
        let k = ConstantField::Rationals;
        let e = WeierstrassModel::legendre(k);
        let s = GradedSection::new(fe(k, "t"), -1, 2, &e).with_frame(Frame::Dx);
        let h = s.in_frame(Frame::HalfDx);
        assert_eq!(h.value, fe(k, "t/2"));
        assert_eq!(h.in_frame(Frame::Dx), s);
    }

    #[test]
    fn degree_identity_for_weighted_classes() {
        let k = ConstantField::prime(5).unwrap();
        let e = WeierstrassModel::short(fe(k, "t"), fe(k, "t")).unwrap();
        let d = deg_omega(&e).unwrap();
        for (v, w) in [("t", 4), ("t", 6)] {
            let s = GradedSection::new(fe(k, v), w, 0, &e);
            assert_eq!(s.divisor().unwrap().degree, w * d);
        }
    }
}
