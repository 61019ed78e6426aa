use std::fmt;

use crate::elliptic::{bad_places, candidate_places, deg_omega, CurvePoint, KodairaType, WeierstrassModel};
use crate::error::{Error, Result};
use crate::funcfield::{ord_at, ord_dt, support_candidates, Field, FieldElement, Place};
use crate::sections::{DivisorReport, GradedSection};

use super::manin::manin_section;
use super::operator::PFOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionReason {
    BadReduction(KodairaType),
    /// j ∉ {0, 1728} and ord(dj) > 0.
    DjVanishes,
    /// j = 0 and ord(dj) > 2.
    JZeroExcess,
    /// j = 1728 and ord(dj) > 1.
    J1728Excess,
}

impl fmt::Display for ExceptionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionReason::BadReduction(ty) => write!(f, "bad-reduction ({ty})"),
            ExceptionReason::DjVanishes => write!(f, "dj-vanishes"),
            ExceptionReason::JZeroExcess => write!(f, "j=0-excess"),
            ExceptionReason::J1728Excess => write!(f, "j=1728-excess"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalEntry {
    pub place: Place,
    pub reason: ExceptionReason,
    /// ord_v(dj); `None` at places where j has a pole.
    pub ord_dj: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalSet {
    pub entries: Vec<ExceptionalEntry>,
}

impl ExceptionalSet {
    pub fn contains(&self, v: &Place) -> bool {
        self.entries.iter().any(|e| &e.place == v)
    }

    /// Degree-weighted size.
    pub fn size(&self) -> i64 {
        self.entries.iter().map(|e| e.place.degree() as i64).sum()
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.entries.iter().map(|e| &e.place)
    }
}

pub fn exceptional_set(e: &WeierstrassModel) -> Result<ExceptionalSet> {
    let j = e.j_invariant();
    let dj = j.derivative();
    if dj.is_zero() {
        return Err(Error::Isotrivial);
    }
    let j1728 = j.clone() - &j.from_i64_like(1728);
    let bad = bad_places(e)?;
    let mut places = candidate_places(e)?;
    places.extend(support_candidates(&[&dj, &j, &j1728])?);
    places.sort();
    places.dedup();
    let mut entries = Vec::new();
    for v in places {
        let ord_dj = ord_at(&dj, &v).map(|o| o + ord_dt(&v));
        if let Some((_, ty)) = bad.iter().find(|(w, _)| *w == v) {
            entries.push(ExceptionalEntry {
                place: v,
                reason: ExceptionReason::BadReduction(*ty),
                ord_dj,
            });
            continue;
        }
        let o = ord_dj.expect("dj is nonzero");
        let reason = if ord_at(&j, &v).is_none_or(|x| x > 0) {
            (o > 2).then_some(ExceptionReason::JZeroExcess)
        } else if ord_at(&j1728, &v).is_none_or(|x| x > 0) {
            (o > 1).then_some(ExceptionReason::J1728Excess)
        } else {
            (o > 0).then_some(ExceptionReason::DjVanishes)
        };
        if let Some(reason) = reason {
            entries.push(ExceptionalEntry {
                place: v,
                reason,
                ord_dj,
            });
        }
    }
    Ok(ExceptionalSet { entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JRow {
    pub place: Place,
    pub j: i64,
    pub in_s: bool,
    /// I = J + 2, reported off S only.
    pub i: Option<i64>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyReport {
    pub section: GradedSection,
    pub zero_section: bool,
    pub genus: i64,
    pub d: i64,
    pub s: ExceptionalSet,
    pub bound: i64,
    pub rows: Vec<JRow>,
    pub divisor: Option<DivisorReport>,
    /// T_ℂ: places off S with J > 0.
    pub tangencies: Vec<Place>,
    /// Σ_{v ∉ S} deg(v)·J_v.
    pub weighted_j_off_s: i64,
}

impl TangencyReport {
    pub fn tangency_degree(&self) -> i64 {
        self.tangencies.iter().map(|v| v.degree() as i64).sum()
    }

    pub fn local_bounds_hold(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn bound_holds(&self) -> bool {
        self.weighted_j_off_s <= self.bound && self.tangency_degree() <= self.bound
    }

    pub fn degree_identity_holds(&self) -> bool {
        self.divisor.as_ref().is_none_or(|d| d.degree == -4 - self.d)
    }

    pub fn j_at(&self, v: &Place) -> Option<i64> {
        self.rows.iter().find(|r| &r.place == v).map(|r| r.j)
    }
}

/// J = ord 𝓜(P) at every relevant place, with the bound 4g − 4 − d + |S|.
pub fn tangency_report(e: &WeierstrassModel, op: &PFOperator, pt: &CurvePoint) -> Result<TangencyReport> {
    let section = manin_section(e, op, pt)?;
    let s = exceptional_set(e)?;
    let d = deg_omega(e)?;
    let genus = 0;
    let bound = 4 * genus - 4 - d + s.size();
    if section.is_zero() {
        return Ok(TangencyReport {
            section,
            zero_section: true,
            genus,
            d,
            s,
            bound,
            rows: Vec::new(),
            divisor: None,
            tangencies: Vec::new(),
            weighted_j_off_s: 0,
        });
    }
    let divisor = section.divisor()?;
    let mut places: Vec<Place> = divisor.places().cloned().collect();
    places.extend(s.places().cloned());
    places.sort();
    places.dedup();
    let mut rows = Vec::new();
    for v in places {
        let j = section.ord_at(&v)?;
        let in_s = s.contains(&v);
        rows.push(JRow {
            pass: if in_s { j >= -1 } else { j >= 0 },
            i: (!in_s).then_some(j + 2),
            place: v,
            j,
            in_s,
        });
    }
    let tangencies: Vec<Place> = rows
        .iter()
        .filter(|r| !r.in_s && r.j > 0)
        .map(|r| r.place.clone())
        .collect();
    let weighted_j_off_s = rows
        .iter()
        .filter(|r| !r.in_s)
        .map(|r| r.place.degree() as i64 * r.j)
        .sum();
    Ok(TangencyReport {
        section,
        zero_section: false,
        genus,
        d,
        s,
        bound,
        rows,
        divisor: Some(divisor),
        tangencies,
        weighted_j_off_s,
    })
}

/// Convenience for tests and the CLI: the value of 𝓜(P) itself.
pub fn manin_value(e: &WeierstrassModel, op: &PFOperator, pt: &CurvePoint) -> Result<FieldElement> {
    Ok(manin_section(e, op, pt)?.value)
}
