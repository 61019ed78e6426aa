//! Places of the projective line, valuations and differentials.

use std::cmp::Ordering;

use super::element::FieldElement;
use super::factor::irreducible_factors;
use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::{ConstantField, Scalar};
use crate::error::{Error, Result};

/// A closed point of ℙ¹ over the constant field: a monic irreducible
/// polynomial, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Poly<Scalar>),
    Infinity,
}

impl Place {
    /// Caller guarantees `p` monic irreducible.
    pub fn finite(p: Poly<Scalar>) -> Self {
        debug_assert!(p.is_monic() && p.degree().unwrap_or(0) > 0);
        Place::Finite(p)
    }

    /// The place `t - a`.
    pub fn at(k: ConstantField, a: i64) -> Self {
        Place::Finite(Poly::from_coeffs(vec![k.from_i64(-a), k.one()]))
    }

    pub fn degree(&self) -> u64 {
        match self {
            Place::Finite(p) => p.degree().unwrap() as u64,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// π for a finite place, 1/t at infinity.
    pub fn uniformizer(&self, k: ConstantField) -> FieldElement {
        match self {
            Place::Finite(p) => RatFunc::from_poly(p.clone(), &k.one()),
            Place::Infinity => FieldElement::var(k).inv(),
        }
    }

    pub fn to_expr(&self, var: &str) -> String {
        match self {
            Place::Finite(p) => p.to_expr(var),
            Place::Infinity => "infinity".to_string(),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite places by degree then coefficients; infinity last.
impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.canonical_cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

/// Order of vanishing of `f` at `v`; `None` stands for +∞ (f = 0).
pub fn ord_at(f: &FieldElement, v: &Place) -> Option<i64> {
    match v {
        Place::Finite(p) => f.ord_poly(p),
        Place::Infinity => f.ord_infinity(),
    }
}

/// Order at `v`, or an error naming `what` if `f` is zero.
pub fn ord_nonzero(f: &FieldElement, v: &Place) -> Result<i64> {
    ord_at(f, v).ok_or(Error::ZeroSection)
}

/// Finite places where `f` has a zero or pole, plus infinity.
pub fn support_candidates(fs: &[&FieldElement]) -> Result<Vec<Place>> {
    let mut polys: Vec<Poly<Scalar>> = Vec::new();
    for f in fs {
        if f.is_zero() {
            continue;
        }
        for p in [f.num(), f.den()] {
            if !p.is_constant() {
                polys.extend(irreducible_factors(p)?);
            }
        }
    }
    let mut places: Vec<Place> = polys.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    places.sort();
    places.dedup();
    Ok(places)
}

/// Principal divisor of a nonzero function, sorted, zero entries dropped.
pub fn divisor_of(f: &FieldElement) -> Result<Vec<(Place, i64)>> {
    if f.is_zero() {
        return Err(Error::ZeroSection);
    }
    let mut out = Vec::new();
    for v in support_candidates(&[f])? {
        let o = ord_at(f, &v).unwrap();
        if o != 0 {
            out.push((v, o));
        }
    }
    Ok(out)
}

pub fn degree_of(divisor: &[(Place, i64)]) -> i64 {
    divisor.iter().map(|(v, o)| v.degree() as i64 * o).sum()
}

/// `coefficient · dt` for the base variable t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub coefficient: FieldElement,
}

impl Differential {
    pub fn new(coefficient: FieldElement) -> Self {
        Differential { coefficient }
    }

    /// d f = f'(t) dt
    pub fn exact(f: &FieldElement) -> Self {
        Differential::new(f.derivative())
    }
}

/// ord_v(dt) for a place of ℙ¹: zero at finite places (irreducible
/// polynomials over a perfect field are separable), −2 at infinity.
pub fn ord_dt(v: &Place) -> i64 {
    if v.is_infinity() {
        -2
    } else {
        0
    }
}

pub fn ord_differential(w: &Differential, v: &Place) -> Result<i64> {
    let o = ord_at(&w.coefficient, v).ok_or(Error::ZeroSection)?;
    Ok(o + ord_dt(v))
}

pub fn divisor_of_differential(w: &Differential) -> Result<Vec<(Place, i64)>> {
    if w.coefficient.is_zero() {
        return Err(Error::ZeroSection);
    }
    let mut out = Vec::new();
    for v in support_candidates(&[&w.coefficient])? {
        let o = ord_differential(w, &v)?;
        if o != 0 {
            out.push((v, o));
        }
    }
    Ok(out)
}
