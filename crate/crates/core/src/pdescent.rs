//! Characteristic-p descent: Hasse data, the twisted differential λ, the
//! descent map μ, the section ν and the tangency bound it yields.
//!
//! Every function accepts any monic-cubic model and works on its depressed
//! (short) form; points are shifted accordingly.

use std::fmt;

use crate::elliptic::{
    bad_places, candidate_places, deg_omega, minimal_model_at, CurvePoint, KodairaType, WeierstrassModel,
};
use crate::error::{Error, Result};
use crate::funcfield::{
    ord_at, squarefree_decomposition, support_candidates, Derivation, Field, FieldElement, Place, Poly, Scalar,
};
use crate::sections::{DivisorEntry, DivisorReport, GradedSection};

fn require_char_p(e: &WeierstrassModel) -> Result<u64> {
    match e.characteristic() {
        0 => Err(Error::RequiresPositiveCharacteristic),
        p => Ok(p),
    }
}

/// Depressed model and the point in its coordinates.
fn to_short(e: &WeierstrassModel, p: &CurvePoint) -> (WeierstrassModel, CurvePoint) {
    let (s, r) = e.depressed();
    let q = e.shift_point(p, &r);
    (s, q)
}

/// `f(x)^((p−1)/2) = x^p M(x) + A x^(p−1) + L(x)`, deg L < p − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseData {
    pub a: FieldElement,
    pub m: Poly<FieldElement>,
    pub l: Poly<FieldElement>,
}

pub fn hasse_data(e: &WeierstrassModel) -> Result<HasseData> {
    let p = require_char_p(e)? as usize;
    let (short, _) = e.depressed();
    let f = short.cubic();
    let g = f.pow(((p - 1) / 2) as u32);
    let zero = f.coeffs()[3].zero_like();
    let c = |i: usize| g.coeff(i).cloned().unwrap_or_else(|| zero.clone());
    let a = c(p - 1);
    let m = Poly::from_coeffs((p..g.coeffs().len()).map(c).collect());
    let l = Poly::from_coeffs((0..p - 1).map(c).collect());
    let back = &(&m.shift(p) + &Poly::monomial(a.clone(), p - 1)) + &l;
    debug_assert_eq!(back, g);
    if back != g {
        return Err(Error::Inconsistent("Hasse decomposition does not re-expand".into()));
    }
    Ok(HasseData { a, m, l })
}

/// The dt-coefficient of λ = a₄/(18a₆) · dj/j relative to a derivation δ,
/// i.e. `a₄ δj / (18 a₆ j)`, on the depressed model.
pub fn lambda_coefficient(e: &WeierstrassModel, delta: &Derivation) -> Result<FieldElement> {
    require_char_p(e)?;
    let (a4, a6) = e.short_coefficients();
    if a6.is_zero() {
        return Err(Error::LambdaInapplicable("a6 = 0".into()));
    }
    let j = e.j_invariant();
    if j.is_zero() {
        return Err(Error::LambdaInapplicable("j = 0".into()));
    }
    if j.is_constant() {
        return Err(Error::LambdaInapplicable("j is constant".into()));
    }
    let dj = delta.apply(&j);
    if dj.is_zero() {
        return Err(Error::JIsPthPower);
    }
    let k18 = a4.from_i64_like(18);
    Ok(a4 * &dj / &(k18 * &a6 * &j))
}

/// λ as a section of Ω¹ ⊗ ω⁻² (κ = −2, m = 1).
pub fn lambda(e: &WeierstrassModel) -> Result<GradedSection> {
    let (short, _) = e.depressed();
    let one = short.short_coefficients().0.one_like();
    let c = lambda_coefficient(&short, &Derivation::standard(&one))?;
    Ok(GradedSection::new(c, -2, 1, &short))
}

/// An entry of the table bounding ℓ = ord λ(dx/2y)⁻² by fiber type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauExpectation {
    Exactly(i64),
    AtLeast(i64),
}

impl TauExpectation {
    pub fn holds(self, ell: i64) -> bool {
        match self {
            TauExpectation::Exactly(n) => ell == n,
            TauExpectation::AtLeast(n) => ell >= n,
        }
    }
}

impl fmt::Display for TauExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauExpectation::Exactly(n) => write!(f, "= {n}"),
            TauExpectation::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

pub fn tau_table(ty: KodairaType, p: u64) -> TauExpectation {
    use KodairaType::*;
    use TauExpectation::*;
    match ty {
        I(0) => AtLeast(0),
        I(m) if m as u64 % p == 0 => AtLeast(0),
        I(_) => Exactly(-1),
        II | III | IV => AtLeast(-1),
        IStar(m) if m as u64 % p == 0 => AtLeast(-1),
        IStar(_) => Exactly(-2),
        IVStar | IIIStar | IIStar => AtLeast(-2),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauRow {
    pub place: Place,
    pub kodaira: KodairaType,
    pub ell: i64,
    pub expected: TauExpectation,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    pub characteristic: u64,
    pub rows: Vec<TauRow>,
}

impl TauReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

pub fn check_tau_table(e: &WeierstrassModel) -> Result<TauReport> {
    check_tau_table_with(e, &tau_table)
}

/// Same as [`check_tau_table`] against a caller-supplied table.
pub fn check_tau_table_with(
    e: &WeierstrassModel,
    table: &dyn Fn(KodairaType, u64) -> TauExpectation,
) -> Result<TauReport> {
    let p = require_char_p(e)?;
    let lam = lambda(e)?;
    let mut places = support_candidates(&[&lam.value])?;
    places.extend(candidate_places(&lam.model)?);
    places.sort();
    places.dedup();
    let mut rows = Vec::new();
    for v in places {
        let ell = lam.ord_at(&v)?;
        let m = minimal_model_at(&lam.model, &v);
        let kodaira = crate::elliptic::kodaira_from_orders(m.ord_c4(), m.ord_disc)?;
        let expected = table(kodaira, p);
        rows.push(TauRow {
            pass: expected.holds(ell),
            place: v,
            kodaira,
            ell,
            expected,
        });
    }
    Ok(TauReport {
        characteristic: p,
        rows,
    })
}

pub fn mu(e: &WeierstrassModel, pt: &CurvePoint) -> Result<FieldElement> {
    let one = e.short_coefficients().0.one_like();
    mu_with_derivation(e, pt, &Derivation::standard(&one))
}

/// μ(P) = y M(x) + ℘_A(z) with ℘_A(z) = z^p − Az and
/// `z = (δx/2y)/λ_δ − (12x² + ((δΔ/Δ)/λ_δ) x + 8a₄)/(12y)`.
pub fn mu_with_derivation(e: &WeierstrassModel, pt: &CurvePoint, delta: &Derivation) -> Result<FieldElement> {
    let p = require_char_p(e)?;
    if !e.contains(pt) {
        return Err(Error::NotOnCurve("point is not on the model".into()));
    }
    let (short, q) = to_short(e, pt);
    let (x, y) = match &q {
        CurvePoint::Zero => return Ok(short.short_coefficients().0.zero_like()),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let lam = lambda_coefficient(&short, delta)?;
    if y.is_zero() {
        return Ok(y.clone());
    }
    let h = hasse_data(&short)?;
    let a4 = short.a4()?;
    let disc = short.discriminant();
    let k = |n: i64| x.from_i64_like(n);
    let dlog_disc = delta.apply(&disc) / &disc;
    let z = delta.apply(x) / &(k(2) * y) / &lam
        - &((k(12) * x * x + &(dlog_disc / &lam * x) + &(k(8) * a4)) / &(k(12) * y));
    let wp = z.pow_u64(p) - &(h.a.clone() * &z);
    Ok(y.clone() * &h.m.eval(x) + &wp)
}

/// ν(P) = μ(P) λ (dx/2y)^(p−2): κ = p − 2, m = 1.
pub fn nu(e: &WeierstrassModel, pt: &CurvePoint) -> Result<GradedSection> {
    let p = require_char_p(e)?;
    let m = mu(e, pt)?;
    let lam = lambda(e)?;
    Ok(GradedSection::new(m * &lam.value, p as i64 - 2, 1, &lam.model))
}

fn require_semistable(e: &WeierstrassModel) -> Result<Vec<(Place, KodairaType)>> {
    let bad = bad_places(e)?;
    for (v, ty) in &bad {
        if ty.is_additive() {
            return Err(Error::NotSemistable {
                place: v.to_expr("t"),
                kodaira: ty.to_string(),
            });
        }
    }
    Ok(bad)
}

/// Whether `q` reduces into the identity component of the fiber at `v`:
/// it reduces to O, or to a point other than the node.
pub fn in_identity_component(e: &WeierstrassModel, q: &CurvePoint, v: &Place) -> bool {
    let m = minimal_model_at(e, v);
    let (x, y) = match m.transform_point(q) {
        CurvePoint::Zero => return true,
        CurvePoint::Affine { x, y } => (x, y),
    };
    let pos = |f: &FieldElement| ord_at(f, v).is_none_or(|o| o > 0);
    if ord_at(&x, v).is_some_and(|o| o < 0) {
        return true;
    }
    let slope = x.from_i64_like(3) * &x * &x + &m.a4;
    !(pos(&y) && pos(&slope))
}

/// Order of P in the component group at a multiplicative place, scanning
/// n = 1, …, min(m, n_max).
pub fn component_order(e: &WeierstrassModel, pt: &CurvePoint, v: &Place, n_max: u64) -> Result<u64> {
    let (short, q) = to_short(e, pt);
    let cap = match crate::elliptic::kodaira_type(&short, v)? {
        KodairaType::I(0) => return Ok(1),
        KodairaType::I(m) => (m as u64).min(n_max),
        ty => {
            return Err(Error::NotSemistable {
                place: v.to_expr("t"),
                kodaira: ty.to_string(),
            })
        }
    };
    let mut acc = CurvePoint::Zero;
    for n in 1..=cap {
        acc = short.add(&acc, &q);
        if in_identity_component(&short, &acc, v) {
            return Ok(n);
        }
    }
    Err(Error::ComponentOrderUndetermined {
        place: v.to_expr("t"),
        n_max,
    })
}

/// D = (p−1)D₀ + pD′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentDivisor {
    pub d0: DivisorReport,
    pub d_inf: DivisorReport,
    pub d_prime: DivisorReport,
    pub d: DivisorReport,
}

pub fn descent_divisor(e: &WeierstrassModel, pt: &CurvePoint, n_max: u64) -> Result<DescentDivisor> {
    let p = require_char_p(e)?;
    let bad = require_semistable(e)?;
    let lam = lambda(e)?.divisor()?;
    let mut prime = Vec::new();
    for (v, ty) in &bad {
        if let KodairaType::I(m) = ty {
            if *m as u64 % p == 0 && component_order(e, pt, v, n_max)? % p == 0 {
                prime.push(DivisorEntry {
                    place: v.clone(),
                    ord: 1,
                    degree: v.degree(),
                });
            }
        }
    }
    let d0 = lam.zeros();
    let d_prime = DivisorReport::from_entries(prime);
    let d = d0.scaled(p as i64 - 1).plus(&d_prime.scaled(p as i64));
    Ok(DescentDivisor {
        d_inf: lam.poles(),
        d0,
        d_prime,
        d,
    })
}

/// The local inequality `ord ν ≥ min(p(ι−1) − ord D, ι−1 + ord A)` at a
/// place where ι = (nP.O) > 0, and for ι > 1 also
/// `ord ν ≥ −ord D + (p if t | D else 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCheck {
    pub place: Place,
    pub n: u64,
    pub iota: u64,
    /// `None` when ν(P) = 0.
    pub ord_nu: Option<i64>,
    pub refined_rhs: i64,
    pub refined_pass: bool,
    pub strong_rhs: Option<i64>,
    pub strong_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipRow {
    pub place: Place,
    pub ord_nu: i64,
    pub ord_d: i64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangencyKind {
    Ordinary,
    Supersingular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangency {
    pub place: Place,
    pub n: u64,
    pub iota: u64,
    pub kind: TangencyKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPBoundReport {
    pub characteristic: u64,
    pub genus: i64,
    pub d: i64,
    pub delta: i64,
    pub bound: i64,
    pub n_max: u64,
    pub multiples_scanned: Vec<u64>,
    pub nu_is_zero: bool,
    pub tangencies: Vec<Tangency>,
    pub t_o: i64,
    pub t_s: i64,
    pub local_checks: Vec<LocalCheck>,
    /// Remaining places with ι = 1, checked in bulk: ν, D and A are units there.
    pub generic_simple_checks: u64,
    pub membership: Vec<MembershipRow>,
    pub divisor: DescentDivisor,
}

impl CharPBoundReport {
    pub fn weighted_count(&self) -> i64 {
        self.t_o + self.characteristic as i64 * self.t_s
    }

    pub fn bound_holds(&self) -> bool {
        self.weighted_count() <= self.bound
    }

    pub fn membership_holds(&self) -> bool {
        self.membership.iter().all(|r| r.pass)
    }

    pub fn local_checks_hold(&self) -> bool {
        self.local_checks.iter().all(|c| c.refined_pass && c.strong_pass)
    }
}

/// ψ_n(P) as polynomials in t, on the integral model
/// y² = x³ + u⁴a₄x + u⁶a₆ with P moved to (u²x, u³y), u the least common
/// denominator of a₄, a₆, x(P), y(P).
struct DivisionValues {
    u: Poly<Scalar>,
    x: Poly<Scalar>,
    psi: Vec<Poly<Scalar>>,
}

fn lcm(a: &Poly<Scalar>, b: &Poly<Scalar>) -> Poly<Scalar> {
    (a * b)
        .exact_div(&Poly::gcd(a, b))
        .expect("gcd divides the product")
        .monic()
}

impl DivisionValues {
    fn new(short: &WeierstrassModel, x: &FieldElement, y: &FieldElement, len: usize) -> Self {
        let (a4, a6) = short.short_coefficients();
        let u = [&a4, &a6, x, y]
            .iter()
            .fold(a4.den().clone(), |acc, f| lcm(&acc, f.den()));
        let scale = |f: &FieldElement, e: u32| -> Poly<Scalar> {
            (f.num() * &u.pow(e))
                .exact_div(f.den())
                .expect("u clears the denominator")
        };
        let (a, b, x, y) = (scale(&a4, 4), scale(&a6, 6), scale(x, 2), scale(y, 3));
        let k = |n: i64| Poly::constant(u.coeffs()[0].from_i64_like(n));
        let zero = Poly::zero();
        let one = k(1);
        let x2 = &x * &x;
        let psi3 = &(&(&k(3) * &(&x2 * &x2)) + &(&(&k(6) * &a) * &x2)) + &(&(&(&k(12) * &b) * &x) - &(&a * &a));
        let mut psi = vec![zero, one, &k(2) * &y, psi3];
        if y.is_zero() {
            psi.truncate(3);
            return DivisionValues { u, x, psi };
        }
        let inner = [
            (&x2 * &(&x2 * &x2), 1),
            (&(&a * &x2) * &x2, 5),
            (&(&b * &x2) * &x, 20),
            (&(&a * &a) * &x2, -5),
            (&(&a * &b) * &x, -4),
            (&b * &b, -8),
            (&(&a * &a) * &a, -1),
        ]
        .iter()
        .fold(Poly::zero(), |acc, (m, c)| &acc + &(&k(*c) * m));
        psi.push(&(&k(4) * &y) * &inner);
        let two_y = &k(2) * &y;
        while psi.len() < len.max(5) {
            let n = psi.len();
            let m = n / 2;
            let cube = |f: &Poly<Scalar>| &(f * f) * f;
            let next = if n % 2 == 1 {
                &(&psi[m + 2] * &cube(&psi[m])) - &(&psi[m - 1] * &cube(&psi[m + 1]))
            } else {
                let sq = |f: &Poly<Scalar>| f * f;
                let t = &(&psi[m + 2] * &sq(&psi[m - 1])) - &(&psi[m - 2] * &sq(&psi[m + 1]));
                (&psi[m] * &t)
                    .exact_div(&two_y)
                    .expect("2y divides the even division value")
            };
            psi.push(next);
        }
        DivisionValues { u, x, psi }
    }

    fn psi(&self, n: usize) -> &Poly<Scalar> {
        &self.psi[n]
    }

    /// x(nP) on the original model as an unreduced fraction.
    fn x_fraction(&self, n: usize) -> (Poly<Scalar>, Poly<Scalar>) {
        let sq = &self.psi[n] * &self.psi[n];
        let num = &(&self.x * &sq) - &(&self.psi[n - 1] * &self.psi[n + 1]);
        (num, &(&self.u * &self.u) * &sq)
    }
}

fn ord_poly(f: &Poly<Scalar>, v: &Place) -> i64 {
    match v {
        Place::Finite(g) => f.split_off(g).0 as i64,
        Place::Infinity => -f.degree_i64(),
    }
}

/// (Q.O)_v from x(Q) = num/den, with `twist` the minimal-model exponent at v.
fn iota_from_x(num: &Poly<Scalar>, den: &Poly<Scalar>, v: &Place, twist: i64) -> Result<u64> {
    if num.is_zero() {
        return Ok(0);
    }
    let o = 2 * twist + ord_poly(num, v) - ord_poly(den, v);
    if o >= 0 {
        return Ok(0);
    }
    if o % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "x has a pole of odd order {} at {}",
            -o,
            v.to_expr("t")
        )));
    }
    Ok((-o / 2) as u64)
}

pub fn bound_report_charp(e: &WeierstrassModel, pt: &CurvePoint, n_max: u64) -> Result<CharPBoundReport> {
    let p = require_char_p(e)?;
    if !e.contains(pt) {
        return Err(Error::NotOnCurve("point is not on the model".into()));
    }
    let bad = require_semistable(e)?;
    for (v, ty) in &bad {
        let m = ty.component_group_order();
        if m % p == 0 {
            return Err(Error::ComponentOrderDivisibleByP {
                place: v.to_expr("t"),
                m,
            });
        }
    }
    let (short, q) = to_short(e, pt);
    let d = deg_omega(&short)?;
    let delta: i64 = bad.iter().map(|(v, _)| v.degree() as i64).sum();
    let genus = 0;
    let bound = p as i64 * (2 * genus - 2 - d) + (p as i64 - 1) * delta;

    let lam = lambda(&short)?;
    let hasse = hasse_data(&short)?;
    let nu_sec = nu(&short, &q)?;
    let divisor = descent_divisor(&short, &q, n_max)?;
    let a_sec = GradedSection::new(hasse.a.clone(), p as i64 - 1, 0, &short);

    let mut special = candidate_places(&short)?;
    special.extend(support_candidates(&[&lam.value, &nu_sec.value, &hasse.a])?);
    if let CurvePoint::Affine { x, y } = &q {
        special.extend(support_candidates(&[x, y])?);
    }
    special.sort();
    special.dedup();
    let special_polys: Vec<&Poly<Scalar>> = special
        .iter()
        .filter_map(|v| match v {
            Place::Finite(g) => Some(g),
            Place::Infinity => None,
        })
        .collect();
    let twists: Vec<i64> = special.iter().map(|v| minimal_model_at(&short, v).twist).collect();

    let ord_nu = |v: &Place| -> Result<Option<i64>> {
        if nu_sec.is_zero() {
            Ok(None)
        } else {
            nu_sec.ord_at(v).map(Some)
        }
    };

    let mut local_checks = Vec::new();
    let mut tangencies: Vec<Tangency> = Vec::new();
    let mut generic_simple_checks = 0;
    let mut scanned = Vec::new();
    let values = match &q {
        CurvePoint::Zero => None,
        CurvePoint::Affine { x, y } => Some(DivisionValues::new(&short, x, y, n_max as usize + 2)),
    };
    for n in 1..=n_max as usize {
        let Some(values) = values.as_ref().filter(|w| !w.psi(n).is_zero()) else {
            break;
        };
        if n as u64 % p == 0 {
            continue;
        }
        let n = n as u64;
        scanned.push(n);
        let (num, den) = values.x_fraction(n as usize);
        let mut loci: Vec<(Place, u64, Option<i64>, i64, i64, i64)> = Vec::new();
        for (v, &k) in special.iter().zip(&twists) {
            let iota = iota_from_x(&num, &den, v, k)?;
            if iota > 0 {
                let lam_ord = lam.ord_at(v)?;
                let ord_d = divisor.d.ord(v);
                let ord_a = if hasse.a.is_zero() {
                    i64::MAX / 4
                } else {
                    a_sec.ord_at(v)?
                };
                loci.push((v.clone(), iota, ord_nu(v)?, ord_d, ord_a, lam_ord));
            }
        }
        // away from the special places the model and P are integral with
        // good reduction, so (nP.O)_v = ord_v ψ_n(P)
        let mut rest = values.psi(n as usize).clone();
        for g in &special_polys {
            rest = rest.split_off(g).1;
        }
        if !rest.is_constant() {
            for (g, iota) in squarefree_decomposition(&rest) {
                let iota = iota as u64;
                if iota == 1 {
                    generic_simple_checks += 1;
                    continue;
                }
                for v in crate::funcfield::irreducible_factors(&g)? {
                    loci.push((Place::Finite(v), iota, Some(0), 0, 0, 0));
                }
            }
        }
        for (place, iota, onu, ord_d, ord_a, lam_ord) in loci {
            let i = iota as i64;
            let refined_rhs = (p as i64 * (i - 1) - ord_d).min(i - 1 + ord_a);
            let refined_pass = onu.is_none_or(|o| o >= refined_rhs);
            let strong_rhs = (iota > 1).then(|| -ord_d + if ord_d > 0 { p as i64 } else { 1 });
            let strong_pass = match (onu, strong_rhs) {
                (Some(o), Some(r)) => o >= r,
                _ => true,
            };
            if iota > 1 && !tangencies.iter().any(|t| t.place == place) {
                tangencies.push(Tangency {
                    place: place.clone(),
                    n,
                    iota,
                    kind: if lam_ord > 0 {
                        TangencyKind::Supersingular
                    } else {
                        TangencyKind::Ordinary
                    },
                });
            }
            local_checks.push(LocalCheck {
                place,
                n,
                iota,
                ord_nu: onu,
                refined_rhs,
                refined_pass,
                strong_rhs,
                strong_pass,
            });
        }
    }

    let mut membership = Vec::new();
    if !nu_sec.is_zero() {
        let mut places = special.clone();
        places.extend(divisor.d.places().cloned());
        places.sort();
        places.dedup();
        for v in places {
            let o = nu_sec.ord_at(&v)?;
            let od = divisor.d.ord(&v);
            membership.push(MembershipRow {
                pass: o >= -od,
                place: v,
                ord_nu: o,
                ord_d: od,
            });
        }
    }

    let weight = |k: TangencyKind| -> i64 {
        tangencies
            .iter()
            .filter(|t| t.kind == k)
            .map(|t| t.place.degree() as i64)
            .sum()
    };
    Ok(CharPBoundReport {
        characteristic: p,
        genus,
        d,
        delta,
        bound,
        n_max,
        multiples_scanned: scanned,
        nu_is_zero: nu_sec.is_zero(),
        t_o: weight(TangencyKind::Ordinary),
        t_s: weight(TangencyKind::Supersingular),
        tangencies,
        local_checks,
        generic_simple_checks,
        membership,
        divisor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::{parse_field_element, parse_x_polynomial, ConstantField};

    fn f5() -> ConstantField {
        ConstantField::prime(5).unwrap()
    }

    fn fe(s: &str) -> FieldElement {
        parse_field_element(s, f5(), "t").unwrap()
    }

    #[test]
    fn hasse_of_x3_tx_t() {
        let e = WeierstrassModel::short(fe("t"), fe("t")).unwrap();
        let h = hasse_data(&e).unwrap();
        assert_eq!(h.a, fe("2*t"));
        assert_eq!(h.m, parse_x_polynomial("x", f5(), "t").unwrap());
        assert_eq!(
            h.l,
            parse_x_polynomial("2*t*x^3 + t^2*x^2 + 2*t^2*x + t^2", f5(), "t").unwrap()
        );
    }

    #[test]
    fn supersingular_j0() {
        let e = WeierstrassModel::short(fe("0"), fe("1")).unwrap();
        assert!(hasse_data(&e).unwrap().a.is_zero());
    }

    #[test]
    fn lambda_of_x3_tx_t() {
        let e = WeierstrassModel::short(fe("t"), fe("t")).unwrap();
        let j = fe("2*t^3/(4*t^3+2*t^2)");
        assert_eq!(e.j_invariant(), j);
        assert_eq!(lambda(&e).unwrap().value, fe("2") * &j.derivative() / &j);
    }

    #[test]
    fn lambda_errors() {
        let e = WeierstrassModel::short(fe("t"), fe("0")).unwrap();
        assert!(matches!(lambda(&e), Err(Error::LambdaInapplicable(_))));
        let e = WeierstrassModel::short(fe("1"), fe("1")).unwrap();
        assert!(matches!(lambda(&e), Err(Error::LambdaInapplicable(_))));
        let e = WeierstrassModel::short(fe("t^5"), fe("1")).unwrap();
        assert_eq!(lambda(&e), Err(Error::JIsPthPower));
        let q = WeierstrassModel::legendre(ConstantField::Rationals);
        assert_eq!(lambda(&q), Err(Error::RequiresPositiveCharacteristic));
    }

    #[test]
    fn two_torsion_and_zero() {
        let e = WeierstrassModel::legendre(f5());
        let t2 = e.point(fe("t"), fe("0")).unwrap();
        assert!(mu(&e, &t2).unwrap().is_zero());
        assert!(mu(&e, &CurvePoint::Zero).unwrap().is_zero());
    }

    #[test]
    fn legendre_tau_table() {
        let e = WeierstrassModel::legendre(f5());
        let r = check_tau_table(&e).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let row = r.rows.iter().find(|r| r.place == Place::at(f5(), 0)).unwrap();
        assert_eq!((row.kodaira, row.ell), (KodairaType::I(2), -1));
        // a corrupted table is caught
        let bad = check_tau_table_with(&e, &|_, _| TauExpectation::AtLeast(0)).unwrap();
        assert!(!bad.all_pass());
    }
}
