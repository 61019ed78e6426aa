#![allow(dead_code)]

use manin_core::elliptic::{bad_places, deg_omega, CurvePoint, KodairaType, WeierstrassModel};
use manin_core::funcfield::{parse_field_element, ConstantField, CoverMap, Field, FieldElement, Poly, RatFunc};
use manin_core::maninmap::{pullback_pf, PFOperator};
use manin_core::pdescent::{descent_divisor, nu, CharPBoundReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fe(k: ConstantField, s: &str, var: &str) -> FieldElement {
    parse_field_element(s, k, var).unwrap()
}

/// A polynomial of exact degree `deg` with coefficients in [-r, r].
pub fn poly(rng: &mut ChaCha8Rng, k: ConstantField, deg: usize, r: i64) -> FieldElement {
    let mut coeffs: Vec<_> = (0..=deg).map(|_| k.from_i64(rng.gen_range(-r..=r))).collect();
    while coeffs[deg] == k.zero() {
        coeffs[deg] = k.from_i64(rng.gen_range(-r..=r));
    }
    RatFunc::from_poly(Poly::from_coeffs(coeffs), &k.one())
}

pub fn nonzero_poly(rng: &mut ChaCha8Rng, k: ConstantField, max_deg: usize, r: i64) -> FieldElement {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let f = poly(rng, k, d, r);
        if !f.is_zero() {
            return f;
        }
    }
}

/// y² = x³ + a4·x + a6 through a chosen point, with a4 of degree 4 and a6 of
/// degree ≤ 6: semistable with every component group order prime to p, and
/// j not a p-th power.
pub fn semistable_curve(rng: &mut ChaCha8Rng, p: u64) -> (WeierstrassModel, CurvePoint) {
    let k = ConstantField::prime(p).unwrap();
    loop {
        let a4 = poly(rng, k, 4, p as i64);
        let x0 = poly(rng, k, 2, p as i64);
        let y0 = poly(rng, k, 3, p as i64);
        let a6 = y0.clone() * &y0 - &(x0.clone() * &x0 * &x0) - &(a4.clone() * &x0);
        if a6.is_zero() {
            continue;
        }
        let Ok(e) = WeierstrassModel::short(a4, a6) else {
            continue;
        };
        let j = e.j_invariant();
        if j.is_zero() || j.derivative().is_zero() {
            continue;
        }
        let Ok(bad) = bad_places(&e) else { continue };
        let ok = bad
            .iter()
            .all(|(_, ty)| ty.is_semistable() && ty.component_group_order() % p != 0);
        if ok {
            let pt = e.point(x0, y0).unwrap();
            return (e, pt);
        }
    }
}

pub fn from_ints(k: ConstantField, c: &[i64]) -> Poly<manin_core::funcfield::Scalar> {
    Poly::from_coeffs(c.iter().map(|&n| k.from_i64(n)).collect())
}

/// Random nonzero rational functions with small integer coefficients.
pub fn ratfunc_strategy(k: ConstantField) -> impl proptest::strategy::Strategy<Value = FieldElement> {
    use proptest::prelude::*;
    (
        prop::collection::vec(-6i64..=6, 1..5),
        prop::collection::vec(-6i64..=6, 1..4),
    )
        .prop_filter_map("zero numerator or denominator", move |(n, d)| {
            let (n, d) = (from_ints(k, &n), from_ints(k, &d));
            (!n.is_zero() && !d.is_zero()).then(|| RatFunc::new(n, d))
        })
}

/// Legendre pulled back along t = a − s²/(a(a−1)), with P = (a, s) and the
/// three 2-torsion points.
pub fn legendre_cover(k: ConstantField, a: &str) -> (WeierstrassModel, CurvePoint, [CurvePoint; 3]) {
    let e = WeierstrassModel::legendre(k);
    let phi = CoverMap::new("s", "t", fe(k, &format!("({a}) - s^2/(({a})*(({a})-1))"), "s")).unwrap();
    let e = e.pullback(&phi);
    let p = e.point(fe(k, a, "s"), fe(k, "s", "s")).unwrap();
    let t = phi.image.clone();
    let zero = fe(k, "0", "s");
    let tors = [
        e.point(zero.clone(), zero.clone()).unwrap(),
        e.point(fe(k, "1", "s"), zero.clone()).unwrap(),
        e.point(t, zero).unwrap(),
    ];
    (e, p, tors)
}

/// Legendre cover with the transported operator.
pub fn legendre_cover_op(a: &str) -> (WeierstrassModel, PFOperator, CurvePoint) {
    let k = ConstantField::Rationals;
    let phi = CoverMap::new("s", "t", fe(k, &format!("({a}) - s^2/(({a})*(({a})-1))"), "s")).unwrap();
    let (e, op) = PFOperator::legendre(k);
    let (e, op) = (e.pullback(&phi), pullback_pf(&op, &phi).unwrap());
    let p = e.point(fe(k, a, "s"), fe(k, "s", "s")).unwrap();
    (e, op, p)
}

/// Char-p curves with a generator followed by torsion points.
pub fn mu_configs(p: u64) -> Vec<(WeierstrassModel, Vec<CurvePoint>)> {
    let k = ConstantField::prime(p).unwrap();
    let mut out = Vec::new();
    // y² = x³ + tx + t through (−1, 2), and its pullback along t = s²
    let e = WeierstrassModel::short(fe(k, "t", "t"), fe(k, "t", "t")).unwrap();
    if let Ok(q) = e.point(fe(k, "-1", "t"), fe(k, "2", "t")) {
        out.push((e, vec![q]));
    }
    let e = WeierstrassModel::short(fe(k, "s^2", "s"), fe(k, "s^2", "s")).unwrap();
    out.push((e.clone(), vec![e.point(fe(k, "0", "s"), fe(k, "s", "s")).unwrap()]));
    for a in 2..p.min(6) {
        let (e, pt, tors) = legendre_cover(k, &a.to_string());
        out.push((e, [vec![pt], tors.to_vec()].concat()));
    }
    let mut r = rng(p);
    for _ in 0..2 {
        let (e, pt) = semistable_curve(&mut r, p);
        out.push((e, vec![pt]));
    }
    out
}

/// (p, a4, a6, expected fiber at t = 0)
pub const TAU_CORPUS: &[(u64, &str, &str, KodairaType)] = &[
    (5, "t+1", "t^2+2", KodairaType::I(0)),
    (5, "-3", "2+t^2", KodairaType::I(2)),
    (5, "-3", "2+t^5+t^6", KodairaType::I(5)),
    (7, "-3", "2+t^7+t^8", KodairaType::I(7)),
    (7, "-3+t", "2+t^3", KodairaType::I(1)),
    (5, "t", "t", KodairaType::II),
    (7, "t", "t^2+t^3", KodairaType::III),
    (7, "t^2", "t^2", KodairaType::IV),
    (11, "t^2+t^3", "t^3+2*t^4", KodairaType::IStar(0)),
    (7, "-3*t^2", "2*t^3+t^4", KodairaType::IStar(1)),
    (5, "-3*t^2", "2*t^3+t^8+t^9", KodairaType::IStar(5)),
    (11, "t^3", "t^4+t^5", KodairaType::IVStar),
    (7, "t^3+t^4", "t^5", KodairaType::IIIStar),
    (11, "t^4+t^5", "t^5", KodairaType::IIStar),
];

pub fn tau_corpus() -> Vec<(WeierstrassModel, KodairaType)> {
    TAU_CORPUS
        .iter()
        .map(|&(p, a4, a6, ty)| {
            let k = ConstantField::prime(p).unwrap();
            let e = WeierstrassModel::short(fe(k, a4, "t"), fe(k, a6, "t")).unwrap();
            (e, ty)
        })
        .collect()
}

/// Checks a char-p bound report against independently computed d, δ and
/// the descent divisor.
pub fn check_charp_report(e: &WeierstrassModel, pt: &CurvePoint, r: &CharPBoundReport) {
    let p = r.characteristic as i64;
    let d = deg_omega(e).unwrap();
    let delta: i64 = bad_places(e).unwrap().iter().map(|(v, _)| v.degree() as i64).sum();
    assert_eq!((r.d, r.delta), (d, delta));
    assert_eq!(r.bound, p * (-2 - d) + (p - 1) * delta);
    assert!(r.membership_holds(), "{:?}", r.membership);
    assert!(r.local_checks_hold());
    assert!(r.bound_holds());
    let nu_sec = nu(e, pt).unwrap();
    if !nu_sec.is_zero() {
        let dd = descent_divisor(e, pt, 30).unwrap();
        for v in nu_sec.divisor().unwrap().places() {
            assert!(nu_sec.ord_at(v).unwrap() >= -dd.d.ord(v));
        }
    }
}
