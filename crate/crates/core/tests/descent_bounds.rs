mod common;

use std::collections::BTreeSet;

use manin_core::elliptic::{
    bad_places, candidate_places, intersection_with_zero, CurvePoint, KodairaType, WeierstrassModel,
};
use manin_core::funcfield::{irreducible_factors, ConstantField, CoverMap, Place};
use manin_core::pdescent::{bound_report_charp, component_order, descent_divisor};
use manin_core::Error;

use common::{check_charp_report, fe};

/// Legendre over 𝔽_p(s) along t = s², with P = (−s, c·s(s+1)) where c² = −1.
fn legendre_square(p: u64, c: i64) -> (WeierstrassModel, CurvePoint) {
    let k = ConstantField::prime(p).unwrap();
    let e = WeierstrassModel::new(fe(k, "-(s^2+1)", "s"), fe(k, "s^2", "s"), fe(k, "0", "s")).unwrap();
    let pt = e.point(fe(k, "-s", "s"), fe(k, &format!("{c}*s*(s+1)"), "s")).unwrap();
    (e, pt)
}

#[test]
fn bound_and_membership_on_random_semistable_curves() {
    let mut rng = common::rng(7);
    for p in [5u64, 7, 11] {
        for _ in 0..3 {
            let (e, pt) = common::semistable_curve(&mut rng, p);
            let r = bound_report_charp(&e, &pt, 30).unwrap();
            check_charp_report(&e, &pt, &r);
        }
    }
}

#[test]
fn torsion_point_stops_the_scan() {
    let (e, pt) = legendre_square(5, 2);
    let types: BTreeSet<_> = bad_places(&e).unwrap().into_iter().map(|(_, ty)| ty).collect();
    assert_eq!(types, BTreeSet::from([KodairaType::I(2), KodairaType::I(4)]));
    assert_eq!(e.scalar_mul(4, &pt), CurvePoint::Zero);
    let r = bound_report_charp(&e, &pt, 30).unwrap();
    assert_eq!(r.multiples_scanned, vec![1, 2, 3]);
    assert!(r.nu_is_zero);
    check_charp_report(&e, &pt, &r);
}

#[test]
fn bound_on_legendre_double_covers() {
    for p in [5u64, 7, 11] {
        let k = ConstantField::prime(p).unwrap();
        for a in 2..5 {
            let phi = CoverMap::new("s", "t", fe(k, &format!("{a} - s^2/({a}*({a}-1))"), "s")).unwrap();
            let e = WeierstrassModel::legendre(k).pullback(&phi);
            let pt = e.point(fe(k, &a.to_string(), "s"), fe(k, "s", "s")).unwrap();
            assert!(bad_places(&e).unwrap().iter().all(|(_, ty)| ty.is_semistable()));
            let r = bound_report_charp(&e, &pt, 30).unwrap();
            assert_eq!(r.multiples_scanned.len() as u64, 30 - 30 / p);
            check_charp_report(&e, &pt, &r);
        }
    }
}

#[test]
fn scanned_tangencies_agree_with_the_group_law() {
    let mut rng = common::rng(23);
    for p in [5u64, 7] {
        for _ in 0..3 {
            let (e, pt) = common::semistable_curve(&mut rng, p);
            let n_max = 8;
            let r = bound_report_charp(&e, &pt, n_max).unwrap();
            let mut expected = BTreeSet::new();
            for n in 1..=n_max {
                if n % p == 0 {
                    continue;
                }
                let q = e.scalar_mul(n as i64, &pt);
                let x = q.x().unwrap();
                let mut places = candidate_places(&e).unwrap();
                places.extend(irreducible_factors(x.den()).unwrap().into_iter().map(Place::finite));
                for v in places {
                    if intersection_with_zero(&e, &q, &v).unwrap() > 1 {
                        expected.insert(v);
                    }
                }
            }
            let found: BTreeSet<_> = r.tangencies.iter().map(|t| t.place.clone()).collect();
            assert_eq!(found, expected);
        }
    }
}

#[test]
fn hypotheses_are_enforced() {
    let k = ConstantField::prime(5).unwrap();
    let e = WeierstrassModel::short(fe(k, "t", "t"), fe(k, "t", "t")).unwrap();
    let pt = e.point(fe(k, "-1", "t"), fe(k, "2", "t")).unwrap();
    assert!(matches!(
        bound_report_charp(&e, &pt, 30),
        Err(Error::NotSemistable { .. })
    ));
    // I₅ at t = 0 over 𝔽₅
    let e = WeierstrassModel::short(fe(k, "-3", "t"), fe(k, "2+t^5+t^6", "t")).unwrap();
    let pt = CurvePoint::Zero;
    assert!(matches!(
        bound_report_charp(&e, &pt, 30),
        Err(Error::ComponentOrderDivisibleByP { .. })
    ));
}

#[test]
fn descent_divisor_without_p_divisible_components() {
    let (e, pt) = legendre_square(5, 2);
    let dd = descent_divisor(&e, &pt, 30).unwrap();
    assert!(dd.d_prime.entries.is_empty());
    assert_eq!(dd.d, dd.d0.scaled(4));
    for (v, ty) in bad_places(&e).unwrap() {
        if let KodairaType::I(m) = ty {
            let n = component_order(&e, &pt, &v, 30).unwrap();
            assert_eq!(m as u64 % n, 0, "{v:?}");
        }
    }
}
