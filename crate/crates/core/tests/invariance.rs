mod common;

use manin_core::elliptic::{CurvePoint, WeierstrassModel};
use manin_core::funcfield::{support_candidates, ConstantField, Derivation, FieldElement, Place};
use manin_core::maninmap::{manin_section, rescale_model, shift_model, PFOperator};
use manin_core::pdescent::{lambda, nu};
use manin_core::sections::GradedSection;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use common::{fe, nonzero_poly, rng};

const Q: ConstantField = ConstantField::Rationals;

/// A Legendre cover with its operator and a point of infinite order.
fn config(r: &mut ChaCha8Rng) -> (WeierstrassModel, PFOperator, CurvePoint) {
    let a = ["2", "3", "-1", "5", "1/2"][r.gen_range(0..5)];
    let (e, op, p) = common::legendre_cover_op(a);
    let p = match r.gen_range(0..3) {
        0 => p,
        1 => e.add(&p, &e.point(fe(Q, "0", "s"), fe(Q, "0", "s")).unwrap()),
        _ => e.scalar_mul(-1, &p),
    };
    (e, op, p)
}

fn places(sections: &[&GradedSection], extra: &[&FieldElement]) -> Vec<Place> {
    let mut v: Vec<Place> = sections
        .iter()
        .flat_map(|s| s.divisor().unwrap().places().cloned().collect::<Vec<_>>())
        .collect();
    v.extend(support_candidates(extra).unwrap());
    v.push(Place::Infinity);
    v.sort();
    v.dedup();
    v
}

fn same_orders(s1: &GradedSection, s2: &GradedSection, extra: &[&FieldElement]) {
    for v in places(&[s1, s2], extra) {
        assert_eq!(s1.ord_at(&v).unwrap(), s2.ord_at(&v).unwrap(), "{v:?}");
    }
    assert_eq!(s1.divisor().unwrap(), s2.divisor().unwrap());
}

#[test]
fn invariant_under_model_rescaling() {
    let mut r = rng(31);
    for _ in 0..10 {
        let (e, op, p) = config(&mut r);
        let s = manin_section(&e, &op, &p).unwrap();
        let c = nonzero_poly(&mut r, Q, 2, 3);
        let (e2, op2) = rescale_model(&e, &op, &c).unwrap();
        let s2 = manin_section(&e2, &op2, &e.scale_point(&p, &c)).unwrap();
        // (dx/y)^κ picks up c^(−κ)
        assert_eq!(s2.value, s.value.clone() / &c);
        same_orders(&s, &s2, &[&c]);

        let shift = nonzero_poly(&mut r, Q, 2, 3);
        let (e3, op3) = shift_model(&e, &op, &shift).unwrap();
        let s3 = manin_section(&e3, &op3, &e.shift_point(&p, &shift)).unwrap();
        assert_eq!(s3.value, s.value);
        same_orders(&s, &s3, &[]);
    }
}

#[test]
fn invariant_under_derivation_rescaling() {
    let mut r = rng(37);
    for _ in 0..10 {
        let (e, op, p) = config(&mut r);
        let s = manin_section(&e, &op, &p).unwrap();
        let g = nonzero_poly(&mut r, Q, 2, 3) / &nonzero_poly(&mut r, Q, 1, 3);
        let d = Derivation::new(op.derivation.scale().clone() * &g).unwrap();
        let s2 = manin_section(&e, &op.with_derivation(&d), &p).unwrap();
        assert_eq!(s2, s);
    }
}

#[test]
fn invariant_under_operator_rescaling() {
    let mut r = rng(41);
    for _ in 0..10 {
        let (e, op, p) = config(&mut r);
        let s = manin_section(&e, &op, &p).unwrap();
        let c = nonzero_poly(&mut r, Q, 2, 4) / &nonzero_poly(&mut r, Q, 2, 4);
        let s2 = manin_section(&e, &op.scaled(&c), &p).unwrap();
        assert_eq!(s2, s);
    }
}

#[test]
fn char_p_sections_are_model_independent() {
    let mut r = rng(43);
    for p in [5u64, 7] {
        let k = ConstantField::prime(p).unwrap();
        for _ in 0..2 {
            let (e, pt) = common::semistable_curve(&mut r, p);
            let lam = lambda(&e).unwrap();
            let n = nu(&e, &pt).unwrap();
            for c in ["t", "(t-1)^2", "3"] {
                let c = fe(k, c, "t");
                let e2 = e.scaled(&c);
                let pt2 = e.scale_point(&pt, &c);
                same_orders(&lam, &lambda(&e2).unwrap(), &[&c]);
                same_orders(&n, &nu(&e2, &pt2).unwrap(), &[&c]);
            }
        }
    }
}
