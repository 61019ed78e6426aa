mod common;

use manin_core::elliptic::{CurvePoint, WeierstrassModel};
use manin_core::funcfield::{ConstantField, CoverMap, Derivation, Field};
use manin_core::maninmap::{manin_m, pullback_pf, PFOperator};
use manin_core::pdescent::{mu, mu_with_derivation};
use rand::Rng;

use common::{fe, legendre_cover, mu_configs, rng};

#[test]
fn manin_map_is_additive_and_kills_torsion() {
    let k = ConstantField::Rationals;
    let mut r = rng(17);
    let mut configs = 0;
    for a in ["2", "3", "-1", "5", "1/2", "-2", "4/3"] {
        let (e0, op0) = PFOperator::legendre(k);
        let phi = CoverMap::new("s", "t", fe(k, &format!("({a}) - s^2/(({a})*(({a})-1))"), "s")).unwrap();
        let op = pullback_pf(&op0, &phi).unwrap();
        let (e, p, tors) = legendre_cover(k, a);
        assert_eq!(e, e0.pullback(&phi));
        let m = |q: &CurvePoint| manin_m(&e, &op, q).unwrap();
        for t in &tors {
            assert!(m(t).is_zero());
        }
        let mp = m(&p);
        assert!(!mp.is_zero());
        for _ in 0..8 {
            let (i, j) = (r.gen_range(-2..=2), r.gen_range(-2..=2));
            let q1 = e.add(&e.scalar_mul(i, &p), &tors[r.gen_range(0..3)]);
            let q2 = e.add(&e.scalar_mul(j, &p), &tors[r.gen_range(0..3)]);
            let lhs = m(&e.add(&q1, &q2));
            assert_eq!(lhs, m(&q1) + &m(&q2), "a = {a}, i = {i}, j = {j}");
            assert_eq!(lhs, mp.clone() * &fe(k, &(i + j).to_string(), "s"));
            configs += 1;
        }
    }
    assert!(configs >= 50);
}

#[test]
fn mu_is_additive_and_kills_p_multiples() {
    let mut r = rng(19);
    let mut configs = 0;
    let mut p_multiples = 0;
    for p in [5u64, 7, 11] {
        for (e, gens) in mu_configs(p) {
            let m = |q: &CurvePoint| mu(&e, q).unwrap();
            let g = &gens[0];
            for t in &gens[1..] {
                assert!(m(t).is_zero());
            }
            let pick = |r: &mut rand_chacha::ChaCha8Rng| {
                let mut q = e.scalar_mul(r.gen_range(-3..=3), g);
                if gens.len() > 1 {
                    q = e.add(&q, &gens[r.gen_range(1..gens.len())]);
                }
                q
            };
            for _ in 0..3 {
                let (q1, q2) = (pick(&mut r), pick(&mut r));
                assert_eq!(m(&e.add(&q1, &q2)), m(&q1) + &m(&q2));
                assert_eq!(m(&e.negate(&q1)), -m(&q1));
                configs += 1;
            }
            assert!(m(&e.scalar_mul(p as i64, g)).is_zero());
            p_multiples += 1;
        }
    }
    assert!(configs >= 50, "{configs}");
    assert!(p_multiples >= 10);
}

#[test]
fn mu_does_not_depend_on_the_derivation() {
    let k = ConstantField::prime(5).unwrap();
    let e = WeierstrassModel::short(fe(k, "t", "t"), fe(k, "t", "t")).unwrap();
    let q = e.point(fe(k, "-1", "t"), fe(k, "2", "t")).unwrap();
    let d = Derivation::new(fe(k, "t^2+1", "t")).unwrap();
    assert_eq!(mu_with_derivation(&e, &q, &d).unwrap(), mu(&e, &q).unwrap());
}
