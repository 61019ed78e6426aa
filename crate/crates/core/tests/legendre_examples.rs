use manin_core::elliptic::{CurvePoint, WeierstrassModel};
use manin_core::funcfield::{parse_field_element, ConstantField, CoverMap, FieldElement, Place};
use manin_core::maninmap::{exceptional_set, manin_section, pullback_pf, tangency_report, verify_pf, PFOperator};
use manin_core::sections::Frame;

const Q: ConstantField = ConstantField::Rationals;

fn fe(s: &str, var: &str) -> FieldElement {
    parse_field_element(s, Q, var).unwrap()
}

fn place(s: &str, var: &str) -> Place {
    Place::finite(fe(s, var).num().clone())
}

fn legendre_over(image: &str, var: &str) -> (WeierstrassModel, PFOperator) {
    let (e, op) = PFOperator::legendre(Q);
    let phi = CoverMap::new(var, "t", fe(image, var)).unwrap();
    (e.pullback(&phi), pullback_pf(&op, &phi).unwrap())
}

#[test]
fn tangent_free_section_over_double_cover() {
    let (e, op) = legendre_over("2 - s^2/2", "s");
    assert!(verify_pf(&e, &op).unwrap());
    let p = e.point(fe("2", "s"), fe("s", "s")).unwrap();
    let m = manin_section(&e, &op, &p).unwrap();
    assert_eq!(m.frame, Frame::Dx);
    assert_eq!(m.value, fe("-8/(s*(s^2-4)*(s^2-2))", "s"));

    let report = tangency_report(&e, &op, &p).unwrap();
    assert!(report.tangencies.is_empty());
    let allowed = [
        place("s", "s"),
        place("s-2", "s"),
        place("s+2", "s"),
        place("s^2-2", "s"),
        Place::Infinity,
    ];
    let divisor = report.divisor.as_ref().unwrap();
    assert!(divisor.places().all(|v| allowed.contains(v)));
    assert!(divisor.places().all(|v| report.s.contains(v)));
    assert!(report.local_bounds_hold() && report.bound_holds() && report.degree_identity_holds());
}

#[test]
fn one_parameter_family_of_points() {
    for a in [3i64, 5, -1] {
        let a = format!("({a})");
        let image = format!("{a} - s^2/({a}*({a}-1))");
        let (e, op) = legendre_over(&image, "s");
        let p = e.point(fe(&a, "s"), fe("s", "s")).unwrap();
        let m = manin_section(&e, &op, &p).unwrap();
        let expected = format!("-2*{a}^2*({a}-1)^2/(s*(s^2-{a}^2*({a}-1))*(s^2-{a}*({a}-1)^2))");
        assert_eq!(m.value, fe(&expected, "s"), "a = {a}");
        let report = tangency_report(&e, &op, &p).unwrap();
        assert!(report.tangencies.is_empty(), "a = {a}");
        assert!(report.bound_holds());
    }
}

#[test]
fn order_three_contact_over_biquadratic_field() {
    let s2 = "(u^2-6*u+3)/(u^2-3)";
    let s3 = "(-3*u^2+6*u-9)/(u^2-3)";
    let (e, op) = legendre_over(&format!("2 - ({s2})^2/2"), "u");
    let p2 = e.point(fe("2", "u"), fe(s2, "u")).unwrap();
    let p3 = e.point(fe("3", "u"), fe(s3, "u")).unwrap();
    let q = e.sub(&e.scalar_mul(3, &p3), &p2);
    assert!(!matches!(q, CurvePoint::Zero));

    let report = tangency_report(&e, &op, &q).unwrap();
    let v = place("u-1", "u");
    assert_eq!(report.j_at(&v), Some(1));
    assert!(!exceptional_set(&e).unwrap().contains(&v));
    let row = report.rows.iter().find(|r| r.place == v).unwrap();
    assert_eq!(row.i, Some(3));
    assert!(report.tangencies.contains(&v));
    assert!(report.local_bounds_hold() && report.bound_holds() && report.degree_identity_holds());
}
