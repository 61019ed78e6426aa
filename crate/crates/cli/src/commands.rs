use clap::ValueEnum;
use manin_core::elliptic::{bad_places, deg_omega, CurvePoint};
use manin_core::funcfield::Field;
use manin_core::maninmap::{
    exceptional_set, find_pf, manin_m, manin_section, tangency_report, verify_pf, ExceptionalSet, PFOperator,
};
use manin_core::pdescent::{bound_report_charp, check_tau_table, lambda, mu, nu, CharPBoundReport, TangencyKind};
use serde_json::{json, Map, Value};

use crate::encode::{self, degree_check, fe, place, Check, CliError};
use crate::manifest::Setup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Invariants,
    Lambda,
    Mu,
    Nu,
    DescentBound,
    CheckTau,
    VerifyPf,
    FindPf,
    Manin,
    ExceptionalSet,
    Tangency,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

pub struct Outcome {
    pub results: Value,
    pub checks: Vec<Check>,
}

pub fn run(cmd: Command, s: &Setup) -> Result<Outcome, CliError> {
    let mut checks = Vec::new();
    let results = match cmd {
        Command::Invariants => invariants(s)?,
        Command::Lambda => {
            let l = lambda(&s.model)?;
            checks.push(degree_check("lambda degree", &l)?);
            json!({"lambda": encode::section(&l, &s.var)?})
        }
        Command::Mu => per_point(s, |name, p| {
            let m = mu(&s.model, p)?;
            let pp = s.model.scalar_mul(s.model.characteristic() as i64, p);
            let mpp = mu(&s.model, &pp)?;
            checks.push(Check::new(
                format!("{name}: mu(pP) = 0"),
                mpp.is_zero(),
                format!("mu(pP) = {}", mpp.to_expr(&s.var)),
            ));
            Ok(json!({"mu": fe(&m, &s.var)}))
        })?,
        Command::Nu => per_point(s, |name, p| {
            let n = nu(&s.model, p)?;
            checks.push(degree_check(&format!("{name}: nu degree"), &n)?);
            Ok(json!({"nu": encode::section(&n, &s.var)?}))
        })?,
        Command::DescentBound => per_point(s, |name, p| {
            let r = bound_report_charp(&s.model, p, s.n_max)?;
            checks.push(Check::new(
                format!("{name}: membership"),
                r.membership_holds(),
                "ord nu >= -ord D at every place",
            ));
            checks.push(Check::new(
                format!("{name}: local inequalities"),
                r.local_checks_hold(),
                format!("{} local checks", r.local_checks.len()),
            ));
            checks.push(Check::new(
                format!("{name}: tangency bound"),
                r.bound_holds(),
                format!("|T_o| + p|T_s| = {} <= {}", r.weighted_count(), r.bound),
            ));
            Ok(charp_report(&r, &s.var))
        })?,
        Command::CheckTau => {
            let r = check_tau_table(&s.model)?;
            checks.push(Check::new(
                "tau table",
                r.all_pass(),
                format!("{} places", r.rows.len()),
            ));
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "place": place(&row.place, &s.var),
                        "kodaira": row.kodaira.to_string(),
                        "ell": row.ell,
                        "expected": row.expected.to_string(),
                        "pass": row.pass,
                    })
                })
                .collect();
            json!({"characteristic": r.characteristic, "rows": rows})
        }
        Command::VerifyPf => {
            let op = s
                .operator
                .as_ref()
                .ok_or_else(|| CliError::Input("verify-pf needs an [operator] section".into()))?;
            let ok = verify_pf(&s.model, op)?;
            checks.push(Check::new("L(dx/y) = dF", ok, "exactness of the witness"));
            json!({"verified": ok})
        }
        Command::FindPf => {
            let op = find_pf(&s.model, s.pole_bound)?;
            let ok = verify_pf(&s.model, &op)?;
            checks.push(Check::new("L(dx/y) = dF", ok, "solved operator verified"));
            json!({"operator": encode::operator(&op, &s.var), "verified": ok})
        }
        Command::Manin => {
            let op = operator(s)?;
            let d = deg_omega(&s.model)?;
            per_point(s, |name, p| {
                let m = manin_m(&s.model, &op, p)?;
                let sec = manin_section(&s.model, &op, p)?;
                if !sec.is_zero() {
                    let got = sec.divisor()?.degree;
                    checks.push(Check::new(
                        format!("{name}: divisor degree"),
                        got == -4 - d,
                        format!("degree {got}, expected -4 - {d}"),
                    ));
                }
                Ok(json!({"M": fe(&m, &s.var), "section": encode::section(&sec, &s.var)?}))
            })?
        }
        Command::ExceptionalSet => exceptional(&exceptional_set(&s.model)?, &s.var),
        Command::Tangency => {
            let op = operator(s)?;
            per_point(s, |name, p| {
                let r = tangency_report(&s.model, &op, p)?;
                checks.push(Check::new(
                    format!("{name}: local bounds"),
                    r.local_bounds_hold(),
                    "J >= -1 on S and J >= 0 off S",
                ));
                checks.push(Check::new(
                    format!("{name}: tangency bound"),
                    r.bound_holds(),
                    format!(
                        "deg T = {}, weighted J off S = {}, bound {}",
                        r.tangency_degree(),
                        r.weighted_j_off_s,
                        r.bound
                    ),
                ));
                checks.push(Check::new(
                    format!("{name}: divisor degree"),
                    r.degree_identity_holds(),
                    format!("expected -4 - {}", r.d),
                ));
                let rows: Vec<Value> = r
                    .rows
                    .iter()
                    .map(|row| {
                        json!({
                            "place": place(&row.place, &s.var),
                            "J": row.j,
                            "I": row.i,
                            "in_S": row.in_s,
                            "pass": row.pass,
                        })
                    })
                    .collect();
                Ok(json!({
                    "section": encode::section(&r.section, &s.var)?,
                    "zero_section": r.zero_section,
                    "genus": r.genus,
                    "deg_omega": r.d,
                    "S": exceptional(&r.s, &s.var),
                    "bound": r.bound,
                    "rows": rows,
                    "tangencies": r.tangencies.iter().map(|v| place(v, &s.var)).collect::<Vec<_>>(),
                    "tangency_degree": r.tangency_degree(),
                    "weighted_J_off_S": r.weighted_j_off_s,
                }))
            })?
        }
    };
    Ok(Outcome { results, checks })
}

/// The manifest's operator, or one solved for within the pole bound.
fn operator(s: &Setup) -> Result<PFOperator, CliError> {
    match &s.operator {
        Some(op) => Ok(op.clone()),
        None => Ok(find_pf(&s.model, s.pole_bound)?),
    }
}

fn per_point(s: &Setup, mut f: impl FnMut(&str, &CurvePoint) -> Result<Value, CliError>) -> Result<Value, CliError> {
    if s.points.is_empty() {
        return Err(CliError::Input(
            "this command needs at least one point in [points]".into(),
        ));
    }
    let mut out = Map::new();
    for (name, p) in &s.points {
        out.insert(name.clone(), f(name, p)?);
    }
    Ok(json!({"points": out}))
}

fn invariants(s: &Setup) -> Result<Value, CliError> {
    let e = &s.model;
    let v = &s.var;
    let bad: Vec<Value> = bad_places(e)?
        .iter()
        .map(|(p, ty)| json!({"place": place(p, v), "degree": p.degree(), "kodaira": ty.to_string()}))
        .collect();
    let (c2, c1, c0) = e.coefficients();
    Ok(json!({
        "model": e.cubic().to_expr(v),
        "coefficients": {"c2": fe(c2, v), "c1": fe(c1, v), "c0": fe(c0, v)},
        "discriminant": fe(&e.discriminant(), v),
        "c4": fe(&e.c4(), v),
        "c6": fe(&e.c6(), v),
        "j": fe(&e.j_invariant(), v),
        "isotrivial": e.is_isotrivial(),
        "deg_omega": deg_omega(e)?,
        "bad_places": bad,
    }))
}

fn exceptional(set: &ExceptionalSet, var: &str) -> Value {
    let entries: Vec<Value> = set
        .entries
        .iter()
        .map(|e| json!({"place": place(&e.place, var), "reason": e.reason.to_string(), "ord_dj": e.ord_dj}))
        .collect();
    json!({"entries": entries, "size": set.size()})
}

fn charp_report(r: &CharPBoundReport, var: &str) -> Value {
    let tangencies: Vec<Value> = r
        .tangencies
        .iter()
        .map(|t| {
            json!({
                "place": place(&t.place, var),
                "n": t.n,
                "iota": t.iota,
                "kind": match t.kind {
                    TangencyKind::Ordinary => "ordinary",
                    TangencyKind::Supersingular => "supersingular",
                },
            })
        })
        .collect();
    let local: Vec<Value> = r
        .local_checks
        .iter()
        .map(|c| {
            json!({
                "place": place(&c.place, var),
                "n": c.n,
                "iota": c.iota,
                "ord_nu": c.ord_nu,
                "refined_rhs": c.refined_rhs,
                "refined_pass": c.refined_pass,
                "strong_rhs": c.strong_rhs,
                "strong_pass": c.strong_pass,
            })
        })
        .collect();
    let membership: Vec<Value> = r
        .membership
        .iter()
        .map(|m| json!({"place": place(&m.place, var), "ord_nu": m.ord_nu, "ord_D": m.ord_d, "pass": m.pass}))
        .collect();
    json!({
        "characteristic": r.characteristic,
        "genus": r.genus,
        "deg_omega": r.d,
        "delta": r.delta,
        "bound": r.bound,
        "n_max": r.n_max,
        "multiples_scanned": r.multiples_scanned,
        "nu_is_zero": r.nu_is_zero,
        "tangencies": tangencies,
        "T_o": r.t_o,
        "T_s": r.t_s,
        "weighted_count": r.weighted_count(),
        "local_checks": local,
        "generic_simple_checks": r.generic_simple_checks,
        "membership": membership,
        "divisor": {
            "D0": encode::divisor(&r.divisor.d0, var),
            "D_inf": encode::divisor(&r.divisor.d_inf, var),
            "D_prime": encode::divisor(&r.divisor.d_prime, var),
            "D": encode::divisor(&r.divisor.d, var),
        },
    })
}
