//! TOML manifests: a curve over k(t), an optional chain of covers, named
//! points and an optional Picard–Fuchs operator.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use manin_core::elliptic::{CurveFunction, CurvePoint, WeierstrassModel};
use manin_core::funcfield::{parse_field_element, parse_x_polynomial, ConstantField, CoverMap, FieldElement};
use manin_core::maninmap::{pullback_pf, PFOperator};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::encode::{point_json, CliError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub characteristic: u64,
    #[serde(default = "default_variable")]
    pub variable: String,
    pub curve: CurveSpec,
    #[serde(default)]
    pub cover: Vec<CoverSpec>,
    #[serde(default)]
    pub points: BTreeMap<String, PointSpec>,
    pub operator: Option<OperatorSpec>,
    #[serde(default)]
    pub params: Params,
}

fn default_variable() -> String {
    "t".into()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    /// Monic cubic in x; the curve is y² = cubic.
    pub cubic: String,
}

/// `previous variable = image(variable)`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub variable: String,
    pub image: String,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Coordinates {
        x: String,
        y: String,
    },
    /// An integer combination of other points, e.g. `3*P3 - P2`.
    Combination(String),
}

/// Given over the curve's own variable with δ = d/dt, before any cover.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "F")]
    pub f: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub n_max: Option<u64>,
    pub pole_bound: Option<usize>,
}

/// A loaded manifest: everything lives over the last variable of the cover
/// chain.
pub struct Setup {
    pub var: String,
    pub model: WeierstrassModel,
    pub points: Vec<(String, CurvePoint)>,
    pub operator: Option<PFOperator>,
    pub n_max: u64,
    pub pole_bound: usize,
    pub inputs: Value,
}

pub fn read(path: &Path) -> Result<Manifest, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| CliError::Input(format!("invalid manifest: {e}")))
}

pub fn load(m: &Manifest, n_max: Option<u64>, pole_bound: Option<usize>) -> Result<Setup, CliError> {
    let field = match m.characteristic {
        0 => ConstantField::Rationals,
        p => ConstantField::prime(p)?,
    };
    let base = m.variable.as_str();
    let cubic = parse_x_polynomial(&m.curve.cubic, field, base)?;
    let base_model = WeierstrassModel::from_cubic(&cubic)?;

    let mut var = base.to_string();
    let mut chain: Option<CoverMap> = None;
    for c in &m.cover {
        if c.variable == "x" || c.variable == "y" || c.variable == var {
            return Err(CliError::Input(format!(
                "cover variable `{}` is not a fresh name",
                c.variable
            )));
        }
        let step = CoverMap::new(
            c.variable.as_str(),
            var.as_str(),
            parse_field_element(&c.image, field, &c.variable)?,
        )?;
        chain = Some(match chain {
            None => step,
            Some(prev) => prev.after(&step),
        });
        var = c.variable.clone();
    }
    let model = match &chain {
        Some(phi) => base_model.pullback(phi),
        None => base_model.clone(),
    };

    let operator = match &m.operator {
        None => None,
        Some(o) => {
            let fe = |s: &str| parse_field_element(s, field, base);
            let f = CurveFunction::parse(&o.f, &base_model, base)?;
            let op = PFOperator::new(fe(&o.a)?, fe(&o.b)?, fe(&o.c)?, f);
            Some(match &chain {
                Some(phi) => pullback_pf(&op, phi)?,
                None => op,
            })
        }
    };

    let points = resolve_points(&m.points, &model, field, &var)?;
    let n_max = n_max.or(m.params.n_max).unwrap_or(30);
    let pole_bound = pole_bound.or(m.params.pole_bound).unwrap_or(4);

    let inputs = json!({
        "characteristic": m.characteristic,
        "variable": var,
        "curve": m.curve.cubic,
        "model": model.cubic().to_expr(&var),
        "covers": m.cover.iter().map(|c| json!({"variable": c.variable, "image": c.image})).collect::<Vec<_>>(),
        "points": points.iter().map(|(n, p)| (n.clone(), point_json(p, &var))).collect::<serde_json::Map<_, _>>(),
        "operator": m.operator.as_ref().map(|o| json!({"A": o.a, "B": o.b, "C": o.c, "F": o.f})),
        "n_max": n_max,
        "pole_bound": pole_bound,
    });
    Ok(Setup {
        var,
        model,
        points,
        operator,
        n_max,
        pole_bound,
        inputs,
    })
}

fn resolve_points(
    specs: &BTreeMap<String, PointSpec>,
    model: &WeierstrassModel,
    field: ConstantField,
    var: &str,
) -> Result<Vec<(String, CurvePoint)>, CliError> {
    let mut done: BTreeMap<String, CurvePoint> = BTreeMap::new();
    for (name, spec) in specs {
        if let PointSpec::Coordinates { x, y } = spec {
            let coord = |s: &str| -> Result<FieldElement, CliError> { Ok(parse_field_element(s, field, var)?) };
            let p = model
                .point(coord(x)?, coord(y)?)
                .map_err(|_| CliError::Input(format!("point not on curve: {name}")))?;
            done.insert(name.clone(), p);
        }
    }
    for name in specs.keys() {
        let mut visiting = BTreeSet::new();
        resolve(name, specs, model, &mut done, &mut visiting)?;
    }
    Ok(done.into_iter().collect())
}

fn resolve(
    name: &str,
    specs: &BTreeMap<String, PointSpec>,
    model: &WeierstrassModel,
    done: &mut BTreeMap<String, CurvePoint>,
    visiting: &mut BTreeSet<String>,
) -> Result<CurvePoint, CliError> {
    if let Some(p) = done.get(name) {
        return Ok(p.clone());
    }
    let Some(PointSpec::Combination(src)) = specs.get(name) else {
        return Err(CliError::Input(format!("unknown point `{name}`")));
    };
    if !visiting.insert(name.to_string()) {
        return Err(CliError::Input(format!("point `{name}` is defined in terms of itself")));
    }
    let mut acc = CurvePoint::Zero;
    for (n, other) in parse_combination(src)? {
        let q = resolve(&other, specs, model, done, visiting)?;
        acc = model.add(&acc, &model.scalar_mul(n, &q));
    }
    done.insert(name.to_string(), acc.clone());
    Ok(acc)
}

/// Parses `a*P + b*Q - R ...` into (coefficient, name) pairs.
pub fn parse_combination(src: &str) -> Result<Vec<(i64, String)>, CliError> {
    let bad = || CliError::Input(format!("invalid point combination `{src}`"));
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if !terms.is_empty() {
            return Err(bad());
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (n, name) = match term.split_once('*') {
            Some((n, name)) => (n.parse::<i64>().map_err(|_| bad())?, name),
            None => {
                let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
                if digits == term.len() {
                    return Err(bad());
                }
                let n = if digits == 0 {
                    1
                } else {
                    term[..digits].parse::<i64>().map_err(|_| bad())?
                };
                if digits > 0 {
                    return Err(CliError::Input(format!("write `{}*{}` in `{src}`", n, &term[digits..])));
                }
                (n, term)
            }
        };
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(bad());
        }
        terms.push((sign * n, name.to_string()));
    }
    Ok(terms)
}
