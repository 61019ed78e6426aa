//! JSON encodings of library values. Rational functions print in the
//! parser grammar with monic denominators, so every string re-parses.

use manin_core::elliptic::CurvePoint;
use manin_core::funcfield::{FieldElement, Place};
use manin_core::maninmap::PFOperator;
use manin_core::sections::{DivisorReport, Frame, GradedSection};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    /// Malformed manifest or arguments: exit code 2.
    Input(String),
    /// A mathematical hypothesis the data fails: exit code 1.
    Hypothesis(String),
}

impl From<manin_core::Error> for CliError {
    fn from(e: manin_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Hypothesis(e.to_string())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

pub fn fe(f: &FieldElement, var: &str) -> Value {
    Value::String(f.to_expr(var))
}

pub fn place(v: &Place, var: &str) -> Value {
    Value::String(v.to_expr(var))
}

pub fn point_json(p: &CurvePoint, var: &str) -> Value {
    match p {
        CurvePoint::Zero => Value::String("O".into()),
        CurvePoint::Affine { x, y } => json!({"x": fe(x, var), "y": fe(y, var)}),
    }
}

pub fn divisor(d: &DivisorReport, var: &str) -> Value {
    json!({
        "entries": d.entries.iter().map(|e| json!({
            "place": place(&e.place, var),
            "ord": e.ord,
            "degree": e.degree,
        })).collect::<Vec<_>>(),
        "degree": d.degree,
        "text": d.display(var),
    })
}

/// Value, grading and divisor of a section; `None` divisor for the zero
/// section.
pub fn section(s: &GradedSection, var: &str) -> Result<Value, CliError> {
    let div = if s.is_zero() {
        Value::Null
    } else {
        divisor(&s.divisor()?, var)
    };
    Ok(json!({
        "value": fe(&s.value, var),
        "weight": s.weight,
        "diff_degree": s.diff_degree,
        "frame": match s.frame {
            Frame::HalfDx => "dx/2y",
            Frame::Dx => "dx/y",
        },
        "expected_degree": s.expected_degree()?,
        "divisor": div,
    }))
}

pub fn operator(op: &PFOperator, var: &str) -> Value {
    json!({
        "A": fe(&op.a, var),
        "B": fe(&op.b, var),
        "C": fe(&op.c, var),
        "F": op.f.to_expr(var),
        "derivation": fe(op.derivation.scale(), var),
    })
}

/// Degree identity of a nonzero section.
pub fn degree_check(name: &str, s: &GradedSection) -> Result<Check, CliError> {
    if s.is_zero() {
        return Ok(Check::new(name, true, "zero section"));
    }
    let got = s.divisor()?.degree;
    let want = s.expected_degree()?;
    Ok(Check::new(
        name,
        got == want,
        format!(
            "degree {got}, expected -2*{} + {}*deg_omega = {want}",
            s.diff_degree, s.weight
        ),
    ))
}
