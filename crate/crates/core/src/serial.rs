//! JSON forms of curves, Möbius maps and descent outcomes. Rationals are
//! strings `"n/d"` (or `"n"`), field elements are arrays of such strings in
//! the power basis, polynomials list coefficients constant term first.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::curve::{CurveError, PgonalCurve};
use crate::descent::{DescentOutcome, ModelPolynomial};
use crate::exactfield::{
    format_rational, parse_rational, FieldElement, FieldError, NumberField, QPoly, Rational,
};
use crate::projgeom::{Mobius, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{path}: {message} (line {line}, column {column})")]
    Syntax { path: String, message: String, line: usize, column: usize },
    #[error("{path}: {message}")]
    Value { path: String, message: String },
    #[error("{path}: {source}")]
    Field { path: String, source: FieldError },
    #[error("{0}")]
    Curve(#[from] CurveError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    minpoly: Vec<String>,
    label: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum PointSpec {
    Named(String),
    Affine(Vec<String>),
    Homogeneous(Vec<Vec<String>>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchSpec {
    point: PointSpec,
    mult: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSpec {
    p: u32,
    field: FieldSpec,
    branch: Vec<BranchSpec>,
}

fn value_err(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Value { path: path.into(), message: message.into() }
}

fn parse_rationals(path: &str, xs: &[String]) -> Result<Vec<Rational>, ParseError> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| value_err(format!("{path}[{i}]"), e.to_string())))
        .collect()
}

fn parse_element(path: &str, field: &NumberField, xs: &[String]) -> Result<FieldElement, ParseError> {
    let coords = parse_rationals(path, xs)?;
    field
        .element(coords)
        .map_err(|source| ParseError::Field { path: path.to_string(), source })
}

/// Parses a field description `{minpoly, label}`.
pub fn parse_field(v: &Value) -> Result<NumberField, ParseError> {
    let spec: FieldSpec = serde_json::from_value(v.clone())
        .map_err(|e| value_err("field", e.to_string()))?;
    field_from_spec(&spec)
}

fn field_from_spec(spec: &FieldSpec) -> Result<NumberField, ParseError> {
    let coeffs = parse_rationals("field.minpoly", &spec.minpoly)?;
    NumberField::new(QPoly::new(coeffs), &spec.label)
        .map_err(|source| ParseError::Field { path: "field.minpoly".into(), source })
}

/// Parses and validates a curve file.
pub fn parse_curve(text: &str) -> Result<PgonalCurve, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let spec: CurveSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        // serde_json appends " at line L column C"; location is kept separately
        let mut message = inner.to_string();
        if let Some(cut) = message.rfind(" at line ") {
            message.truncate(cut);
        }
        ParseError::Syntax {
            path,
            message,
            line: inner.line(),
            column: inner.column(),
        }
    })?;
    let field = field_from_spec(&spec.field)?;
    let mut entries = Vec::with_capacity(spec.branch.len());
    for (i, b) in spec.branch.iter().enumerate() {
        let path = format!("branch[{i}].point");
        let pt = match &b.point {
            PointSpec::Named(s) if s == "inf" => ProjPoint::Infinity,
            PointSpec::Named(s) => return Err(value_err(path, format!("unknown point {s:?}"))),
            PointSpec::Affine(xs) => ProjPoint::Finite(parse_element(&path, &field, xs)?),
            PointSpec::Homogeneous(uv) => {
                if uv.len() != 2 {
                    return Err(value_err(path, "homogeneous point needs [u, v]"));
                }
                let u = parse_element(&format!("{path}[0]"), &field, &uv[0])?;
                let v = parse_element(&format!("{path}[1]"), &field, &uv[1])?;
                ProjPoint::from_homogeneous(&u, &v).map_err(|e| value_err(path, e.to_string()))?
            }
        };
        entries.push((pt, b.mult));
    }
    Ok(PgonalCurve::new(spec.p, field, entries)?)
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn element_json(a: &FieldElement) -> Value {
    Value::Array(a.coords().iter().map(rational_json).collect())
}

pub fn point_json(p: &ProjPoint) -> Value {
    match p {
        ProjPoint::Finite(a) => element_json(a),
        ProjPoint::Infinity => Value::String("inf".into()),
    }
}

pub fn field_json(f: &NumberField) -> Value {
    json!({
        "minpoly": f.minpoly().coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "label": f.label(),
    })
}

pub fn mobius_json(g: &Mobius) -> Value {
    let m = g.matrix();
    json!([[element_json(&m.a), element_json(&m.b)], [element_json(&m.c), element_json(&m.d)]])
}

pub fn curve_json(c: &PgonalCurve) -> Value {
    let branch: Vec<Value> = c
        .branch()
        .entries()
        .iter()
        .map(|(p, w)| json!({"point": point_json(p), "mult": w}))
        .collect();
    json!({"p": c.p(), "field": field_json(c.field()), "branch": branch})
}

/// Canonical file text: compact JSON followed by a newline.
pub fn serialize_curve(c: &PgonalCurve) -> String {
    let mut s = serde_json::to_string(&curve_json(c)).expect("json");
    s.push('\n');
    s
}

pub fn model_json(m: &ModelPolynomial) -> Value {
    match m.disc {
        None => Value::Array(m.coeffs.iter().map(|(u, _)| rational_json(u)).collect()),
        Some(_) => Value::Array(
            m.coeffs.iter().map(|(u, v)| json!([rational_json(u), rational_json(v)])).collect(),
        ),
    }
}

pub fn outcome_json(o: &DescentOutcome) -> Value {
    let field = match (&o.model, &o.extension_disc) {
        (Some(_), None) => json!("Q"),
        (Some(_), Some(e)) => {
            let neg = -e.clone();
            json!({"minpoly": [neg.to_string(), "0", "1"], "disc": e.to_string()})
        }
        (None, _) => Value::Null,
    };
    let witness = o.witness.as_ref().map(|w| {
        json!({"field": field_json(w.field()), "matrix": mobius_json(w)})
    });
    json!({
        "variant": o.variant.as_str(),
        "field": field,
        "model": o.model.as_ref().map(model_json),
        "witness": witness,
        "obstruction": o.obstruction.as_ref().map(|p| json!({"place": p.to_string()})),
        "places": o.places.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "conic": o.conic.as_ref().map(|f| f.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        "multiple_cocycles": o.cocycle.as_ref().map(|c| c.multiple_selections),
        "failing_automorphism": o.failing_sigma,
        "k1_degree": o.k1_degree,
    })
}
