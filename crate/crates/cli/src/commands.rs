use std::path::Path;

use serde_json::{json, Value};

use pgonal::curve::{
    gallery, isomorphic_as_pgonal, power_character, uniqueness_classify, CurveError, PgonalCurve,
    UniquenessVerdict,
};
use pgonal::descent::{compute_cocycle, descend, DescendOptions, DescentError, Variant};
use pgonal::exactfield::quadform::PointSearch;
use pgonal::serial::{curve_json, field_json, mobius_json, outcome_json, parse_curve, serialize_curve};
use pgonal::{corpus, serial::ParseError};

use crate::report::{Report, Status};

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub height_bound: Option<u64>,
    pub seed: u64,
}

fn curve_status(e: &CurveError) -> Status {
    match e {
        e if e.is_math_negative() => Status::MathNegative,
        CurveError::Invariant(_) => Status::Internal,
        _ => Status::InvalidInput,
    }
}

fn descent_status(e: &DescentError) -> Status {
    match e {
        DescentError::FieldOfModuli { .. } | DescentError::CocycleObstruction => Status::MathNegative,
        DescentError::NotGalois(_) => Status::InvalidInput,
        DescentError::Curve(c) => curve_status(c),
        _ => Status::Internal,
    }
}

pub fn load(cmd: &str, path: &Path) -> Result<PgonalCurve, Report> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Report::failure(cmd, Status::InvalidInput, format!("{}: {e}", path.display()))
    })?;
    parse_curve(&text).map_err(|e| {
        let status = match &e {
            ParseError::Curve(c) => curve_status(c),
            _ => Status::InvalidInput,
        };
        Report::failure(cmd, status, format!("{}: {e}", path.display()))
    })
}

fn verdict_json(v: &UniquenessVerdict) -> Value {
    json!({"unique": v.unique, "reason": v.reason.to_string()})
}

pub fn validate(c: &PgonalCurve) -> Report {
    Report::new(
        "validate",
        Status::Ok,
        json!({
            "valid": true,
            "p": c.p(),
            "m": c.m(),
            "genus": c.genus(),
            "curve": curve_json(c),
        }),
    )
}

pub fn genus(c: &PgonalCurve) -> Report {
    Report::new("genus", Status::Ok, json!({"genus": c.genus()}))
}

pub fn isom(c1: &PgonalCurve, c2: &PgonalCurve) -> Report {
    match isomorphic_as_pgonal(c1, c2) {
        Ok(list) => {
            let items: Vec<Value> =
                list.iter().map(|(t, g)| json!({"t": t, "map": mobius_json(g)})).collect();
            if items.is_empty() {
                Report::new("isom", Status::MathNegative, json!([])).note("not isomorphic")
            } else {
                Report::new("isom", Status::Ok, Value::Array(items))
            }
        }
        Err(e) => Report::failure("isom", curve_status(&e), e.to_string()),
    }
}

pub fn character(c: &PgonalCurve) -> Report {
    match power_character(c) {
        Ok(ch) => {
            let values: Vec<Value> = ch
                .values
                .iter()
                .enumerate()
                .map(|(s, t)| json!({"automorphism": s, "t": t}))
                .collect();
            let r = Report::new(
                "character",
                Status::Ok,
                json!({
                    "p": ch.prime,
                    "values": values,
                    "stabilizer": ch.stabilizer,
                    "kernel": ch.kernel,
                    "image_order": ch.image_order,
                    "k1_degree": ch.k1_degree(),
                    "trivial": ch.is_trivial(),
                }),
            );
            if ch.is_trivial() {
                r
            } else {
                r.note(format!("nontrivial power character, [k1:k] = {}", ch.k1_degree()))
            }
        }
        Err(e) => {
            let msg = match &e {
                CurveError::FieldOfModuli { .. } => format!("FOM not contained in k: {e}"),
                _ => e.to_string(),
            };
            Report::failure("character", curve_status(&e), msg)
        }
    }
}

pub fn cocycle(c: &PgonalCurve) -> Report {
    match compute_cocycle(c) {
        Ok(co) => {
            let maps: Vec<Value> = co
                .maps
                .iter()
                .enumerate()
                .map(|(s, g)| json!({"automorphism": s, "map": mobius_json(g)}))
                .collect();
            let r = Report::new(
                "cocycle",
                Status::Ok,
                json!({
                    "field": field_json(c.field()),
                    "maps": maps,
                    "trivial": co.is_trivial(),
                    "multiple_selections": co.multiple_selections,
                }),
            );
            if co.multiple_selections {
                r.note("more than one relation-consistent selection exists; reporting the first")
            } else {
                r
            }
        }
        Err(e) => {
            let msg = match &e {
                DescentError::FieldOfModuli { .. } => format!("FOM not contained in k: {e}"),
                _ => e.to_string(),
            };
            Report::failure("cocycle", descent_status(&e), msg)
        }
    }
}

pub fn descend_cmd(c: &PgonalCurve, opts: Options) -> Report {
    let search = PointSearch { height_bound: opts.height_bound };
    match descend(c, DescendOptions { search }) {
        Ok(out) => {
            let status = if out.variant == Variant::RationalModel {
                Status::Ok
            } else {
                Status::MathNegative
            };
            let mut r = Report::new("descend", status, outcome_json(&out));
            match out.variant {
                Variant::RationalModel => {}
                Variant::QuadraticModel => {
                    let place = out.obstruction.as_ref().map(|p| p.to_string()).unwrap_or_default();
                    r = r.note(format!("conic has no rational point (fails at {place})"));
                    if let Some(e) = &out.extension_disc {
                        r = r.note(format!("model defined over Q(sqrt({e}))"));
                    }
                }
                Variant::FomObstruction => r = r.note("FOM not contained in k"),
                Variant::CocycleObstruction => r = r.note("no relation-consistent cocycle selection"),
                Variant::CharacterExtension => {
                    let k1 = out.k1_degree.unwrap_or(0);
                    r = r.note(format!("nontrivial power character, [k1:k] = {k1}"))
                }
            }
            r
        }
        Err(e) => Report::failure("descend", descent_status(&e), e.to_string()),
    }
}

pub fn classify(p: u32, m: usize) -> Report {
    match uniqueness_classify(p, m) {
        Ok(v) => Report::new("classify", Status::Ok, verdict_json(&v)),
        Err(e) => Report::failure("classify", curve_status(&e), e.to_string()),
    }
}

pub fn gallery_cmd() -> Report {
    let items: Vec<Value> = gallery()
        .iter()
        .map(|e| {
            json!({
                "tag": e.tag,
                "name": e.name,
                "equation": e.equation,
                "genus": e.genus,
                "classification": verdict_json(&e.verdict()),
                "annotation": e.annotation,
                "curve": curve_json(&e.curve),
            })
        })
        .collect();
    Report::new("gallery", Status::Ok, Value::Array(items))
}

/// Writes `count` twisted curves into `dir` as corpus_NNNN.json.
pub fn corpus_cmd(dir: &Path, count: usize, opts: Options) -> Report {
    if let Err(e) = std::fs::create_dir_all(dir) {
        return Report::failure("corpus", Status::InvalidInput, format!("{}: {e}", dir.display()));
    }
    let mut rng = corpus::rng(opts.seed);
    let mut written = Vec::new();
    for i in 0..count {
        let d = [-1i64, 2, 3, 5][i % 4];
        let p = [2u32, 3, 5][(i / 4) % 3];
        let m = corpus::min_points(p) + if p == 2 { 2 } else { 1 } * (i % 2);
        let (curve, _) = corpus::random_twisted_curve(&mut rng, d, p, m);
        let name = format!("corpus_{i:04}.json");
        if let Err(e) = std::fs::write(dir.join(&name), serialize_curve(&curve)) {
            return Report::failure("corpus", Status::InvalidInput, format!("{name}: {e}"));
        }
        written.push(json!({"file": name, "p": p, "d": d, "m": curve.m()}));
    }
    Report::new("corpus", Status::Ok, json!({"seed": opts.seed, "files": written}))
}
