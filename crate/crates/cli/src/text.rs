//! Human-readable rendering of reports.

use serde_json::Value;

use crate::report::Report;

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn fields(v: &Value, indent: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{indent}{k}:\n"));
                        fields(x, &format!("{indent}  "), out);
                    }
                    _ => out.push_str(&format!("{indent}{k}: {}\n", compact(x))),
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{indent}[{i}]\n"));
                fields(x, &format!("{indent}  "), out);
            }
        }
        Value::Null => {}
        other => out.push_str(&format!("{indent}{}\n", compact(other))),
    }
}

pub fn render(r: &Report) -> String {
    let mut out = format!("{}: {}\n", r.command, r.status.as_str());
    let p = &r.payload;
    match r.command.as_str() {
        "genus" if p.get("genus").is_some() => out.push_str(&format!("genus {}\n", p["genus"])),
        "classify" if p.get("unique").is_some() => {
            let word = if p["unique"] == Value::Bool(true) { "unique" } else { "not unique" };
            out.push_str(&format!("{word} ({})\n", compact(&p["reason"])));
        }
        "gallery" => {
            for e in p.as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "{}  {}  genus {}  {}\n",
                    compact(&e["tag"]),
                    compact(&e["equation"]),
                    e["genus"],
                    compact(&e["classification"]["reason"]),
                ));
            }
        }
        "batch" => {
            for e in p.as_array().into_iter().flatten() {
                out.push_str(&format!("== {}: {}\n", compact(&e["file"]), compact(&e["status"])));
                fields(&e["payload"], "  ", &mut out);
            }
        }
        _ => fields(p, "  ", &mut out),
    }
    out
}
