//! Aligned plain-text rendering of JSON reports.

use npinv_core::GenusCensus;
use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => {
            let parts: Vec<String> = a.iter().map(|x| scalar(x).unwrap_or_else(|| x.to_string())).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.iter().filter(|(_, x)| scalar(x).is_some()).map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k:<width$}  {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (n, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{n}]\n"));
                        walk(x, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

pub fn census_table(c: &GenusCensus) -> String {
    let rows: Vec<(String, String, String)> = c
        .entries
        .iter()
        .map(|e| {
            let f = &e.fingerprint;
            (e.interior.to_string(), f.gonality.to_string(), format!("{:?}", f.scrollar_multisets))
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max("interior".len());
    let mut out = format!("genus {} ({} polygons)\n{:<w0$}  gon  scrollar\n", c.genus, rows.len(), "interior");
    for (a, b, s) in rows {
        out.push_str(&format!("{a:<w0$}  {b:<3}  {s}\n"));
    }
    out
}
