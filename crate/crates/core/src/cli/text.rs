use std::fmt::Write;

use serde_json::Value;

use super::Report;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn walk(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    match v {
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", parts.join(", "));
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, x) in items.iter().enumerate() {
                walk(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                walk(out, k, x, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}

/// Indented plain-text view of a report; same content as the JSON form.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let command = serde_json::to_value(&r.command).expect("serializable");
    let _ = writeln!(out, "knotforge {}", command["command"].as_str().unwrap_or("?"));
    let _ = writeln!(out, "schema_version: {}", r.schema_version);
    let _ = writeln!(out, "conventions: IHX {} / STU {}", r.conventions.ihx, r.conventions.stu);
    let _ = writeln!(out, "pass: {}", r.pass);
    walk(&mut out, "result", &r.result, 0);
    out
}
