//! Plain-text rendering of a report: one `path: value` line per leaf.

use serde_json::Value;

use crate::encode::Check;

pub fn render(command: &str, results: &Value, checks: &[Check]) -> String {
    let mut out = format!("{command}\n");
    let mut lines = Vec::new();
    flatten("", results, &mut lines);
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &lines {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    if !checks.is_empty() {
        out.push_str("checks\n");
        for c in checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {mark} {}: {}\n", c.name, c.detail));
        }
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}
