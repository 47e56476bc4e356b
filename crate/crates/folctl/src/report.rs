//! Versioned command reports and their text rendering.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u64 = 1;

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `{"schema", "command", "input_digest", "status", "payload"}`, plus
/// `"timing"` only when requested.
pub fn report(command: &str, input_digest: Option<&str>, ok: bool, payload: Value, elapsed_ms: Option<f64>) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    m.insert("command".into(), command.into());
    m.insert("input_digest".into(), input_digest.map_or(Value::Null, |d| Value::String(format!("sha256:{}", d))));
    m.insert("status".into(), if ok { "ok" } else { "error" }.into());
    m.insert("payload".into(), payload);
    if let Some(ms) = elapsed_ms {
        m.insert("timing".into(), serde_json::json!({ "elapsed_ms": ms }));
    }
    Value::Object(m)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                if is_flat(val) {
                    out.push_str(&format!("{}{}: {}\n", pad, k, inline(val)));
                } else {
                    out.push_str(&format!("{}{}:\n", pad, k));
                    render(val, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{}- {}\n", pad, inline(item)));
                } else {
                    out.push_str(&format!("{}-\n", pad));
                    render(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, scalar(other))),
    }
}

/// Indented `key: value` lines of the same report.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}
