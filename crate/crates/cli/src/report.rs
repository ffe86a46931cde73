//! JSON values with fixed-precision floats, and a plain-text rendering.

use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

/// Digits after the decimal point for every float in a report.
pub const PRECISION: usize = 12;

pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let mut s = format!("{x:.PRECISION$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s.remove(0);
    }
    Value::Number(Number::from_str(&s).expect("formatted float is a JSON number"))
}

pub fn complex(z: Complex64) -> Value {
    Value::Array(vec![float(z.re), float(z.im)])
}

pub fn integer(n: u128) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer is a JSON number"))
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    Value::Object(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

pub fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

/// Indented `key: value` lines; arrays of scalars stay on one line.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn write_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                if is_flat(item) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_text(item, depth + 1, out);
                }
            }
        }
        Value::Array(items) if !is_flat(v) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_text(item, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}
