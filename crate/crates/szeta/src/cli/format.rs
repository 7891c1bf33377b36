//! Deterministic rendering: every float is printed with 15 significant
//! digits in scientific notation, object fields keep insertion order.

use serde_json::Value;

pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.14e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.to_string(),
            (_, Some(u)) => u.to_string(),
            _ => num(n.as_f64().unwrap_or(f64::NAN)),
        },
        Value::Null => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        _ => unreachable!("not a scalar"),
    }
}

/// Pretty JSON with two-space indentation.
pub fn json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_json(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            let mut first = true;
            for (k, val) in map {
                if !first {
                    out.push_str(",\n");
                }
                first = false;
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(val, depth + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                out.push_str(&pad(depth + 1));
                write_json(val, depth + 1, out);
            }
            out.push('\n');
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(_) => out.push_str("{}"),
        Value::Array(_) => out.push_str("[]"),
        Value::String(_) => out.push_str(&v.to_string()),
        Value::Number(n) if n.as_i64().is_none() && n.as_u64().is_none() => {
            // JSON has no NaN/inf; serde_json never produces them here
            out.push_str(&num(n.as_f64().unwrap_or(f64::NAN)));
        }
        _ => out.push_str(&scalar(v)),
    }
}

/// Flatten nested objects into `a.b` keys.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten_into("", v, &mut out);
    out
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                flatten_into(&key(k), val, out);
            }
        }
        Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                flatten_into(&key(&i.to_string()), val, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

pub fn text(v: &Value) -> String {
    flatten(v).into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Header plus one line per row; the header comes from the first row.
pub fn csv(rows: &[Value]) -> String {
    let mut out = String::new();
    let Some(first) = rows.first() else { return out };
    let header: Vec<String> = flatten(first).into_iter().map(|(k, _)| csv_field(&k)).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for r in rows {
        let line: Vec<String> = flatten(r)
            .into_iter()
            .map(|(_, v)| if v == "null" { String::new() } else { csv_field(&v) })
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(num(1.0 / 3.0), "3.33333333333333e-1");
        assert_eq!(num(-2.5e10), "-2.50000000000000e10");
        let back: f64 = num(std::f64::consts::PI).parse().unwrap();
        assert!((back - std::f64::consts::PI).abs() < 1e-14);
    }

    #[test]
    fn json_keeps_field_order_and_formats_floats() {
        let v = json!({"z": 1.5, "a": [1, 2.0], "s": "x,y"});
        let s = json(&v);
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\"").unwrap());
        assert!(s.contains("1.50000000000000e0"));
        assert!(s.contains("  1,"));
        let parsed: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["s"], "x,y");
    }

    #[test]
    fn csv_quotes_commas() {
        let rows = vec![json!({"a": 1, "b": "p,q"})];
        assert_eq!(csv(&rows), "a,b\n1,\"p,q\"\n");
    }
}
