//! JSON and aligned-text rendering of command results.

use serde::Serialize;
use serde_json::{json, Value};

/// A command result: the operation it came from, its JSON form and its text form.
pub struct Out {
    pub op: &'static str,
    pub json: Value,
    pub text: String,
}

impl Out {
    /// Text form derived from the JSON value.
    pub fn new<T: Serialize>(op: &'static str, value: &T) -> Self {
        let json = serde_json::to_value(value).expect("results serialize");
        let text = render(&json);
        Out { op, json, text }
    }

    /// Text form given explicitly, e.g. a comma-joined sequence.
    pub fn with_text<T: Serialize>(op: &'static str, value: &T, text: String) -> Self {
        let json = serde_json::to_value(value).expect("results serialize");
        Out { op, json, text }
    }

    pub fn to_json(&self) -> String {
        let doc = json!({ "op": self.op, "result": self.json });
        serde_json::to_string_pretty(&doc).expect("values serialize")
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(Value::is_number) => Some(
            items
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        _ => None,
    }
}

/// Scalars as themselves, numeric arrays comma-joined, objects as aligned
/// `key  value` lines with nested values indented below their key.
pub fn render(v: &Value) -> String {
    if let Some(s) = scalar(v) {
        return s;
    }
    let mut lines = Vec::new();
    match v {
        Value::Array(items) => {
            for item in items {
                lines.push(render(item));
            }
        }
        Value::Object(map) => {
            let width = map
                .iter()
                .filter(|(_, item)| scalar(item).is_some())
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => lines.push(format!("{k:<width$}  {s}")),
                    None => {
                        lines.push(format!("{k}:"));
                        for l in render(item).lines() {
                            lines.push(format!("  {l}"));
                        }
                    }
                }
            }
        }
        _ => unreachable!("scalars handled above"),
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(render(&json!([2, 2, 3, 3])), "2,2,3,3");
        assert_eq!(render(&json!(null)), "none");
        let v = json!({"a": 1, "long": [1, 2], "nested": {"x": true}});
        assert_eq!(render(&v), "a     1\nlong  1,2\nnested:\n  x  true");
    }
}
