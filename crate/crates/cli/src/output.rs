//! Rendering of reports as JSON or as flattened `path<TAB>value` lines.

use serde_json::Value;

use crate::config::Format;

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut lines = Vec::new();
            flatten("", report, &mut lines);
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}\t{s}")),
        other => out.push(format!("{prefix}\t{other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_paths() {
        let v = serde_json::json!({"a": {"b": 1, "c": [1, 2]}, "rows": [{"x": "y"}]});
        assert_eq!(render(&v, Format::Tsv), "a.b\t1\na.c\t[1,2]\nrows.0.x\ty\n");
    }
}
