//! Rendering. JSON is the source of truth; text and CSV views are derived
//! from the same JSON value.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// Text view of a report's JSON.
pub type TextView = fn(&Value) -> String;

pub struct Report {
    pub value: Value,
    pub status: Status,
    /// Default format when none is requested.
    pub default: Format,
    pub text: TextView,
    /// CSV view, for reports that have one.
    pub csv: Option<TextView>,
}

impl Report {
    pub fn new(value: Value) -> Self {
        Report {
            value,
            status: Status::Pass,
            default: Format::Text,
            text: generic_text,
            csv: None,
        }
    }

    pub fn failing_if(mut self, fail: bool) -> Self {
        if fail {
            self.status = Status::Fail;
        }
        self
    }

    pub fn with_text(mut self, f: TextView) -> Self {
        self.text = f;
        self
    }

    pub fn with_csv(mut self, f: TextView) -> Self {
        self.csv = Some(f);
        self
    }

    pub fn csv_by_default(mut self) -> Self {
        self.default = Format::Csv;
        self
    }

    /// Renders with the seed recorded at the top level of the JSON.
    pub fn render(&self, format: Option<Format>, seed: u64) -> String {
        let mut value = self.value.clone();
        if let Value::Object(m) = &mut value {
            let mut with_seed = Map::new();
            with_seed.insert("seed".into(), seed.into());
            with_seed.extend(std::mem::take(m));
            *m = with_seed;
        }
        let mut out = match format.unwrap_or(self.default) {
            Format::Json => serde_json::to_string_pretty(&value).expect("report serializes"),
            Format::Csv => match self.csv {
                Some(f) => f(&value),
                None => generic_text(&value),
            },
            Format::Text => (self.text)(&value),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

/// Indented `key: value` lines; arrays of scalars on one line.
pub fn generic_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(" ")
        )),
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        write_value(out, x, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Just the `status` line and any `witness`, for verify reports.
pub fn verdict_text(v: &Value) -> String {
    let mut out = format!(
        "{}: {}\n",
        v["target"].as_str().unwrap_or("check"),
        v["status"].as_str().unwrap_or("?")
    );
    if let Some(w) = v.get("witness").filter(|w| !w.is_null()) {
        out.push_str(&format!("witness: {w}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn seed_comes_first() {
        let r = Report::new(json!({"a": 1}));
        assert_eq!(
            r.render(Some(Format::Json), 7),
            "{\n  \"seed\": 7,\n  \"a\": 1\n}\n"
        );
        assert_eq!(r.render(None, 7), "seed: 7\na: 1\n");
    }

    #[test]
    fn nested_text() {
        let v = json!({"x": {"y": [1, 2]}, "z": [{"k": null}]});
        assert_eq!(generic_text(&v), "x:\n  y: [1 2]\nz:\n  [0]\n    k: -\n");
    }
}
