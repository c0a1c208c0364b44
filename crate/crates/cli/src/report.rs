//! Report assembly and rendering.
//!
//! Every report is an ordered list of named fields under a fixed schema tag.
//! `--json` prints the whole report as one JSON object; otherwise each field
//! becomes one `name  value` row, with compound values printed as compact
//! JSON.

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "graphtile-report/1";

pub struct Report {
    verb: &'static str,
    passed: bool,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(verb: &'static str) -> Self {
        Report {
            verb,
            passed: true,
            fields: Map::new(),
        }
    }

    pub fn field(mut self, name: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("report fields are serialisable");
        self.fields.insert(name.to_string(), v);
        self
    }

    /// Folds every field of a serialisable struct into the report.
    pub fn merge(mut self, value: impl Serialize) -> Self {
        match serde_json::to_value(value).expect("report fields are serialisable") {
            Value::Object(m) => self.fields.extend(m),
            other => {
                self.fields.insert("value".into(), other);
            }
        }
        self
    }

    pub fn require(mut self, ok: bool) -> Self {
        self.passed &= ok;
        self
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn render(&self, json: bool) -> String {
        let status = if self.passed { "pass" } else { "fail" };
        if json {
            let mut m = Map::new();
            m.insert("schema".into(), SCHEMA.into());
            m.insert("verb".into(), self.verb.into());
            m.insert("status".into(), status.into());
            m.extend(self.fields.clone());
            let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("valid JSON");
            s.push('\n');
            return s;
        }
        let mut rows = vec![
            ("schema".to_string(), SCHEMA.to_string()),
            ("verb".to_string(), self.verb.to_string()),
            ("status".to_string(), status.to_string()),
        ];
        for (k, v) in &self.fields {
            let text = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            rows.push((k.clone(), text));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            if v.contains('\n') {
                out.push_str(&format!("{k}:\n"));
                for line in v.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            } else {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
        }
        out
    }
}
