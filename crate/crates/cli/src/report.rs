use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub details: Value,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, check: impl Into<String>, status: Status, details: Value) {
        match status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::Error => self.summary.errored += 1,
        }
        self.checks.push(Check {
            check: check.into(),
            status,
            details,
        });
    }

    pub fn expect(&mut self, check: impl Into<String>, ok: bool, details: Value) {
        self.push(check, if ok { Status::Pass } else { Status::Fail }, details);
    }

    pub fn error(&mut self, check: impl Into<String>, err: impl std::fmt::Display) {
        self.push(check, Status::Error, serde_json::json!({ "error": err.to_string() }));
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            let _ = writeln!(out, "  {tag} {}", c.check);
            render_details(&mut out, &c.details, 8);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} errored",
            s.passed, s.failed, s.errored
        );
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_details(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_details(out, val, indent + 2);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            match item {
                                Value::Object(_) => {
                                    let _ = writeln!(out, "{pad}  -");
                                    render_details(out, item, indent + 4);
                                }
                                other => {
                                    let _ = writeln!(out, "{pad}  - {}", scalar_list(other));
                                }
                            }
                        }
                    }
                    other => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar_list(other));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_list(other));
        }
    }
}

fn scalar_list(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_list).collect();
            format!("[{}]", parts.join(", "))
        }
        other => scalar(other),
    }
}
