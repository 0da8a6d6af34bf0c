use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

/// One named comparison of an expected and an observed value.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    pub fn equal(
        name: impl Into<String>,
        expected: impl Into<Value>,
        actual: impl Into<Value>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        let pass = expected == actual;
        Check {
            name: name.into(),
            expected,
            actual,
            pass,
        }
    }

    pub fn holds(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            expected: Value::Bool(true),
            actual: Value::Bool(pass),
            pass,
        }
    }

    /// A verdict whose failure carries a witness instead of `false`.
    pub fn witnessed(name: impl Into<String>, witness: Option<String>) -> Self {
        let pass = witness.is_none();
        let actual = witness.map_or(Value::Bool(true), Value::String);
        Check {
            name: name.into(),
            expected: Value::Bool(true),
            actual,
            pass,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub data: Value,
    #[serde(skip)]
    pub lines: Vec<String>,
    /// Text output lists passing checks only when set.
    #[serde(skip)]
    pub show_passing: bool,
}

impl Report {
    pub fn new(command: &'static str, params: Value) -> Self {
        Report {
            command,
            params,
            checks: Vec::new(),
            pass: true,
            data: Value::Null,
            lines: Vec::new(),
            show_passing: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params = match &self.params {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect::<Vec<_>>()
                .join(" "),
            other => plain(other),
        };
        writeln!(out, "{} {params}", self.command).unwrap();
        for line in &self.lines {
            writeln!(out, "  {line}").unwrap();
        }
        for c in self.checks.iter().filter(|c| self.show_passing || !c.pass) {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            if c.expected == Value::Bool(true) && c.pass {
                writeln!(out, "[{tag}] {}", c.name).unwrap();
            } else {
                writeln!(
                    out,
                    "[{tag}] {}: expected {}, got {}",
                    c.name,
                    plain(&c.expected),
                    plain(&c.actual)
                )
                .unwrap();
            }
        }
        writeln!(out, "{}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
