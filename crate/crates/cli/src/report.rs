//! Report assembly. Each command builds one report while it runs and the
//! process prints it exactly once at the end, either as line-oriented text
//! or as a single JSON document. Identical inputs produce byte-identical
//! JSON: fields keep insertion order and nothing time- or host-dependent is
//! recorded.

use serde_json::{Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

pub struct Report {
    command: String,
    inputs: Map<String, Value>,
    results: Map<String, Value>,
    lines: Vec<String>,
    status: Status,
}

fn render(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            lines: Vec::new(),
            status: Status::Pass,
        }
    }

    /// Echo one input parameter into both renderings.
    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        self.lines.push(format!("  {key} = {}", render(&value)));
        self.inputs.insert(key.to_string(), value);
    }

    /// Record a structured result; also prints the default rendering unless
    /// the caller supplies custom lines itself via [`Report::line`].
    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        self.lines.push(format!("{key}: {}", render(&value)));
        self.results.insert(key.to_string(), value);
    }

    /// Record a structured result without a default text line.
    pub fn result_silent(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    /// Add a human-only text line.
    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn set_status(&mut self, status: Status) {
        self.status = status;
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn to_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("command".to_string(), Value::String(self.command.clone()));
        doc.insert("inputs".to_string(), Value::Object(self.inputs.clone()));
        doc.insert("results".to_string(), Value::Object(self.results.clone()));
        doc.insert(
            "status".to_string(),
            Value::String(self.status.as_str().to_string()),
        );
        let mut out = serde_json::to_string_pretty(&Value::Object(doc))
            .expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("sigmabar {}\n", self.command);
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out
    }
}
