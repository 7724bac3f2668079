use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::exactalg::Scalar;
use crate::report::Report;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
    UsageError,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::CheckFailed => "check-failed",
            Status::UsageError => "usage-error",
        }
    }

    /// 0 ok, 1 check failure, 2 usage error.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::UsageError => 2,
        }
    }
}

/// Result of one command: machine payload plus a human-readable rendering.
#[derive(Clone, Debug)]
pub struct OutputDocument {
    pub command: String,
    pub request: Map<String, Value>,
    pub status: Status,
    pub payload: Value,
    pub warnings: Vec<String>,
    pub text: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &str, request: Map<String, Value>) -> Self {
        OutputDocument {
            command: command.to_string(),
            request,
            status: Status::Ok,
            payload: Value::Object(Map::new()),
            warnings: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn usage_error(command: &str, request: Map<String, Value>, msg: impl Into<String>) -> Self {
        let msg = msg.into();
        let mut doc = OutputDocument::new(command, request);
        doc.status = Status::UsageError;
        doc.payload = json!({ "error": msg });
        doc.text.push(format!("error: {msg}"));
        doc
    }

    pub fn check_failed(command: &str, request: Map<String, Value>, msg: impl Into<String>) -> Self {
        let mut doc = Self::usage_error(command, request, msg);
        doc.status = Status::CheckFailed;
        doc
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Keys come out sorted because `serde_json::Map` is ordered.
    pub fn to_json(&self) -> Value {
        let mut request = self.request.clone();
        request.insert("command".into(), Value::String(self.command.clone()));
        json!({
            "schema_version": SCHEMA_VERSION,
            "request": request,
            "status": self.status.as_str(),
            "payload": self.payload,
            "warnings": self.warnings,
        })
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for line in &self.text {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "status: {}", self.status.as_str());
        out
    }
}

/// Integers as JSON numbers when they fit in `i64`; anything else as a string.
pub fn scalar_json(s: &Scalar) -> Value {
    match s.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(s.to_string()),
    }
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "notes": r.notes,
        "skipped": r.skipped,
        "passed": r.passed(),
    })
}
