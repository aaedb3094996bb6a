//! Versioned report documents.
//!
//! Machine output is a single JSON object:
//!
//! ```json
//! {"schema": "polynormal-report/1", "command": ["gset", "q.json"],
//!  "verdict": "info", "result": {...}, "timing_ms": 3}
//! ```
//!
//! `verdict` is `pass`, `fail` or `info`; it fixes the exit status.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "polynormal-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Plain computations with nothing to decide.
    Info,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::Info => 0,
            Verdict::Fail => 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub result: Value,
    pub timing_ms: u128,
    /// Human-readable lines, used only by `--pretty`.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl ReportDocument {
    pub fn new(verdict: Verdict, result: Value, lines: Vec<String>) -> Self {
        ReportDocument {
            schema: SCHEMA,
            command: Vec::new(),
            verdict,
            result,
            timing_ms: 0,
            lines,
        }
    }

    pub fn with_context(mut self, command: Vec<String>, elapsed: Duration) -> Self {
        self.command = command;
        self.timing_ms = elapsed.as_millis();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        let word = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "done",
        };
        out.push_str(&format!("{word} ({} ms)\n", self.timing_ms));
        out
    }
}
