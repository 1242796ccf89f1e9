//! Machine-readable run reports.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub hash: String,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    /// First failure found, with the chambers or elements involved.
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Input>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: Vec<Input>) -> Self {
        RunReport { command, inputs, checks: Vec::new(), result: None, passed: true, timing_ms: None }
    }

    pub fn check(&mut self, name: impl Into<String>, checked: usize, witness: Option<String>) {
        let passed = witness.is_none();
        self.passed &= passed;
        self.checks.push(CheckReport { name: name.into(), passed, checked, witness });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
