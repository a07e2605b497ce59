use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one subcommand. Field order is the serialization order;
/// maps are sorted, so the JSON is byte-stable for fixed inputs.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub seed: u64,
    pub inputs: BTreeMap<String, Value>,
    pub passed: bool,
    pub results: BTreeMap<String, Value>,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, ring: String, seed: u64) -> Report {
        Report {
            command: command.into(),
            ring,
            seed,
            inputs: BTreeMap::new(),
            passed: true,
            results: BTreeMap::new(),
            counterexamples: Vec::new(),
            error: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.into(), v.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    /// Records a check; failures keep their counterexample.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            self.counterexamples.push(counterexample());
        }
    }

    pub fn fail(&mut self, err: impl ToString) {
        self.passed = false;
        self.error = Some(err.to_string());
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{} over {}: {}\n",
            self.command,
            self.ring,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for (k, v) in &self.results {
            match v {
                Value::String(s) => out += &format!("  {k}: {s}\n"),
                other => out += &format!("  {k}: {other}\n"),
            }
        }
        for c in &self.counterexamples {
            out += &format!("  counterexample: {c}\n");
        }
        if let Some(e) = &self.error {
            out += &format!("  error: {e}\n");
        }
        out
    }
}
