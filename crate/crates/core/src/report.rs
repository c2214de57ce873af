//! Serializable results shared by the command line and the browser demo.

use serde::Serialize;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    /// Both sides' exact values, always present for failures.
    pub details: String,
}

/// A named sequence with its parameters, values and verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    /// `(n, value)` in increasing `n`.
    pub values: Vec<(usize, String)>,
    pub verdicts: Vec<Verdict>,
}

impl SequenceReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: Vec::new(),
            values: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push_value(&mut self, n: usize, value: impl ToString) {
        debug_assert!(self.values.last().is_none_or(|&(m, _)| m < n));
        self.values.push((n, value.to_string()));
    }

    pub fn push_verdict(&mut self, check: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.verdicts.push(Verdict {
            check: check.into(),
            pass,
            details: details.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `n,value` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in &self.values {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}
