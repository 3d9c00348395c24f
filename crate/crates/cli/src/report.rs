use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One JSON object per line on stdout. Big integers are decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<&'static str>,
    pub params: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Value>,
    /// Per-item confirmations accompanying `values`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            suite: None,
            params: BTreeMap::new(),
            value: None,
            values: None,
            checks: None,
            method: None,
            verdict: None,
            failures: Vec::new(),
            error: None,
            elapsed_ms: 0,
        }
    }

    pub fn verification(suite: &'static str) -> Self {
        Report {
            suite: Some(suite),
            ..Report::new("verify")
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Display) -> Self {
        self.params.insert(key, value.to_string());
        self
    }

    /// Sets the verdict from the collected failures.
    pub fn judge(mut self) -> Self {
        self.verdict = Some(Verdict::from_pass(self.failures.is_empty()));
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Some(Verdict::Fail)
    }

    /// A one-line summary for stderr.
    pub fn summary(&self) -> String {
        let mut line = String::from(self.command);
        if let Some(suite) = self.suite {
            line.push(' ');
            line.push_str(suite);
        }
        for (k, v) in &self.params {
            line.push_str(&format!(" {k}={v}"));
        }
        if let Some(value) = &self.value {
            line.push_str(&format!(": {value}"));
        }
        if let Some(verdict) = self.verdict {
            let word = if verdict == Verdict::Pass {
                "pass"
            } else {
                "FAIL"
            };
            line.push_str(&format!(" [{word}"));
            if !self.failures.is_empty() {
                line.push_str(&format!(
                    ", {} failing; first: {}",
                    self.failures.len(),
                    self.failures[0]
                ));
            }
            line.push(']');
        }
        if let Some(err) = &self.error {
            line.push_str(&format!(" error: {err}"));
        }
        line
    }

    pub fn emit(&self) -> std::io::Result<()> {
        let mut out = std::io::stdout().lock();
        serde_json::to_writer(&mut out, self)?;
        out.write_all(b"\n")?;
        out.flush()?;
        eprintln!("{}", self.summary());
        Ok(())
    }
}
