//! Report envelope shared by every subcommand.
//!
//! JSON output is the stable contract: a top-level `schema` field, the
//! command name, its parameters, an overall `passed` flag, a machine-readable
//! `failures` list, and the command-specific `report`. Keys are emitted in
//! sorted order and rationals as `"p/q"` strings, so identical invocations
//! produce identical bytes.

use crate::Format;
use psigma_core::error::CoreError;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;

#[derive(Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub params: Value,
    pub passed: bool,
    pub failures: Vec<String>,
    pub report: Value,
    pub text: String,
}

impl Outcome {
    pub fn new(command: &'static str, params: Value) -> Self {
        Outcome {
            command,
            params,
            passed: true,
            failures: Vec::new(),
            report: Value::Null,
            text: String::new(),
        }
    }

    pub fn set_report(&mut self, report: impl Serialize) {
        self.report = serde_json::to_value(report).expect("serializable report");
    }

    pub fn check(&mut self, passed: bool, failure: impl Into<String>) {
        if !passed {
            self.passed = false;
            self.failures.push(failure.into());
        }
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", line.as_ref());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let envelope = json!({
                    "schema": psigma_core::SCHEMA_VERSION,
                    "command": self.command,
                    "params": self.params,
                    "passed": self.passed,
                    "failures": self.failures,
                    "report": self.report,
                });
                let mut s = serde_json::to_string_pretty(&envelope).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.text.clone();
                if !self.failures.is_empty() {
                    for f in &self.failures {
                        let _ = writeln!(s, "FAIL: {f}");
                    }
                }
                let _ = writeln!(
                    s,
                    "{}: {}",
                    self.command,
                    if self.passed { "ok" } else { "FAILED" }
                );
                s
            }
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    Cache(psigma_core::cache::CacheError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Cache(e) => write!(f, "cache: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<psigma_core::cache::CacheError> for CliError {
    fn from(e: psigma_core::cache::CacheError) -> Self {
        CliError::Cache(e)
    }
}

impl From<psigma_core::error::CapacityError> for CliError {
    fn from(e: psigma_core::error::CapacityError) -> Self {
        CliError::Core(CoreError::Capacity(e))
    }
}

impl CliError {
    /// 2 for argument-level misuse, 3 for capacity, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::Capacity(_)) => 3,
            CliError::Core(
                CoreError::IndexOutOfRange { .. }
                | CoreError::RankMismatch { .. }
                | CoreError::InvalidGenerator { .. }
                | CoreError::RankTooSmall { .. }
                | CoreError::DegreeOutOfRange { .. },
            ) => 2,
            _ => 1,
        }
    }
}
