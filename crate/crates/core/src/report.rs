//! Machine-readable result documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Result of one command: what was asked, along which path, the verdict and
/// supporting data.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub problem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<String>,
    #[serde(default)]
    pub sizes: BTreeMap<String, u64>,
    /// Seconds.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
    /// Text output (an automaton, relation or partition) when the command
    /// produces one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Document {
    pub fn new(problem: impl Into<String>) -> Self {
        Document {
            problem: problem.into(),
            ..Document::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// `0`/`1` per variable, `x1` first.
pub fn bits(values: &[bool]) -> String {
    values.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
