use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Machine-readable record of one invocation. Everything except `timings`
/// is reproduced exactly by re-running the same command on the same inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub args: Vec<String>,
    pub version: String,
    pub seed: u64,
    /// SHA-256 over all inputs, each prefixed by its length.
    pub inputs_digest: String,
    pub inputs: Vec<InputRecord>,
    pub exit_code: u8,
    pub results: serde_json::Value,
    pub timings: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
}
