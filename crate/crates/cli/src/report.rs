use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Everything needed to rerun a command and compare its results.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 of each input file, keyed by path.
    pub inputs: BTreeMap<String, String>,
    pub outputs: Value,
    pub elapsed_ms: f64,
    pub version: &'static str,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: BTreeMap<String, String>, outputs: Value, elapsed: Duration) -> Self {
        Self {
            command,
            inputs,
            outputs,
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
