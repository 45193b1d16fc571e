//! Run reports: command echo, input digests, deterministic results section
//! and wall time. Identical inputs and seed produce a byte-identical
//! results section (wall time lives outside it).

use std::path::Path;
use std::time::Instant;

use serde_json::Value;
use sha2::{Digest, Sha256};

pub struct RunReport {
    started: Instant,
    command: Vec<String>,
    inputs: serde_json::Map<String, Value>,
    seed: u64,
    results: serde_json::Map<String, Value>,
    wall_time_ms: Option<u128>,
}

impl RunReport {
    pub fn new(seed: u64) -> Self {
        RunReport {
            started: Instant::now(),
            command: std::env::args().collect(),
            inputs: serde_json::Map::new(),
            seed,
            results: serde_json::Map::new(),
            wall_time_ms: None,
        }
    }

    pub fn record_input(&mut self, path: &Path, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        let digest = hasher.finalize();
        let mut hex = String::with_capacity(64);
        for b in digest {
            hex.push_str(&format!("{b:02x}"));
        }
        self.inputs
            .insert(path.display().to_string(), Value::String(format!("sha256:{hex}")));
    }

    pub fn set_result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn finish(&mut self) {
        self.wall_time_ms = Some(self.started.elapsed().as_millis());
    }

    pub fn to_value(&self) -> Value {
        serde_json::json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "seed": self.seed,
            "results": Value::Object(self.results.clone()),
            "wall_time_ms": self.wall_time_ms.unwrap_or(0) as u64,
        })
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        std::fs::write(path, text + "\n")
    }
}
