//! Line-delimited JSON result records.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultRecord {
    pub subject: String,
    pub claim: String,
    pub verdict: String,
    pub payload: serde_json::Value,
    pub tool_version: String,
    pub seed: u64,
    /// Seconds since the Unix epoch; absent in database manifests so that
    /// reruns are byte-identical.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
}

impl ResultRecord {
    pub fn new(subject: &str, claim: &str, pass: bool, payload: serde_json::Value) -> Self {
        ResultRecord {
            subject: subject.to_string(),
            claim: claim.to_string(),
            verdict: if pass { "pass" } else { "fail" }.to_string(),
            payload,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: 0,
            timestamp: None,
        }
    }
}

pub struct Emitter {
    seed: u64,
    sink: Box<dyn Write>,
}

impl Emitter {
    pub fn stdout(seed: u64) -> Self {
        Emitter {
            seed,
            sink: Box::new(std::io::stdout()),
        }
    }

    pub fn emit(&mut self, mut r: ResultRecord) -> Result<()> {
        r.seed = self.seed;
        r.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
        writeln!(self.sink, "{}", serde_json::to_string(&r)?)?;
        self.sink.flush()?;
        Ok(())
    }
}
