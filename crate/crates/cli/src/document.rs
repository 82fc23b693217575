//! The JSON document every subcommand prints.

use std::collections::BTreeMap;

use hadwiger_core::{Edge, Graph, VertexId, VertexSet};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutcomeKind {
    Coloring,
    Witness,
    Plan,
    Verdict,
    Instance,
    Error,
}

impl OutcomeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Coloring => "coloring",
            Self::Witness => "witness",
            Self::Plan => "plan",
            Self::Verdict => "verdict",
            Self::Instance => "instance",
            Self::Error => "error",
        }
    }
}

/// Post-hoc checks run on a result before it is printed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub ok: bool,
    pub checks: Vec<String>,
    pub failures: Vec<String>,
}

impl Verification {
    pub fn new() -> Self {
        Verification { ok: true, ..Default::default() }
    }

    pub fn check(&mut self, name: &str, ok: bool, why: impl FnOnce() -> String) {
        if ok {
            self.checks.push(name.to_string());
        } else {
            self.ok = false;
            self.failures.push(format!("{name}: {}", why()));
        }
    }

    pub fn fail(&mut self, failure: impl Into<String>) {
        self.ok = false;
        self.failures.push(failure.into());
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    /// Hex SHA-256 of the input graph file, or of the generated file.
    pub input_digest: Option<String>,
    pub parameters: BTreeMap<String, Value>,
    pub outcome: OutcomeKind,
    /// `names[i]` is the external name of internal vertex `i`.
    pub names: Vec<String>,
    pub payload: Value,
    pub verification: Verification,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Internal ids `0..n` named `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names(pub Vec<String>);

impl Names {
    pub fn sequential(n: usize) -> Self {
        Names((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn of(&self, v: VertexId) -> String {
        self.0.get(v.index()).cloned().unwrap_or_else(|| format!("?{}", v.0))
    }

    pub fn set(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|&v| self.of(v)).collect()
    }

    pub fn edge(&self, e: Edge) -> [String; 2] {
        [self.of(e.low()), self.of(e.high())]
    }

    pub fn edges(&self, g: &Graph) -> Vec<[String; 2]> {
        g.edges().map(|e| self.edge(e)).collect()
    }

    /// Inverse lookup used when re-reading a document.
    pub fn id(&self, name: &str) -> Option<VertexId> {
        self.0.iter().position(|n| n == name).map(|i| VertexId(i as u32))
    }
}
