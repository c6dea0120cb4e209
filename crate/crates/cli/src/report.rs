use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use subfit_core::FinitePoset;

/// One run of one subcommand.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Inputs,
    pub pass: bool,
    pub results: Map<String, Value>,
    pub counterexample: Option<Value>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Default, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
    pub params: Map<String, Value>,
}

impl Inputs {
    pub fn file(path: &str, text: &str) -> Self {
        Inputs {
            file: Some(path.to_string()),
            sha256: Some(format!("{:x}", Sha256::digest(text.as_bytes()))),
            params: Map::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

impl RunReport {
    pub fn new(command: &'static str, inputs: Inputs) -> Self {
        RunReport {
            command,
            inputs,
            pass: true,
            results: Map::new(),
            counterexample: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.results.insert(key.to_string(), v);
    }

    /// Records a boolean check; the first failing check with a
    /// counterexample keeps it.
    pub fn check(&mut self, key: &str, ok: bool, counterexample: impl FnOnce() -> Option<Value>) {
        self.set(key, ok);
        if !ok {
            self.pass = false;
            if self.counterexample.is_none() {
                self.counterexample = counterexample();
            }
        }
    }
}

/// Element labels for indices when the input carried labels.
pub fn labels_of(p: &FinitePoset, indices: impl IntoIterator<Item = usize>) -> Option<Vec<String>> {
    p.labels()?;
    Some(indices.into_iter().map(|i| p.label(i)).collect())
}
