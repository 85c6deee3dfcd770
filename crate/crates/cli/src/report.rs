use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::args::Format;

#[derive(Serialize, Debug, Clone)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub outputs: BTreeMap<String, Value>,
    pub verdicts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &[String], inputs: &Value) -> Self {
        let bytes = serde_json::to_vec(inputs).expect("json values serialize");
        Self {
            command: command.to_vec(),
            inputs_digest: hex::encode(Sha256::digest(&bytes)),
            outputs: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            counterexample: None,
            timing_ms: None,
        }
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.into(), value.into());
        self
    }

    /// Records a verdict; the first false one also becomes the counterexample.
    pub fn verdict(&mut self, key: &str, holds: bool, instance: impl FnOnce() -> Value) -> &mut Self {
        if !holds && self.counterexample.is_none() {
            self.counterexample = Some(serde_json::json!({ "verdict": key, "instance": instance() }));
        }
        self.verdicts.insert(key.into(), holds);
        self
    }

    pub fn failed(&self) -> bool {
        self.verdicts.values().any(|v| !v)
    }
}

pub fn write_reports(out: &mut impl Write, reports: &[RunReport], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = match reports {
                [one] => serde_json::to_string_pretty(one),
                many => serde_json::to_string_pretty(many),
            };
            writeln!(out, "{}", text.expect("reports serialize"))
        }
        Format::Jsonl => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["command", "inputs_digest", "section", "key", "value"])?;
            for r in reports {
                let command = r.command.join(" ");
                let rows = r
                    .outputs
                    .iter()
                    .map(|(k, v)| ("output", k, compact(v)))
                    .chain(r.verdicts.iter().map(|(k, v)| ("verdict", k, v.to_string())));
                for (section, key, value) in rows {
                    w.write_record([command.as_str(), &r.inputs_digest, section, key, &value])?;
                }
            }
            w.flush()
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_only_on_inputs() {
        let a = RunReport::new(&["x".into()], &serde_json::json!({"spec": "1,2"}));
        let b = RunReport::new(&["y".into()], &serde_json::json!({"spec": "1,2"}));
        assert_eq!(a.inputs_digest, b.inputs_digest);
        assert_eq!(a.inputs_digest.len(), 64);
    }

    #[test]
    fn first_failure_is_kept() {
        let mut r = RunReport::new(&[], &Value::Null);
        r.verdict("a", true, || Value::Null);
        r.verdict("b", false, || "first".into());
        r.verdict("c", false, || "second".into());
        assert!(r.failed());
        assert_eq!(r.counterexample.unwrap()["instance"], "first");
    }

    #[test]
    fn csv_quotes_matrices() {
        let mut r = RunReport::new(&["t6".into()], &Value::Null);
        r.output("m", serde_json::json!([["1", "2"]]));
        let mut buf = Vec::new();
        write_reports(&mut buf, &[r], Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with("\"[[\"\"1\"\",\"\"2\"\"]]\""));
    }
}
