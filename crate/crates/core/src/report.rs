//! Canonical machine-readable run reports. Keys are sorted (JSON objects
//! are BTreeMap-backed), law entries are sorted before serialization, and
//! timings are omitted unless explicitly enabled — so a report is byte
//! identical across reruns with the same seed and configuration.

use std::fs;
use std::io;
use std::path::Path;

use serde_json::{json, Map, Value};

/// One verified law with its outcome and any failure witnesses.
#[derive(Clone, Debug)]
pub struct LawEntry {
    pub law: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// A structured report for one command or acceptance criterion.
pub struct Report {
    fields: Map<String, Value>,
    laws: Vec<LawEntry>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Report {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("seed".into(), json!(seed));
        Report { fields, laws: Vec::new() }
    }

    /// Attach an arbitrary top-level field (configuration echo, result
    /// data). Inserting the same key twice keeps the latest value.
    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    /// Record one law outcome; failures carry their witnesses.
    pub fn law(&mut self, law: &str, witnesses: Vec<String>) {
        self.laws.push(LawEntry { law: law.into(), pass: witnesses.is_empty(), witnesses });
    }

    /// Record a law that reports a boolean rather than witness strings.
    pub fn check(&mut self, law: &str, pass: bool) {
        let witnesses = if pass { vec![] } else { vec!["check returned false".into()] };
        self.laws.push(LawEntry { law: law.into(), pass, witnesses });
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }

    /// Optional wall-clock data; enabling this forfeits byte-identical
    /// reruns, which is why it is off unless asked for.
    pub fn timing(&mut self, seconds: f64) {
        self.fields.insert("elapsed_seconds".into(), json!(format!("{seconds:.3}")));
    }

    /// The canonical serialized form: sorted keys, sorted law entries,
    /// two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut laws = self.laws.clone();
        laws.sort_by(|a, b| a.law.cmp(&b.law).then_with(|| a.witnesses.cmp(&b.witnesses)));
        let mut fields = self.fields.clone();
        fields.insert(
            "laws".into(),
            Value::Array(
                laws.iter()
                    .map(|l| {
                        json!({
                            "law": l.law,
                            "status": if l.pass { "pass" } else { "fail" },
                            "witnesses": l.witnesses,
                        })
                    })
                    .collect(),
            ),
        );
        fields.insert("status".into(), json!(if self.all_pass() { "pass" } else { "fail" }));
        let mut out = serde_json::to_string_pretty(&Value::Object(fields))
            .expect("reports are plain JSON data");
        out.push('\n');
        out
    }

    pub fn write(&self, path: &Path) -> io::Result<()> {
        fs::write(path, self.to_canonical_json())
    }
}
