//! Deterministic report assembly: one record per executed operation,
//! JSON with sorted keys, timings only on request.

use serde::Serialize;
use serde_json::{json, Value};
use tangent_core::error::CaError;

/// One executed operation. Every number a report exposes lives inside a
/// record that names the operation that defined it.
#[derive(Clone, Debug, Serialize)]
pub struct OpRecord {
    pub op: String,
    pub inputs: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// Outcome of a budgeted computation: a value, or a reason it could not
/// be decided (timeouts and degree caps are reported, never crashes).
#[derive(Clone, Debug)]
pub enum Outcome<T> {
    Ok(T),
    NotCheckable(String),
}

impl<T: Serialize> Outcome<T> {
    pub fn to_value(&self) -> Value {
        match self {
            Outcome::Ok(v) => json!({"status": "ok", "value": v}),
            Outcome::NotCheckable(reason) => {
                json!({"status": "not-checkable", "reason": reason})
            }
        }
    }

    pub fn ok(&self) -> Option<&T> {
        match self {
            Outcome::Ok(v) => Some(v),
            Outcome::NotCheckable(_) => None,
        }
    }

    pub fn is_not_checkable(&self) -> bool {
        matches!(self, Outcome::NotCheckable(_))
    }
}

/// Map budget errors into a reportable outcome, propagating real errors.
pub fn budgeted<T>(r: Result<T, CaError>) -> Result<Outcome<T>, CaError> {
    match r {
        Ok(v) => Ok(Outcome::Ok(v)),
        Err(CaError::Timeout) => Ok(Outcome::NotCheckable("timeout".into())),
        Err(CaError::DegreeCapExceeded { degree, cap }) => Ok(Outcome::NotCheckable(format!(
            "degree cap exceeded: {degree} > {cap}"
        ))),
        Err(e) => Err(e),
    }
}

/// A full report: session header plus the operation log.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub session: Value,
    pub operations: Vec<OpRecord>,
}

impl Report {
    /// Sorted-key JSON; object keys are ordered by the serde_json map
    /// representation, so identical content is byte-identical.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serialization");
        serde_json::to_string_pretty(&v).expect("report printing")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = self.session.get("example").and_then(|v| v.as_str()) {
            out.push_str(&format!("== {name} ==\n"));
        }
        for op in &self.operations {
            out.push_str(&format!(
                "{} {}: {}\n",
                op.op,
                compact(&op.inputs),
                compact(&op.result)
            ));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_else(|_| "<unprintable>".into())
}

/// Recorder that appends op records, measuring time when asked.
pub struct Recorder {
    pub records: Vec<OpRecord>,
    pub with_timing: bool,
}

impl Recorder {
    pub fn new(with_timing: bool) -> Self {
        Recorder {
            records: Vec::new(),
            with_timing,
        }
    }

    pub fn run<T, F>(&mut self, op: &str, inputs: Value, f: F) -> Result<T, CaError>
    where
        T: Clone,
        F: FnOnce() -> Result<T, CaError>,
        T: Serialize,
    {
        let t0 = std::time::Instant::now();
        let r = f()?;
        self.records.push(OpRecord {
            op: op.to_string(),
            inputs,
            result: serde_json::to_value(&r).expect("op result serialization"),
            timing_ms: self.with_timing.then(|| t0.elapsed().as_millis() as u64),
        });
        Ok(r)
    }

    pub fn push_value(&mut self, op: &str, inputs: Value, result: Value, ms: Option<u64>) {
        self.records.push(OpRecord {
            op: op.to_string(),
            inputs,
            result,
            timing_ms: if self.with_timing { ms } else { None },
        });
    }
}
