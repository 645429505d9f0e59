//! Check reports as printed by the CLI, in human and JSON form.

use hayd_core::{Field, Report, Tensor};
use serde_json::{json, Map, Value};

use crate::doc::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub target: String,
    pub passed: bool,
    /// The failing axiom, or the last one checked.
    pub axiom: String,
    pub witness: Option<Vec<usize>>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub millis: u128,
}

pub fn tensor_json<F: Field>(t: &Tensor<F>) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .map(|(idx, c)| json!({"index": idx, "c": Scalar::from_field(c).to_json()}))
        .collect();
    json!({"shape": t.shape(), "entries": entries})
}

impl CheckReport {
    pub fn from_core<F: Field>(check: &str, target: &str, r: &Report<F>, millis: u128) -> Self {
        CheckReport {
            check: check.to_string(),
            target: target.to_string(),
            passed: r.passed,
            axiom: r.axiom.clone(),
            witness: r.witness.clone(),
            lhs: r.lhs.as_ref().map(tensor_json),
            rhs: r.rhs.as_ref().map(tensor_json),
            millis,
        }
    }

    /// `millis` is emitted only with `timings`, keeping default output
    /// byte-for-byte reproducible.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut m = Map::new();
        m.insert("check".into(), json!(self.check));
        m.insert("target".into(), json!(self.target));
        m.insert("passed".into(), json!(self.passed));
        m.insert("axiom".into(), json!(self.axiom));
        if let Some(w) = &self.witness {
            m.insert("witness".into(), json!(w));
        }
        if let Some(l) = &self.lhs {
            m.insert("lhs".into(), l.clone());
        }
        if let Some(r) = &self.rhs {
            m.insert("rhs".into(), r.clone());
        }
        if timings {
            m.insert("millis".into(), json!(self.millis as u64));
        }
        Value::Object(m)
    }

    pub fn human_line(&self, timings: bool) -> String {
        let mut s = format!("{} {} {}", if self.passed { "PASS" } else { "FAIL" }, self.check, self.target);
        if !self.passed {
            s.push_str(&format!(": {}", self.axiom));
            if let Some(w) = &self.witness {
                s.push_str(&format!(" at {w:?}"));
            }
        }
        if timings {
            s.push_str(&format!(" ({} ms)", self.millis));
        }
        s
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// One line per report then a summary line, or the JSON equivalent.
pub fn render(reports: &[CheckReport], json: bool, timings: bool) -> String {
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    if json {
        let v = json!({
            "reports": reports.iter().map(|r| r.to_json(timings)).collect::<Vec<_>>(),
            "summary": {"total": reports.len(), "passed": passed, "failed": failed},
        });
        let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in reports {
            s.push_str(&r.human_line(timings));
            s.push('\n');
        }
        s.push_str(&format!("{} checks, {passed} passed, {failed} failed\n", reports.len()));
        s
    }
}
