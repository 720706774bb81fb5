//! Canonical result documents. Every subcommand emits one `ResultDocument`,
//! serialized as a single deterministic JSON line: struct fields keep a
//! fixed order and every generator list is sorted lexicographically after
//! canonical rendering, so byte-identical inputs give byte-identical output.

use serde::Serialize;
use taukit_core::interior::InteriorTrace;
use taukit_core::{Ideal, RingPresentation};

/// Outcome of one named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "UNCHECKABLE")]
    Uncheckable,
    #[serde(rename = "INFO")]
    Info,
    #[serde(rename = "NOT_STABILIZED")]
    NotStabilized,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Uncheckable => "UNCHECKABLE",
            Verdict::Info => "INFO",
            Verdict::NotStabilized => "NOT_STABILIZED",
        }
    }
}

/// One named identity with both sides rendered as sorted generator lists.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, verdict: Verdict, lhs: Vec<String>, rhs: Vec<String>) -> Self {
        CheckRecord {
            name: name.into(),
            verdict,
            lhs: sorted(lhs),
            rhs: sorted(rhs),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// The one output shape every subcommand prints.
#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    pub ideal: Vec<String>,
    pub stabilized_at: Option<u32>,
    pub trace: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test_element: Option<String>,
    pub checks: Vec<CheckRecord>,
}

pub fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// Canonical sorted generator strings of an ideal, rendered in the ambient
/// ring of the presentation.
pub fn render_ideal(rp: &RingPresentation, ideal: &Ideal) -> Vec<String> {
    sorted(rp.lift(ideal).render_canonical())
}

impl ResultDocument {
    pub fn empty() -> Self {
        ResultDocument {
            ideal: Vec::new(),
            stabilized_at: None,
            trace: Vec::new(),
            test_element: None,
            checks: Vec::new(),
        }
    }

    /// Document for an interior-style computation with a stabilization trace.
    pub fn from_trace(rp: &RingPresentation, trace: &InteriorTrace) -> Self {
        ResultDocument {
            ideal: render_ideal(rp, &trace.result),
            stabilized_at: Some(trace.stabilized_at),
            trace: trace
                .partial_sums
                .iter()
                .map(|s| render_ideal(rp, s))
                .collect(),
            test_element: None,
            checks: Vec::new(),
        }
    }

    pub fn with_test_element(mut self, c: impl Into<String>) -> Self {
        self.test_element = Some(c.into());
        self
    }

    pub fn with_checks(mut self, checks: Vec<CheckRecord>) -> Self {
        self.checks = checks;
        self
    }

    /// Single-line canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result documents always serialize")
    }

    /// Plain-text rendering for `--pretty`.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ideal: ({})\n", self.ideal.join(", ")));
        if let Some(e) = self.stabilized_at {
            out.push_str(&format!("stabilized_at: {e}\n"));
        }
        if let Some(c) = &self.test_element {
            out.push_str(&format!("test_element: {c}\n"));
        }
        if !self.trace.is_empty() {
            out.push_str("trace:\n");
            for (i, sums) in self.trace.iter().enumerate() {
                out.push_str(&format!("  [{i}] ({})\n", sums.join(", ")));
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for check in &self.checks {
                out.push_str(&format!(
                    "  {:<14} {}  lhs=({})  rhs=({})",
                    check.verdict.as_str(),
                    check.name,
                    check.lhs.join(", "),
                    check.rhs.join(", ")
                ));
                if let Some(note) = &check.note {
                    out.push_str(&format!("  [{note}]"));
                }
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_single_line_with_fixed_key_order() {
        let doc = ResultDocument {
            ideal: vec!["y".into(), "x".into()],
            stabilized_at: Some(2),
            trace: vec![vec!["x + y".into()]],
            test_element: Some("x + y".into()),
            checks: vec![CheckRecord::new("probe", Verdict::Pass, vec![], vec![])],
        };
        let json = doc.to_json();
        assert!(!json.contains('\n'));
        let ideal_pos = json.find("\"ideal\"").unwrap();
        let stab_pos = json.find("\"stabilized_at\"").unwrap();
        let trace_pos = json.find("\"trace\"").unwrap();
        let checks_pos = json.find("\"checks\"").unwrap();
        assert!(ideal_pos < stab_pos && stab_pos < trace_pos && trace_pos < checks_pos);
        assert!(json.contains("\"verdict\":\"PASS\""));
    }

    #[test]
    fn note_is_omitted_when_absent() {
        let record = CheckRecord::new("probe", Verdict::Fail, vec!["x".into()], vec![]);
        let json = serde_json::to_string(&record).unwrap();
        assert!(!json.contains("note"));
        let with = record.with_note("details");
        assert!(serde_json::to_string(&with).unwrap().contains("\"note\":\"details\""));
    }

    #[test]
    fn generator_lists_are_sorted_in_records() {
        let record = CheckRecord::new(
            "probe",
            Verdict::Pass,
            vec!["y^2".into(), "x".into(), "x*y".into()],
            vec![],
        );
        assert_eq!(record.lhs, vec!["x", "x*y", "y^2"]);
    }
}
