//! Machine-readable reports.
//!
//! Every report has the shape
//! `{schema_version, structure, results: [{kind, subject, verdict, reading, witness}]}`.
//! Elements are written by name, positions are 1-based, and results keep
//! insertion order, so equal inputs give byte-identical output.

use serde::Serialize;

use crate::classify::report::Row;
use crate::ring::HyperRing;
use crate::set::ElementSet;
use crate::validate::ValidationReport;
use crate::verdict::{Reading, Verdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureInfo {
    pub name: String,
    pub m: usize,
    pub n: usize,
    pub elements: Vec<String>,
    pub zero: String,
    pub one: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedWitness {
    pub tuple: Vec<String>,
    pub positions: Vec<usize>,
    pub sets: Vec<Vec<String>>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultItem {
    pub kind: String,
    pub subject: String,
    /// `"holds"` or `"fails"`.
    pub verdict: &'static str,
    pub reading: Option<Reading>,
    pub witness: Option<NamedWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub structure: StructureInfo,
    pub results: Vec<ResultItem>,
}

fn set_names(h: &HyperRing, s: ElementSet) -> Vec<String> {
    s.iter().map(|e| h.elem_name(e).to_string()).collect()
}

pub fn name_witness(h: &HyperRing, w: &Witness) -> NamedWitness {
    NamedWitness {
        tuple: w.tuple.iter().map(|&e| h.elem_name(e).to_string()).collect(),
        positions: w.positions.iter().map(|p| p + 1).collect(),
        sets: w.sets.iter().map(|&s| set_names(h, s)).collect(),
        text: w.describe(h),
    }
}

impl Report {
    pub fn new(h: &HyperRing) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            structure: StructureInfo {
                name: h.name().to_string(),
                m: h.m(),
                n: h.n(),
                elements: h.names().to_vec(),
                zero: h.elem_name(h.zero()).to_string(),
                one: h.unit().map(|u| h.elem_name(u).to_string()),
            },
            results: vec![],
        }
    }

    pub fn push_verdict(&mut self, h: &HyperRing, kind: impl Into<String>, subject: impl Into<String>, v: &Verdict) {
        self.results.push(ResultItem {
            kind: kind.into(),
            subject: subject.into(),
            verdict: if v.holds { "holds" } else { "fails" },
            reading: v.reading,
            witness: v.witness.as_ref().map(|w| name_witness(h, w)),
            s_element: v.s_element.map(|s| h.elem_name(s).to_string()),
            detail: None,
        });
    }

    /// A result with no witness, e.g. a computed set.
    pub fn push_value(&mut self, kind: impl Into<String>, subject: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.results.push(ResultItem {
            kind: kind.into(),
            subject: subject.into(),
            verdict: if holds { "holds" } else { "fails" },
            reading: None,
            witness: None,
            s_element: None,
            detail: Some(detail.into()),
        });
    }

    /// One result per axiom: a passing entry when the structure is valid,
    /// otherwise one failing entry per violated axiom.
    pub fn validation(h: &HyperRing, report: &ValidationReport) -> Self {
        let mut out = Report::new(h);
        if report.passed() {
            out.push_value("axioms", h.name(), true, "all axioms hold");
        }
        for v in &report.violations {
            out.results.push(ResultItem {
                kind: format!("axiom:{}", v.axiom.label()),
                subject: h.name().to_string(),
                verdict: "fails",
                reading: None,
                witness: Some(NamedWitness {
                    tuple: v.witness.iter().map(|&e| h.elem_name(e).to_string()).collect(),
                    positions: v.position.map(|p| p + 1).into_iter().collect(),
                    sets: vec![set_names(h, v.expected), set_names(h, v.actual)],
                    text: v.describe(h),
                }),
                s_element: None,
                detail: None,
            });
        }
        out
    }

    pub fn classification(h: &HyperRing, rows: &[Row]) -> Self {
        let mut out = Report::new(h);
        for row in rows {
            let subject = h.format_set(row.ideal);
            for e in &row.entries {
                out.push_verdict(h, e.kind.clone(), subject.clone(), &e.verdict);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::report::classify_all;
    use crate::harness::catalog::{ternary_variant, z12_mod_units};
    use crate::validate::validate_axioms;

    #[test]
    fn classification_is_deterministic() {
        let h = z12_mod_units();
        let a = Report::classification(&h, &classify_all(&h).unwrap()).to_json();
        let b = Report::classification(&h, &classify_all(&h).unwrap()).to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema_version"], 1);
        let strict = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["kind"] == "d1-N/strict" && r["subject"] == "{c0,c2,c4,c6}")
            .expect("row present");
        assert_eq!(strict["verdict"], "fails");
        assert_eq!(strict["reading"], "strict");
        assert!(strict["witness"]["tuple"].as_array().unwrap().len() == 2);
    }

    #[test]
    fn validation_lists_failures() {
        let h = ternary_variant();
        let r = Report::validation(&h, &validate_axioms(&h));
        assert!(r.results.iter().all(|x| x.verdict == "fails"));
        assert!(!r.results.is_empty());
        let ok = Report::validation(&z12_mod_units(), &validate_axioms(&z12_mod_units()));
        assert_eq!(ok.results.len(), 1);
        assert_eq!(ok.results[0].verdict, "holds");
    }
}
