//! Whole-registry runs and the strict-vs-lax comparison.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::checks::{Classifier, Family};
use crate::classify::expansion::ExpansionFn;
use crate::harness::catalog::{builtin_catalog, ternary_sign, ternary_variant, z12_mod_units, CatalogEntry};
use crate::harness::search::search_hyperrings;
use crate::harness::theorems::{verify_theorem, Status, TheoremReport, REGISTRY};
use crate::ideals::Hyperideal;
use crate::ring::HyperRing;
use crate::verdict::{Reading, Verdict};

/// Node budget used when the default scope runs the search.
pub const SCOPE_SEARCH_BUDGET: u64 = 50_000_000;

/// The built-in catalog followed by every (2,2)-structure on at most
/// `search_max` elements.
pub fn default_scope(search_max: usize) -> Vec<CatalogEntry> {
    let mut scope = builtin_catalog();
    if search_max > 0 {
        let found = search_hyperrings(2, 2, search_max, SCOPE_SEARCH_BUDGET);
        assert!(found.complete, "search budget exhausted");
        scope.extend(found.entries);
    }
    scope
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub scope: Vec<String>,
    pub reports: Vec<TheoremReport>,
    pub totals: Vec<ReadingTotals>,
    pub theorem_table: Vec<TheoremRow>,
    pub example_table: Vec<ExampleRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReadingTotals {
    pub reading: Reading,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub instances: u64,
}

/// One registry entry under both readings.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremRow {
    pub id: String,
    pub core: bool,
    pub report_only: bool,
    pub strict: Status,
    pub lax: Status,
    pub strict_violations: usize,
    pub lax_violations: usize,
}

impl TheoremRow {
    /// Holds under Strict and breaks under Lax.
    pub fn requires_strict(&self) -> bool {
        self.strict != Status::Fail && self.lax == Status::Fail
    }
}

/// One named claim about a catalog structure under both readings.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleRow {
    pub claim: String,
    pub strict: String,
    pub lax: String,
    pub requires_lax: bool,
}

impl SuiteSummary {
    pub fn report(&self, id: &str, reading: Reading) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| r.id == id && r.reading == reading)
    }

    /// Core entries that fail under Strict.
    pub fn core_failures(&self) -> Vec<&TheoremReport> {
        self.reports
            .iter()
            .filter(|r| r.reading == Reading::Strict && r.status == Status::Fail)
            .filter(|r| REGISTRY.iter().any(|t| t.id == r.id && t.core))
            .collect()
    }
}

/// Run every registry entry under every requested reading. The comparison
/// tables always cover both readings.
pub fn run_suite(scope: &[CatalogEntry], readings: &[Reading]) -> SuiteSummary {
    let mut all = Vec::new();
    for r in Reading::BOTH {
        for t in REGISTRY {
            all.push(verify_theorem(t.id, scope, r).expect("registered id"));
        }
    }
    let status = |id: &str, r: Reading| all.iter().find(|x| x.id == id && x.reading == r).expect("ran");
    let theorem_table = REGISTRY
        .iter()
        .map(|t| {
            let (s, l) = (status(t.id, Reading::Strict), status(t.id, Reading::Lax));
            TheoremRow {
                id: t.id.to_string(),
                core: t.core,
                report_only: t.report_only,
                strict: s.status,
                lax: l.status,
                strict_violations: s.violations.len(),
                lax_violations: l.violations.len(),
            }
        })
        .collect();
    let reports: Vec<TheoremReport> = all.into_iter().filter(|r| readings.contains(&r.reading)).collect();
    let totals = readings
        .iter()
        .map(|&r| {
            let of = |s: Status| reports.iter().filter(|x| x.reading == r && x.status == s).count();
            ReadingTotals {
                reading: r,
                pass: of(Status::Pass),
                fail: of(Status::Fail),
                vacuous: of(Status::Vacuous),
                instances: reports.iter().filter(|x| x.reading == r).map(|x| x.instances).sum(),
            }
        })
        .collect();
    SuiteSummary {
        scope: scope.iter().map(|e| e.name.clone()).collect(),
        reports,
        totals,
        theorem_table,
        example_table: example_rows(),
    }
}

fn describe(h: &HyperRing, v: &Verdict) -> String {
    match (&v.witness, v.s_element) {
        (None, Some(s)) => format!("holds (s = {})", h.elem_name(s)),
        (None, None) => "holds".into(),
        (Some(w), _) => format!("fails at {}", w.describe(h)),
    }
}

fn example_row(claim: String, strict: String, lax: String) -> ExampleRow {
    let requires_lax = !strict.starts_with("holds") && lax.starts_with("holds");
    ExampleRow { claim, strict, lax, requires_lax }
}

/// Claims about specific catalog ideals, evaluated under both readings.
pub fn example_rows() -> Vec<ExampleRow> {
    let mut rows = vec![];
    let z12 = z12_mod_units();
    let c = Classifier::new(&z12).expect("unital");
    let even = Hyperideal::new(&z12, z12.set_from_names(&["c0", "c2", "c4", "c6"]).unwrap()).unwrap();
    let thirds = Hyperideal::new(&z12, z12.set_from_names(&["c0", "c3", "c6"]).unwrap()).unwrap();
    let run = |f: &dyn Fn(Reading) -> Verdict| Reading::BOTH.map(|r| describe(&z12, &f(r)));
    let [s, l] = run(&|r| c.is_delta_n(even, &ExpansionFn::Radical, r).unwrap());
    rows.push(example_row("z12-mod-units {c0,c2,c4,c6} is d1-N".into(), s, l));
    let [s, l] = run(&|r| c.is_kn_absorbing(thirds, 2, &ExpansionFn::Radical, r).unwrap());
    rows.push(example_row("z12-mod-units {c0,c3,c6} is (2,n)-absorbing d1-N".into(), s, l));
    for h in [ternary_sign(), ternary_variant()] {
        let c = Classifier::new(&h).expect("unital");
        let x = h.set_from_names(&["0", "a"]).unwrap();
        let one = h.elem_by_name("1").unwrap();
        let [s, l] = Reading::BOTH.map(|r| {
            let w = c.family_witness(x, x, Family::Scaled(one), r);
            let v = Verdict { s_element: w.is_none().then_some(one), ..Verdict::from_witness(Some(r), w) };
            describe(&h, &v)
        });
        let note = if c.lat.is_ideal(x) { "" } else { " (condition only; {0,a} is not a hyperideal)" };
        rows.push(example_row(format!("{} {{0,a}} is S-N for S = {{1}}{note}", h.name()), s, l));
    }
    rows
}

/// Plain-text rendering of both comparison tables.
pub fn render_discrepancies(summary: &SuiteSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "theorem\tcore\tstrict\tlax\trequires-strict");
    for row in &summary.theorem_table {
        let _ = writeln!(
            out,
            "{}\t{}\t{} ({})\t{} ({})\t{}",
            row.id,
            if row.core { "core" } else if row.report_only { "report" } else { "-" },
            row.strict.as_str(),
            row.strict_violations,
            row.lax.as_str(),
            row.lax_violations,
            if row.requires_strict() { "yes" } else { "no" }
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "example\tstrict\tlax\trequires-lax");
    for row in &summary.example_table {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", row.claim, row.strict, row.lax, if row.requires_lax { "yes" } else { "no" });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scope_is_all_vacuous() {
        let s = run_suite(&[], &[Reading::Strict]);
        assert_eq!(s.totals[0].vacuous, REGISTRY.len());
        assert_eq!(s.totals[0].instances, 0);
    }

    #[test]
    fn example_claims_need_lax() {
        let rows = example_rows();
        assert!(rows[0].requires_lax);
        assert!(rows[0].strict.contains("(c1, c2)") || rows[0].strict.contains("c1"), "{}", rows[0].strict);
        assert!(!rows[2].lax.starts_with("holds"));
        assert!(rows[3].lax.starts_with("holds") && rows[3].requires_lax);
    }
}
