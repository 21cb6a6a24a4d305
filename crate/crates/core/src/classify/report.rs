//! Per-hyperideal classification table.

use serde::Serialize;

use crate::classify::checks::{sampled_multiplicative_subsets, Classifier};
use crate::classify::expansion::ExpansionFn;
use crate::error::Result;
use crate::ideals::Hyperideal;
use crate::ring::HyperRing;
use crate::set::ElementSet;
use crate::verdict::{Reading, Verdict};

/// One named check on one hyperideal.
#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub kind: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub ideal: ElementSet,
    pub entries: Vec<Entry>,
}

impl Row {
    pub fn get(&self, kind: &str) -> Option<&Verdict> {
        self.entries.iter().find(|e| e.kind == kind).map(|e| &e.verdict)
    }
}

/// S-N runs only on carriers up to this size.
pub const S_N_LIMIT: usize = 6;

/// Every check on every proper hyperideal. Kinds are named like
/// `prime`, `d1-N/strict`, `(2,n)-d0/lax` and `S-N/lax`.
pub fn classify_all(h: &HyperRing) -> Result<Vec<Row>> {
    let c = Classifier::new(h)?;
    let proper: Vec<ElementSet> = c.lat.proper().collect();
    let subsets = if h.size() <= S_N_LIMIT { sampled_multiplicative_subsets(h, 4) } else { vec![] };
    let mut rows = Vec::with_capacity(proper.len());
    for x in proper {
        let i = Hyperideal::trusted(x);
        let mut entries = vec![
            Entry { kind: "prime".into(), verdict: c.is_prime(i)? },
            Entry { kind: "primary".into(), verdict: c.is_primary(i)? },
            Entry { kind: "maximal".into(), verdict: c.is_maximal(i)? },
        ];
        for r in Reading::BOTH {
            entries.push(Entry { kind: format!("N/{r}"), verdict: c.is_n(i, r)? });
        }
        for d in ExpansionFn::standard() {
            for r in Reading::BOTH {
                entries.push(Entry { kind: format!("{d}-N/{r}"), verdict: c.is_delta_n(i, &d, r)? });
            }
        }
        for k in [2, 3] {
            for d in [ExpansionFn::Identity, ExpansionFn::Radical] {
                for r in Reading::BOTH {
                    entries.push(Entry { kind: format!("({k},n)-{d}/{r}"), verdict: c.is_kn_absorbing(i, k, &d, r)? });
                }
            }
        }
        for r in Reading::BOTH {
            let candidates: Vec<_> = subsets.iter().filter(|s| s.members().is_disjoint(x)).collect();
            if candidates.is_empty() {
                continue;
            }
            let mut found = None;
            for &s in &candidates {
                let v = c.is_s_n(i, *s, r)?;
                if v.holds {
                    found = Some(v);
                    break;
                }
                found.get_or_insert(v);
            }
            entries.push(Entry { kind: format!("S-N/{r}"), verdict: found.expect("nonempty") });
        }
        rows.push(Row { ideal: x, entries });
    }
    Ok(rows)
}

/// Kinds whose Strict and Lax verdicts differ, as `(ideal, base kind)`.
pub fn reading_discrepancies(rows: &[Row]) -> Vec<(ElementSet, String)> {
    let mut out = vec![];
    for row in rows {
        for e in &row.entries {
            if let Some(base) = e.kind.strip_suffix("/strict") {
                if let Some(lax) = row.get(&format!("{base}/lax")) {
                    if lax.holds != e.verdict.holds {
                        out.push((row.ideal, base.to_string()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog;

    #[test]
    fn z12_rows() {
        let h = catalog::z12_mod_units();
        let rows = classify_all(&h).unwrap();
        assert_eq!(rows.len(), 5);
        let even = h.set_from_names(&["c0", "c2", "c4", "c6"]).unwrap();
        let row = rows.iter().find(|r| r.ideal == even).unwrap();
        assert!(row.get("d1-N/lax").unwrap().holds);
        assert!(!row.get("d1-N/strict").unwrap().holds);
        assert!(reading_discrepancies(&rows).contains(&(even, "d1-N".to_string())));
    }
}
