use proptest::prelude::*;

use krasner::harness::catalog::builtin_catalog;
use krasner::harness::search::search_hyperrings;
use krasner::io::{parse_document, parse_hyperring, serialize_hyperring, ParseErrorKind};
use krasner::HyperRing;

fn corpus() -> Vec<HyperRing> {
    let mut out: Vec<HyperRing> = builtin_catalog().into_iter().map(|e| e.ring).collect();
    out.extend(search_hyperrings(2, 2, 3, 1_000_000).entries.into_iter().map(|e| e.ring));
    out
}

#[test]
fn cell_spans_cover_every_cell() {
    for h in corpus() {
        let text = serialize_hyperring(&h).unwrap();
        let doc = parse_document(&text).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let cells = doc.spans.len();
        assert_eq!(cells, h.f_cells().len() + h.g_cells().len());
        for ((table, key), span) in &doc.spans {
            let line = lines[span.line - 1];
            assert!(line.starts_with(*table), "{line}");
            assert_eq!(span.end_column, line.chars().count());
            let names: Vec<&str> = key.iter().map(|&e| h.elem_name(e)).collect();
            assert!(line.starts_with(&format!("{table}({})", names.join(","))));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeled_structures_round_trip(pick in 0usize..64, seed in any::<u64>()) {
        let all = corpus();
        let h = &all[pick % all.len()];
        let mut perm: Vec<usize> = (0..h.size()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let r = h.relabel(&perm);
        let text = serialize_hyperring(&r).unwrap();
        let back = parse_hyperring(&text).unwrap();
        prop_assert_eq!(&back.renamed(r.name()), &r);
        prop_assert_eq!(serialize_hyperring(&back).unwrap(), text);
    }

    #[test]
    fn corrupted_cells_are_located(pick in 0usize..64, line_pick in any::<usize>(), junk in "[A-Z]{1,3}") {
        let all = corpus();
        let h = &all[pick % all.len()];
        let text = serialize_hyperring(h).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let cell_lines: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].starts_with("f(") || lines[i].starts_with("g(")).collect();
        let target = cell_lines[line_pick % cell_lines.len()];
        let colon = lines[target].find(':').unwrap();
        let bad = format!("{}: {{{junk}}}", &lines[target][..colon]);
        let bad = if lines[target].starts_with('g') { format!("{}: {junk}", &lines[target][..colon]) } else { bad };
        let mut edited: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
        edited[target] = bad.clone();
        let err = parse_hyperring(&edited.join("\n")).unwrap_err();
        prop_assert_eq!(err.line, target + 1);
        prop_assert_eq!(err.kind, ParseErrorKind::Structural);
        prop_assert!(err.column >= 1 && err.column <= bad.chars().count());
        prop_assert!(err.message.contains(&junk));
    }

    #[test]
    fn dropped_cells_are_completeness_errors(pick in 0usize..64, line_pick in any::<usize>()) {
        let all = corpus();
        let h = &all[pick % all.len()];
        let text = serialize_hyperring(h).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let cell_lines: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].starts_with("f(") || lines[i].starts_with("g(")).collect();
        let target = cell_lines[line_pick % cell_lines.len()];
        let key = lines[target].split(':').next().unwrap().to_string();
        let kept: Vec<&str> = lines.iter().enumerate().filter(|&(i, _)| i != target).map(|(_, l)| *l).collect();
        let err = parse_hyperring(&kept.join("\n")).unwrap_err();
        prop_assert_eq!(err.kind, ParseErrorKind::Completeness);
        prop_assert!(err.message.contains(&key), "{} lacks {}", err.message, key);
    }
}
