//! Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit if
//! any criterion failed. Runs without the libtest harness so the lines are
//! always shown.

use std::path::{Path, PathBuf};
use std::process::Command;

use krasner::classify::checks::{sampled_multiplicative_subsets, Classifier, Family};
use krasner::classify::expansion::ExpansionFn;
use krasner::classify::naive;
use krasner::harness::catalog::{builtin_catalog, ternary_sign, ternary_variant, z12_mod_units, CatalogEntry};
use krasner::harness::suite::{default_scope, render_discrepancies, run_suite};
use krasner::harness::theorems::{verify_theorem, Status, REGISTRY};
use krasner::ideals::{enumerate_hyperideals, enumerate_hyperideals_naive};
use krasner::io::{parse_hyperring, serialize_hyperring};
use krasner::tuples::all_multisets;
use krasner::validate::validate_axioms;
use krasner::{ElementSet, HyperRing, Hyperideal, Lattice, Reading, Witness};

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: vec![] }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(format!("FAILED: {}", what.into()));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn scope() -> Vec<CatalogEntry> {
    default_scope(3)
}

/// Every alternative value for every table cell.
fn mutants(h: &HyperRing) -> Vec<HyperRing> {
    let mut out = vec![];
    let full = ElementSet::full(h.size()).bits();
    for key in all_multisets(h.size(), h.m()) {
        let current = h.f(&key);
        for bits in 1..=full {
            let v = ElementSet::from_bits(bits);
            if v != current {
                out.push(h.with_f_cell(&key, v));
            }
        }
    }
    for key in all_multisets(h.size(), h.n()) {
        let current = h.g(&key);
        for v in h.elements().filter(|&v| v != current) {
            out.push(h.with_g_cell(&key, v));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    for h in [z12_mod_units(), ternary_sign()] {
        let report = validate_axioms(&h);
        o.require(report.passed(), format!("{} has violations", h.name()));
        let ms = mutants(&h);
        let caught = ms
            .iter()
            .filter(|m| {
                let r = validate_axioms(m);
                !r.passed() && r.violations.iter().all(|v| v.replay(m))
            })
            .count();
        o.require(caught == ms.len(), format!("{}: {} of {} mutants caught", h.name(), caught, ms.len()));
        o.note(format!("{}: 0 violations; {} single-cell mutants all rejected with replayable witnesses", h.name(), ms.len()));
    }
    let variant = validate_axioms(&ternary_variant());
    o.note(format!(
        "the non-distributive ternary variant is rejected ({}), so the signed structure stands in for it",
        variant.violations.first().map_or("no violation".into(), |v| v.describe(&ternary_variant()))
    ));
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let h = z12_mod_units();
    let expected = h.set_from_names(&["c0", "c6"]).unwrap();
    o.require(h.nilradical() == expected, "power-based nilradical of z12-mod-units");
    o.require(Lattice::new(&h).nilradical == expected, "prime-intersection nilradical of z12-mod-units");
    o.require(naive::nilradical(&h) == expected, "naive nilradical of z12-mod-units");
    let mut ideals = 0;
    for e in scope() {
        let lat = Lattice::new(&e.ring);
        for &i in &lat.ideals {
            ideals += 1;
            let by_primes = lat.radical(i);
            let by_powers = e.ring.radical_by_powers(i);
            o.require(by_primes == by_powers, format!("{}: radicals of {} differ", e.name, e.ring.format_set(i)));
            if e.ring.size() <= 8 {
                o.require(naive::radical(&e.ring, i) == by_primes, format!("{}: naive radical of {}", e.name, e.ring.format_set(i)));
            }
        }
    }
    o.note(format!("nilradical {{c0,c6}} by powers and by primes; radical algorithms agree on {ideals} hyperideals"));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let h = z12_mod_units();
    let fast: Vec<ElementSet> = enumerate_hyperideals(&h).into_iter().map(Hyperideal::members).collect();
    let oracle: Vec<ElementSet> = enumerate_hyperideals_naive(&h).into_iter().map(Hyperideal::members).collect();
    let expected: Vec<ElementSet> = [
        &["c0"][..],
        &["c0", "c4"],
        &["c0", "c6"],
        &["c0", "c3", "c6"],
        &["c0", "c2", "c4", "c6"],
        &["c0", "c1", "c2", "c3", "c4", "c6"],
    ]
    .iter()
    .map(|n| h.set_from_names(n).unwrap())
    .collect();
    o.require(fast == expected, format!("lattice search gave {fast:?}"));
    o.require(oracle == expected, "brute-force oracle over all 64 subsets");
    o.note("6 hyperideals, equal to the brute-force oracle");
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let h = z12_mod_units();
    let c = Classifier::new(&h).unwrap();
    let d1 = ExpansionFn::Radical;
    let ideal = |names: &[&str]| Hyperideal::new(&h, h.set_from_names(names).unwrap()).unwrap();
    let el = |n: &str| h.elem_by_name(n).unwrap();

    let even = ideal(&["c0", "c2", "c4", "c6"]);
    let lax = c.is_delta_n(even, &d1, Reading::Lax).unwrap();
    let strict = c.is_delta_n(even, &d1, Reading::Strict).unwrap();
    o.require(lax.holds, "{c0,c2,c4,c6} d1-N under Lax");
    o.require(!strict.holds, "{c0,c2,c4,c6} not d1-N under Strict");
    let target = c.apply(&d1, even.members()).unwrap();
    let expected = Witness::at(vec![el("c2"), el("c3")], 0);
    o.require(
        c.replay_family(even.members(), target, Family::Plain, Reading::Strict, &expected),
        "(c2,c3) replays as a Strict failure",
    );
    if let Some(w) = &strict.witness {
        o.require(c.replay_family(even.members(), target, Family::Plain, Reading::Strict, w), "reported witness replays");
        o.note(format!("even ideal: Lax holds; Strict fails, first witness {}, (c2,c3) at 1 also replays", w.describe(&h)));
    }

    let thirds = ideal(&["c0", "c3", "c6"]);
    let t = c.apply(&d1, thirds.members()).unwrap();
    let oracle = naive::is_kn_absorbing(&h, thirds.members(), t, 2, Reading::Strict);
    let fast = c.is_kn_absorbing(thirds, 2, &d1, Reading::Strict).unwrap();
    o.require(oracle, "exhaustive-triple oracle: {c0,c3,c6} is (2,2)-absorbing d1-N under Strict");
    o.require(fast.holds == oracle, "classifier agrees with the triple oracle");
    o.require(c.is_kn_absorbing(thirds, 2, &d1, Reading::Lax).unwrap().holds, "(2,2)-absorbing d1-N under Lax");
    o.note("{c0,c3,c6}: (2,2)-absorbing d1-N under both readings, matching the triple oracle");

    for s in [ternary_sign(), ternary_variant()] {
        let x = s.set_from_names(&["0", "a"]).unwrap();
        let cs = Classifier::new(&s).unwrap();
        let one = s.elem_by_name("1").unwrap();
        let raw = |r: Reading| cs.family_witness(x, x, Family::Scaled(one), r);
        let show = |w: Option<Witness>| w.map_or("holds".to_string(), |w| format!("fails at {}", w.describe(&s)));
        o.note(format!(
            "{}: {{0,a}} is {}a hyperideal; raw S-N condition with S = {{1}}: Strict {}, Lax {}",
            s.name(),
            if cs.lat.is_ideal(x) { "" } else { "not " },
            show(raw(Reading::Strict)),
            show(raw(Reading::Lax))
        ));
    }
    let sign = ternary_sign();
    let sign_c = Classifier::new(&sign).unwrap();
    let x = sign.set_from_names(&["0", "a"]).unwrap();
    o.require(sign_c.lat.is_ideal(x), "{0,a} is a hyperideal of the ternary structure, so S-N is defined for it");
    let one = sign.elem_by_name("1").unwrap();
    o.require(
        sign_c.family_witness(x, x, Family::Scaled(one), Reading::Lax).is_none(),
        "{0,a} meets the S-N condition with S = {1} under Lax on the validated ternary structure",
    );
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let scope = scope();
    let mut instances = 0;
    for t in REGISTRY.iter().filter(|t| t.core) {
        let r = verify_theorem(t.id, &scope, Reading::Strict).unwrap();
        instances += r.instances;
        o.require(r.status == Status::Pass, format!("{} is {} with {} violations", t.id, r.status.as_str(), r.violations.len()));
    }
    let core = REGISTRY.iter().filter(|t| t.core).count();
    o.note(format!("{core} core statements over {} structures, {instances} instances, no violations", scope.len()));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let summary = run_suite(&scope(), &[Reading::Lax]);
    let text = render_discrepancies(&summary);
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/discrepancies.tsv"));
    match golden {
        Ok(g) => o.require(g == text, "discrepancy table matches the golden file"),
        Err(e) => o.require(false, format!("golden file unreadable: {e}")),
    }
    let strict_only: Vec<&str> = summary.theorem_table.iter().filter(|r| r.requires_strict()).map(|r| r.id.as_str()).collect();
    let lax_only = summary.example_table.iter().filter(|r| r.requires_lax).count();
    o.require(lax_only > 0, "some example claim requires Lax");
    o.note(format!("{} statements require Strict; {lax_only} example claims require Lax", strict_only.len()));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0u64;
    for e in scope() {
        let h = &e.ring;
        let Ok(c) = Classifier::new(h) else { continue };
        let ideals: Vec<ElementSet> = c.lat.proper().collect();
        let subsets = if h.size() <= 6 { sampled_multiplicative_subsets(h, 4) } else { vec![] };
        for &x in &ideals {
            let i = Hyperideal::new(h, x).unwrap();
            for r in Reading::BOTH {
                let n = c.is_n(i, r).unwrap().holds;
                o.require(n == naive::is_n(h, x, r), format!("{} N {} {r}", e.name, h.format_set(x)));
                checked += 1;
                for d in ExpansionFn::standard() {
                    let t = c.apply(&d, x).unwrap();
                    let fast = c.is_delta_n(i, &d, r).unwrap().holds;
                    o.require(fast == naive::is_delta_n(h, x, t, r), format!("{} {d}-N {} {r}", e.name, h.format_set(x)));
                    checked += 1;
                    let big = 2 * (h.n() - 1) + 1;
                    if h.size().pow(big as u32) <= 20_000 {
                        let fast = c.is_kn_absorbing(i, 2, &d, r).unwrap().holds;
                        let slow = naive::is_kn_absorbing(h, x, t, 2, r);
                        o.require(fast == slow, format!("{} (2,n)-{d} {} {r}", e.name, h.format_set(x)));
                        checked += 1;
                    }
                }
                for s in subsets.iter().filter(|s| s.members().is_disjoint(x)) {
                    let fast = c.is_s_n(i, *s, r).unwrap().holds;
                    o.require(
                        fast == naive::is_s_n(h, x, s.members(), r),
                        format!("{} S-N {} S={} {r}", e.name, h.format_set(x), h.format_set(s.members())),
                    );
                    checked += 1;
                }
            }
        }
    }
    o.note(format!("{checked} (structure, ideal, check, reading) instances agree with full enumeration"));
    o
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_krasner")).args(args).output().expect("binary runs");
    (out.status.code(), out.stdout)
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let mut files = 0;
    for entry in std::fs::read_dir(data_dir()).expect("data directory") {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|x| x != "khr") {
            continue;
        }
        files += 1;
        let text = std::fs::read_to_string(&path).unwrap();
        let h = parse_hyperring(&text).unwrap();
        let again = parse_hyperring(&serialize_hyperring(&h).unwrap()).unwrap();
        o.require(again == h, format!("round trip of {}", path.display()));
    }
    for e in builtin_catalog() {
        let again = parse_hyperring(&serialize_hyperring(&e.ring).unwrap()).unwrap();
        o.require(again.renamed(e.ring.name()) == e.ring, format!("round trip of catalog entry {}", e.name));
    }
    let z12 = data_dir().join("z12-mod-units.khr");
    let z12 = z12.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", z12],
        vec!["ideals", z12],
        vec!["classify", z12, "--delta", "d1", "--reading", "both"],
        vec!["radical", z12, "--ideal", "c0,c4"],
        vec!["quotient", z12, "--ideal", "c0,c6"],
        vec!["product", "z4", "z2"],
        vec!["search", "--max-size", "3"],
        vec!["catalog"],
        vec!["verify", "--theorem", "n-within-nilradical", "--reading", "both"],
    ];
    for args in &commands {
        let mut full = vec!["--format", "json"];
        full.extend(args);
        let (a, b) = (run_cli(&full), run_cli(&full));
        o.require(a == b, format!("`{}` is not byte-identical across runs", args.join(" ")));
        o.require(serde_json::from_slice::<serde_json::Value>(&a.1).is_ok(), format!("`{}` emits JSON", args.join(" ")));
    }
    o.note(format!("{files} shipped files and the catalog round-trip; {} JSON commands byte-identical", commands.len()));
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("validator accepts both small hyperrings and rejects every single-cell mutant", criterion_1),
        ("nilradical of z12-mod-units and radical algorithm agreement", criterion_2),
        ("hyperideal enumeration of z12-mod-units", criterion_3),
        ("example claims under documented readings", criterion_4),
        ("core statements pass under Strict", criterion_5),
        ("strict-vs-lax discrepancy table matches golden file", criterion_6),
        ("early-exit classifiers match full enumeration", criterion_7),
        ("format round-trip and report determinism", criterion_8),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("criterion {}: {} - {}", k + 1, if o.pass { "PASS" } else { "FAIL" }, title);
        for n in &o.notes {
            println!("    {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
