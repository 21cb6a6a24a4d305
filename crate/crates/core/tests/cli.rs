use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use krasner::io::parse_hyperring;
use krasner::validate::validate_axioms;

fn data(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(file).to_str().unwrap().to_string()
}

fn krasner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krasner")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("krasner-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn classify_even_ideal_under_lax() {
    let o = krasner(&["classify", &data("z12-mod-units.khr"), "--delta", "d1", "--reading", "lax"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let block: Vec<&str> = out.split("{c0,c2,c4,c6}\n").nth(1).unwrap().lines().collect();
    assert!(block.iter().any(|l| l.contains("d1-N/lax") && l.trim_end().ends_with("holds")), "{out}");
}

#[test]
fn classify_even_ideal_under_strict_is_negative() {
    let o = krasner(&["classify", "z12-mod-units", "--delta", "d1", "--ideal", "c0,c2,c4,c6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails at (c1,c2) at 2"));
}

#[test]
fn classify_rejects_bad_arguments() {
    assert_eq!(krasner(&["classify", "z12-mod-units", "--delta", "d7"]).status.code(), Some(2));
    assert_eq!(krasner(&["classify", "z12-mod-units", "--ideal", "c0,c1"]).status.code(), Some(2));
    assert_eq!(krasner(&["classify", "z12-mod-units", "--ideal", "c0,c9"]).status.code(), Some(2));
    assert_eq!(krasner(&["classify", "no-such-structure"]).status.code(), Some(2));
    assert_eq!(krasner(&["classify"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = krasner(&["verify", "--theorem", "n-within-nilradical", "--reading", "strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("n-within-nilradical\tstrict\tpass"));
    let o = krasner(&["verify", "--theorem", "n-within-nilradical", "--reading", "lax"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(krasner(&["verify", "--theorem", "no-such-id"]).status.code(), Some(2));
    let o = krasner(&["verify", "--theorem", "local-principal-delta-primary", "--search-max", "0"]);
    assert_eq!(o.status.code(), Some(0), "report-only statements do not set the exit code");
    let o = krasner(&["verify", "--list"]);
    assert_eq!(stdout(&o).lines().count(), krasner::harness::theorems::REGISTRY.len());
}

#[test]
fn validate_reports_axiom_witnesses() {
    let o = krasner(&["validate", &data("broken.khr")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("f-associativity: (c1,c1,c2)"), "{}", stdout(&o));
    let o = krasner(&["validate", &data("ternary-sign.khr")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = scratch("parse");
    let text = std::fs::read_to_string(data("z12-mod-units.khr")).unwrap();
    let no_neg: String = text.lines().filter(|l| !l.starts_with("neg:")).map(|l| format!("{l}\n")).collect();
    let path = dir.join("no-neg.khr");
    std::fs::write(&path, no_neg).unwrap();
    let o = krasner(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("completeness error") && stderr(&o).contains("neg"), "{}", stderr(&o));

    let dup = text.replace("f(c2,c6): {c4}\n", "f(c2,c6): {c4}\nf(c6,c2): {c4}\n");
    let line = dup.lines().position(|l| l.starts_with("f(c6,c2)")).unwrap() + 1;
    let path = dir.join("dup.khr");
    std::fs::write(&path, dup).unwrap();
    let o = krasner(&["ideals", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(&format!("dup.khr:{line}:1: structural error: duplicate key")), "{}", stderr(&o));
}

#[test]
fn ideals_and_radical() {
    let o = krasner(&["ideals", "z12-mod-units"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.contains("{c0,c6}\tnilradical"));
    assert!(out.contains("{c0,c3,c6}\tprime maximal"));
    let o = krasner(&["radical", "z12-mod-units", "--ideal", "{c0,c4}"]);
    assert_eq!(stdout(&o), "{c0,c2,c4,c6}\n");
}

#[test]
fn constructions_emit_valid_structures() {
    let o = krasner(&["quotient", "z12-mod-units", "--ideal", "c0,c6"]);
    assert_eq!(o.status.code(), Some(0));
    let q = parse_hyperring(&stdout(&o)).unwrap();
    assert_eq!(q.size(), 4);
    assert!(validate_axioms(&q).passed());
    let o = krasner(&["product", "z4", &data("z6.khr")]);
    let p = parse_hyperring(&stdout(&o)).unwrap();
    assert_eq!(p.size(), 24);
    assert_eq!(krasner(&["product", "z4", "ternary-sign"]).status.code(), Some(2));
    assert_eq!(krasner(&["quotient", "z4", "--ideal", "0,1,2,3"]).status.code(), Some(2));
}

#[test]
fn catalog_export_round_trips() {
    let dir = scratch("export");
    let o = krasner(&["catalog", "--export", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut count = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        assert!(validate_axioms(&parse_hyperring(&text).unwrap()).passed());
        count += 1;
    }
    assert_eq!(count, stdout(&o).lines().count());
}

#[test]
fn search_lists_structures() {
    let o = krasner(&["search", "--m", "2", "--n", "2", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().contains("structures"));
    let o = krasner(&["search", "--max-size", "4", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(1), "an exhausted budget is reported as incomplete");
}

#[test]
fn json_reports_have_the_common_shape() {
    for args in [
        vec!["--format", "json", "validate", "z12-mod-units"],
        vec!["--format", "json", "ideals", "ternary-sign"],
        vec!["--format", "json", "classify", "z4", "--reading", "both"],
    ] {
        let o = krasner(&args);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert!(v["structure"]["name"].is_string());
        for r in v["results"].as_array().unwrap() {
            for key in ["kind", "subject", "verdict", "reading", "witness"] {
                assert!(r.get(key).is_some(), "missing {key} in {r}");
            }
        }
    }
}
