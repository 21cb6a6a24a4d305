//! Command-line front end.
//!
//! Exit status: 0 when the command succeeded and its check held, 1 when a
//! check came out negative, 2 on unreadable input or bad arguments.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use krasner::classify::expansion::ExpansionFn;
use krasner::classify::report::classify_all;
use krasner::constructions::{product, quotient};
use krasner::harness::catalog::{builtin_catalog, by_name};
use krasner::harness::search::search_hyperrings;
use krasner::harness::suite::{default_scope, render_discrepancies, run_suite};
use krasner::harness::theorems::{theorem_info, verify_theorem, Status, REGISTRY};
use krasner::io::{parse_document, serialize_hyperring, Report};
use krasner::validate::validate_axioms;
use krasner::{ElementSet, HyperRing, Hyperideal, Lattice, Reading};

#[derive(Parser)]
#[command(name = "krasner", version, about = "Krasner (m,n)-hyperrings: validation, hyperideals and theorem checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Strict,
    Lax,
    Both,
}

impl ReadingArg {
    fn readings(self) -> Vec<Reading> {
        match self {
            ReadingArg::Strict => vec![Reading::Strict],
            ReadingArg::Lax => vec![Reading::Lax],
            ReadingArg::Both => Reading::BOTH.to_vec(),
        }
    }
}

/// STRUCTURE arguments are a `.khr` path or a catalog name such as `z12-mod-units` or `z6`.
#[derive(Subcommand)]
enum Command {
    /// Check the hyperring axioms.
    Validate { structure: String },
    /// Print a structure in canonical `.khr` form.
    Show { structure: String },
    /// List all hyperideals with their prime and maximal flags.
    Ideals { structure: String },
    /// Classify proper hyperideals; exits 1 unless the selected check holds for some ideal.
    Classify {
        structure: String,
        /// Expansion for the primary check: d0, d1 or dH. Without it the check is plain N.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, value_enum, default_value_t = ReadingArg::Strict)]
        reading: ReadingArg,
        /// Restrict to one hyperideal, e.g. `c0,c2,c4,c6`.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// The radical of a hyperideal.
    Radical {
        structure: String,
        #[arg(long)]
        ideal: String,
    },
    /// The quotient by a proper hyperideal, written as `.khr`.
    Quotient {
        structure: String,
        #[arg(long)]
        ideal: String,
    },
    /// The direct product of two structures, written as `.khr`.
    Product { left: String, right: String },
    /// Check registered statements over the catalog plus searched structures.
    Verify {
        /// One statement id; all when omitted.
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, value_enum, default_value_t = ReadingArg::Strict)]
        reading: ReadingArg,
        /// Include every (2,2)-structure up to this size.
        #[arg(long, default_value_t = 3)]
        search_max: usize,
        /// Print the strict/lax comparison tables.
        #[arg(long)]
        table: bool,
        /// List statement ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate all (m,n)-structures up to isomorphism.
    Search {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Write each result as a `.khr` file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// List built-in structures.
    Catalog {
        /// Write each entry as a `.khr` file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

type Outcome = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Validate { structure } => validate(&load(structure)?, json),
        Command::Show { structure } => emit_structure(&load(structure)?, json),
        Command::Ideals { structure } => ideals(&load(structure)?, json),
        Command::Classify { structure, delta, reading, ideal } => {
            classify(&load(structure)?, delta.as_deref(), *reading, ideal.as_deref(), json)
        }
        Command::Radical { structure, ideal } => {
            let h = load(structure)?;
            let i = parse_ideal(&h, ideal)?;
            let r = Lattice::new(&h).radical(i.members());
            if json {
                let mut rep = Report::new(&h);
                rep.push_value("radical", h.format_set(i.members()), true, h.format_set(r));
                println!("{}", rep.to_json());
            } else {
                println!("{}", h.format_set(r));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { structure, ideal } => {
            let h = load(structure)?;
            let i = parse_ideal(&h, ideal)?;
            let q = quotient(&h, i).map_err(|e| e.to_string())?;
            emit_structure(&q.ring, json)
        }
        Command::Product { left, right } => {
            let p = product(&load(left)?, &load(right)?).map_err(|e| e.to_string())?;
            emit_structure(&p, json)
        }
        Command::Verify { theorem, reading, search_max, table, list } => {
            verify(theorem.as_deref(), *reading, *search_max, *table, *list, json)
        }
        Command::Search { m, n, max_size, budget, export } => {
            if *m < 2 || *n < 2 {
                return Err("arities must be at least 2".into());
            }
            let out = search_hyperrings(*m, *n, *max_size, *budget);
            if let Some(dir) = export {
                export_all(dir, out.entries.iter().map(|e| &e.ring))?;
            }
            if json {
                let names: Vec<&str> = out.entries.iter().map(|e| e.name.as_str()).collect();
                println!("{}", json!({"complete": out.complete, "nodes": out.nodes, "structures": names}));
            } else {
                for e in &out.entries {
                    println!("{}\t{} elements", e.name, e.ring.size());
                }
                println!("{} structures, {} nodes{}", out.entries.len(), out.nodes, if out.complete { "" } else { ", budget exhausted" });
            }
            Ok(if out.complete { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Catalog { export } => {
            let cat = builtin_catalog();
            if let Some(dir) = export {
                export_all(dir, cat.iter().map(|e| &e.ring))?;
            }
            if json {
                let items: Vec<_> = cat
                    .iter()
                    .map(|e| json!({"name": e.name, "m": e.ring.m(), "n": e.ring.n(), "size": e.ring.size(), "kind": e.provenance, "note": e.note}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&items).expect("serializes"));
            } else {
                for e in &cat {
                    println!("{}\t({},{})\t{} elements\t{}", e.name, e.ring.m(), e.ring.n(), e.ring.size(), e.note);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load(arg: &str) -> Result<HyperRing, String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        return parse_document(&text).map(|d| d.ring).map_err(|e| format!("{arg}:{e}"));
    }
    by_name(arg).ok_or_else(|| format!("`{arg}` is neither a readable file nor a catalog name"))
}

fn parse_set(h: &HyperRing, list: &str) -> Result<ElementSet, String> {
    let inner = list.trim().trim_start_matches('{').trim_end_matches('}');
    let names: Vec<&str> = inner.split([',', ' ']).filter(|s| !s.is_empty()).collect();
    for n in &names {
        if h.elem_by_name(n).is_none() {
            return Err(format!("unknown element `{n}`"));
        }
    }
    h.set_from_names(&names).ok_or_else(|| format!("bad element list `{list}`"))
}

fn parse_ideal(h: &HyperRing, list: &str) -> Result<Hyperideal, String> {
    Hyperideal::new(h, parse_set(h, list)?).map_err(|e| e.to_string())
}

fn emit_structure(h: &HyperRing, json: bool) -> Outcome {
    if json {
        let v = json!({
            "schema_version": krasner::io::report::SCHEMA_VERSION,
            "structure": Report::new(h).structure,
            "f": h.f_cells().into_iter().map(|(k, v)| json!({"args": k, "value": v})).collect::<Vec<_>>(),
            "g": h.g_cells().into_iter().map(|(k, v)| json!({"args": k, "value": v})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        print!("{}", serialize_hyperring(h).map_err(|e| e.to_string())?);
    }
    Ok(ExitCode::SUCCESS)
}

fn export_all<'a>(dir: &Path, rings: impl Iterator<Item = &'a HyperRing>) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for h in rings {
        let text = serialize_hyperring(h).map_err(|e| e.to_string())?;
        let file: String = h.name().chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
        let path = dir.join(format!("{file}.khr"));
        fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn validate(h: &HyperRing, json: bool) -> Outcome {
    let report = validate_axioms(h);
    if json {
        println!("{}", Report::validation(h, &report).to_json());
    } else if report.passed() {
        println!("{}: all axioms hold", h.name());
    } else {
        for v in &report.violations {
            println!("{}", v.describe(h));
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn ideals(h: &HyperRing, json: bool) -> Outcome {
    let lat = Lattice::new(h);
    let tags = |i: ElementSet| {
        let mut t = vec![];
        if i == h.carrier() {
            t.push("whole");
        }
        if lat.primes.contains(&i) {
            t.push("prime");
        }
        if lat.maximals.contains(&i) {
            t.push("maximal");
        }
        if i == lat.nilradical {
            t.push("nilradical");
        }
        t.join(" ")
    };
    if json {
        let mut rep = Report::new(h);
        for &i in &lat.ideals {
            rep.push_value("hyperideal", h.format_set(i), true, tags(i));
        }
        rep.push_value("nilradical", h.name(), true, h.format_set(lat.nilradical));
        rep.push_value("jacobson", h.name(), true, h.format_set(lat.jacobson()));
        println!("{}", rep.to_json());
    } else {
        for &i in &lat.ideals {
            println!("{}\t{}", h.format_set(i), tags(i));
        }
        println!("nilradical\t{}", h.format_set(lat.nilradical));
        println!("jacobson\t{}", h.format_set(lat.jacobson()));
    }
    Ok(ExitCode::SUCCESS)
}

fn classify(h: &HyperRing, delta: Option<&str>, reading: ReadingArg, ideal: Option<&str>, json: bool) -> Outcome {
    if h.unit().is_none() {
        return Err(format!("{} has no scalar unit; classification needs one", h.name()));
    }
    let delta = match delta {
        None => None,
        Some(d) => Some(ExpansionFn::parse_standard(d).ok_or_else(|| format!("unknown expansion `{d}` (use d0, d1 or dH)"))?),
    };
    let only = ideal.map(|s| parse_ideal(h, s)).transpose()?;
    if only.is_some_and(|i| !i.is_proper(h)) {
        return Err("the hyperideal must be proper".into());
    }
    let rows: Vec<_> = classify_all(h)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|r| only.is_none_or(|i| i.members() == r.ideal))
        .collect();
    let readings = reading.readings();
    let base = delta.map_or("N".to_string(), |d| format!("{}-N", d.label()));
    let primary: Vec<String> = readings.iter().map(|r| format!("{base}/{r}")).collect();
    let keep = |kind: &str| match kind.rsplit_once('/') {
        Some((_, r)) => readings.iter().any(|x| x.as_str() == r),
        None => true,
    };
    let mut found = false;
    let mut rep = Report::new(h);
    for row in &rows {
        let subject = h.format_set(row.ideal);
        if !json {
            println!("{subject}");
        }
        for e in row.entries.iter().filter(|e| keep(&e.kind)) {
            let is_primary = primary.contains(&e.kind);
            found |= is_primary && e.verdict.holds;
            if json {
                rep.push_verdict(h, e.kind.clone(), subject.clone(), &e.verdict);
                continue;
            }
            let mark = if is_primary { "*" } else { " " };
            let text = match (&e.verdict.witness, e.verdict.s_element) {
                (Some(w), _) => format!("fails at {}", w.describe(h)),
                (None, Some(s)) => format!("holds (s = {})", h.elem_name(s)),
                (None, None) => "holds".into(),
            };
            println!(" {mark} {:<16} {text}", e.kind);
        }
    }
    if json {
        println!("{}", rep.to_json());
    } else {
        println!("{} for some ideal: {}", primary.join(", "), if found { "yes" } else { "no" });
    }
    Ok(if found { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify(theorem: Option<&str>, reading: ReadingArg, search_max: usize, table: bool, list: bool, json: bool) -> Outcome {
    if list {
        for t in REGISTRY {
            let tag = if t.core { "core" } else if t.report_only { "report" } else { "-" };
            println!("{}\t{tag}\t{}", t.id, t.statement);
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(id) = theorem {
        theorem_info(id).ok_or_else(|| format!("unknown statement id `{id}` (see `verify --list`)"))?;
    }
    let scope = default_scope(search_max);
    let readings = reading.readings();
    let reports = match theorem {
        Some(id) => readings
            .iter()
            .map(|&r| verify_theorem(id, &scope, r).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?,
        None => run_suite(&scope, &readings).reports,
    };
    let failed = reports
        .iter()
        .any(|r| r.status == Status::Fail && !theorem_info(&r.id).is_some_and(|t| t.report_only));
    if json {
        let mut v = json!({"scope": scope.iter().map(|e| &e.name).collect::<Vec<_>>(), "reports": reports});
        if table {
            let s = run_suite(&scope, &readings);
            v["theorem_table"] = json!(s.theorem_table);
            v["example_table"] = json!(s.example_table);
        }
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        println!("scope: {} structures", scope.len());
        for r in &reports {
            println!(
                "{}\t{}\t{}\t{} instances\t{} skipped\t{} violations",
                r.id,
                r.reading,
                r.status.as_str(),
                r.instances,
                r.skipped,
                r.violations.len()
            );
            if let Some(v) = r.violations.first() {
                println!("  first: [{}] {}", v.structures.join(", "), v.detail);
            }
        }
        if table {
            println!();
            print!("{}", render_discrepancies(&run_suite(&scope, &Reading::BOTH)));
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
