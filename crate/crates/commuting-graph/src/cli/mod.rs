//! Command-line driver: group analysis, the diameter table, pairwise
//! distances, and corpus-wide verification.

pub mod catalog;
pub mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{
    self, Analysis, AnalysisError, CheckStatus, LemmaVerdict, NormalSubgroup,
};
use crate::commgraph::{AdjacencyMode, Distance, Engine};
use crate::group::DEFAULT_ELEMENT_CAP;
use crate::perm::Permutation;
use catalog::{CatalogGroup, GroupMeta};

#[derive(Parser)]
#[command(
    name = "commgraph",
    about = "Commuting graphs and prime graphs of finite permutation groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group: components, diameters, prime graph, checks.
    Analyze {
        /// Catalog name (e.g. "sym(6)", "m11") or path to a generator file.
        spec: String,
        /// Write the machine-readable report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Distance engine; defaults to the reduced engine for groups with
        /// trivial centre and plain BFS otherwise.
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
    },
    /// Recompute the maximum component diameters of the nine table groups
    /// and compare with the expected values.
    Table,
    /// Distance between two non-central group elements in the commuting
    /// graph.
    Distance {
        spec: String,
        perm1: String,
        perm2: String,
    },
    /// Run every applicable check on every corpus group.
    VerifyAll {
        /// File with one group spec per line (# starts a comment);
        /// defaults to the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Full,
    Reduced,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Full => Engine::Full,
            EngineArg::Reduced => Engine::Reduced,
        }
    }
}

/// Enumeration cap, overridable through `COMMGRAPH_ELEMENT_CAP`.
fn element_cap() -> Result<usize, String> {
    match std::env::var("COMMGRAPH_ELEMENT_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| format!("COMMGRAPH_ELEMENT_CAP: '{v}' is not a valid cap")),
        Err(_) => Ok(DEFAULT_ELEMENT_CAP),
    }
}

fn parse_meta_perms(degree: usize, texts: &[String]) -> Vec<Permutation> {
    texts
        .iter()
        .map(|s| {
            Permutation::parse_cycles(s, degree)
                .expect("catalog subgroup generators are well-formed")
        })
        .collect()
}

fn combine(lemma: &'static str, group: &str, verdicts: Vec<LemmaVerdict>) -> LemmaVerdict {
    let mut saw_pass = false;
    for v in verdicts {
        match v.status {
            CheckStatus::Fail => return v,
            CheckStatus::Pass => saw_pass = true,
            CheckStatus::NotApplicable => {}
        }
    }
    LemmaVerdict {
        lemma,
        group: group.to_string(),
        status: if saw_pass {
            CheckStatus::Pass
        } else {
            CheckStatus::NotApplicable
        },
        witness: None,
    }
}

/// Runs the full battery of checks for one analyzed group.
pub fn run_all_checks(a: &Analysis, meta: &GroupMeta) -> Vec<LemmaVerdict> {
    let mut out = vec![
        analysis::check_diameter_bound(a),
        analysis::check_bijection(a),
        analysis::check_class_component_normality(a),
        analysis::check_involution_bound(a),
        analysis::check_isolated_components(a),
        analysis::check_strongly_embedded(a),
        analysis::check_odd_components_are_cliques(a, meta.soluble == Some(false)),
    ];

    let degree = a.table.degree();
    let mut outside4 = Vec::new();
    let mut outside3 = Vec::new();
    for (name, gens) in &meta.normal_subgroups {
        let perms = parse_meta_perms(degree, gens);
        match NormalSubgroup::resolve(&a.table, name, &perms) {
            Ok(k) => {
                outside4.push(analysis::check_outside_distance4(a, &k));
                outside3.push(analysis::check_outside_distance3(a, &k));
            }
            Err(e) => {
                let witness = format!("normal subgroup {name}: {e}");
                outside4.push(LemmaVerdict {
                    lemma: "outside_distance_le_4",
                    group: a.name.clone(),
                    status: CheckStatus::Fail,
                    witness: Some(witness.clone()),
                });
                outside3.push(LemmaVerdict {
                    lemma: "outside_distance_le_3",
                    group: a.name.clone(),
                    status: CheckStatus::Fail,
                    witness: Some(witness),
                });
            }
        }
    }
    out.push(combine("outside_distance_le_4", &a.name, outside4));
    out.push(combine("outside_distance_le_3", &a.name, outside3));

    match &meta.frobenius {
        Some(fx) => {
            let kernel = parse_meta_perms(degree, &fx.kernel);
            let complement: Option<Vec<Permutation>> = fx
                .complement
                .as_ref()
                .map(|c| parse_meta_perms(degree, c));
            out.push(analysis::check_frobenius_fixture(
                a,
                &kernel,
                complement.as_deref(),
                fx.expected,
            ));
        }
        None => out.push(LemmaVerdict {
            lemma: "frobenius_centralizer_criterion",
            group: a.name.clone(),
            status: CheckStatus::NotApplicable,
            witness: None,
        }),
    }
    out
}

struct GroupRun {
    analysis: Analysis,
    verdicts: Vec<LemmaVerdict>,
    timing_ms: u128,
}

fn analyze_group(
    cg: &CatalogGroup,
    engine: Option<Engine>,
    cap: usize,
) -> Result<GroupRun, AnalysisError> {
    let started = Instant::now();
    let analysis = Analysis::run(&cg.group, &cg.name, engine, cap, AdjacencyMode::Auto)?;
    if let Some(flag) = cg.meta.trivial_centre {
        assert_eq!(
            analysis.trivial_centre(),
            flag,
            "catalog centre flag disagrees for {}",
            cg.name
        );
    }
    let verdicts = run_all_checks(&analysis, &cg.meta);
    Ok(GroupRun {
        analysis,
        verdicts,
        timing_ms: started.elapsed().as_millis(),
    })
}

fn print_human_summary(run: &GroupRun) {
    let a = &run.analysis;
    println!(
        "group {}: order {}, degree {}, centre {}, engine {}",
        a.name,
        a.order,
        a.table.degree(),
        a.centre.len(),
        match a.engine {
            Engine::Full => "full",
            Engine::Reduced => "reduced",
        }
    );
    println!(
        "vertices {}, components {} in {} classes",
        a.graph.vertex_count(),
        a.graph.component_count(),
        a.component_orbits.orbits.len()
    );
    let pg = &a.prime_graph;
    println!(
        "prime graph: primes {:?}, edges {:?}, components {:?}",
        pg.primes(),
        pg.edges(),
        pg.components()
    );
    println!("component classes:");
    for (i, orbit) in a.component_orbits.orbits.iter().enumerate() {
        let s = &a.summaries[orbit[0] as usize];
        println!(
            "  class {i}: {} x (elements {}, vertices {}, diameter {}, primes {:?}, subgroup {})",
            orbit.len(),
            s.element_count,
            s.vertex_count,
            s.diameter,
            s.primes,
            if s.is_subgroup_with_identity { "yes" } else { "no" }
        );
    }
    println!("checks:");
    for v in &run.verdicts {
        match &v.witness {
            Some(w) => println!("  {:34} {}  [{}]", v.lemma, v.status.as_str(), w),
            None => println!("  {:34} {}", v.lemma, v.status.as_str()),
        }
    }
    println!(
        "max component diameter: {}  ({} ms)",
        a.max_component_diameter(),
        run.timing_ms
    );
}

fn cmd_analyze(
    spec: &str,
    json: Option<&PathBuf>,
    engine: Option<Engine>,
) -> Result<ExitCode, String> {
    let cap = element_cap()?;
    let cg = catalog::resolve_spec(spec).map_err(|e| e.to_string())?;
    let run = analyze_group(&cg, engine, cap).map_err(|e| e.to_string())?;
    print_human_summary(&run);
    if let Some(path) = json {
        let report = report::build_report(&run.analysis, &run.verdicts, run.timing_ms);
        let text = serde_json::to_string_pretty(&report).expect("reports serialize");
        std::fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}"))?;
        println!("report written to {}", path.display());
    }
    let ok = report::no_failures(&run.verdicts) && run.analysis.max_component_diameter() <= 10;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// The nine table groups with their expected maximum component diameters.
pub const DIAMETER_TABLE: [(&str, &str, u32); 9] = [
    ("alt(5)", "Alt(5)", 1),
    ("sym(5)", "Sym(5)", 5),
    ("alt(6)", "Alt(6)", 6),
    ("sym(6)", "Sym(6)", 4),
    ("m10", "M10", 6),
    ("pgl2(9)", "PGL2(9)", 5),
    ("aut(alt(6))", "Aut(Alt(6))", 4),
    ("alt(7)", "Alt(7)", 5),
    ("sym(7)", "Sym(7)", 5),
];

fn cmd_table() -> Result<ExitCode, String> {
    let cap = element_cap()?;
    let mut matches = 0;
    println!("{:<14} {:>8} {:>8}", "group", "computed", "expected");
    for (spec, display, expected) in DIAMETER_TABLE {
        let cg = catalog::resolve_spec(spec).map_err(|e| e.to_string())?;
        let analysis = Analysis::run(&cg.group, &cg.name, None, cap, AdjacencyMode::Auto)
            .map_err(|e| e.to_string())?;
        let computed = analysis.max_component_diameter();
        let ok = computed == expected;
        if ok {
            matches += 1;
        }
        println!(
            "{display:<14} {computed:>8} {expected:>8}  {}",
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    println!("{matches}/9 rows match");
    Ok(if matches == 9 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_distance(spec: &str, perm1: &str, perm2: &str) -> Result<ExitCode, String> {
    let cap = element_cap()?;
    let cg = catalog::resolve_spec(spec).map_err(|e| e.to_string())?;
    let degree = cg.group.degree();
    let p1 = Permutation::parse_cycles(perm1, degree).map_err(|e| e.to_string())?;
    let p2 = Permutation::parse_cycles(perm2, degree).map_err(|e| e.to_string())?;
    for p in [&p1, &p2] {
        if !cg.group.contains(p) {
            return Err(format!("{} is not an element of {}", p.cycle_string(), cg.name));
        }
    }
    let table = cg.group.enumerate(cap).map_err(|e| e.to_string())?;
    let centre = table.center();
    let graph = crate::commgraph::CommGraph::build(&table, &centre, AdjacencyMode::Auto);
    let x = table.id_of(&p1).expect("membership was checked");
    let y = table.id_of(&p2).expect("membership was checked");
    match graph.element_distance(x, y).map_err(|e| e.to_string())? {
        Distance::Finite(d) => println!("{d}"),
        Distance::Disconnected => println!("disconnected"),
    }
    Ok(ExitCode::SUCCESS)
}

fn corpus_specs(corpus: Option<&PathBuf>) -> Result<Vec<String>, String> {
    match corpus {
        None => Ok(catalog::default_corpus()
            .into_iter()
            .map(|s| s.to_string())
            .collect()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Ok(text
                .lines()
                .map(|l| l.trim())
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| l.to_string())
                .collect())
        }
    }
}

fn cmd_verify_all(corpus: Option<&PathBuf>) -> Result<ExitCode, String> {
    let cap = element_cap()?;
    let specs = corpus_specs(corpus)?;
    let mut failures = 0usize;
    let started = Instant::now();
    println!(
        "{:<14} {:>8} {:>4} {:>6} {:>7} {:>8}  checks",
        "group", "order", "|Z|", "comps", "classes", "max diam"
    );
    for spec in &specs {
        let cg = catalog::resolve_spec(spec).map_err(|e| e.to_string())?;
        let run = analyze_group(&cg, None, cap).map_err(|e| format!("{spec}: {e}"))?;
        let a = &run.analysis;
        let fails: Vec<&LemmaVerdict> = run
            .verdicts
            .iter()
            .filter(|v| v.status == CheckStatus::Fail)
            .collect();
        let passes = run
            .verdicts
            .iter()
            .filter(|v| v.status == CheckStatus::Pass)
            .count();
        let nas = run
            .verdicts
            .iter()
            .filter(|v| v.status == CheckStatus::NotApplicable)
            .count();
        println!(
            "{:<14} {:>8} {:>4} {:>6} {:>7} {:>8}  {} pass, {} n/a, {} fail",
            a.name,
            a.order,
            a.centre.len(),
            a.graph.component_count(),
            a.component_orbits.orbits.len(),
            a.max_component_diameter(),
            passes,
            nas,
            fails.len()
        );
        for f in &fails {
            println!("    FAIL {}: {}", f.lemma, f.witness.as_deref().unwrap_or(""));
        }
        failures += fails.len();
    }
    println!(
        "{} groups checked in {:.1} s, {failures} failing checks",
        specs.len(),
        started.elapsed().as_secs_f64()
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Entry point used by the `commgraph` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { spec, json, engine } => {
            cmd_analyze(spec, json.as_ref(), engine.map(Engine::from))
        }
        Command::Table => cmd_table(),
        Command::Distance { spec, perm1, perm2 } => cmd_distance(spec, perm1, perm2),
        Command::VerifyAll { corpus } => cmd_verify_all(corpus.as_ref()),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
