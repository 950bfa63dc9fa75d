mod source;
mod verify;

use clap::{Args, Parser, Subcommand};
use hochcalc_core::analysis::{AnyAlgebra, Registry};
use hochcalc_core::catalog;
use hochcalc_core::engine::BuildOptions;
use hochcalc_core::hochschild::ResolutionTerm;
use serde_json::{json, Value};
use source::{parse_field, parse_params, Failure, Loaded};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "hochcalc", version, about = "Hochschild cohomology of bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// A `.qa` file or a catalog name.
    source: Option<String>,
    #[arg(long, value_name = "NAME", conflicts_with = "source")]
    catalog: Option<String>,
    /// Q, GF(p) or GF(p^k)[:modulus].
    #[arg(long)]
    field: Option<String>,
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Degree cap for completion; overrides HOCHCALC_GB_CAP.
    #[arg(long)]
    gb_cap: Option<usize>,
}

impl SourceArgs {
    fn load(&self) -> Result<Loaded, Failure> {
        let field = parse_field(self.field.as_deref())?;
        let params = parse_params(&self.params)?;
        match (&self.catalog, &self.source) {
            (Some(name), _) => source::from_catalog(name, field, &params),
            (None, Some(s)) => source::resolve(s, field, &params),
            (None, None) => Err(Failure::Parse("expected a file or --catalog NAME".into())),
        }
    }

    fn options(&self) -> BuildOptions {
        match self.gb_cap {
            Some(degree_cap) => BuildOptions { degree_cap },
            None => BuildOptions::default(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, Cartan matrix, centre, Nakayama permutation, symmetry.
    Info {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of HH⁰, HH¹, HH².
    Hh {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, default_value = "resolution")]
        method: String,
        /// Cross-check against the bar complex.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// HH dimensions of two algebras side by side.
    Compare {
        a: String,
        b: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check catalog entries against their expectations.
    Verify {
        names: Vec<String>,
        #[arg(long, conflicts_with = "names")]
        all: bool,
        /// Expectations table to check against instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        expectations: Option<PathBuf>,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Terms of the minimal bimodule resolution.
    Resolution {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, default_value_t = 4)]
        terms: usize,
        /// Largest admissible dim ℙ_n.
        #[arg(long, default_value_t = 2_000_000)]
        memory_guard: usize,
        #[arg(long)]
        json: bool,
    },
    /// Built-in presentations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Registered cohomology methods.
    Methods,
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
    /// Write every presentation and the expectations table to DIR.
    Export { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Info { src, json } => info(&src, json),
        Command::Hh {
            src,
            method,
            oracle,
            json,
        } => hh(&src, &method, oracle, json),
        Command::Compare { a, b, field, json } => compare(&a, &b, field.as_deref(), json),
        Command::Verify {
            names,
            all,
            expectations,
            oracle,
            json,
        } => verify_cmd(&names, all, expectations, oracle, json),
        Command::Resolution {
            src,
            terms,
            memory_guard,
            json,
        } => resolution(&src, terms, memory_guard, json),
        Command::Catalog { action } => catalog_cmd(action),
        Command::Methods => {
            let registry = Registry::with_builtins();
            for name in registry.names() {
                let m = registry.get(name).map_err(|e| Failure::Build(e.to_string()))?;
                println!("{name:<12} {}", m.description());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn params_json(l: &Loaded) -> Value {
    json!(l.params)
}

fn params_text(l: &Loaded) -> String {
    if l.params.is_empty() {
        return "-".into();
    }
    l.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

fn matrix_text(m: &[Vec<usize>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

fn base_report(l: &Loaded, alg: &AnyAlgebra) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("algebra".into(), json!(l.name));
    m.insert("field".into(), json!(l.field.to_string()));
    m.insert("params".into(), params_json(l));
    m.insert("dim".into(), json!(alg.dim()));
    m.insert("cartan".into(), json!(alg.cartan()));
    m.insert("center_dim".into(), json!(alg.center_dim()));
    m.insert("hh".into(), Value::Null);
    m.insert("intermediates".into(), Value::Null);
    m.insert("oracle".into(), Value::Null);
    m
}

fn info(src: &SourceArgs, as_json: bool) -> Result<ExitCode, Failure> {
    let start = Instant::now();
    let loaded = src.load()?;
    let alg = loaded.build(src.options())?;
    let labels = &alg.presentation().quiver.vertices;
    let nakayama = alg.nakayama();
    let symmetric = alg.symmetric(0);
    let cert = alg.certificate();
    if as_json {
        let mut m = base_report(&loaded, &alg);
        m.insert(
            "nakayama".into(),
            match &nakayama {
                Ok(p) => json!(p.iter().map(|&j| labels[j].clone()).collect::<Vec<_>>()),
                Err(e) => json!({ "unavailable": e }),
            },
        );
        m.insert("symmetric".into(), json!(symmetric));
        m.insert("radical_series".into(), json!(alg.radical_series()));
        m.insert(
            "certificate".into(),
            json!({
                "rules": cert.rules,
                "overlaps_resolved": cert.completion.overlaps_resolved,
                "triples_checked": cert.triples_checked,
                "resolution_ideal_checked": cert.resolution_ideal_checked,
            }),
        );
        m.insert("timing_ms".into(), json!(start.elapsed().as_millis()));
        println!("{}", Value::Object(m));
        return Ok(ExitCode::SUCCESS);
    }
    println!("algebra     {}", loaded.name);
    println!("field       {}", loaded.field);
    println!("params      {}", params_text(&loaded));
    println!("dim         {}", alg.dim());
    println!("cartan      {}", matrix_text(&alg.cartan()));
    println!("centre      {}", alg.center_dim());
    match &nakayama {
        Ok(p) if p.iter().enumerate().all(|(i, &j)| i == j) => println!("nakayama    identity"),
        Ok(p) => {
            let moves: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(i, j)| i != *j)
                .map(|(i, &j)| format!("{}->{}", labels[i], labels[j]))
                .collect();
            println!("nakayama    {}", moves.join(" "));
        }
        Err(e) => println!("nakayama    not self-injective ({e:?})"),
    }
    println!(
        "symmetric   {:?} (trace forms {}, candidates {})",
        symmetric.verdict, symmetric.trace_space_dim, symmetric.candidates_tried
    );
    println!("radical     {:?}", alg.radical_series());
    println!(
        "certified   {} rules, {} overlaps, {} triples{}",
        cert.rules,
        cert.completion.overlaps_resolved,
        cert.triples_checked,
        if cert.resolution_ideal_checked { ", resolution ideal checked" } else { "" }
    );
    Ok(ExitCode::SUCCESS)
}

fn triple_text(hh: &[Option<usize>; 3]) -> String {
    let s: Vec<String> = hh.iter().map(|x| x.map_or("-".into(), |v| v.to_string())).collect();
    format!("({})", s.join(", "))
}

fn hh(src: &SourceArgs, method: &str, oracle: bool, as_json: bool) -> Result<ExitCode, Failure> {
    let start = Instant::now();
    let registry = Registry::with_builtins();
    let primary = registry.get(method).map_err(|e| Failure::Parse(e.to_string()))?;
    let loaded = src.load()?;
    let alg = loaded.build(src.options())?;
    let out = primary.compute(&alg)?;
    let check = if oracle && out.oracle.is_none() {
        Some(registry.get("bar")?.compute(&alg)?)
    } else if oracle {
        Some(registry.get("resolution")?.compute(&alg)?)
    } else {
        None
    };
    let disagreement = check.as_ref().is_some_and(|c| {
        c.hh.iter()
            .zip(&out.hh)
            .any(|(x, y)| matches!((x, y), (Some(x), Some(y)) if x != y))
    });
    let oracle_report = out.oracle.clone().or_else(|| check.as_ref().and_then(|c| c.oracle.clone()));
    let intermediates = out.intermediates.clone().or_else(|| check.as_ref().and_then(|c| c.intermediates.clone()));
    if as_json {
        let mut m = base_report(&loaded, &alg);
        m.insert("hh".into(), json!(out.hh));
        m.insert("method".into(), json!(method));
        m.insert("intermediates".into(), json!(intermediates));
        m.insert(
            "oracle".into(),
            match &oracle_report {
                Some(r) => json!({ "agrees": !disagreement, "report": r }),
                None => Value::Null,
            },
        );
        m.insert("timing_ms".into(), json!(start.elapsed().as_millis()));
        println!("{}", Value::Object(m));
    } else {
        println!("{} over {} [{}]", loaded.name, loaded.field, params_text(&loaded));
        println!("HH dims  {}  via {method}", triple_text(&out.hh));
        if let Some(i) = &intermediates {
            println!(
                "Hom(P0,A) {}  Hom(P1,A) {}  Hom(P2,A) {}  ker d0 {}  ker d1 {}  Hom(Omega2,A) {}",
                i.hom_p0, i.hom_p1, i.hom_p2, i.ker_delta0, i.ker_delta1, i.hom_omega2
            );
        }
        if let Some(c) = &check {
            let verdict = if disagreement { "DISAGREES" } else { "agrees" };
            println!("oracle   {}  {verdict}", triple_text(&c.hh));
        }
        if let Some(r) = &oracle_report {
            println!("bar cochain dims {:?}", r.cochain_dims);
        }
    }
    if disagreement {
        return Err(Failure::Oracle(format!("{}: bar complex disagrees with {method}", loaded.name)));
    }
    Ok(ExitCode::SUCCESS)
}

fn compare(a: &str, b: &str, field: Option<&str>, as_json: bool) -> Result<ExitCode, Failure> {
    let field = parse_field(field)?;
    let side = |s: &str| -> Result<(Loaded, [usize; 3]), Failure> {
        let loaded = source::resolve(s, field.clone(), &Default::default())?;
        let alg = loaded.build(BuildOptions::default())?;
        let (hh, _) = alg.hh().map_err(|e| Failure::Build(e.to_string()))?;
        Ok((loaded, [hh.h0, hh.h1, hh.h2]))
    };
    let (ra, rb) = (side(a), side(b));
    let (la, ta, lb, tb) = match (ra, rb) {
        (Ok((la, ta)), Ok((lb, tb))) => (la, ta, lb, tb),
        (ra, rb) => {
            let mut worst = None;
            for (name, r) in [(a, ra), (b, rb)] {
                match r {
                    Ok(_) => eprintln!("{name}: ok"),
                    Err(f) => {
                        eprintln!("{name}: {}", f.message());
                        worst.get_or_insert(f);
                    }
                }
            }
            return Err(worst.expect("one side failed"));
        }
    };
    let marker = |x: usize, y: usize| match x.cmp(&y) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    if as_json {
        let rows: Vec<Value> = (0..3)
            .map(|k| json!({ "degree": k, "a": ta[k], "b": tb[k], "relation": marker(ta[k], tb[k]) }))
            .collect();
        let v = json!({
            "a": { "algebra": la.name, "field": la.field.to_string(), "params": params_json(&la), "hh": ta },
            "b": { "algebra": lb.name, "field": lb.field.to_string(), "params": params_json(&lb), "hh": tb },
            "comparison": rows,
        });
        println!("{v}");
    } else {
        println!("{:<6} {:>10} {:>3} {:<10}", "", la.name, "", lb.name);
        println!("{:<6} {:>10} {:>3} {:<10}", "field", la.field.to_string(), "", lb.field.to_string());
        for k in 0..3 {
            println!("{:<6} {:>10} {:>3} {:<10}", format!("HH^{k}"), ta[k], marker(ta[k], tb[k]), tb[k]);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(names: &[String], all: bool, expectations: Option<PathBuf>, oracle: bool, as_json: bool) -> Result<ExitCode, Failure> {
    if !all && names.is_empty() {
        return Err(Failure::Parse("verify needs entry names or --all".into()));
    }
    let table = match expectations {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?
        }
        None => catalog::expectations_json(),
    };
    let start = Instant::now();
    let rows = verify::run(names, &table, oracle)?;
    let failed = rows.iter().filter(|r| !r.passed()).count();
    if as_json {
        let v = json!({
            "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "passed": rows.len() - failed,
            "failed": failed,
            "timing_ms": start.elapsed().as_millis(),
        });
        println!("{v}");
    } else {
        for r in &rows {
            let hh = r.computed.map_or("-".into(), |t| triple_text(&t.map(Some)));
            let status = if r.passed() { "pass" } else { "FAIL" };
            println!("{status}  {:<10} {:<8} {hh}", r.entry, r.field);
            for p in &r.problems {
                println!("      {p}");
            }
        }
        println!("{} of {} passed", rows.len() - failed, rows.len());
    }
    let disagreeing: Vec<&str> = rows.iter().filter(|r| r.oracle_disagrees).map(|r| r.entry).collect();
    if !disagreeing.is_empty() {
        return Err(Failure::Oracle(format!("bar complex disagrees on {}", disagreeing.join(", "))));
    }
    if failed > 0 {
        let names: Vec<String> = rows.iter().filter(|r| !r.passed()).map(|r| format!("{}@{}", r.entry, r.field)).collect();
        return Err(Failure::Mismatch(format!("{failed} mismatched: {}", names.join(", "))));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_terms(terms: &[ResolutionTerm]) {
    println!("{:>3} {:>10} {:>10}  top", "n", "dim P_n", "dim Omega^n");
    for t in terms {
        let top: Vec<String> = t.top.iter().map(|((i, j), m)| format!("{m}x({i},{j})")).collect();
        println!("{:>3} {:>10} {:>10}  {}", t.degree, t.dim_p, t.dim_omega, top.join(" "));
    }
}

fn resolution(src: &SourceArgs, terms: usize, memory_guard: usize, as_json: bool) -> Result<ExitCode, Failure> {
    let loaded = src.load()?;
    let alg = loaded.build(src.options())?;
    let (done, stopped) = match alg.resolution(terms, memory_guard) {
        Ok(t) => (t, None),
        Err(s) => (s.completed, Some(s.reason)),
    };
    if as_json {
        let v = json!({
            "algebra": loaded.name,
            "field": loaded.field.to_string(),
            "params": params_json(&loaded),
            "dim": alg.dim(),
            "terms": done,
            "stopped": stopped.as_ref().map(|r| r.to_string()),
        });
        println!("{v}");
    } else {
        println!("{} over {} [{}], dim {}", loaded.name, loaded.field, params_text(&loaded), alg.dim());
        print_terms(&done);
    }
    match stopped {
        Some(reason) => Err(Failure::Build(format!("resolution stopped: {reason}"))),
        None => Ok(ExitCode::SUCCESS),
    }
}

fn catalog_cmd(action: CatalogAction) -> Result<ExitCode, Failure> {
    match action {
        CatalogAction::List => {
            for e in catalog::ENTRIES {
                let kind = if e.standard { "standard" } else { "non-standard" };
                println!("{:<10} {:<13} {}", e.name, kind, e.designated.join(" "));
            }
        }
        CatalogAction::Show { name } => {
            let e = catalog::get(&name).map_err(|e| Failure::Parse(e.to_string()))?;
            print!("{}", e.source);
        }
        CatalogAction::Export { dir } => {
            let io = |e: std::io::Error| Failure::Build(format!("{}: {e}", dir.display()));
            std::fs::create_dir_all(&dir).map_err(io)?;
            for (file, text) in catalog::export_files() {
                std::fs::write(dir.join(&file), text).map_err(io)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
