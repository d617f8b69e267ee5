use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use etastar::corpus::{builtin, BUILTIN_NAMES};
use etastar::error::Result;
use etastar::eta::{eta_star, eta_star_bruteforce, eta_star_root, Root};
use etastar::green::{principal_series, FactorKind};
use etastar::io::{
    emit_cayley, incidence_dot, load_file, load_text, nonnilpotent_dot, LoadedSemigroup,
};
use etastar::pseudo::{containment_audit, membership, Pseudovariety};
use etastar::rees::{incidence_graph, is_cs_diagonal, rees_coordinates};
use etastar::report::full_report;
use etastar::repr::{min_nonnilpotent_representation, orbit_notation_numeric, upper_nonnilpotent_graph};

#[derive(Parser)]
#[command(
    name = "etastar",
    about = "Finite semigroup analysis: nilpotency congruences, principal series, Rees coordinates, pseudovarieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Incidence,
    Nonnilpotent,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a Cayley or Rees file
    Validate { file: String },
    /// Full JSON report: order, Green counts, series, eta-star, roots, memberships
    Analyze { file: String },
    /// Classes and quotient of the smallest congruence with nilpotent quotient
    EtaStar {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Principal series: chain sizes and factor kinds as JSON
    Series { file: String },
    /// Per-factor root of the induced class structure as JSON
    Roots { file: String },
    /// Rees coordinates of each completely (0-)simple principal factor
    Rees { file: String },
    /// Pseudovariety membership with class and witness
    Check {
        file: String,
        #[arg(long)]
        pseudovariety: String,
    },
    /// Incidence or non-nilpotency graphs
    Graph {
        file: String,
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        dot: bool,
    },
    /// Orbit notation of the minimal representation for one factor
    Gamma {
        file: String,
        #[arg(long)]
        factor: usize,
    },
    /// Cross-check the congruence against brute-force enumeration
    Oracle { file: String },
    /// Containment audit over a directory of Cayley/Rees files
    Audit { dir: PathBuf },
    /// Emit a builtin semigroup as a Cayley file
    Example { name: String },
}

fn load(file: &str) -> Result<LoadedSemigroup> {
    if file == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        load_text(&text, None)
    } else {
        load_file(Path::new(file))
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate { file } => {
            let loaded = load(&file)?;
            println!("ok: {} (order {})", loaded.name, loaded.semigroup.order());
        }
        Command::Analyze { file } => {
            let loaded = load(&file)?;
            let report = full_report(&loaded.name, &loaded.semigroup)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::EtaStar { file, json } => {
            let loaded = load(&file)?;
            let s = &loaded.semigroup;
            let eta = eta_star(s);
            let classes: Vec<Vec<String>> = eta
                .congruence
                .partition
                .classes()
                .iter()
                .map(|c| c.iter().map(|&x| s.label(x)).collect())
                .collect();
            if json {
                let q = &eta.quotient;
                let table: Vec<Vec<usize>> = (0..q.order())
                    .map(|i| (0..q.order()).map(|j| q.prod(i, j)).collect())
                    .collect();
                let value = serde_json::json!({
                    "class_count": eta.class_count,
                    "classes": classes,
                    "quotient_order": q.order(),
                    "quotient_table": table,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("classes: {}", eta.class_count);
                for c in &classes {
                    println!("  {{{}}}", c.join(", "));
                }
                println!("quotient order: {}", eta.quotient.order());
            }
        }
        Command::Series { file } => {
            let loaded = load(&file)?;
            let series = principal_series(&loaded.semigroup);
            let steps: Vec<serde_json::Value> = series
                .factors
                .iter()
                .zip(&series.ideals)
                .map(|(f, ideal)| {
                    serde_json::json!({
                        "ideal_size": ideal.len(),
                        "factor_size": f.jclass.len(),
                        "kind": f.kind,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&steps)?);
        }
        Command::Roots { file } => {
            let loaded = load(&file)?;
            let s = &loaded.semigroup;
            let series = principal_series(s);
            let eta = eta_star(s);
            let mut entries = Vec::new();
            for p in 0..series.factors.len() {
                let root = if series.factors[p].kind == FactorKind::Null {
                    serde_json::Value::Null
                } else {
                    match eta_star_root(s, &series, p, &eta)?.root {
                        Root::Theta => serde_json::json!("theta"),
                        Root::Factor {
                            index,
                            phi_map,
                            phi_prime_map,
                        } => serde_json::json!({
                            "factor": index,
                            "phi": phi_map,
                            "phi_prime": phi_prime_map,
                        }),
                    }
                };
                entries.push(serde_json::json!({ "factor": p, "root": root }));
            }
            println!("{}", serde_json::to_string_pretty(&entries)?);
        }
        Command::Rees { file } => {
            let loaded = load(&file)?;
            let series = principal_series(&loaded.semigroup);
            let mut entries = Vec::new();
            for (p, f) in series.factors.iter().enumerate() {
                if f.kind == FactorKind::Null {
                    continue;
                }
                let coords = rees_coordinates(f)?;
                let r = &coords.structure;
                let sandwich: Vec<Vec<serde_json::Value>> = (0..r.m)
                    .map(|j| {
                        (0..r.n)
                            .map(|i| match r.p(j, i) {
                                Some(g) => serde_json::json!(g),
                                None => serde_json::Value::Null,
                            })
                            .collect()
                    })
                    .collect();
                entries.push(serde_json::json!({
                    "factor": p,
                    "group_order": r.group.order(),
                    "rows": r.m,
                    "cols": r.n,
                    "sandwich": sandwich,
                    "has_zero": r.effective_zero(),
                    "cs_diagonal": is_cs_diagonal(r),
                }));
            }
            println!("{}", serde_json::to_string_pretty(&entries)?);
        }
        Command::Check {
            file,
            pseudovariety,
        } => {
            let loaded = load(&file)?;
            let which = Pseudovariety::parse(&pseudovariety)?;
            let rep = membership(&loaded.semigroup, which);
            let value = serde_json::json!({
                "pseudovariety": which.to_string(),
                "verdict": rep.verdict,
                "class": rep.class_n,
                "witness": rep.witness,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Command::Graph { file, kind, dot } => {
            let loaded = load(&file)?;
            let s = &loaded.semigroup;
            match kind {
                GraphKind::Incidence => {
                    let series = principal_series(s);
                    for (p, f) in series.factors.iter().enumerate() {
                        if f.kind == FactorKind::Null {
                            continue;
                        }
                        let coords = rees_coordinates(f)?;
                        let g = incidence_graph(&coords.structure);
                        if dot {
                            print!("{}", incidence_dot(&format!("{}_{p}", loaded.name), &g));
                        } else {
                            println!(
                                "factor {p}: {} cols, {} rows, edges {:?}",
                                g.n_cols, g.n_rows, g.edges
                            );
                        }
                    }
                }
                GraphKind::Nonnilpotent => {
                    let g = upper_nonnilpotent_graph(s);
                    if dot {
                        print!("{}", nonnilpotent_dot(&loaded.name, s, &g));
                    } else {
                        println!("vertices {}, edges {:?}", s.order(), g.edges);
                    }
                }
            }
        }
        Command::Gamma { file, factor } => {
            let loaded = load(&file)?;
            let s = &loaded.semigroup;
            let series = principal_series(s);
            if factor >= series.factors.len() {
                return Err(etastar::Error::Invalid(format!(
                    "factor index {factor} out of range (series has {} steps)",
                    series.factors.len()
                )));
            }
            let gamma = min_nonnilpotent_representation(s, &series, factor)?;
            for x in s.elements() {
                println!("{}: {}", s.label(x), orbit_notation_numeric(&gamma.maps[x]));
            }
        }
        Command::Oracle { file } => {
            let loaded = load(&file)?;
            let s = &loaded.semigroup;
            let fast = eta_star(s);
            let brute = eta_star_bruteforce(s)?;
            if fast.congruence.partition == brute.partition {
                println!("match: {} classes", fast.class_count);
            } else {
                return Err(etastar::Error::TheoremViolation(format!(
                    "mismatch: fast {} classes, brute-force {}",
                    fast.class_count,
                    brute.class_count()
                )));
            }
        }
        Command::Audit { dir } => {
            let mut corpus = Vec::new();
            let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            paths.sort();
            for path in paths {
                let loaded = load_file(&path)?;
                corpus.push((loaded.name, loaded.semigroup));
            }
            let report = containment_audit(&corpus);
            for v in &report.violations {
                eprintln!("violation: {v}");
            }
            for (a, b, name) in &report.strictness {
                println!("strict: {a} vs {b} witnessed by {name}");
            }
            for (a, b) in &report.missing_witnesses {
                println!("no strictness witness in corpus for {a} vs {b}");
            }
            if !report.violations.is_empty() {
                return Err(etastar::Error::TheoremViolation(
                    "containment violations found".into(),
                ));
            }
            println!("audit ok: {} semigroups", corpus.len());
        }
        Command::Example { name } => {
            let s = builtin(&name).map_err(|e| match e {
                etastar::Error::UnknownBuiltin(n) => etastar::Error::UnknownBuiltin(format!(
                    "{n} (known: {})",
                    BUILTIN_NAMES.join(", ")
                )),
                other => other,
            })?;
            print!("{}", emit_cayley(&name, &s));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
