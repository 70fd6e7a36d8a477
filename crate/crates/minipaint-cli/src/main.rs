use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minipaint::gen::{self, GenKind};
use minipaint::io::{
    parse_flood, parse_instance, parse_plan, serialize_flood, serialize_instance, serialize_plan,
    Instance,
};
use minipaint::oracle;
use minipaint::paint::{verify_flood, verify_plan, VerificationFailure};
use minipaint::solver::{solve_with_report, Algorithm, Method, SolveConfig, SolveReport};
use minipaint::{equivalence, ColorId, ErrorKind};

/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 capacity exceeded, 4 internal invariant violation (never expected).
#[derive(Parser)]
#[command(
    name = "minipaint",
    version,
    about = "Exact solver for template painting on graphs and the Free Flood-It game"
)]
struct Cli {
    /// Emit a machine-readable JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimal paint plan; prints the plan document on stdout.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
        algorithm: AlgorithmArg,
        /// Tail-length ceiling for the canonical enumeration (at most 12).
        #[arg(long = "max-tail", default_value_t = 12)]
        max_tail: usize,
    },
    /// Check a plan document against an instance.
    VerifyPlan { instance: PathBuf, plan: PathBuf },
    /// Check a flood document against an instance.
    VerifyFlood { instance: PathBuf, flood: PathBuf },
    /// Convert a verifying plan into a flood sequence, one move shorter.
    ToFlood { instance: PathBuf, plan: PathBuf },
    /// Convert a monochromatizing flood sequence into a plan, one stroke longer.
    ToPlan { instance: PathBuf, flood: PathBuf },
    /// Report cograph / co-gem-free membership with witnesses.
    Recognize { instance: PathBuf },
    /// Brute-force optimum for small instances, certified by exhaustion.
    Oracle {
        instance: PathBuf,
        #[arg(long = "depth-cap", default_value_t = 8)]
        depth_cap: usize,
    },
    /// Generate a random instance document on stdout.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Cograph,
    Canonical,
    Oracle,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Auto => Algorithm::Auto,
            AlgorithmArg::Cograph => Algorithm::Cograph,
            AlgorithmArg::Canonical => Algorithm::Canonical,
            AlgorithmArg::Oracle => Algorithm::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cograph,
    CogemFree,
    Random,
}

impl From<KindArg> for GenKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cograph => GenKind::Cograph,
            KindArg::CogemFree => GenKind::CogemFree,
            KindArg::Random => GenKind::Random,
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("MINIPAINT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Capacity => 3,
                ErrorKind::Internal => 4,
            })
        }
    }
}

fn load(path: &Path) -> minipaint::Result<String> {
    fs::read_to_string(path)
        .map_err(|e| minipaint::Error::Parse(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> minipaint::Result<Instance> {
    parse_instance(&load(path)?)
}

fn labels(inst: &Instance, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| inst.vertex_label(v)).collect()
}

fn describe_failure(inst: &Instance, f: &VerificationFailure) -> String {
    let color = |c: &ColorId| inst.color_name(*c).to_string();
    match f {
        VerificationFailure::EmptyArea { stroke } => format!("stroke {stroke} has an empty area"),
        VerificationFailure::DisconnectedArea { stroke } => {
            format!("stroke {stroke} has a disconnected area")
        }
        VerificationFailure::WrongFinalColor {
            vertex,
            expected,
            found,
        } => {
            let l = inst.vertex_label(*vertex);
            match found {
                Some(c) => format!(
                    "vertex {l:?} ends with color {}, template wants {}",
                    color(c),
                    color(expected)
                ),
                None => format!(
                    "vertex {l:?} is never painted, template wants {}",
                    color(expected)
                ),
            }
        }
        VerificationFailure::NotMonochromatic { vertex_a, vertex_b } => format!(
            "final painting is not monochromatic: {:?} and {:?} differ",
            inst.vertex_label(*vertex_a),
            inst.vertex_label(*vertex_b)
        ),
        VerificationFailure::CanonicalShape { stroke } => {
            format!("head stroke {stroke} is not of the canonical shape")
        }
        VerificationFailure::OrderViolation { stroke } => {
            format!("head stroke {stroke} violates the color order")
        }
    }
}

fn report_components(inst: &Instance, report: &SolveReport) -> Vec<serde_json::Value> {
    report
        .components
        .iter()
        .map(|c| {
            let method = match &c.method {
                Method::Cograph => serde_json::json!({"name": "cograph"}),
                Method::Canonical { tail_len, extra } => serde_json::json!({
                    "name": "canonical", "tail_k": tail_len, "extra_strokes": extra,
                }),
                Method::Oracle => serde_json::json!({"name": "oracle"}),
            };
            serde_json::json!({
                "vertices": labels(inst, c.vertices.iter()),
                "colors_used": c.colors_used,
                "strokes": c.strokes,
                "method": method,
            })
        })
        .collect()
}

fn run(cli: &Cli) -> minipaint::Result<u8> {
    match &cli.command {
        Command::Solve {
            instance,
            algorithm,
            max_tail,
        } => {
            let inst = load_instance(instance)?;
            let cfg = SolveConfig {
                algorithm: (*algorithm).into(),
                max_tail_len: *max_tail,
                ..SolveConfig::default()
            };
            let (plan, report) = solve_with_report(&inst.graph, &inst.template, &cfg)?;
            let color_bound: usize = report.components.iter().map(|c| c.colors_used).sum();
            let reason = if plan.len() == color_bound {
                "matches color lower bound"
            } else {
                "exhaustive search over candidate lengths"
            };
            let plan_doc = serialize_plan(&plan, &inst)?;
            if cli.json {
                let value = serde_json::json!({
                    "strokes": plan.len(),
                    "optimal": true,
                    "reason": reason,
                    "components": report_components(&inst, &report),
                    "plan": serde_json::from_str::<serde_json::Value>(&plan_doc).unwrap(),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!("{plan_doc}");
                eprintln!("strokes: {}", plan.len());
                eprintln!("optimal: true ({reason})");
                for (i, c) in report.components.iter().enumerate() {
                    if let Method::Canonical { tail_len, extra } = &c.method {
                        eprintln!(
                            "component {i}: canonical search, tail k = {tail_len}, extra strokes = {extra}"
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyPlan { instance, plan } => {
            let inst = load_instance(instance)?;
            let plan = parse_plan(&load(plan)?, &inst)?;
            let report = verify_plan(&inst.graph, &inst.template, &plan);
            finish_verification(cli, &inst, report.failure)
        }
        Command::VerifyFlood { instance, flood } => {
            let inst = load_instance(instance)?;
            let seq = parse_flood(&load(flood)?, &inst)?;
            let report = verify_flood(&inst.graph, &inst.template, &seq);
            finish_verification(cli, &inst, report.failure)
        }
        Command::ToFlood { instance, plan } => {
            let inst = load_instance(instance)?;
            let plan = parse_plan(&load(plan)?, &inst)?;
            let seq = equivalence::plan_to_flood(&inst.graph, &inst.template, &plan)?;
            print!("{}", serialize_flood(&seq, &inst)?);
            eprintln!("moves: {}", seq.len());
            Ok(0)
        }
        Command::ToPlan { instance, flood } => {
            let inst = load_instance(instance)?;
            let seq = parse_flood(&load(flood)?, &inst)?;
            let plan = equivalence::flood_to_plan(&inst.graph, &inst.template, &seq)?;
            print!("{}", serialize_plan(&plan, &inst)?);
            eprintln!("strokes: {}", plan.len());
            Ok(0)
        }
        Command::Recognize { instance } => {
            let inst = load_instance(instance)?;
            let p4 = inst.graph.find_induced_p4();
            let cogem = inst.graph.find_cogem();
            if cli.json {
                let value = serde_json::json!({
                    "cograph": p4.is_none(),
                    "p4_witness": p4.map(|w| labels(&inst, w)),
                    "cogem_free": cogem.is_none(),
                    "cogem_witness": cogem.map(|w| labels(&inst, w)),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                match p4 {
                    None => println!("cograph: true"),
                    Some(w) => println!(
                        "cograph: false (induced P4: {})",
                        labels(&inst, w).join(", ")
                    ),
                }
                match cogem {
                    None => println!("cogem-free: true"),
                    Some(w) => println!(
                        "cogem-free: false (induced co-gem: {})",
                        labels(&inst, w).join(", ")
                    ),
                }
            }
            Ok(0)
        }
        Command::Oracle {
            instance,
            depth_cap,
        } => {
            let inst = load_instance(instance)?;
            let budget = oracle::Budget {
                max_depth: *depth_cap,
                ..oracle::Budget::default()
            };
            let (len, plan) = oracle::plan_optimum(&inst.graph, &inst.template, &budget)?;
            let plan_doc = serialize_plan(&plan, &inst)?;
            if cli.json {
                let value = serde_json::json!({
                    "strokes": len,
                    "optimal": true,
                    "reason": "exhaustive flood search",
                    "plan": serde_json::from_str::<serde_json::Value>(&plan_doc).unwrap(),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!("{plan_doc}");
                eprintln!("strokes: {len} (certified optimal by exhaustive search)");
            }
            Ok(0)
        }
        Command::Gen {
            kind,
            n,
            colors,
            seed,
        } => {
            let inst = gen::generate((*kind).into(), *n, *colors, *seed)?;
            print!("{}", serialize_instance(&inst));
            Ok(0)
        }
    }
}

fn finish_verification(
    cli: &Cli,
    inst: &Instance,
    failure: Option<VerificationFailure>,
) -> minipaint::Result<u8> {
    match failure {
        None => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({"ok": true})).unwrap()
                );
            } else {
                println!("ok");
            }
            Ok(0)
        }
        Some(f) => {
            let message = describe_failure(inst, &f);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &serde_json::json!({"ok": false, "failure": message})
                    )
                    .unwrap()
                );
            } else {
                println!("failed: {message}");
            }
            Ok(1)
        }
    }
}
