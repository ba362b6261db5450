//! `chroma`: batch front end for the colouring and stable-cut solvers.
//!
//! Exit codes: 0 yes/pass, 1 no/fail, 2 cap exceeded, 3 input or usage error.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chroma_core::cli::suites::{run_suite, Suite};
use chroma_core::cli::{emit_instance, gen_spec_free, parse_instance, InstanceFile};
use chroma_core::graph::{Graph, SignedPath};
use chroma_core::pattern::{contains_subgraph, find_protected_fan, PatternSpec};
use chroma_core::solver::{
    solve_colouring_H, solve_colouring_S, solve_stable_cut, Decision, SolverConfig, Verdict,
};
use chroma_core::structure::{
    find_minimal_l_type, find_minimal_t_type, h_family_bounds, s_family_bound, JumpContext, Sign,
};
use chroma_core::treedepth::{treedepth_exact, TreedepthResult};

const YES: u8 = 0;
const NO: u8 = 1;
const CAP: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chroma",
    version,
    about = "Colouring and Stable Cut on pattern-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Fan,
    Ttype,
    Ltype,
    Jumps,
}

#[derive(clap::Args)]
struct Input {
    /// DIMACS instance; standard input when omitted.
    file: Option<PathBuf>,
    /// Read the instance from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide r-colourability for an H- or S-family graph.
    SolveColouring {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(short, default_value_t = 3)]
        r: u32,
        #[arg(long, default_value_t = 25)]
        cap: usize,
        /// Decide by brute force when the treedepth cap is exceeded.
        #[arg(long)]
        fallback: bool,
        /// Include the reduction trace in the record.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether an independent set disconnects the graph.
    SolveStablecut {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 25)]
        cap: usize,
        #[arg(long)]
        fallback: bool,
    },
    /// Check that the graph has no subgraph isomorphic to the pattern.
    CheckFree {
        #[command(flatten)]
        input: Input,
        /// Pattern such as "S(1,2,2,2)" or "H(1;1,1,1,1)".
        #[arg(long)]
        spec: String,
    },
    /// Run one structure detector.
    Detect {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        what: What,
        /// Comma-separated key=value pairs, e.g. "order=5", "c=3,len=4" or
        /// "path=0-1-2-3,u=1,v=2,sign=+".
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Exact treedepth up to a cap.
    Treedepth {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 25)]
        cap: usize,
    },
    /// Run a property suite.
    VerifySuite {
        #[arg(long)]
        suite: String,
        /// Random cases per check.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate a random pattern-free instance.
    Gen {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn seed_or_env(seed: Option<u64>) -> Result<u64, Failure> {
    match seed {
        Some(s) => Ok(s),
        None => match std::env::var("CHROMA_SEED") {
            Ok(v) => v
                .parse()
                .map_err(|_| Failure(format!("CHROMA_SEED is not an integer: {v:?}"))),
            Err(_) => Ok(0),
        },
    }
}

fn read_input(input: &Input) -> Result<InstanceFile, Failure> {
    let text = match (&input.file, input.stdin) {
        (Some(_), true) => return Err(Failure("give either a file or --stdin, not both".into())),
        (Some(path), false) => std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        (None, _) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_instance(&text)?)
}

fn emit(v: &Value) {
    println!("{v}");
}

fn decision_code(d: &Decision) -> u8 {
    match d.verdict {
        Verdict::Yes(_) => YES,
        Verdict::No => NO,
        Verdict::CapExceeded(_) => CAP,
    }
}

fn params(s: &str) -> Result<BTreeMap<String, String>, Failure> {
    s.split(',')
        .filter(|kv| !kv.trim().is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Failure(format!("--params: expected key=value, got {kv:?}")))
        })
        .collect()
}

fn param<T: std::str::FromStr>(
    p: &BTreeMap<String, String>,
    key: &str,
    default: Option<T>,
) -> Result<T, Failure> {
    match p.get(key) {
        Some(v) => v
            .parse()
            .map_err(|_| Failure(format!("--params: bad value for {key}: {v:?}"))),
        None => default.ok_or_else(|| Failure(format!("--params: missing {key}"))),
    }
}

fn detect(g: &Graph, what: What, raw: &str) -> Result<u8, Failure> {
    let p = params(raw)?;
    let (found, record) = match what {
        What::Fan => {
            let order = param(&p, "order", Some(5usize))?;
            let fan = find_protected_fan(g, order)?;
            (
                fan.is_some(),
                json!({ "detector": "fan", "order": order, "fan": fan }),
            )
        }
        What::Ttype => {
            let c = param(&p, "c", Some(s_family_bound(2)))?;
            let rep = find_minimal_t_type(g, c)?;
            (
                rep.is_some(),
                json!({ "detector": "ttype", "c": c, "report": rep }),
            )
        }
        What::Ltype => {
            let (dc, dl) = h_family_bounds(1, 2);
            let c = param(&p, "c", Some(dc))?;
            let len = param(&p, "len", Some(dl))?;
            let rep = find_minimal_l_type(g, c, len)?;
            (
                rep.is_some(),
                json!({ "detector": "ltype", "c": c, "len": len, "report": rep }),
            )
        }
        What::Jumps => {
            let path: Vec<usize> = param::<String>(&p, "path", None)?
                .split('-')
                .map(|x| {
                    x.parse()
                        .map_err(|_| Failure(format!("--params: bad path vertex {x:?}")))
                })
                .collect::<Result<_, _>>()?;
            let u = param(&p, "u", None)?;
            let v = param(&p, "v", None)?;
            let sign = match param::<String>(&p, "sign", Some("+".into()))?.as_str() {
                "+" | "positive" => Sign::Positive,
                "-" | "negative" => Sign::Negative,
                s => return Err(Failure(format!("--params: sign must be + or -, got {s:?}"))),
            };
            let path = SignedPath::new(g, path)?;
            let mut ctx = JumpContext::new(g, path)?;
            let max = ctx.max_jump_out(u, v, sign)?;
            let all = ctx.jumps_out(u, v, sign)?;
            let chain = ctx.chain_extension(u, v, sign)?;
            let paths = if chain.is_empty() {
                Value::Null
            } else {
                let (odd, even) = ctx.odd_even_paths(&chain)?;
                json!({ "odd": odd.vertices(), "even": even.map(|e| e.vertices().to_vec()) })
            };
            (
                max.is_some(),
                json!({ "detector": "jumps", "max_jump": max, "jumps_out": all,
                        "chain_extension": chain.jumps, "odd_even": paths }),
            )
        }
    };
    let mut record = record;
    record["found"] = json!(found);
    emit(&record);
    Ok(if found { YES } else { NO })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::SolveColouring {
            input,
            family,
            m,
            k,
            r,
            cap,
            fallback,
            trace,
        } => {
            let f = read_input(&input)?;
            let cfg = SolverConfig {
                cap,
                fallback,
                m,
                k,
                seed: 0,
            };
            let mut d = match family {
                FamilyArg::H => solve_colouring_H(&f.graph, r, &cfg)?,
                FamilyArg::S => solve_colouring_S(&f.graph, r, &cfg)?,
            };
            if !trace {
                d.trace = None;
            }
            println!("{}", d.to_json());
            Ok(decision_code(&d))
        }
        Command::SolveStablecut {
            input,
            cap,
            fallback,
        } => {
            let f = read_input(&input)?;
            let cfg = SolverConfig {
                cap,
                fallback,
                ..SolverConfig::default()
            };
            let d = solve_stable_cut(&f.graph, &cfg)?;
            println!("{}", d.to_json());
            Ok(decision_code(&d))
        }
        Command::CheckFree { input, spec } => {
            let f = read_input(&input)?;
            let spec: PatternSpec = spec.parse()?;
            let emb = contains_subgraph(&f.graph, &spec)?;
            emit(&json!({ "spec": spec.to_string(), "free": emb.is_none(),
                          "embedding": emb.as_ref().map(|e| &e.map) }));
            Ok(if emb.is_none() { YES } else { NO })
        }
        Command::Detect {
            input,
            what,
            params,
        } => {
            let f = read_input(&input)?;
            detect(&f.graph, what, &params)
        }
        Command::Treedepth { input, cap } => {
            let f = read_input(&input)?;
            match treedepth_exact(&f.graph, cap) {
                TreedepthResult::Value(d, forest) => {
                    let parents: Vec<Option<usize>> =
                        f.graph.vertices().map(|v| forest.parent(v)).collect();
                    emit(&json!({ "treedepth": d, "cap": cap, "parents": parents }));
                    Ok(YES)
                }
                TreedepthResult::ExceedsCap => {
                    emit(&json!({ "treedepth": null, "cap": cap, "exceeds_cap": true }));
                    Ok(CAP)
                }
            }
        }
        Command::VerifySuite { suite, cases, seed } => {
            let suite: Suite = suite.parse().map_err(Failure)?;
            let report = run_suite(suite, cases, seed_or_env(seed)?);
            for c in &report.checks {
                eprintln!("{}", c.summary());
            }
            println!("{}", serde_json::to_string(&report)?);
            Ok(if report.passed { YES } else { NO })
        }
        Command::Gen {
            spec,
            n,
            density,
            seed,
        } => {
            let spec: PatternSpec = spec.parse()?;
            let seed = seed_or_env(seed)?;
            let out = gen_spec_free(&spec, n, density, seed)?;
            let mut meta = BTreeMap::new();
            meta.insert("family".to_string(), spec.to_string());
            meta.insert("n".to_string(), n.to_string());
            meta.insert("density".to_string(), density.to_string());
            meta.insert("seed".to_string(), seed.to_string());
            meta.insert("repairs".to_string(), out.repairs.to_string());
            print!(
                "{}",
                emit_instance(&InstanceFile {
                    graph: out.graph,
                    meta
                })
            );
            Ok(YES)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT } else { YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT)
        }
    }
}
