//! Command surface: file parsing, solver dispatch, verification pipeline,
//! and the scaling benchmark. Exit codes split three ways so pipelines can
//! branch on the mathematical answer: 0 tree/pass, 1 algorithmic no or
//! verification failure, 2 input or usage error.

pub mod bench;
pub mod formats;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lcst_core::{
    check_locally_connected, intersection_graph, is_perfect_elimination_order,
    is_strong_elimination_order, lcst_bruteforce_bounded, solve_proper_circular_arc,
    solve_strongly_chordal, Graph, LcstFailure, SpanningTree, TreeOutcome, Validation,
    DEFAULT_ORACLE_BOUND,
};

use bench::BenchClass;
use formats::{
    format_outcome, parse_arc_model_file, parse_graph_file, parse_order_file, parse_tree_file,
    serialize_arc_model, serialize_graph, serialize_order,
};

/// Machine-readable result of one command, emitted verbatim under `--json`.
#[derive(Serialize, Debug)]
pub struct RunResult {
    /// "tree", "no", "ok" (passing checks), or "error".
    pub status: &'static str,
    /// 1-based tree edges, present exactly for trees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    /// Refusal code and 1-based witness ids, present exactly for "no".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<ReasonJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Nanoseconds spent in the algorithm proper; parsing and verification
    /// are not counted.
    pub timing_ns: u128,
}

#[derive(Serialize, Debug)]
pub struct ReasonJson {
    pub code: String,
    pub witness: Vec<usize>,
}

struct Rendered {
    result: RunResult,
    human: String,
    code: i32,
}

impl Rendered {
    fn from_outcome(outcome: &TreeOutcome, timing_ns: u128) -> Rendered {
        let human = format_outcome(outcome);
        match outcome {
            TreeOutcome::Tree(t) => Rendered {
                result: RunResult {
                    status: "tree",
                    edges: Some(t.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect()),
                    reason: None,
                    error: None,
                    timing_ns,
                },
                human,
                code: 0,
            },
            TreeOutcome::No { reason, witness } => Rendered {
                result: RunResult {
                    status: "no",
                    edges: None,
                    reason: Some(ReasonJson {
                        code: reason.code().to_string(),
                        witness: witness.iter().map(|v| v + 1).collect(),
                    }),
                    error: None,
                    timing_ns,
                },
                human,
                code: 1,
            },
        }
    }

    fn check_failed(code: &str, witness: Vec<usize>, human: String, timing_ns: u128) -> Rendered {
        Rendered {
            result: RunResult {
                status: "no",
                edges: None,
                reason: Some(ReasonJson {
                    code: code.to_string(),
                    witness,
                }),
                error: None,
                timing_ns,
            },
            human,
            code: 1,
        }
    }

    fn ok(human: String, timing_ns: u128) -> Rendered {
        Rendered {
            result: RunResult {
                status: "ok",
                edges: None,
                reason: None,
                error: None,
                timing_ns,
            },
            human,
            code: 0,
        }
    }

    fn error(msg: String) -> Rendered {
        Rendered {
            human: format!("c error: {msg}\ns error\n"),
            result: RunResult {
                status: "error",
                edges: None,
                reason: None,
                error: Some(msg),
                timing_ns: 0,
            },
            code: 2,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lcst",
    version,
    about = "Locally connected spanning trees on strongly chordal graphs and proper circular-arc graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Interval,
    StronglyChordal,
    ProperArc,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchClassArg {
    StronglyChordal,
    ProperArc,
}

#[derive(Subcommand)]
enum Command {
    /// Check an elimination order against a graph (strong by default)
    CheckOrder {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        order: PathBuf,
        /// Require only the perfect-elimination property
        #[arg(long)]
        perfect: bool,
        #[arg(long)]
        json: bool,
    },
    /// Find a locally connected spanning tree of a strongly chordal graph,
    /// given a strong elimination order
    Find {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        order: PathBuf,
        /// Validate the order instead of trusting it (quadratic)
        #[arg(long)]
        validate: bool,
        /// Skip re-verifying the produced tree
        #[arg(long)]
        no_verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Find a locally connected spanning tree of a proper circular-arc model
    FindArc {
        #[arg(short, long)]
        model: PathBuf,
        /// Validate model properness instead of trusting it (quadratic)
        #[arg(long)]
        validate: bool,
        /// Skip re-verifying the produced tree
        #[arg(long)]
        no_verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify that a tree file holds a locally connected spanning tree
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        tree: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive small-instance oracle; LCST_ORACLE_BOUND raises its bound
    Oracle {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded instance; writes <out>.gr/.ord/.arc as applicable
    Gen {
        #[arg(long, value_enum)]
        class: GenClass,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the solvers on growing instances; CSV on stdout
    Bench {
        #[arg(long, value_enum)]
        class: BenchClassArg,
        /// Comma-separated instance sizes
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Band width: average degree stays near twice this
        #[arg(long, default_value_t = 4)]
        width: usize,
        /// Timed repetitions per size (median is reported)
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

fn read(path: &Path) -> Result<String, Rendered> {
    fs::read_to_string(path)
        .map_err(|e| Rendered::error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Rendered> {
    parse_graph_file(&read(path)?)
        .map_err(|e| Rendered::error(format!("{}: {e}", path.display())))
}

fn verified(
    outcome: TreeOutcome,
    g: &Graph,
    no_verify: bool,
    timing_ns: u128,
) -> Rendered {
    if !no_verify {
        if let TreeOutcome::Tree(t) = &outcome {
            if let Err(failure) = check_locally_connected(g, t) {
                return Rendered::error(format!(
                    "produced tree failed verification: {failure}"
                ));
            }
        }
    }
    Rendered::from_outcome(&outcome, timing_ns)
}

fn cmd_find(
    graph: &Path,
    order: &Path,
    validate: bool,
    no_verify: bool,
) -> Rendered {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let ord = match read(order).and_then(|t| {
        parse_order_file(&t).map_err(|e| Rendered::error(format!("{}: {e}", order.display())))
    }) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let validation = if validate {
        Validation::Validate
    } else {
        Validation::Trust
    };
    let start = Instant::now();
    let solved = solve_strongly_chordal(&g, &ord, validation);
    let timing_ns = start.elapsed().as_nanos();
    match solved {
        Ok(outcome) => verified(outcome, &g, no_verify, timing_ns),
        Err(e) => Rendered::error(e.to_string()),
    }
}

fn cmd_find_arc(model: &Path, validate: bool, no_verify: bool) -> Rendered {
    let m = match read(model).and_then(|t| {
        parse_arc_model_file(&t)
            .map_err(|e| Rendered::error(format!("{}: {e}", model.display())))
    }) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let validation = if validate {
        Validation::Validate
    } else {
        Validation::Trust
    };
    let start = Instant::now();
    let solved = solve_proper_circular_arc(&m, validation);
    let timing_ns = start.elapsed().as_nanos();
    match solved {
        Ok(outcome) => {
            if !no_verify && outcome.is_tree() {
                let g = match intersection_graph(&m) {
                    Ok((g, _)) => g,
                    Err(e) => return Rendered::error(e.to_string()),
                };
                verified(outcome, &g, false, timing_ns)
            } else {
                Rendered::from_outcome(&outcome, timing_ns)
            }
        }
        Err(e) => Rendered::error(e.to_string()),
    }
}

fn cmd_check_order(graph: &Path, order: &Path, perfect_only: bool) -> Rendered {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let ord = match read(order).and_then(|t| {
        parse_order_file(&t).map_err(|e| Rendered::error(format!("{}: {e}", order.display())))
    }) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let start = Instant::now();
    let perfect = match is_perfect_elimination_order(&g, &ord) {
        Ok(b) => b,
        Err(e) => return Rendered::error(e.to_string()),
    };
    let strong = perfect && is_strong_elimination_order(&g, &ord).unwrap_or(false);
    let timing_ns = start.elapsed().as_nanos();
    let mut human = format!(
        "c perfect-elimination: {}\nc strong-elimination: {}\n",
        if perfect { "yes" } else { "no" },
        if strong { "yes" } else { "no" }
    );
    let pass = if perfect_only { perfect } else { strong };
    if pass {
        human.push_str("s ok\n");
        Rendered::ok(human, timing_ns)
    } else {
        let code = if perfect_only {
            "not-perfect-elimination"
        } else {
            "not-strong-elimination"
        };
        human.push_str(&format!("s no {code}\n"));
        Rendered::check_failed(code, vec![], human, timing_ns)
    }
}

fn cmd_verify(graph: &Path, tree: &Path) -> Rendered {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let t: SpanningTree = match read(tree).and_then(|text| {
        parse_tree_file(&text, g.n())
            .map_err(|e| Rendered::error(format!("{}: {e}", tree.display())))
    }) {
        Ok(t) => t,
        Err(r) => return r,
    };
    let start = Instant::now();
    let checked = check_locally_connected(&g, &t);
    let timing_ns = start.elapsed().as_nanos();
    match checked {
        Ok(()) => Rendered::ok("s ok\n".to_string(), timing_ns),
        Err(failure) => {
            let witness = match &failure {
                LcstFailure::NeighborhoodNotConnected { vertex } => vec![vertex + 1],
                LcstFailure::EdgeNotInGraph { edge } | LcstFailure::EdgeOutOfRange { edge } => {
                    vec![edge.0 + 1, edge.1 + 1]
                }
                _ => vec![],
            };
            let human = format!("c violation: {failure}\ns no verification-failed\n");
            Rendered::check_failed("verification-failed", witness, human, timing_ns)
        }
    }
}

fn cmd_oracle(graph: &Path) -> Rendered {
    let g = match load_graph(graph) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let bound = match std::env::var("LCST_ORACLE_BOUND") {
        Ok(s) => match s.parse::<usize>() {
            Ok(b) => b,
            Err(_) => {
                return Rendered::error(format!("LCST_ORACLE_BOUND is not a number: `{s}`"))
            }
        },
        Err(_) => DEFAULT_ORACLE_BOUND,
    };
    let start = Instant::now();
    let solved = lcst_bruteforce_bounded(&g, bound);
    let timing_ns = start.elapsed().as_nanos();
    match solved {
        Ok(outcome) => Rendered::from_outcome(&outcome, timing_ns),
        Err(e) => Rendered::error(e.to_string()),
    }
}

fn write_file(path: &Path, contents: &str, log: &mut String) -> Result<(), Rendered> {
    fs::write(path, contents)
        .map_err(|e| Rendered::error(format!("{}: {e}", path.display())))?;
    log.push_str(&format!("c wrote {}\n", path.display()));
    Ok(())
}

fn cmd_gen(class: GenClass, n: usize, seed: u64, density: f64, out: &Path) -> Rendered {
    let cfg = lcst_core::GenConfig::new(n, seed, density);
    let with_ext = |ext: &str| -> PathBuf {
        let mut s = out.as_os_str().to_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    let mut log = String::new();
    let res: Result<(), Rendered> = (|| {
        match class {
            GenClass::Interval => {
                let (g, ord, model) = lcst_core::gen_interval_graph(&cfg);
                write_file(&with_ext(".gr"), &serialize_graph(&g), &mut log)?;
                write_file(&with_ext(".ord"), &serialize_order(&ord), &mut log)?;
                write_file(&with_ext(".arc"), &serialize_arc_model(&model), &mut log)?;
            }
            GenClass::StronglyChordal => {
                let (g, ord) = match lcst_core::gen_strongly_chordal(&cfg) {
                    Ok(pair) => pair,
                    Err(e) => return Err(Rendered::error(e.to_string())),
                };
                write_file(&with_ext(".gr"), &serialize_graph(&g), &mut log)?;
                write_file(&with_ext(".ord"), &serialize_order(&ord), &mut log)?;
            }
            GenClass::ProperArc => {
                let model = lcst_core::gen_proper_circular_arc_model(&cfg);
                write_file(&with_ext(".arc"), &serialize_arc_model(&model), &mut log)?;
            }
        }
        Ok(())
    })();
    match res {
        Ok(()) => {
            log.push_str("s ok\n");
            Rendered::ok(log, 0)
        }
        Err(r) => r,
    }
}

/// Executes one command line; prints to `out`; returns the process exit
/// code. The binary is a thin wrapper around this, so tests drive it
/// in-process.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (rendered, json) = match cli.command {
        Command::CheckOrder {
            graph,
            order,
            perfect,
            json,
        } => (cmd_check_order(&graph, &order, perfect), json),
        Command::Find {
            graph,
            order,
            validate,
            no_verify,
            json,
        } => (cmd_find(&graph, &order, validate, no_verify), json),
        Command::FindArc {
            model,
            validate,
            no_verify,
            json,
        } => (cmd_find_arc(&model, validate, no_verify), json),
        Command::Verify { graph, tree, json } => (cmd_verify(&graph, &tree), json),
        Command::Oracle { graph, json } => (cmd_oracle(&graph), json),
        Command::Gen {
            class,
            n,
            seed,
            density,
            out: prefix,
        } => (cmd_gen(class, n, seed, density, &prefix), false),
        Command::Bench {
            class,
            sizes,
            width,
            runs,
        } => {
            let class = match class {
                BenchClassArg::StronglyChordal => BenchClass::StronglyChordal,
                BenchClassArg::ProperArc => BenchClass::ProperArc,
            };
            return match bench::run_bench(&class, &sizes, width, runs.max(1), out) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(out, "c error: {e}");
                    2
                }
            };
        }
    };
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&rendered.result).expect("result serializes")
        );
    } else {
        let _ = write!(out, "{}", rendered.human);
    }
    rendered.code
}

/// Convenience used by integration tests: capture output as a string.
pub fn run_captured<I, T>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut buf = Vec::new();
    let code = run(argv, &mut buf);
    (String::from_utf8(buf).expect("output is UTF-8"), code)
}
