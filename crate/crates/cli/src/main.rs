//! `lpa-grkit`: exact K-theory invariants of Leavitt path algebras from the
//! command line. Every subcommand has a human rendering (default) and a
//! stable JSON envelope (`--json`); verdict-style subcommands encode their
//! answer in the exit code.

#![forbid(unsafe_code)]

mod commands;
mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use commands::{CmdResult, Failure, Outcome, EXIT_PARSE, EXIT_USAGE};
use input::{batch_files, load_graph, parse_multiset, LoadedGraph};
use lpa_core::graph::Graph;
use lpa_core::monoid::DEFAULT_BUDGET;

/// Environment variable overriding the default monoid search budget.
const BUDGET_ENV: &str = "LPA_GRKIT_BUDGET";
const JSON_SCHEMA_VERSION: u64 = 1;

#[derive(Parser)]
#[command(
    name = "lpa-grkit",
    version,
    about = "K-theory toolkit for Leavitt path algebras of finite directed graphs",
    after_help = "Graph files are line-oriented text (`vertex <id>` / `edge <id> <src> <dst>`,\n\
                  `#` comments) or JSON when the filename ends in .json. All arithmetic is\n\
                  exact. Exit codes: verdicts use 0/1/2 (yes/no/unknown), 3 means the graph\n\
                  is not polycephaly, 64 usage error, 65 unreadable or malformed input."
)]
struct Cli {
    /// Emit a machine-readable JSON envelope on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A graph argument that may instead be a directory of graphs.
#[derive(Args)]
struct GraphSource {
    /// Graph file (text format, or JSON if the name ends in .json).
    #[arg(
        value_name = "FILE",
        required_unless_present = "batch",
        conflicts_with = "batch"
    )]
    file: Option<PathBuf>,
    /// Run on every .graph/.json file directly in DIR, in sorted name order.
    #[arg(long, value_name = "DIR")]
    batch: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is polycephaly and list its heads.
    Classify(GraphSource),
    /// Print the graded matrix-block decomposition of a polycephaly graph.
    Decompose(GraphSource),
    /// Print the Grothendieck group of the Leavitt path algebra.
    K0(GraphSource),
    /// Print graded K0: closed form per head, or a colimit presentation.
    K0gr {
        #[command(flatten)]
        source: GraphSource,
        /// Use the colimit route (sink-free graphs; no polycephaly needed).
        #[arg(long)]
        colimit: bool,
        /// Bratteli table depth for --colimit.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Decide graded isomorphism of the algebras of two polycephaly graphs.
    Iso {
        #[arg(value_name = "FILE_A")]
        a: PathBuf,
        #[arg(value_name = "FILE_B")]
        b: PathBuf,
        /// Print the head matching and twist witnesses on a positive answer.
        #[arg(long)]
        certificate: bool,
    },
    /// Decide graded isomorphism of matrix Leavitt algebras given base and shifts.
    MatrixIso {
        #[arg(value_name = "BASE_A")]
        base_a: usize,
        /// Comma-separated integer shifts, e.g. 0,1,1.
        #[arg(value_name = "SHIFTS_A")]
        shifts_a: String,
        #[arg(value_name = "BASE_B")]
        base_b: usize,
        #[arg(value_name = "SHIFTS_B")]
        shifts_b: String,
    },
    /// Decide graded isomorphism of shifted free modules over one base.
    FreeIso {
        #[arg(value_name = "BASE_A")]
        base_a: usize,
        #[arg(value_name = "SHIFTS_A")]
        shifts_a: String,
        #[arg(value_name = "BASE_B")]
        base_b: usize,
        #[arg(value_name = "SHIFTS_B")]
        shifts_b: String,
    },
    /// Print the table of transfer-matrix path counts per depth.
    Bratteli {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// List every hereditary saturated vertex set.
    Hsets(GraphSource),
    /// Decide equality of two vertex multisets in the graph monoid.
    MonoidEq {
        #[arg(value_name = "FILE")]
        file: PathBuf,
        /// Multiset written as u+v+v; `0` is the empty multiset.
        #[arg(value_name = "MULTISET_A")]
        a: String,
        #[arg(value_name = "MULTISET_B")]
        b: String,
        /// Search budget in explored states (default from LPA_GRKIT_BUDGET or built-in).
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.json;
    match cli.command {
        Command::Classify(src) => graph_command("classify", &src, json, commands::run_classify),
        Command::Decompose(src) => graph_command("decompose", &src, json, commands::run_decompose),
        Command::K0(src) => graph_command("k0", &src, json, commands::run_k0),
        Command::K0gr {
            source,
            colimit,
            depth,
        } => graph_command("k0gr", &source, json, |g| {
            commands::run_k0gr(g, colimit, depth)
        }),
        Command::Bratteli { source, depth } => graph_command("bratteli", &source, json, |g| {
            commands::run_bratteli(g, depth)
        }),
        Command::Hsets(src) => graph_command("hsets", &src, json, commands::run_hsets),
        Command::Iso { a, b, certificate } => iso_command(&a, &b, certificate, json),
        Command::MatrixIso {
            base_a,
            shifts_a,
            base_b,
            shifts_b,
        } => emit_fileless(
            "matrix-iso",
            json,
            commands::run_matrix_iso(base_a, &shifts_a, base_b, &shifts_b),
        ),
        Command::FreeIso {
            base_a,
            shifts_a,
            base_b,
            shifts_b,
        } => emit_fileless(
            "free-iso",
            json,
            commands::run_free_iso(base_a, &shifts_a, base_b, &shifts_b),
        ),
        Command::MonoidEq { file, a, b, budget } => monoid_eq_command(&file, &a, &b, budget, json),
    }
}

fn input_json(lg: &LoadedGraph) -> Value {
    json!({ "path": lg.path.display().to_string(), "sha256": lg.sha256 })
}

/// The stable JSON shape: schema marker, command name, inputs (when the
/// command reads files), then either `result` or `error`.
fn envelope(command: &str, input: Option<(&str, Value)>, body: (&str, Value)) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(JSON_SCHEMA_VERSION));
    obj.insert("command".into(), json!(command));
    if let Some((key, value)) = input {
        obj.insert(key.into(), value);
    }
    obj.insert(body.0.into(), body.1);
    Value::Object(obj)
}

fn error_body(failure: &Failure) -> (&'static str, Value) {
    (
        "error",
        json!({ "code": failure.code, "message": failure.message }),
    )
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON serialization")
    );
}

/// Run a single-graph command on one file or on a whole directory.
fn graph_command(
    name: &str,
    src: &GraphSource,
    json: bool,
    run: impl Fn(&Graph) -> CmdResult,
) -> i32 {
    if let Some(dir) = &src.batch {
        let files = match batch_files(dir) {
            Ok(files) => files,
            Err(e) => {
                eprintln!("error: {e:#}");
                return EXIT_PARSE;
            }
        };
        let mut code = 0;
        let mut envelopes = Vec::new();
        let mut sections = Vec::new();
        for path in files {
            let (file_code, env, text) = match load_graph(&path) {
                Err(e) => {
                    let failure = Failure::new(EXIT_PARSE, format!("{e:#}"));
                    let input = json!({ "path": path.display().to_string() });
                    (
                        failure.code,
                        envelope(name, Some(("input", input)), error_body(&failure)),
                        format!("error: {}", failure.message),
                    )
                }
                Ok(lg) => match run(&lg.graph) {
                    Ok(out) => (
                        out.code,
                        envelope(
                            name,
                            Some(("input", input_json(&lg))),
                            ("result", out.result),
                        ),
                        out.human,
                    ),
                    Err(failure) => (
                        failure.code,
                        envelope(name, Some(("input", input_json(&lg))), error_body(&failure)),
                        format!("error: {}", failure.message),
                    ),
                },
            };
            code = code.max(file_code);
            sections.push(format!("== {} ==\n{}", path.display(), text));
            envelopes.push(env);
        }
        if json {
            print_json(&Value::Array(envelopes));
        } else {
            println!("{}", sections.join("\n\n"));
        }
        return code;
    }

    let file = src.file.as_deref().expect("clap enforces file XOR batch");
    let lg = match load_graph(file) {
        Ok(lg) => lg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_PARSE;
        }
    };
    emit(name, json, Some(("input", input_json(&lg))), run(&lg.graph))
}

fn iso_command(a: &std::path::Path, b: &std::path::Path, certificate: bool, json: bool) -> i32 {
    let (la, lb) = match (load_graph(a), load_graph(b)) {
        (Ok(la), Ok(lb)) => (la, lb),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e:#}");
            return EXIT_PARSE;
        }
    };
    let names = (la.path.display().to_string(), lb.path.display().to_string());
    let result = commands::run_iso(&la.graph, &lb.graph, (&names.0, &names.1), certificate);
    let inputs = json!([input_json(&la), input_json(&lb)]);
    emit("iso", json, Some(("inputs", inputs)), result)
}

fn monoid_eq_command(
    file: &std::path::Path,
    a: &str,
    b: &str,
    budget: Option<u64>,
    json: bool,
) -> i32 {
    let lg = match load_graph(file) {
        Ok(lg) => lg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_PARSE;
        }
    };
    let result = effective_budget(budget).and_then(|budget| {
        let ea = parse_multiset(&lg.graph, a).map_err(|m| Failure::new(EXIT_PARSE, m))?;
        let eb = parse_multiset(&lg.graph, b).map_err(|m| Failure::new(EXIT_PARSE, m))?;
        commands::run_monoid_eq(&lg.graph, &ea, &eb, budget)
    });
    emit("monoid-eq", json, Some(("input", input_json(&lg))), result)
}

/// `--budget` wins, then LPA_GRKIT_BUDGET, then the built-in default.
fn effective_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|e| Failure::new(EXIT_USAGE, format!("bad {BUDGET_ENV} value '{text}': {e}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn emit_fileless(name: &str, json: bool, result: CmdResult) -> i32 {
    emit(name, json, None, result)
}

fn emit(name: &str, json: bool, input: Option<(&str, Value)>, result: CmdResult) -> i32 {
    match result {
        Ok(Outcome {
            code,
            human,
            result,
        }) => {
            if json {
                print_json(&envelope(name, input, ("result", result)));
            } else {
                println!("{human}");
            }
            code
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
