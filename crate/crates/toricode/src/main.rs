use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use toricode::search;
use toricode::spec::{format_edge_list, parse_field, parse_form, GraphSpec};
use toricode::verify::{self, RunOptions};
use toricode_core::evalcode::{evaluation_matrix, hilbert_function, monomial_count, regularity_index};
use toricode_core::formulas::predict;
use toricode_core::linalg::Matrix;
use toricode_core::poly::Polynomial;
use toricode_core::toricset::expected_length;
use toricode_core::zeros::{max_zeros_search, pullback, z_count, zeros_on_x, zeros_via_pullback, FormClass};
use toricode_core::{Elem, FiniteField, Graph, LinearCode, ToricSet, DEFAULT_BUDGET};

/// Parameterized codes over projective toric sets of graphs.
#[derive(Parser)]
#[command(name = "toricode", version)]
struct Cli {
    /// Cap on enumerated tuples, codewords or forms per computation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for randomized coefficient sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Treat skipped scenarios as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Target {
    /// cycle:N, path:N (N vertices), kbip:A,B, empty:N, @FILE, or a union joined with +
    #[arg(long)]
    graph: GraphSpec,
    /// Q or P^E
    #[arg(long)]
    field: String,
}

#[derive(Args, Clone)]
struct Coded {
    #[command(flatten)]
    target: Target,
    /// Degree of the evaluated forms.
    #[arg(long, default_value_t = 1)]
    d: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Incomplete,
    Complete,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Length, dimension and minimum distance of C_X(d).
    Params {
        #[command(flatten)]
        code: Coded,
        /// Skip the exhaustive minimum distance.
        #[arg(long)]
        no_mindist: bool,
    },
    /// Points of X, each normalized so its first coordinate is 1.
    Points {
        #[command(flatten)]
        target: Target,
        /// Include the number of unit tuples mapping to each point.
        #[arg(long)]
        fibers: bool,
    },
    /// Dimension of C_X(d).
    Dim {
        #[command(flatten)]
        code: Coded,
    },
    /// Exhaustive minimum distance of C_X(d).
    Mindist {
        #[command(flatten)]
        code: Coded,
        /// Also print the full weight distribution.
        #[arg(long)]
        distribution: bool,
    },
    /// Regularity index of X and the Hilbert function up to it.
    Regindex {
        #[command(flatten)]
        target: Target,
    },
    /// Zeros of a linear form on X, directly and through the pullback.
    Zeros {
        #[command(flatten)]
        target: Target,
        /// Comma-separated coefficients, e.g. 1,-1,0,0
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Largest zero count on X over a class of linear forms.
    Maxzeros {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Class::All)]
        class: Class,
        /// How many maximizers to print.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Closed-form parameters of C_X(1) for the cycle on 2k vertices.
    Predict {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q: u32,
    },
    /// Run a verification suite.
    Verify {
        /// length, lemma-path, lemma-pullback, prop-incomplete, prop-complete,
        /// theorem, dimension, regularity, torus, duality or all
        suite: Option<String>,
        /// Rerun the scenarios of a saved report and check the numbers agree.
        #[arg(long)]
        replay: Option<PathBuf>,
        /// Write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Generator matrix of C_X(d).
    Genmat {
        #[command(flatten)]
        code: Coded,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
        /// Print the reduced row echelon basis instead of the evaluation matrix.
        #[arg(long)]
        reduced: bool,
    },
    /// Print a graph in edge-list format.
    Edges {
        #[arg(long)]
        graph: GraphSpec,
    },
}

struct Loaded {
    spec: String,
    graph: Graph,
    field: FiniteField,
}

impl Target {
    fn load(&self) -> Result<Loaded> {
        Ok(Loaded {
            spec: self.graph.to_string(),
            graph: self.graph.build()?,
            field: parse_field(&self.field)?,
        })
    }
}

impl Loaded {
    fn points(&self, budget: u64) -> Result<ToricSet> {
        ToricSet::enumerate(&self.graph, &self.field, budget).with_context(|| {
            format!("enumerating the points of {} over GF({}); raise --budget", self.spec, self.field)
        })
    }

    fn header(&self) -> Value {
        json!({ "graph": self.spec, "field": self.field.to_string() })
    }
}

fn big(v: &BigUint) -> Value {
    u64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
}

fn bigs(v: &BigInt) -> Value {
    i64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
}

fn elems(v: &[Elem]) -> Value {
    Value::from(v.iter().map(|e| e.value()).collect::<Vec<_>>())
}

fn matrix(m: &Matrix) -> Value {
    Value::from(m.iter_rows().map(elems).collect::<Vec<_>>())
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

/// Prints JSON, or `key: value` lines for flat objects.
fn emit(as_json: bool, v: &Value) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::String(s) => println!("{k}: {s}"),
                    other => println!("{k}: {other}"),
                }
            }
        }
        other => println!("{other}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let budget = cli.budget;
    match &cli.command {
        Command::Params { code, no_mindist } => {
            let t = code.target.load()?;
            let x = t.points(budget)?;
            let c = LinearCode::from_toric(&x, code.d)?;
            let mut out = merge(
                t.header(),
                json!({ "d": code.d, "length": c.length(), "dimension": c.dimension() }),
            );
            if !no_mindist {
                let dist = search::min_distance(&c, cli.workers, budget).context("minimum distance; raise --budget or pass --no-mindist")?;
                out = merge(out, json!({ "mindist": dist }));
            }
            emit(cli.json, &out);
        }
        Command::Points { target, fibers } => {
            let t = target.load()?;
            let (x, counts) = ToricSet::enumerate_with_fibers(&t.graph, &t.field, budget)
                .context("enumerating points; raise --budget")?;
            let expected = expected_length(&t.graph, &t.field)?;
            if cli.json {
                let pts: Vec<Value> = x.points().iter().map(|p| elems(p.coords())).collect();
                let mut out = merge(t.header(), json!({ "count": x.len(), "expected_length": big(&expected), "points": pts }));
                if *fibers {
                    out = merge(out, json!({ "fibers": counts }));
                }
                emit(true, &out);
            } else {
                for (p, c) in x.points().iter().zip(&counts) {
                    let coords: Vec<String> = p.coords().iter().map(|e| e.to_string()).collect();
                    if *fibers {
                        println!("({})  x{c}", coords.join(", "));
                    } else {
                        println!("({})", coords.join(", "));
                    }
                }
                println!("{} points, expected {}", x.len(), expected);
            }
        }
        Command::Dim { code } => {
            let t = code.target.load()?;
            let x = t.points(budget)?;
            let monos = monomial_count(x.ambient_dim(), code.d).map(|m| m.to_string()).unwrap_or_default();
            emit(
                cli.json,
                &merge(t.header(), json!({ "d": code.d, "monomials": monos, "dimension": hilbert_function(&x, code.d) })),
            );
        }
        Command::Mindist { code, distribution } => {
            let t = code.target.load()?;
            let x = t.points(budget)?;
            let c = LinearCode::from_toric(&x, code.d)?;
            let mut out = merge(t.header(), json!({ "d": code.d, "length": c.length(), "dimension": c.dimension() }));
            if *distribution {
                let w = search::weight_distribution(&c, cli.workers, budget).context("weight distribution; raise --budget")?;
                let dist = w.keys().copied().find(|&k| k > 0);
                let table: serde_json::Map<String, Value> = w.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect();
                out = merge(out, json!({ "mindist": dist, "weights": table }));
            } else {
                let dist = search::min_distance(&c, cli.workers, budget).context("minimum distance; raise --budget")?;
                out = merge(out, json!({ "mindist": dist }));
            }
            emit(cli.json, &out);
        }
        Command::Regindex { target } => {
            let t = target.load()?;
            let x = t.points(budget)?;
            let reg = regularity_index(&x, budget).context("regularity probe; raise --budget")?;
            let hilbert: Vec<usize> = (0..=reg).map(|d| hilbert_function(&x, d)).collect();
            emit(cli.json, &merge(t.header(), json!({ "length": x.len(), "regularity": reg, "hilbert": hilbert })));
        }
        Command::Zeros { target, form } => {
            let t = target.load()?;
            let x = t.points(budget)?;
            let coeffs = parse_form(&t.field, form)?;
            if coeffs.len() != x.ambient_dim() {
                bail!("form has {} coefficients but the graph has {} edges", coeffs.len(), x.ambient_dim());
            }
            let f = Polynomial::linear(&t.field, &coeffs);
            let n = t.graph.vertex_count();
            let z = z_count(&[pullback(&t.field, &f, &t.graph)?], n, &t.field, budget)
                .context("torus zero count; raise --budget")?;
            emit(
                cli.json,
                &merge(
                    t.header(),
                    json!({
                        "form": elems(&coeffs),
                        "zeros": zeros_on_x(&f, &x)?,
                        "zeros_via_pullback": zeros_via_pullback(&f, &x, budget)?,
                        "torus_zeros_of_pullback": z,
                    }),
                ),
            );
        }
        Command::Maxzeros { target, class, samples } => {
            let t = target.load()?;
            let x = t.points(budget)?;
            let class = match class {
                Class::Incomplete => FormClass::Incomplete,
                Class::Complete => FormClass::Complete,
                Class::All => FormClass::All,
            };
            let best = max_zeros_search(&x, class, budget).context("form search; raise --budget")?;
            let sample: Vec<Value> = best.maximizers.iter().take(*samples).map(|v| elems(v)).collect();
            emit(
                cli.json,
                &merge(
                    t.header(),
                    json!({
                        "max": best.max,
                        "maximizers": best.maximizers.len(),
                        "examined": best.examined,
                        "sample": sample,
                    }),
                ),
            );
        }
        Command::Predict { k, q } => {
            let p = predict(*k, *q)?;
            emit(
                cli.json,
                &json!({
                    "k": p.k,
                    "q": p.q,
                    "length": big(&p.length),
                    "dimension": p.dimension,
                    "mindist": big(&p.min_distance),
                    "branch": p.branch.as_str(),
                    "delta": bigs(&p.delta),
                    "incomplete_max": big(&p.incomplete_max),
                    "complete_max": big(&p.complete_max),
                    "regularity": p.regularity,
                }),
            );
        }
        Command::Verify { suite, replay, report } => {
            let opts = RunOptions { budget, workers: cli.workers, seed: cli.seed };
            if let Some(path) = replay {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let recorded = verify::load_run(&text)?;
                let checks = verify::replay(&recorded, cli.workers);
                let differ: Vec<&str> = checks.iter().filter(|c| !c.identical).map(|c| c.id.as_str()).collect();
                emit(
                    cli.json,
                    &json!({ "replayed": checks.len(), "identical": checks.len() - differ.len(), "differing": differ }),
                );
                return Ok(u8::from(!differ.is_empty()));
            }
            let name = suite.as_deref().unwrap_or("all");
            let run = verify::run_suite(name, &opts)?;
            let text = serde_json::to_string_pretty(&run)?;
            if let Some(path) = report {
                fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            }
            if cli.json {
                eprint!("{}", run.table());
                println!("{text}");
            } else {
                print!("{}", run.table());
            }
            return Ok(run.exit_code(cli.strict));
        }
        Command::Genmat { code, format, reduced } => {
            let t = code.target.load()?;
            let x = t.points(budget)?;
            let m = if *reduced {
                LinearCode::from_toric(&x, code.d)?.basis().clone()
            } else {
                evaluation_matrix(&x, code.d)
            };
            match format {
                MatrixFormat::Json => emit(
                    true,
                    &merge(t.header(), json!({ "d": code.d, "rows": m.rows(), "cols": m.cols(), "matrix": matrix(&m) })),
                ),
                MatrixFormat::Text => {
                    for row in m.iter_rows() {
                        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                        println!("{}", cells.join(" "));
                    }
                }
            }
        }
        Command::Edges { graph } => print!("{}", format_edge_list(&graph.build()?)),
    }
    Ok(0)
}
