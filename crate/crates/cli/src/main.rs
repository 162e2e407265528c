//! `specgraph`: batch verification CLI. Every invocation prints one JSON
//! envelope per result line and exits 0 (ok), 1 (a verification command
//! found a mismatch), or 2 (error).

mod envelope;
mod family_expr;

use clap::{Parser, Subcommand, ValueEnum};
use envelope::{params, Envelope};
use serde_json::{Map, Value};
use specgraph_core::extremal::{
    candidate_spectral_radius, char_poly_even_factored, corrected_formula_even,
    extremal_search_with_workers, original_formula_even, quotient_spectrum_even_closed_form,
    reproduce_counterexample_with_tol, CounterexampleId, ExtremalInstance, Parity,
};
use specgraph_core::graph::{from_graph6, Graph};
use specgraph_core::jsonnum::float17;
use specgraph_core::linalg::{
    adjacency_matrix, signless_laplacian, spectral_radius, spectrum, SymmetricMatrix,
    DEFAULT_CLUSTER_TOL, DEFAULT_EIG_TOL,
};

/// Agreement tolerance for verification commands unless overridden.
const AGREEMENT_TOL: f64 = 1e-8;
/// Tie tolerance for search maximizers unless overridden.
const SEARCH_TIE_TOL: f64 = 1e-7;

#[derive(Parser)]
#[command(
    name = "specgraph",
    about = "Spectra, vertex bipartiteness, extremal spectral-radius formulas and search certificates",
    after_help = "Graphs are given as graph6 text (--graph6), as a family expression \
(--family, grammar: Kn | En | Ks,t | expr + expr | parentheses; '+' is the join), \
or as graph6 lines on stdin for batch spectrum/vb. Set SPECGRAPH_TOL to override \
default tolerances."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clustered eigenvalue spectrum and spectral radius
    Spectrum {
        /// graph6 text, e.g. "Bw"
        #[arg(long)]
        graph6: Option<String>,
        /// family expression, e.g. "K4 + (E3 + E3)"
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixKind::Adjacency)]
        matrix: MatrixKind,
        /// gap below which eigenvalues merge into one cluster
        #[arg(long)]
        cluster_tol: Option<f64>,
    },
    /// Exact vertex bipartiteness and one minimizing deletion set
    Vb {
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long)]
        family: Option<String>,
    },
    /// Rebuild a counterexample instance and verify all of its claims
    Counterexample {
        /// instance id: "2.1" (n=10, k=4) or "2.2" (n=11, k=5)
        #[arg(long)]
        which: String,
    },
    /// Closed-form candidate spectral radius for (n, k)
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        which: FormulaKind,
    },
    /// Exhaustive search certifying the extremal candidate (4 <= n <= 8)
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// worker threads (default: available parallelism)
        #[arg(long)]
        workers: Option<usize>,
        /// spectral radii within this distance count as tied
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Agreement sweep of formulas against the eigensolver for all (n, k)
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ParityFilter::Both)]
        parity: ParityFilter,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Adjacency,
    #[value(name = "signless-laplacian")]
    SignlessLaplacian,
}

impl MatrixKind {
    fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
        }
    }

    fn build(self, g: &Graph) -> SymmetricMatrix {
        match self {
            MatrixKind::Adjacency => adjacency_matrix(g),
            MatrixKind::SignlessLaplacian => signless_laplacian(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaKind {
    Original,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityFilter {
    Even,
    Odd,
    Both,
}

impl ParityFilter {
    fn admits(self, parity: Parity) -> bool {
        match self {
            ParityFilter::Even => parity == Parity::Even,
            ParityFilter::Odd => parity == Parity::Odd,
            ParityFilter::Both => true,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ParityFilter::Even => "even",
            ParityFilter::Odd => "odd",
            ParityFilter::Both => "both",
        }
    }
}

/// SPECGRAPH_TOL, when set and parseable, replaces a default tolerance.
fn env_tol(fallback: f64) -> f64 {
    std::env::var("SPECGRAPH_TOL")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|t: &f64| *t > 0.0)
        .unwrap_or(fallback)
}

fn main() {
    let cli = Cli::parse();
    let envelopes = run(cli.command);
    let mut exit = 0;
    for env in &envelopes {
        env.print();
        exit = exit.max(env.status.exit_code());
    }
    std::process::exit(exit);
}

fn run(command: Command) -> Vec<Envelope> {
    match command {
        Command::Spectrum {
            graph6,
            family,
            matrix,
            cluster_tol,
        } => {
            let cluster_tol = cluster_tol.unwrap_or_else(|| env_tol(DEFAULT_CLUSTER_TOL));
            with_graph_inputs("spectrum", graph6, family, move |g, mut p| {
                p.insert("matrix".into(), Value::String(matrix.name().into()));
                let m = matrix.build(&g);
                let spec = spectrum(&m, cluster_tol);
                let mut result = Map::new();
                result.insert("graph6".into(), Value::String(g.to_graph6()));
                result.insert("n".into(), Value::from(g.n()));
                result.insert(
                    "spectrum".into(),
                    Value::Array(
                        spec.pairs()
                            .iter()
                            .map(|&(v, m)| {
                                Value::Array(vec![Value::Number(float17(v)), Value::from(m)])
                            })
                            .collect(),
                    ),
                );
                result.insert(
                    "spectral_radius".into(),
                    Value::Number(float17(spectral_radius(&m))),
                );
                Envelope::ok("spectrum", p, Value::Object(result))
            })
        }
        Command::Vb { graph6, family } => {
            with_graph_inputs("vb", graph6, family, |g, p| {
                let (vb, witness) = g.vertex_bipartiteness();
                let mut result = Map::new();
                result.insert("graph6".into(), Value::String(g.to_graph6()));
                result.insert("n".into(), Value::from(g.n()));
                result.insert("vb".into(), Value::from(vb));
                result.insert(
                    "witness".into(),
                    Value::Array(
                        specgraph_core::graph::bits(witness)
                            .map(Value::from)
                            .collect(),
                    ),
                );
                Envelope::ok("vb", p, Value::Object(result))
            })
        }
        Command::Counterexample { which } => {
            let p = params([("which", Value::String(which.clone()))]);
            match CounterexampleId::from_label(&which) {
                None => vec![Envelope::error(
                    "counterexample",
                    p,
                    format!("unknown counterexample id {which:?}; use 2.1 or 2.2"),
                )],
                Some(id) => {
                    let report = reproduce_counterexample_with_tol(id, env_tol(AGREEMENT_TOL));
                    let passed = report.confirms_correction();
                    vec![Envelope::verdict(
                        "counterexample",
                        p,
                        report.to_json(),
                        passed,
                    )]
                }
            }
        }
        Command::Formula { n, k, which } => vec![cmd_formula(n, k, which)],
        Command::Search { n, k, workers, tol } => vec![cmd_search(n, k, workers, tol)],
        Command::Sweep { n_max, parity } => vec![cmd_sweep(n_max, parity)],
    }
}

/// Resolves --graph6 / --family, or falls back to reading graph6 lines
/// from stdin, and applies `f` to each resolved graph.
fn with_graph_inputs(
    command: &'static str,
    graph6: Option<String>,
    family: Option<String>,
    f: impl Fn(Graph, Map<String, Value>) -> Envelope,
) -> Vec<Envelope> {
    match (graph6, family) {
        (Some(_), Some(_)) => {
            vec![Envelope::error(
                command,
                Map::new(),
                "give either --graph6 or --family, not both".to_string(),
            )]
        }
        (Some(text), None) => {
            let p = params([("graph6", Value::String(text.clone()))]);
            match from_graph6(&text) {
                Ok(g) => vec![f(g, p)],
                Err(e) => vec![Envelope::error(command, p, e.to_string())],
            }
        }
        (None, Some(expr)) => {
            let p = params([("family", Value::String(expr.clone()))]);
            match family_expr::parse_family(&expr).and_then(|spec| {
                spec.build().map_err(|e| e.to_string())
            }) {
                Ok(g) => vec![f(g, p)],
                Err(e) => vec![Envelope::error(command, p, e)],
            }
        }
        (None, None) => {
            // batch mode: one graph6 string per stdin line
            let mut out = Vec::new();
            let mut line = String::new();
            loop {
                line.clear();
                match std::io::stdin().read_line(&mut line) {
                    Ok(0) => break,
                    Ok(_) => {
                        let text = line.trim();
                        if text.is_empty() {
                            continue;
                        }
                        let p = params([("graph6", Value::String(text.to_string()))]);
                        match from_graph6(text) {
                            Ok(g) => out.push(f(g, p)),
                            Err(e) => out.push(Envelope::error(command, p, e.to_string())),
                        }
                    }
                    Err(e) => {
                        out.push(Envelope::error(
                            command,
                            Map::new(),
                            format!("stdin read error: {e}"),
                        ));
                        break;
                    }
                }
            }
            if out.is_empty() {
                out.push(Envelope::error(
                    command,
                    Map::new(),
                    "no input: pass --graph6/--family or pipe graph6 lines to stdin".to_string(),
                ));
            }
            out
        }
    }
}

fn cmd_formula(n: usize, k: usize, which: FormulaKind) -> Envelope {
    let name = match which {
        FormulaKind::Original => "original",
        FormulaKind::Corrected => "corrected",
    };
    let p = params([
        ("n", Value::from(n)),
        ("k", Value::from(k)),
        ("which", Value::String(name.into())),
    ]);
    let value = match which {
        FormulaKind::Original => original_formula_even(n, k),
        FormulaKind::Corrected => candidate_spectral_radius(n, k),
    };
    match value {
        Err(e) => Envelope::error("formula", p, e.to_string()),
        Ok(v) => {
            let parity = match ExtremalInstance::new(n, k) {
                Ok(inst) if inst.parity() == Parity::Odd => "odd",
                _ => "even",
            };
            let mut result = Map::new();
            result.insert("n".into(), Value::from(n));
            result.insert("k".into(), Value::from(k));
            result.insert("which".into(), Value::String(name.into()));
            result.insert("parity".into(), Value::String(parity.into()));
            result.insert("value".into(), Value::Number(float17(v)));
            Envelope::ok("formula", p, Value::Object(result))
        }
    }
}

fn cmd_search(n: usize, k: usize, workers: Option<usize>, tol: Option<f64>) -> Envelope {
    let workers = workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(std::num::NonZeroUsize::get)
            .unwrap_or(1)
    });
    let tol = tol.unwrap_or_else(|| env_tol(SEARCH_TIE_TOL));
    let p = params([
        ("n", Value::from(n)),
        ("k", Value::from(k)),
        ("workers", Value::from(workers)),
        ("tol", Value::Number(float17(tol))),
    ]);
    match extremal_search_with_workers(n, k, tol, workers) {
        Err(e) => Envelope::error("search", p, e.to_string()),
        Ok(cert) => {
            let passed = cert.candidate_matches;
            Envelope::verdict("search", p, cert.to_json(), passed)
        }
    }
}

fn cmd_sweep(n_max: usize, parity: ParityFilter) -> Envelope {
    let tol = env_tol(AGREEMENT_TOL);
    let p = params([
        ("n_max", Value::from(n_max)),
        ("parity", Value::String(parity.name().into())),
    ]);
    let mut rows = Vec::new();
    let mut all_pass = true;
    for n in 4..=n_max {
        for k in 1..=n.saturating_sub(3) {
            let inst = ExtremalInstance::new(n, k).expect("k <= n-3 by loop bounds");
            if !parity.admits(inst.parity()) {
                continue;
            }
            let (row, pass) = sweep_row(&inst, tol);
            all_pass &= pass;
            rows.push(row);
        }
    }
    let mut result = Map::new();
    result.insert("n_max".into(), Value::from(n_max));
    result.insert("parity".into(), Value::String(parity.name().into()));
    result.insert("rows".into(), Value::Array(rows));
    result.insert("all_pass".into(), Value::Bool(all_pass));
    Envelope::verdict("sweep", p, Value::Object(result), all_pass)
}

/// One sweep line: every closed-form route must agree with the full
/// eigensolver's spectral radius within `tol`.
fn sweep_row(inst: &ExtremalInstance, tol: f64) -> (Value, bool) {
    let (n, k) = (inst.n(), inst.k());
    let rho_full = spectral_radius(&adjacency_matrix(&inst.build()));
    let mut row = Map::new();
    row.insert("n".into(), Value::from(n));
    row.insert("k".into(), Value::from(k));
    let pass = match inst.parity() {
        Parity::Even => {
            row.insert("parity".into(), Value::String("even".into()));
            let closed = corrected_formula_even(n, k).expect("even instance");
            let quot_closed = quotient_spectrum_even_closed_form(n, k).expect("even instance");
            // largest root of the printed factored characteristic
            // polynomial, via the quadratic formula on its second factor
            let m = (n - k) as f64 / 2.0;
            let b = 1.0 - m - k as f64;
            let c = -(k as f64 + 1.0) * m;
            let char_root = ((-b + (b * b - 4.0 * c).sqrt()) / 2.0).max(-m);
            // residual of the printed polynomial at the closed-form roots
            let residual = quot_closed
                .iter()
                .map(|&l| char_poly_even_factored(n, k, l).expect("even").abs())
                .fold(0.0, f64::max);
            let residual_scale = 1e-6 * (1.0 + m).powi(3).max(1.0);
            let numeric_quot = inst
                .quotient()
                .eigenvalues(DEFAULT_EIG_TOL)
                .expect("3x3 eigensolve");
            row.insert("rho_full".into(), Value::Number(float17(rho_full)));
            row.insert("rho_closed_form".into(), Value::Number(float17(closed)));
            row.insert(
                "rho_quotient_spectrum".into(),
                Value::Number(float17(quot_closed[0])),
            );
            row.insert("rho_char_poly".into(), Value::Number(float17(char_root)));
            row.insert(
                "rho_quotient_numeric".into(),
                Value::Number(float17(numeric_quot[0])),
            );
            row.insert(
                "char_poly_residual".into(),
                Value::Number(float17(residual)),
            );
            (closed - rho_full).abs() <= tol
                && (quot_closed[0] - rho_full).abs() <= tol
                && (char_root - rho_full).abs() <= tol
                && (numeric_quot[0] - rho_full).abs() <= tol
                && residual <= residual_scale
        }
        Parity::Odd => {
            row.insert("parity".into(), Value::String("odd".into()));
            let quot_max = inst
                .quotient()
                .eigenvalues(DEFAULT_EIG_TOL)
                .expect("3x3 eigensolve")[0];
            row.insert("rho_full".into(), Value::Number(float17(rho_full)));
            row.insert("rho_quotient_numeric".into(), Value::Number(float17(quot_max)));
            (quot_max - rho_full).abs() <= tol
        }
    };
    row.insert("pass".into(), Value::Bool(pass));
    (Value::Object(row), pass)
}
