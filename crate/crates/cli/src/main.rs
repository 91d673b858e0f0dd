//! `tyz`: enumerate stable multidigraphs, evaluate z(G), and run the
//! verification suites.
//!
//! Exit status is 0 on success, 1 when a verification suite reports a
//! failure, and 2 for usage, parse and I/O errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tyz_core::catalog::{check_weight, enumerate_weight_cached, expansion, records_for};
use tyz_core::enumerate::classify_graphs;
use tyz_core::eulerian::{
    arborescence_count, cycle_decomposition_poly, euler_tour_count, is_balanced,
    out_degree_factorial_product,
};
use tyz_core::spectral::charpoly;
use tyz_core::verify::{run_suite, Report, Suite};
use tyz_core::zeta::det_a_minus_i;
use tyz_core::{
    format_graph, parse_graph, z, z_family, ConnectivityClass, Error, FamilySpec, MultiDigraph,
};

/// Weight 5 has 589 graphs. A release build handles it in well under a
/// second, a debug build in a few seconds; the budget is five minutes.
const SLOW_WEIGHT: usize = 5;

#[derive(Parser)]
#[command(
    name = "tyz",
    version,
    about = "Stable multidigraphs and the coefficient function z(G)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Write output to PATH instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,

    /// Accept semistable (not only stable) graphs in --graph arguments.
    #[arg(long, global = true)]
    semistable: bool,

    /// Permit weight-5 operations.
    #[arg(long, global = true)]
    allow_slow: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the stable graphs of one weight. JSON output is a catalog in
    /// JSON-lines form.
    Enumerate {
        #[arg(long)]
        weight: usize,
    },
    /// Count all, connected, strongly connected, and det(A - I) != 0 graphs.
    Classify {
        #[arg(long)]
        weight: usize,
    },
    /// Evaluate z(G).
    Z {
        /// Adjacency matrix, rows separated by ';', e.g. "0 2;2 0".
        #[arg(long)]
        graph: String,
    },
    /// Characteristic polynomial det(lambda I - A), leading coefficient first.
    Charpoly {
        #[arg(long)]
        graph: String,
    },
    /// Euler tours, in-tree counts and cycle decompositions.
    Euler {
        #[arg(long)]
        graph: String,
    },
    /// The formal sum a_k = sum z(G) G.
    Expansion {
        #[arg(long)]
        weight: usize,
    },
    /// Run a verification suite, or `all`.
    Verify {
        /// table2, weight2, weight3, weight4, bernoulli, unitball, oracle,
        /// best, families, or all.
        suite: String,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Closed-form z for a named family next to the value from its matrix.
    Families {
        /// A, B, C, K, D, Kmn, loops, two-vertex.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
    },
}

/// Command output in a shape every format can render.
struct Output {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
    /// Print `json` (an array) one element per line.
    json_lines: bool,
    /// Extra line after a table.
    footer: Option<String>,
    exit: u8,
}

impl Output {
    fn new(headers: Vec<&'static str>, rows: Vec<Vec<String>>, json: Value) -> Output {
        Output {
            headers,
            rows,
            json,
            json_lines: false,
            footer: None,
            exit: 0,
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json if self.json_lines => {
                let mut s = String::new();
                for v in self.json.as_array().into_iter().flatten() {
                    s.push_str(&v.to_string());
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("csv");
                for r in &self.rows {
                    w.write_record(r).expect("csv");
                }
                String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
            }
            Format::Table => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
                for r in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(r) {
                        *w = (*w).max(cell.len());
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let head: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
                let mut s = line(&head);
                for r in &self.rows {
                    s.push_str(&line(r));
                }
                if let Some(f) = &self.footer {
                    s.push_str(f);
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = out.render(cli.format);
            let written = match &cli.out {
                Some(path) => fs::write(path, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Enumerate { weight } => {
            gate_weight(*weight, cli.allow_slow)?;
            let records = records_for(&enumerate_weight_cached(*weight)?)?;
            let rows = records
                .iter()
                .map(|r| {
                    vec![
                        format_graph(&r.graph()),
                        r.vertices.to_string(),
                        r.edges.to_string(),
                        r.class.as_str().to_string(),
                        r.z.to_string(),
                    ]
                })
                .collect();
            let mut out = Output::new(
                vec!["graph", "vertices", "edges", "class", "z"],
                rows,
                serde_json::to_value(&records).expect("json"),
            );
            out.json_lines = true;
            Ok(out)
        }
        Command::Classify { weight } => {
            gate_weight(*weight, cli.allow_slow)?;
            let c = classify_graphs(&enumerate_weight_cached(*weight)?);
            let row = vec![
                weight.to_string(),
                c.total.to_string(),
                c.connected.to_string(),
                c.strongly_connected.to_string(),
                c.lambda.to_string(),
            ];
            let mut json = serde_json::to_value(c).expect("json");
            json["weight"] = json!(weight);
            Ok(Output::new(
                vec![
                    "weight",
                    "total",
                    "connected",
                    "strongly_connected",
                    "lambda",
                ],
                vec![row],
                json,
            ))
        }
        Command::Z { graph } => {
            let g = read_graph(graph, cli.semistable)?;
            let value = z(&g)?;
            let class = ConnectivityClass::of(&g);
            let det = det_a_minus_i(&g);
            let aut = g.aut_order();
            Ok(Output::new(
                vec!["graph", "class", "det_A_minus_I", "aut_order", "z"],
                vec![vec![
                    format_graph(&g),
                    class.as_str().to_string(),
                    det.to_string(),
                    aut.to_string(),
                    value.to_string(),
                ]],
                json!({
                    "graph": format_graph(&g),
                    "class": class,
                    "det_A_minus_I": det.to_string(),
                    "aut_order": aut,
                    "z": value,
                }),
            ))
        }
        Command::Charpoly { graph } => {
            let g = read_graph(graph, cli.semistable)?;
            let cp = charpoly(&g);
            let coeffs: Vec<String> = cp.coeffs.iter().map(ToString::to_string).collect();
            let rows = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| vec![format!("lambda^{}", cp.degree() - i), c.clone()])
                .collect();
            Ok(Output::new(
                vec!["term", "coefficient"],
                rows,
                json!({ "graph": format_graph(&g), "charpoly": coeffs }),
            ))
        }
        Command::Euler { graph } => {
            let g = read_graph(graph, cli.semistable)?;
            let tours = euler_tour_count(&g);
            let balanced = is_balanced(&g);
            let trees: Vec<String> = (0..g.vertex_count())
                .map(|v| arborescence_count(&g, v).map(|t| t.to_string()))
                .collect::<Result<_, _>>()?;
            let fact = out_degree_factorial_product(&g);
            let decomp = cycle_decomposition_poly(&g);
            Ok(Output::new(
                vec![
                    "graph",
                    "balanced",
                    "euler_tours",
                    "in_trees",
                    "out_factorials",
                    "decompositions",
                ],
                vec![vec![
                    format_graph(&g),
                    balanced.to_string(),
                    tours.to_string(),
                    trees.join(" "),
                    fact.to_string(),
                    decomp.to_string(),
                ]],
                json!({
                    "graph": format_graph(&g),
                    "balanced": balanced,
                    "euler_tours": tours,
                    "in_trees": trees,
                    "out_factorials": fact,
                    "decompositions": decomp,
                }),
            ))
        }
        Command::Expansion { weight } => {
            gate_weight(*weight, cli.allow_slow)?;
            let sum = expansion(*weight)?;
            let rows = sum
                .iter()
                .map(|(g, v)| vec![format_graph(&g), v.to_string()])
                .collect();
            let mut out = Output::new(
                vec!["graph", "z"],
                rows,
                serde_json::to_value(&sum).expect("json"),
            );
            out.footer = Some(format!(
                "{} graphs, {} nonzero",
                sum.len(),
                sum.nonzero_count()
            ));
            Ok(out)
        }
        Command::Verify { suite, max_weight } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            if max_weight.is_some_and(|w| w >= SLOW_WEIGHT) && !cli.allow_slow {
                return Err(Error::SlowWeight(max_weight.unwrap_or(SLOW_WEIGHT)));
            }
            let mut report = Report::default();
            for s in suites {
                let mw = max_weight.filter(|_| s.weight_bounds().is_some());
                report.merge(run_suite(s, mw)?);
            }
            Ok(verify_output(report))
        }
        Command::Families { name, n, m, i, j } => {
            let spec = FamilySpec::from_parts(name, *n, *m, *i, *j)?;
            let g = spec.build()?;
            let closed = z_family(&spec)?;
            let direct = z(&g)?;
            let agree = closed == direct;
            Ok(Output::new(
                vec!["family", "graph", "z_closed_form", "z", "agree"],
                vec![vec![
                    spec.to_string(),
                    format_graph(&g),
                    closed.to_string(),
                    direct.to_string(),
                    agree.to_string(),
                ]],
                json!({
                    "family": spec.to_string(),
                    "graph": format_graph(&g),
                    "z_closed_form": closed,
                    "z": direct,
                    "agree": agree,
                }),
            ))
        }
    }
}

fn verify_output(report: Report) -> Output {
    let rows = report
        .cases
        .iter()
        .map(|c| {
            vec![
                c.suite.to_string(),
                c.case.clone(),
                c.expected.clone(),
                c.actual.clone(),
                if c.pass { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let footer = format!("{} passed, {} failed", report.passed, report.failed);
    let exit = if report.all_passed() { 0 } else { 1 };
    let mut out = Output::new(
        vec!["suite", "case", "expected", "actual", "status"],
        rows,
        serde_json::to_value(&report).expect("json"),
    );
    out.footer = Some(footer);
    out.exit = exit;
    out
}

fn gate_weight(k: usize, allow_slow: bool) -> Result<(), Error> {
    check_weight(k)?;
    if k >= SLOW_WEIGHT && !allow_slow {
        return Err(Error::SlowWeight(k));
    }
    Ok(())
}

fn read_graph(text: &str, semistable: bool) -> Result<MultiDigraph, Error> {
    let g = parse_graph(text)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_semistable() {
        return Err(Error::NotSemistable);
    }
    if !semistable && !g.is_stable() {
        return Err(Error::NotStable);
    }
    Ok(g)
}
