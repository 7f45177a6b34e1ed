//! `hyperline`: line multigraphs, spectra and certificates for hypergraph files.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails, 2 on usage
//! or input errors.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperline::check::run_checks;
use hyperline::generate::{corpus, random_hypergraph, CORPUS_SEED, CORPUS_SIZE};
use hyperline::io::{emit, parse_str};
use hyperline::line::line_multigraph;
use hyperline::matrices::{line_adjacency_matrix, signless_laplacian};
use hyperline::power::{power_hypergraph_with, PaddingMode, PowerParams};
use hyperline::spectra::{
    collar_certificate_vector, eigenvalues_symmetric, power_spectrum_formula, DEFAULT_TOLERANCE,
};
use hyperline::structure::{
    find_collar_subhypergraph, is_collar, regularity_report, DEFAULT_SEARCH_CAP,
};
use hyperline::{Hypergraph, Result};

#[derive(Parser, Debug)]
#[command(
    name = "hyperline",
    version,
    about = "Line multigraphs and spectra of hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, degrees, regularity and collar status.
    Info {
        /// Hypergraph file, or `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The line multigraph.
    Line {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LineFormat::Edgelist)]
        format: LineFormat,
    },
    /// Eigenvalues of the line adjacency or signless Laplacian matrix.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixKind::LineAdjacency)]
        matrix: MatrixKind,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Runs every applicable check and prints a JSON report.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Builds the power hypergraph, or compares its signless Laplacian spectra.
    Power {
        file: PathBuf,
        #[arg(short = 't', default_value_t = 1)]
        t: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Pad every edge to exactly k vertices instead of adding k − rt to each.
        #[arg(long)]
        pad_to_k: bool,
        #[arg(long, value_enum)]
        spectrum: Option<SpectrumSource>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Collar witness for the whole hypergraph, or a search for a collar inside it.
    Collar {
        file: PathBuf,
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        max_edges: usize,
    },
    /// Random simple connected hypergraph.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        max_card: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs `check` over the seeded random corpus.
    Harness {
        #[arg(long, default_value_t = CORPUS_SEED)]
        seed: u64,
        #[arg(long, default_value_t = CORPUS_SIZE)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LineFormat {
    Edgelist,
    Matrix,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixKind {
    LineAdjacency,
    SignlessLaplacian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumSource {
    Formula,
    Direct,
    Both,
}

fn read_hypergraph(path: &PathBuf) -> Result<Hypergraph> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        parse_str(&text)
    } else {
        hyperline::io::parse_path(path)
    }
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

fn print_json(v: &Value) {
    out(&(serde_json::to_string_pretty(v).expect("valid json") + "\n"));
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn info(h: &Hypergraph) -> Result<Value> {
    let (r, s) = h.rank_corank()?;
    let reg = regularity_report(h);
    let mut warnings = Vec::new();
    if !h.is_connected() {
        warnings.push("hypergraph is disconnected; the spectral theorems assume connectivity");
    }
    if h.has_isolated_vertices() {
        warnings.push("hypergraph has isolated vertices");
    }
    Ok(json!({
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "rank": r,
        "corank": s,
        "degrees": h.degree_profile(),
        "zagreb": h.zagreb_index(),
        "connected": h.is_connected(),
        "uniform": h.uniformity(),
        "linear": reg.linear,
        "regular": reg.regular,
        "edge_regular": reg.edge_regular,
        "skew_edge_regular": reg.skew_edge_regular,
        "collar": is_collar(h).is_some(),
        "warnings": warnings,
    }))
}

fn info_text(v: &Value) -> String {
    let opt = |key: &str| match &v[key] {
        Value::Null => "no".to_string(),
        x => format!("yes ({x})"),
    };
    let mut out = format!(
        "n={} m={} rank={} corank={}\n",
        v["vertices"], v["edges"], v["rank"], v["corank"]
    );
    out += &format!(
        "degrees: {} (min {}, max {}, average {})\n",
        v["degrees"]["degrees"], v["degrees"]["min"], v["degrees"]["max"], v["degrees"]["average"]
    );
    out += &format!("zagreb: {}\n", v["zagreb"]);
    out += &format!("connected: {}\n", v["connected"]);
    out += &match &v["uniform"] {
        Value::Null => "uniform: no\n".to_string(),
        k => format!("uniform: k={k}\n"),
    };
    out += &format!("linear: {}\n", v["linear"]);
    out += &format!("regular: {}\n", opt("regular"));
    out += &format!("edge-regular: {}\n", opt("edge_regular"));
    out += &format!("skew edge-regular: {}\n", opt("skew_edge_regular"));
    out += &format!(
        "collar: {}\n",
        if v["collar"] == true { "yes" } else { "no" }
    );
    for w in v["warnings"].as_array().into_iter().flatten() {
        out += &format!("warning: {}\n", w.as_str().unwrap_or_default());
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Info { file, json } => {
            let v = info(&read_hypergraph(&file)?)?;
            if json {
                print_json(&v);
            } else {
                out(&info_text(&v));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Line { file, format } => {
            let h = read_hypergraph(&file)?;
            let l = line_multigraph(&h);
            match format {
                LineFormat::Edgelist => {
                    let lines: String = l
                        .graph
                        .edges()
                        .map(|e| format!("{} {} {}\n", e.u, e.v, e.multiplicity))
                        .collect();
                    out(&lines);
                }
                LineFormat::Matrix => out(&line_adjacency_matrix(&h).to_text()),
                LineFormat::Json => print_json(&json!({
                    "order": l.order(),
                    "edge_labels": l.edge_labels,
                    "edges": l.graph.edges().collect::<Vec<_>>(),
                    "degrees": l.graph.degrees(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { file, matrix, tol } => {
            let h = read_hypergraph(&file)?;
            let (name, m) = match matrix {
                MatrixKind::LineAdjacency => ("line-adjacency", line_adjacency_matrix(&h)),
                MatrixKind::SignlessLaplacian => ("signless-laplacian", signless_laplacian(&h)),
            };
            let mut v = eigenvalues_symmetric(&m, tol)?.to_json();
            v["matrix"] = json!(name);
            print_json(&v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, tol } => {
            let report = run_checks(&read_hypergraph(&file)?, tol)?;
            print_json(&report.to_json());
            Ok(status(report.pass))
        }
        Command::Power {
            file,
            t,
            k,
            pad_to_k,
            spectrum,
            tol,
        } => {
            let h = read_hypergraph(&file)?;
            let mode = if pad_to_k {
                PaddingMode::PadToK
            } else {
                PaddingMode::Literal
            };
            let p = power_hypergraph_with(&h, PowerParams::new(t, k), mode)?;
            let Some(source) = spectrum else {
                out(&emit(&p));
                return Ok(ExitCode::SUCCESS);
            };
            let direct = eigenvalues_symmetric(&signless_laplacian(&p), tol)?;
            let formula = power_spectrum_formula(&h, t, k, tol)?;
            match source {
                SpectrumSource::Formula => print_json(&json!({"formula": formula.to_json()})),
                SpectrumSource::Direct => print_json(&json!({"direct": direct.to_json()})),
                SpectrumSource::Both => {
                    let deviation = formula.max_deviation(&direct);
                    let agree = deviation.is_some_and(|d| d <= 10.0 * tol);
                    print_json(&json!({
                        "formula": formula.to_json(),
                        "direct": direct.to_json(),
                        "padding": mode,
                        "max_deviation": deviation,
                        "agree": agree,
                    }));
                    return Ok(status(agree));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Collar {
            file,
            search,
            max_edges,
        } => {
            let h = read_hypergraph(&file)?;
            let witness = if search {
                find_collar_subhypergraph(&h, max_edges)?
            } else {
                is_collar(&h)
            };
            match witness {
                None => out("none\n"),
                Some(w) => {
                    let cert = collar_certificate_vector(&h, &w).ok();
                    print_json(&w.to_json(cert.as_ref()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            n,
            m,
            max_card,
            seed,
        } => {
            out(&emit(&random_hypergraph(n, m, max_card, seed)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Harness { seed, count, tol } => {
            let mut failed = Vec::new();
            for (i, h) in corpus(seed, count).iter().enumerate() {
                let report = run_checks(h, tol)?;
                if !report.pass {
                    let names: Vec<&str> = report.failures().map(|e| e.name.as_str()).collect();
                    failed.push(json!({"instance": i, "hypergraph": emit(h), "failures": names}));
                }
            }
            let pass = failed.is_empty();
            print_json(&json!({
                "seed": seed,
                "count": count,
                "passed": count - failed.len(),
                "failed": failed,
                "pass": pass,
            }));
            Ok(status(pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
