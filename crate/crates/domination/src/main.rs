//! Command-line front end: exact computation, bound evaluation,
//! constructions, family generation, certificate verification, and the
//! experiment runner.
//!
//! Exit codes: 0 success, 1 violation found (failed audit, guarantee, or
//! certificate check), 2 usage error, 3 infeasible task.

use clap::{Parser, Subcommand, ValueEnum};
use domination::bounds::{evaluate_bound, BoundParams, BOUND_IDS};
use domination::certificates::{check_certificate, Certificate, Variant, Verdict};
use domination::construct::Method;
use domination::error::Error;
use domination::experiment::{rows_to_csv, run_experiment, ExperimentConfig};
use domination::families::FamilySpec;
use domination::graph::{parse_graph, write_edge_list, Graph, GraphFormat};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "domination", version, about = "Domination parameters: exact values, bounds, and randomized constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact parameter values with witness certificates
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// comma-separated list of parameters (gamma, gamma_t, gamma_g,
        /// gamma_r, gamma_tr, gamma_R) or "all"
        #[arg(long)]
        params: String,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Evaluate catalog bounds for a graph
    Bound {
        #[arg(long)]
        input: PathBuf,
        /// evaluate every catalog bound
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// evaluate a single bound by identifier
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Run a construction method
    Construct {
        #[arg(long)]
        input: PathBuf,
        /// one of: random-dom, random-total, random-global, random-roman,
        /// derand-dom, derand-total, derand-global, derand-roman,
        /// restrained-smallorder, trestrained-smallorder,
        /// restrained-matching, trestrained-matching
        #[arg(long)]
        method: String,
        /// sampling probability (default: the closed-form optimum)
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        trials: u64,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Generate a graph from a named family
    Generate {
        /// gnp, alon_global, roman_extremal, path, cycle, complete
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Verify a certificate file against a graph
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Run a configured experiment and write CSV
    Experiment {
        /// JSON configuration file
        #[arg(long)]
        config: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn load_graph(path: &PathBuf, format: Option<FormatArg>) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    let format = match format {
        Some(FormatArg::Edgelist) => GraphFormat::EdgeList,
        Some(FormatArg::Dimacs) => GraphFormat::Dimacs,
        None => {
            // DIMACS files start with problem or comment lines
            let dimacs = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .map(|l| l.starts_with("p ") || l.starts_with("c ") || l.starts_with("e "))
                .unwrap_or(false);
            if dimacs {
                GraphFormat::Dimacs
            } else {
                GraphFormat::EdgeList
            }
        }
    };
    parse_graph(&text, format)
}

fn parse_params(list: &str) -> Result<Vec<Variant>, Error> {
    if list == "all" {
        return Ok(Variant::ALL.to_vec());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            Variant::from_symbol(s)
                .ok_or_else(|| Error::Param(format!("unknown parameter '{s}'")))
        })
        .collect()
}

fn build_family(
    family: &str,
    n: Option<usize>,
    delta: Option<usize>,
    p: Option<f64>,
) -> Result<FamilySpec, Error> {
    let need_n = || n.ok_or_else(|| Error::Param(format!("family '{family}' requires --n")));
    let need_delta =
        || delta.ok_or_else(|| Error::Param(format!("family '{family}' requires --delta")));
    let spec = match family {
        "gnp" => FamilySpec::Gnp {
            n: need_n()?,
            p: p.ok_or_else(|| Error::Param("family 'gnp' requires --p".into()))?,
        },
        "alon_global" => FamilySpec::AlonGlobal { delta: need_delta()? },
        "roman_extremal" => FamilySpec::RomanExtremal { delta: need_delta()? },
        "path" => FamilySpec::Path { n: need_n()? },
        "cycle" => FamilySpec::Cycle { n: need_n()? },
        "complete" => FamilySpec::Complete { n: need_n()? },
        other => return Err(Error::Param(format!("unknown family '{other}'"))),
    };
    spec.validate()?;
    Ok(spec)
}

/// 0 success, 1 violation, 2 usage, 3 infeasible.
fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { input, params, format } => {
            let g = load_graph(&input, format)?;
            let variants = parse_params(&params)?;
            if variants.is_empty() {
                return Err(Error::Param("--params must name at least one parameter".into()));
            }
            let mut out = serde_json::Map::new();
            out.insert("n".into(), g.n().into());
            out.insert("m".into(), g.m().into());
            let mut values = serde_json::Map::new();
            for variant in variants {
                let sol = domination::exact_value(&g, variant)?;
                values.insert(variant.symbol().into(), sol.to_json());
            }
            out.insert("values".into(), values.into());
            println!("{}", serde_json::to_string_pretty(&serde_json::Value::Object(out))?);
            Ok(0)
        }
        Command::Bound { input, all, id, format } => {
            let g = load_graph(&input, format)?;
            let params = BoundParams::from_graph(&g);
            let reports: Vec<_> = match (all, id) {
                (_, Some(id)) => vec![evaluate_bound(&params, &id)?],
                (true, None) | (false, None) => BOUND_IDS
                    .iter()
                    .map(|id| evaluate_bound(&params, id))
                    .collect::<Result<_, _>>()?,
            };
            println!("{}", serde_json::to_string_pretty(&reports)?);
            Ok(0)
        }
        Command::Construct { input, method, p, seed, trials, format } => {
            let g = load_graph(&input, format)?;
            let method = Method::parse(&method)
                .ok_or_else(|| Error::Param(format!("unknown construction method '{method}'")))?;
            let outcome = method.run(&g, p, seed, trials)?;
            println!("{}", serde_json::to_string_pretty(&outcome.to_json())?);
            let violated = outcome
                .guarantee
                .map(|rhs| outcome.size_or_weight as f64 > rhs + 1e-9)
                .unwrap_or(false);
            Ok(if violated { 1 } else { 0 })
        }
        Command::Generate { family, n, delta, p, seed, output } => {
            let spec = build_family(&family, n, delta, p)?;
            let g = domination::generate(&spec, seed)?;
            std::fs::write(&output, write_edge_list(&g))?;
            eprintln!("wrote {} (n = {}, m = {})", output.display(), g.n(), g.m());
            Ok(0)
        }
        Command::Verify { input, cert, format } => {
            let g = load_graph(&input, format)?;
            let cert_text = std::fs::read_to_string(&cert)?;
            let cert_value: serde_json::Value = serde_json::from_str(&cert_text)?;
            let certificate = Certificate::from_json(&cert_value, g.n())?;
            let verdict = check_certificate(&g, &certificate)?;
            println!("{}", serde_json::to_string_pretty(&verdict)?);
            Ok(match verdict {
                Verdict::Valid => 0,
                Verdict::Invalid { .. } => 1,
            })
        }
        Command::Experiment { config, output } => {
            let text = std::fs::read_to_string(&config)?;
            let config: ExperimentConfig = serde_json::from_str(&text)?;
            let result = run_experiment(&config)?;
            std::fs::write(&output, rows_to_csv(&result.rows))?;
            println!("{}", serde_json::to_string_pretty(&result.summaries)?);
            let violated = result.rows.iter().any(|r| {
                r.satisfied == "false"
                    && (r.task == "audit" || r.task.starts_with("construct-"))
            });
            Ok(if violated { 1 } else { 0 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Infeasible { .. } => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}
