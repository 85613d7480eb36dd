//! The `domlab` command line: argument definitions and command runners.
//!
//! Runners write to caller-supplied streams and return the process exit
//! code, so tests can drive them without spawning a process.
//!
//! Exit codes: 0 success, 1 a claim was refuted, 2 usage or format error,
//! 3 bounds only, 4 domain guard (for example γ_pr on a graph with an
//! isolated vertex).

pub mod format;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use domlab_core::paperlab::{ratio_scan, run_suite, scan_pairs, Config, CLAIM_IDS};
use domlab_core::products::{cartesian_product, direct_product};
use domlab_core::{solve, Budget, Error, FamilySpec, Graph, Parameter};

pub use format::{read_graph, write_graph, write_witnesses, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

/// Default solver time budget in milliseconds; `--budget-ms` overrides it.
pub const BUDGET_ENV: &str = "DOMLAB_BUDGET_MS";

#[derive(Debug, Parser)]
#[command(
    name = "domlab",
    version,
    about = "Exact domination parameters on small graphs and products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Direct,
    Cartesian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RatioKind {
    /// γ_pr(G×H) / (γ_pr(G)·γ_pr(H))
    PrProduct,
}

#[derive(Debug, Clone, Copy, Default, clap::Args)]
pub struct BudgetArgs {
    /// Search node limit for exact solvers.
    #[arg(long, value_name = "NODES")]
    pub exact_budget: Option<u64>,
    /// Wall-clock limit per solver call; overrides DOMLAB_BUDGET_MS.
    #[arg(long, value_name = "MS")]
    pub budget_ms: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph from a family spec and write it in canonical form.
    Construct {
        spec: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute one parameter with a certificate.
    Compute {
        /// gamma, gamma_t, gamma_pr, upper_gamma, rho_k or alpha
        parameter: String,
        #[arg(required = true, num_args = 1..=2)]
        graphs: Vec<PathBuf>,
        /// Combine two graph files before solving.
        #[arg(long, value_enum)]
        product: Option<ProductKind>,
        /// Packing radius for rho_k.
        #[arg(long)]
        k: Option<usize>,
        /// Print the certificate as JSON.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the named claim checks.
    VerifyPaper {
        /// `all` or a comma-separated list of claim ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write the report array as JSON; `-` for standard output.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Fill in runtime_ms. Reports are then no longer reproducible.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Tabulate a ratio over self-pairs of a family or over tree pairs.
    Scan {
        /// `trees`, a family name, or a spec with the placeholder n written in braces.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "pr-product")]
        ratio: RatioKind,
        /// Print the scan as JSON.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// An error that ends a command with a given exit code.
#[derive(Debug)]
struct Fail {
    code: i32,
    error: anyhow::Error,
}

impl Fail {
    fn usage(error: impl Into<anyhow::Error>) -> Fail {
        Fail {
            code: EXIT_USAGE,
            error: error.into(),
        }
    }
}

/// Maps core errors: guards are exit 4, budget failures exit 3.
impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::Domain(_) => EXIT_DOMAIN,
            Error::Resource(_) => EXIT_BOUNDS,
            Error::Index { .. } => EXIT_USAGE,
        };
        Fail {
            code,
            error: e.into(),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Fail {
        Fail::usage(e)
    }
}

type Outcome = std::result::Result<i32, Fail>;

/// Runs a parsed command line.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Construct { spec, out: path } => construct(&spec, path.as_deref(), out),
        Command::Compute {
            parameter,
            graphs,
            product,
            k,
            json,
            budget,
        } => compute(&parameter, &graphs, product, k, json, budget, out),
        Command::VerifyPaper {
            suite,
            seed,
            json,
            timings,
            budget,
        } => verify_paper(&suite, seed, json.as_deref(), timings, budget, out),
        Command::Scan {
            family,
            max_n,
            ratio,
            json,
            budget,
        } => scan(&family, max_n, ratio, json, budget, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "domlab: {:#}", f.error);
            f.code
        }
    }
}

/// Resolves the solver budget from flags, the environment and a default.
pub fn resolve_budget(args: BudgetArgs, base: Budget) -> anyhow::Result<Budget> {
    let mut b = base;
    if let Some(n) = args.exact_budget {
        b.max_nodes = Some(n);
    }
    let ms = match args.budget_ms {
        Some(ms) => Some(ms),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<u64>()
                    .with_context(|| format!("{BUDGET_ENV}={v:?} is not a millisecond count"))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(ms) = ms {
        b = b.with_time_limit(Duration::from_millis(ms));
    }
    Ok(b)
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Fail> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Fail::usage),
        _ => Ok(out.write_all(text.as_bytes())?),
    }
}

pub fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn construct(spec: &str, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let spec: FamilySpec = spec.parse().map_err(Fail::usage)?;
    let g = spec.build().map_err(Fail::usage)?;
    write_output(path, &write_graph(&g), out)?;
    Ok(EXIT_OK)
}

fn compute(
    parameter: &str,
    graphs: &[PathBuf],
    product: Option<ProductKind>,
    k: Option<usize>,
    json: bool,
    budget: BudgetArgs,
    out: &mut dyn Write,
) -> Outcome {
    let parameter: Parameter = parameter.parse().map_err(Fail::usage)?;
    if parameter == Parameter::RhoK && k.is_none() {
        return Err(Fail::usage(anyhow::anyhow!("rho_k needs --k")));
    }
    if parameter != Parameter::RhoK && k.is_some() {
        return Err(Fail::usage(anyhow::anyhow!("--k applies to rho_k only")));
    }
    let budget = resolve_budget(budget, Budget::default()).map_err(Fail::usage)?;
    let g = match (graphs, product) {
        ([one], None) => load_graph(one).map_err(Fail::usage)?,
        ([a, b], Some(kind)) => {
            let (a, b) = (
                load_graph(a).map_err(Fail::usage)?,
                load_graph(b).map_err(Fail::usage)?,
            );
            match kind {
                ProductKind::Direct => direct_product(&a, &b)?.0,
                ProductKind::Cartesian => cartesian_product(&a, &b)?.0,
            }
        }
        ([_], Some(_)) => {
            return Err(Fail::usage(anyhow::anyhow!(
                "--product needs two graph files"
            )))
        }
        _ => {
            return Err(Fail::usage(anyhow::anyhow!(
                "two graph files need --product"
            )))
        }
    };
    let cert = solve(&g, parameter, k, &budget)?;
    if json {
        let mut text = serde_json::to_string_pretty(&cert.record()).map_err(Fail::usage)?;
        text.push('\n');
        out.write_all(text.as_bytes())?;
    } else {
        writeln!(out, "{cert}")?;
        out.write_all(write_witnesses([&cert.witness]).as_bytes())?;
    }
    Ok(if cert.exact { EXIT_OK } else { EXIT_BOUNDS })
}

/// Claim ids from `all` or a comma-separated list, validated.
pub fn parse_suite(suite: &str) -> anyhow::Result<Vec<&'static str>> {
    if suite.trim() == "all" {
        return Ok(CLAIM_IDS.to_vec());
    }
    let mut ids = Vec::new();
    for id in suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match CLAIM_IDS.iter().find(|c| **c == id) {
            Some(c) => ids.push(*c),
            None => anyhow::bail!("unknown claim id {id:?}"),
        }
    }
    if ids.is_empty() {
        anyhow::bail!("empty claim list");
    }
    Ok(ids)
}

fn verify_paper(
    suite: &str,
    seed: u64,
    json: Option<&Path>,
    timings: bool,
    budget: BudgetArgs,
    out: &mut dyn Write,
) -> Outcome {
    let ids = parse_suite(suite).map_err(Fail::usage)?;
    let base = Config::default();
    let cfg = Config {
        seed,
        budget: resolve_budget(budget, base.budget).map_err(Fail::usage)?,
    };
    let reports = run_suite(&ids, &cfg, timings)?;
    let json_to_stdout = json.is_some_and(|p| p == Path::new("-"));
    if !json_to_stdout {
        for r in &reports {
            writeln!(out, "{}", r.summary_line())?;
            if !r.notes.is_empty() {
                writeln!(out, "  note: {}", r.notes)?;
            }
        }
    }
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(&reports).map_err(Fail::usage)?;
        text.push('\n');
        write_output(Some(path), &text, out)?;
    }
    let refuted = reports
        .iter()
        .any(|r| r.status == domlab_core::paperlab::Status::Refuted);
    Ok(if refuted { EXIT_REFUTED } else { EXIT_OK })
}

fn scan(
    family: &str,
    max_n: usize,
    ratio: RatioKind,
    json: bool,
    budget: BudgetArgs,
    out: &mut dyn Write,
) -> Outcome {
    let RatioKind::PrProduct = ratio;
    let pairs = scan_pairs(family, max_n).map_err(Fail::usage)?;
    let budget = resolve_budget(budget, Budget::default()).map_err(Fail::usage)?;
    let scan = ratio_scan(&pairs, &budget)?;
    if json {
        let mut text = serde_json::to_string_pretty(&scan).map_err(Fail::usage)?;
        text.push('\n');
        out.write_all(text.as_bytes())?;
        return Ok(EXIT_OK);
    }
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    writeln!(
        out,
        "left\tright\tgamma_pr_left\tgamma_pr_right\tgamma_pr_product\tratio\tstatus"
    )?;
    for r in &scan.rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.left,
            r.right,
            opt(r.gamma_pr_left),
            opt(r.gamma_pr_right),
            opt(r.gamma_pr_product),
            r.ratio.map_or("-".to_string(), |x| format!("{x:.6}")),
            r.status
        )?;
    }
    for (name, idx) in [("min", scan.argmin), ("max", scan.argmax)] {
        if let Some(i) = idx {
            let r = &scan.rows[i];
            writeln!(
                out,
                "{name} {:.6} {} x {}",
                r.ratio.unwrap_or(f64::NAN),
                r.left,
                r.right
            )?;
        }
    }
    writeln!(out, "skipped {}", scan.skipped())?;
    Ok(EXIT_OK)
}
