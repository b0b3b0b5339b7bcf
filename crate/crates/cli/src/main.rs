//! `scrollkit`: construct, verify and tabulate scrolls from the command line.
//!
//! Reports go to stdout, diagnostics to stderr. Exit codes: 0 when every
//! check passes, 1 when any check fails or a run gives up, 2 on usage or
//! input errors.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "scrollkit", version, about = "Exact computations for ruled surfaces in P3")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct GlobalOpts {
    /// Output format; `csv` applies to tables only.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for all randomness; 0 draws one from system entropy and prints it.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Redraws allowed before a random search gives up.
    #[arg(long, global = true, env = "SCROLLKIT_RETRY_BUDGET", default_value_t = 20)]
    retry_budget: u32,
    /// Random integers are drawn from [-N, N].
    #[arg(long, global = true, env = "SCROLLKIT_COEFFICIENT_RANGE", default_value_t = 10)]
    coefficient_range: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
enum Command {
    /// Random smooth curve of bidegree (a, b) and its scroll.
    Construct {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Check a curve or scroll model: a JSON file from `construct`, a
    /// bidegree JSON, or a polynomial in s0, s1, u0, u1.
    Verify {
        /// Input file, or `-` for stdin.
        input: Option<String>,
        /// Polynomial given inline instead of a file.
        #[arg(long, conflicts_with = "input")]
        poly: Option<String>,
        /// Minimum number of rulings in the secancy check.
        #[arg(long, default_value_t = 10)]
        rulings: usize,
    },
    /// Invariants of a scroll of degree d and sectional genus g.
    Invariants {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Genus, degree and dimension bounds.
    Bounds {
        #[command(subcommand)]
        op: BoundOp,
    },
    /// Invariants over all (d, g) with t >= 0, as CSV by default.
    Sweep {
        #[arg(long, default_value_t = 5)]
        d_min: i64,
        #[arg(long, default_value_t = 30)]
        d_max: i64,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 20)]
        sweep_seeds: u32,
        #[arg(long, default_value_t = 4)]
        max_bidegree: u32,
        #[arg(long, default_value_t = 1000)]
        property_cases: u32,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
enum BoundOp {
    /// Least genus of a curve on a very general surface of degree d in P3.
    Eta3 {
        #[arg(long)]
        d: i64,
    },
    /// What is known about the least genus in P^n.
    Eta {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Genus bound for a curve degenerating to a cycle; components as m:g.
    Albanese {
        #[arg(long = "component", value_parser = parse_component, required = true)]
        components: Vec<(i64, i64)>,
    },
    /// Sum of the genera of the limit components.
    LimitSum {
        #[arg(long = "rho", required = true)]
        rhos: Vec<i64>,
    },
    /// Genus floor for a nu-secant curve on a scroll over a genus g curve.
    Multisecant {
        #[arg(long)]
        nu: i64,
        #[arg(long)]
        g: i64,
    },
    /// Dimension bound for an equigeneric family with K.C = kappa.
    Severi {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        kappa: i64,
    },
    /// Dimension of the space of surfaces of degree d in P3.
    LinearSystem {
        #[arg(long)]
        d: i64,
    },
    /// Arithmetic genus of a complete intersection of type (d, n).
    ArithmeticGenus {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
    },
    /// Node count and dimension of nodal plane or quadric sections.
    Nodes {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        g: i64,
    },
    /// Degree bound for curves of genus g on the double curve.
    DegreeBound {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Genus cutoff for boundedness, or a table of cutoffs.
    Threshold {
        #[arg(long, required_unless_present = "table")]
        d: Option<i64>,
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = 6)]
        d_min: i64,
        #[arg(long, default_value_t = 30)]
        d_max: i64,
    },
    /// Geometric genus of a smooth surface of degree d.
    RhoSurface {
        #[arg(long)]
        d: i64,
    },
    /// Lower bound for the genus of the double surface.
    RhoDouble {
        #[arg(long)]
        d: i64,
    },
    /// Genus bound for surfaces in a very general threefold of degree 3d.
    Threefold {
        #[arg(long)]
        d: i64,
    },
}

fn parse_component(s: &str) -> Result<(i64, i64), String> {
    let (m, g) = s.split_once(':').ok_or_else(|| format!("expected m:g, got {s}"))?;
    let m = m.trim().parse().map_err(|e| format!("multiplicity: {e}"))?;
    let g = g.trim().parse().map_err(|e| format!("genus: {e}"))?;
    Ok((m, g))
}

/// Why a run stopped without a report.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// A computation gave up, e.g. an exhausted retry budget.
    Failure(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut global = cli.global.clone();
    if global.seed == 0 {
        global.seed = rand::random::<u64>().max(1);
        eprintln!("seed: {}", global.seed);
    }
    match commands::run(&global, &cli.command) {
        Ok(report) => {
            if let Err(e) = output::emit(&report, &global, &cli.command) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if report.any_failed() { 1 } else { 0 })
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
