//! `lefschetz`: batch front end. Reports are `key = value` lines on stdout, errors go to stderr.
//! Exit codes: 0 success, 1 precondition violation, 2 parse error, 3 property or suite failure.

mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "lefschetz", version, about = "Combinatorial Lefschetz numbers of simplicial self-maps")]
pub struct Cli {
    /// Emit the report as one flat JSON object.
    #[arg(long, global = true)]
    pub json: bool,
    /// Append boundary and chain matrices to the report.
    #[arg(long, global = true)]
    pub dump_chain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a complex and, optionally, a vertex map on it.
    Check { complex: PathBuf, map: Option<PathBuf> },
    /// Euler characteristic and cell counts.
    Euler { complex: PathBuf },
    /// Combinatorial Euler characteristic of a cell set.
    EulerComb {
        complex: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Betti numbers over the rationals.
    Homology { complex: PathBuf },
    /// Lefschetz number of a simplicial self-map.
    Lefschetz { complex: PathBuf, map: PathBuf },
    /// Lefschetz number of a cell set.
    LefschetzComb {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// Skip the compatibility check.
        #[arg(long)]
        no_enforce: bool,
    },
    /// Lefschetz number of the pair (X, C) for a subcomplex C.
    Relative {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        sub: PathBuf,
    },
    /// Lefschetz number of the induced map on X/A, with the cofibration identity.
    QuotientLefschetz {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        sub: PathBuf,
    },
    /// Fixed-point index of an open cell set.
    Index {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        open: PathBuf,
        /// Treat the map as a stand-in for one asserted fixed-point-free on the frontier.
        #[arg(long)]
        asserted_free: bool,
    },
    /// Fixed-point certificate for a cell set.
    Certify {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Fixed-point certificate for the complement of a corona.
    CertifyUnbounded {
        complex: PathBuf,
        map: PathBuf,
        #[arg(long)]
        corona: PathBuf,
        /// graph, surface, surface-boundary or wedge.
        #[arg(long)]
        class: String,
        /// Comma-separated chi_c of each wedge summand.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        /// Use the conjectural rule and skip structural class checks.
        #[arg(long)]
        assume_conjecture: bool,
        /// Treat the map as a stand-in for one asserted fixed-point-free on the open part.
        #[arg(long)]
        asserted_free: bool,
    },
    /// det(I - A) for a torus map given on first homology.
    TorusLefschetz {
        #[arg(long)]
        p: usize,
        /// Rows separated by `;`, entries by spaces.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Lower bound for fixed points on a connected sum of two p-tori.
    NielsenBound {
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true)]
        matrix1: String,
        /// Defaults to the first matrix.
        #[arg(long, allow_hyphen_values = true)]
        matrix2: Option<String>,
        /// Lefschetz number of the map on the separating sphere.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        sphere_lambda: i64,
    },
    /// Barycentric subdivision statistics.
    Subdivide {
        complex: PathBuf,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        /// Also report chi_c of this cell set before and after.
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// Recompute every worked-example fixture and compare with its expected value.
    PaperSuite,
    /// Seeded randomized checks of the algebraic identities.
    Proptest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, outcome) = commands::run(&cli);
    print!("{}", report.render(cli.json));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
