//! The `dichroma` command line.

mod commands;
mod input;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dichroma::claims::DEFAULT_SEED;
use thiserror::Error;

pub use report::RunReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: dichroma::FormatError },
    #[error("{path}: {source}")]
    Cnf { path: String, source: dichroma::cnf::CnfError },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Enumeration(#[from] dichroma::enumeration::EnumerationError),
    #[error(transparent)]
    Reduction(#[from] dichroma::reductions::ReductionError),
    #[error(transparent)]
    Surface(#[from] dichroma::surfaces::SurfaceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    D6,
    Arclist,
    Dimacs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    D6,
    Arclist,
}

#[derive(Debug, Parser)]
#[command(name = "dichroma", version, about = "Dicolouring, dicritical census and surface bounds")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Input format; detected from the extension or contents when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "DICHROMA_JOBS")]
    pub jobs: Option<usize>,
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a run report (inputs digest, seed, results, timings) here.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,
    /// Directory for counterexamples written on failure.
    #[arg(long, global = true, value_name = "DIR", default_value = "dichroma-artifacts")]
    pub artifacts: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dichromatic number with a dicolouring certificate.
    Dichi {
        input: PathBuf,
        /// Only decide k-dicolourability.
        #[arg(long)]
        k: Option<usize>,
        /// Write the certificate JSON here.
        #[arg(long, value_name = "PATH")]
        cert: Option<PathBuf>,
    },
    /// Check a dicolouring certificate against a digraph.
    VerifyCert { input: PathBuf, cert: PathBuf },
    /// Decide k-dicriticality with per-arc certificates.
    CriticalCheck {
        input: PathBuf,
        k: usize,
        /// Write the criticality report JSON here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Block structure, cactus and Gallai-forest tests.
    Structure { input: PathBuf },
    /// All k-dicritical oriented graphs of order n, up to isomorphism.
    Census {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = Filter::Vertex)]
        filter: Filter,
        /// Stop at the smallest arc count with a hit.
        #[arg(long)]
        min_arcs_only: bool,
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
        /// Write every dicritical graph found, one digraph6 per line.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Whether every tournament of order n is k-dicolourable.
    Tournaments {
        n: usize,
        k: usize,
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
    },
    /// Bounds on the dichromatic number of oriented graphs on surfaces.
    Bounds {
        /// Surface name such as S0, N1, S5, N10 (repeatable).
        #[arg(long)]
        surface: Vec<String>,
        /// Characteristic range `a..b`, inclusive.
        #[arg(long, allow_hyphen_values = true, value_name = "A..B")]
        c_range: Option<String>,
    },
    /// Reduce a 3-CNF formula to 2-dicolouring.
    Reduce {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Hub)]
        mode: Mode,
        /// Face list JSON of a planar embedding of the incidence graph.
        #[arg(long, value_name = "PATH")]
        embedding: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GadgetKind::Digon)]
        gadget: GadgetKind,
        /// 3-dicritical oriented graph for the oriented gadget.
        #[arg(long, value_name = "PATH")]
        g3: Option<PathBuf>,
        /// Arc of G3 to delete, as `u,v`.
        #[arg(long)]
        arc: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::D6)]
        output_format: GraphFormat,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Write the role map JSON here.
        #[arg(long, value_name = "PATH")]
        roles: Option<PathBuf>,
        /// Solve both sides and check the equivalence.
        #[arg(long)]
        verify: bool,
    },
    /// DIMACS CNF encoding of k-dicolourability.
    Encode { input: PathBuf, k: usize },
    /// Convert between digraph6 and arc lists.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: GraphFormat,
    },
    /// Run the acceptance checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long, value_name = "DIR")]
        checkpoint_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    Vertex,
    Edge,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Hub,
    Planar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Digon,
    Oriented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, argv: &[String]) -> Result<u8, CliError> {
    commands::run(cli, argv)
}
