//! The `gridemb` command line.
//!
//! Every subcommand writes one report, either as a JSON object
//! `{"command", "result", "timing"}` or as flattened `path<TAB>value` lines.
//! Only `timing` varies between identical runs. Exit codes: 0 success,
//! 1 property violated, 2 invalid input, 3 search budget exceeded.

mod output;
mod run;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cover::CoverKind;
use crate::graph::Family;
use crate::grid::GridBox;

pub use output::{flatten_tsv, ExitCode};
pub use run::run;

#[derive(Debug, Parser)]
#[command(name = "gridemb", version)]
#[command(about = "Lipschitz and locally injective maps from finite graphs into integer grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub output: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProviderKind {
    Solver,
    Ambient,
    Supplied,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph file: edge list, or `v`/`e` lines with coordinates
    #[arg(conflicts_with = "family")]
    pub graph: Option<PathBuf>,

    /// Generated graph, e.g. `cycle:6`, `chunk:0..5,0..5`, `random:0..20,0..20:0.7:1`
    #[arg(long)]
    pub family: Option<Family>,

    /// Add every grid edge between coordinate vertices
    #[arg(long)]
    pub auto_edges: bool,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Search nodes per dimension
    #[arg(long, default_value_t = 10_000_000)]
    pub max_nodes: u64,

    #[arg(long, default_value_t = 30_000)]
    pub time_limit_ms: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, connectivity, diameter and ball growth of a graph
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
    },

    /// Smallest grid dimension the graph embeds into
    Embdim {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Cross-check against brute force (at most 7 vertices)
        #[arg(long)]
        oracle: bool,
    },

    /// Find an embedding, in a given dimension or the smallest one found
    Embed {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        dim: Option<usize>,
        /// Also write the bare map file here
        #[arg(long)]
        save_map: Option<PathBuf>,
    },

    /// Tabulate the fold into the box of side R over a window
    Fold {
        #[arg(long)]
        radius: u64,
        /// Window of input points, e.g. `-4..4` or `-2..2,-2..2`
        #[arg(long, allow_hyphen_values = true)]
        window: GridBox,
    },

    /// Extend a partial 1-Lipschitz map to the whole graph
    Extend {
        #[command(flatten)]
        graph: GraphArgs,
        /// Partial map file
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        save_map: Option<PathBuf>,
    },

    /// Build a cover and report its scale separation
    Cover {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "net")]
        cover: CoverKind,
        /// Target radius R; the cover is validated at scale 3R
        #[arg(long, default_value_t = 1)]
        radius: u64,
        /// Brick side or net separation L (default 3R + 1)
        #[arg(long)]
        scale: Option<u64>,
        /// Required bound on the weak diameter of scale components
        #[arg(long)]
        bound: Option<usize>,
    },

    /// Cover-based 1-Lipschitz, R-locally injective map
    Pipeline {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        radius: u64,
        #[arg(long, default_value = "trivial")]
        cover: CoverKind,
        /// Brick side or net separation L (default 3R + 1)
        #[arg(long)]
        scale: Option<u64>,
        /// Default: ambient when the graph has coordinates, else solver
        #[arg(long, value_enum)]
        provider: Option<ProviderKind>,
        /// Grid dimension for the solver provider (default: searched)
        #[arg(long)]
        dim: Option<usize>,
        /// Embedding file for the supplied provider
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        save_map: Option<PathBuf>,
    },

    /// Concatenate two maps and check the max-norm identity
    Merge {
        /// First map; its tags are kept
        #[arg(long)]
        map: PathBuf,
        #[arg(long = "with")]
        with: PathBuf,
        /// Optional graph for Lipschitz checks of all three maps
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        save_map: Option<PathBuf>,
    },

    /// Run verifiers on a map file
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        map: PathBuf,
        /// Lipschitz constant to check
        #[arg(long)]
        lipschitz: Option<u64>,
        /// Radius of local injectivity to check
        #[arg(long)]
        injective: Option<usize>,
        #[arg(long)]
        embedding: bool,
        /// Check ||f(u) - f(v)|| >= dist^(1-eps) beyond distance r0
        #[arg(long)]
        lower_bound: bool,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        r0: usize,
        /// Extract the displacement cocycle and check its identities
        #[arg(long)]
        cocycle: bool,
        /// Sampled triples for cocycles on large graphs
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },

    /// Which vertices sit at each offset of a window around a vertex
    Chart {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        vertex: usize,
        #[arg(long, allow_hyphen_values = true)]
        window: GridBox,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Embdim { .. } => "embdim",
            Command::Embed { .. } => "embed",
            Command::Fold { .. } => "fold",
            Command::Extend { .. } => "extend",
            Command::Cover { .. } => "cover",
            Command::Pipeline { .. } => "pipeline",
            Command::Merge { .. } => "merge",
            Command::Verify { .. } => "verify",
            Command::Chart { .. } => "chart",
        }
    }
}
