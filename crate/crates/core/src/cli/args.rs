use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dpcolor",
    version,
    about = "Exact DP-coloring toolkit for small multigraphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Covers enumerated per connected piece before giving up.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_covers: u64,
    /// Search nodes allowed on a single cover.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub max_nodes: u64,
    /// Worker threads for cover enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph file: graph6, or a JSON multigraph document.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    /// List sizes: a constant, or a file with one integer per vertex.
    /// Defaults to the `h` field of a JSON graph document.
    #[arg(long)]
    pub h: Option<String>,
    /// The parameter k; inferred as max(h) + 1 when omitted.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    EvenCycle,
    Clique,
    OddCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundingArg {
    Truncate,
    HalfEven,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search a cover file for a transversal.
    Solve {
        #[arg(long)]
        cover: PathBuf,
    },
    /// Decide DP h-colorability; writes a bad cover on failure.
    Dpcolor {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lists: ListArgs,
        /// Where to write the bad cover.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Enumerate every matching and every labeling.
        #[arg(long)]
        raw: bool,
    },
    /// Compute the DP chromatic number.
    Chidp {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Test DP k-criticality, or h-minimality when --h is given.
    Critical {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lists: ListArgs,
    },
    /// Potential of a vertex set (the whole graph by default).
    Potential {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lists: ListArgs,
        /// Comma-separated vertex set.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// The tree functional and its preconditions.
    Phi {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lists: ListArgs,
    },
    /// Block structure and GDP/Gallai recognition.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Bound formulas: the comparison table or a single query.
    Bounds {
        /// Print the comparison table.
        #[arg(long)]
        table: bool,
        /// Values of k (comma-separated).
        #[arg(long, value_delimiter = ',', default_values_t = [4usize, 5, 6, 7, 8, 9, 10, 15, 20])]
        k: Vec<usize>,
        /// Source tag for a single query: dirac, gallai, krivelevich, ks, ky, rabern, dp.
        #[arg(long)]
        source: Option<String>,
        /// Vertex count: report the edge bound instead of the coefficient.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = RoundingArg::Truncate)]
        rounding: RoundingArg,
    },
    /// Place a graph in the edge-count trichotomy.
    Audit {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// Run the charge redistribution and check its bounds.
    Discharge {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        lists: ListArgs,
    },
    /// Check that the canonical hard cover is the only bad cover.
    Lemma31 {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
    /// Turn a list assignment into a cover file.
    Listcover {
        #[command(flatten)]
        graph: GraphArgs,
        /// JSON array with one array of color names per vertex.
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}
