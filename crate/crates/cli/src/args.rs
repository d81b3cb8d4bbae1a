use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "homext",
    version,
    about = "Exact homomorphism counts and extremal checks on small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Output mode [default: human]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for verify/scan/profile [default: all cores]
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// key=value file; flags win over its entries
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Enumeration cache directory [default: ./.homext-cache]
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Do not read or write the enumeration cache
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest order for cubic families
    #[arg(long, global = true)]
    pub cap_cubic: Option<usize>,
    /// Largest order for 4-regular families
    #[arg(long, global = true)]
    pub cap_quartic: Option<usize>,
    /// Largest order for other regular families
    #[arg(long, global = true)]
    pub cap_regular: Option<usize>,
    /// Largest order for unrestricted families
    #[arg(long, global = true)]
    pub cap_all: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKindArg {
    Ind,
    Match,
    Potts,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// hom(G, H) as an exact decimal
    Count {
        /// `G H`, or just `H` together with --file
        #[arg(num_args = 1..=2, required = true)]
        graphs: Vec<String>,
        /// Read the source graphs from a graph6 file (one per line)
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also print the v(G)-th root (approximate)
        #[arg(long)]
        root: bool,
    },
    /// Independence, matching or Potts polynomial coefficients
    Poly {
        graph: String,
        #[arg(long, value_enum, default_value = "ind")]
        kind: PolyKindArg,
        /// Colors for the Potts polynomial
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
    /// Occupancy fraction of the hard-core model
    Occupancy {
        graph: String,
        /// Fugacity as a/b
        #[arg(long)]
        lambda: String,
        /// Also print the neighbor occupancy distribution p_0..p_Δ
        #[arg(long)]
        distribution: bool,
    },
    /// Check one bound on a graph or on every graph of a family
    Verify {
        #[arg(long)]
        bound: String,
        #[arg(long, conflicts_with = "graph")]
        family: Option<String>,
        /// Named graph, .g6 file or .lg file
        #[arg(long)]
        graph: Option<String>,
        #[command(flatten)]
        params: BoundArgs,
        /// Skip family members outside the bound's hypothesis instead of failing
        #[arg(long)]
        skip_outside: bool,
    },
    /// List a family as graph6
    Enumerate {
        #[arg(long)]
        family: String,
        /// Write graph6 lines here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a family for violations of a conjecture
    Scan {
        #[arg(long)]
        conjecture: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<usize>,
        /// Comma separated x = e^{-β} values, e.g. 1/4,1/2
        #[arg(long)]
        x_grid: Option<String>,
        /// Target graph H
        #[arg(long)]
        target: Option<String>,
    },
    /// Rank hom(G,H)^{1/v(G)} over a regular family
    Profile {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        target: String,
        /// Defaults to d-regular graphs on at most 2d vertices
        #[arg(long)]
        family: Option<String>,
        /// Replace H by k disjoint copies for each k, e.g. 1,10,100
        #[arg(long)]
        k_grid: Option<String>,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct BoundArgs {
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    /// Target graph H
    #[arg(long)]
    pub target: Option<String>,
    /// Graph A (loop-power and bigraph-target bounds)
    #[arg(long)]
    pub a: Option<String>,
    /// Graph B (loop-power and bigraph-target bounds)
    #[arg(long)]
    pub b: Option<String>,
}
