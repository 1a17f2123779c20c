use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pizza_core::sections::Body;
use pizza_core::tol::{EPS_FAIR, EPS_SEC};

#[derive(Debug, Parser)]
#[command(name = "pizza", version, about = "Fair partitions of nested convex pizzas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for direction scans. Outputs do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a fixture pizza document.
    Generate(GenerateArgs),
    /// Cut a pizza into n slices of equal dough and equal topping (n even).
    Partition(PartitionArgs),
    /// Sample the α-sections of one body and the other body's fraction.
    Profile(ProfileArgs),
    /// Find a line that is an α-section of the topping and cuts at least α of
    /// the dough (at most α with --corollary, sectioning the dough instead).
    Theorem1(Theorem1Args),
    /// Follow a chain of α-section chords around a body's boundary.
    Chain(ChainArgs),
    /// Recompute the slices of a partition tree and check fairness.
    Verify(VerifyArgs),
    /// Check that concentric disks have no fair first cut for odd counts.
    Deficiency(DeficiencyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    DiskPair,
    SquarePair,
    OffsetSquare,
    RandomPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BodyArg {
    Topping,
    Dough,
}

impl From<BodyArg> for Body {
    fn from(b: BodyArg) -> Body {
        match b {
            BodyArg::Topping => Body::Topping,
            BodyArg::Dough => Body::Dough,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Pizza document (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Directory for the output files; created if missing.
    #[arg(long)]
    pub output_dir: PathBuf,
    #[arg(long, default_value_t = 1024)]
    pub theta_samples: usize,
    /// Section tolerance on area fractions.
    #[arg(long, default_value_t = EPS_SEC)]
    pub eps_sec: f64,
    /// Also write an SVG drawing.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Topping radius (disk-pair).
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    /// Dough radius (disk-pair).
    #[arg(long = "big-r", default_value_t = 2.0)]
    pub big_r: f64,
    /// Vertices per disk (disk-pair).
    #[arg(long, default_value_t = 512)]
    pub disk_vertices: usize,
    /// Topping side (square-pair, offset-square).
    #[arg(long)]
    pub a: Option<f64>,
    /// Dough side (square-pair, offset-square).
    #[arg(long, default_value_t = 2.0)]
    pub b: f64,
    /// Topping lower-left corner (offset-square).
    #[arg(long, default_value_t = 1.1)]
    pub x: f64,
    #[arg(long, default_value_t = 0.2)]
    pub y: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub name: Option<String>,
    /// Write `pizza.json` here instead of printing to stdout.
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub n: usize,
    /// Relative fairness tolerance.
    #[arg(long, default_value_t = EPS_FAIR)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub alpha: f64,
    /// Body whose α-sections are sampled.
    #[arg(long, value_enum, default_value_t = BodyArg::Topping)]
    pub body: BodyArg,
}

#[derive(Debug, Args)]
pub struct Theorem1Args {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub corollary: bool,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub alpha: f64,
    /// Number of chords.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = BodyArg::Topping)]
    pub body: BodyArg,
    /// Arc length from the body's first vertex to the starting point.
    #[arg(long, default_value_t = 0.0)]
    pub start: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Partition tree document (JSON).
    #[arg(long)]
    pub tree: PathBuf,
    #[arg(long, default_value_t = EPS_FAIR)]
    pub tol: f64,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeficiencyArgs {
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long = "big-r", default_value_t = 2.0)]
    pub big_r: f64,
    #[arg(long, default_value_t = 512)]
    pub disk_vertices: usize,
    /// Fractions to test; repeat the flag for several.
    #[arg(long = "beta", default_values_t = [1.0 / 3.0, 0.2, 0.4])]
    pub betas: Vec<f64>,
    #[arg(long)]
    pub output_dir: PathBuf,
}
