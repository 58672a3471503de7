use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "trapredund", version, about = "Trapping-redundancy bounds and trapping-set audits")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Output format of the main report.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Print large numbers as exact decimals in CSV.
    #[arg(long, global = true)]
    pub exact: bool,
    /// Include wall-clock timings (outputs are then not byte-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Worker threads; overrides TRAPREDUND_THREADS.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest m for the LLL bounds, from a preset table or an explicit grid.
    Bounds(BoundsArgs),
    /// Build a parity-check matrix and write it as alist.
    Construct(ConstructArgs),
    /// Exhaustive minimum-b scan over a-subsets of columns.
    Audit(AuditArgs),
    /// Sample a redundant parity-check matrix free of small trapping sets.
    Sample(SampleArgs),
    /// Candidate redundant rows that break a given column set.
    Break(BreakArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantArg {
    Std,
    Hp,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    /// margulis-table1, margulis-table2 or pg-table3.
    #[arg(long, conflicts_with_all = ["n", "k", "a", "b"])]
    pub preset: Option<String>,
    /// Code length.
    #[arg(long, required_unless_present = "preset")]
    pub n: Option<u64>,
    /// Code dimension.
    #[arg(long, required_unless_present = "preset")]
    pub k: Option<u64>,
    /// One or more set sizes, comma separated.
    #[arg(long, value_delimiter = ',', required_unless_present = "preset")]
    pub a: Vec<u64>,
    /// One or more thresholds, comma separated.
    #[arg(long, value_delimiter = ',', required_unless_present = "preset")]
    pub b: Vec<u64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Std)]
    pub variant: VariantArg,
    /// Failure probabilities for the hp variant, e.g. 0.01,1e-20 or 1/100.
    #[arg(long, value_delimiter = ',', default_value = "0.01")]
    pub epsilon: Vec<String>,
    /// Bound elementary trapping sets only.
    #[arg(long)]
    pub elementary: bool,
    /// Minimum distance; enforces a <= (d-1)/2.
    #[arg(long)]
    pub d: Option<u64>,
    /// Skip the a <= (d-1)/2 check.
    #[arg(long)]
    pub allow_any_a: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub code: CodeKind,
    /// Where to write the JSON descriptor (default: the output path with a
    /// .json extension).
    #[arg(long)]
    pub descriptor: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "lowercase", tag = "code")]
pub enum CodeKind {
    /// Type-I projective geometry code PG(m, q).
    Pg {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        q: u32,
    },
    /// (3,6)-regular Margulis code over SL2(F_p).
    Margulis {
        #[arg(long, default_value_t = 11)]
        p: u32,
    },
    /// Extended Golay [24,12,8].
    Golay24,
    /// Hamming [7,4,3].
    Hamming7,
    /// Repetition [n,1,n].
    Repetition {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct AuditArgs {
    /// alist path or builtin: golay24, hamming7, repetition:N, pg:M:Q, margulis:P, table4a, table4b.
    pub source: String,
    /// Set sizes: a list (3,4,6) or a range (3..6, inclusive).
    #[arg(long)]
    pub a: String,
    /// Only count elementary sets.
    #[arg(long)]
    pub elementary: bool,
    /// Cap on C(n, a) * rows per scan.
    #[arg(long, default_value_t = trapredund::trapping::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Also enumerate arcs of the geometry and compare with s(q+2-s).
    #[arg(long)]
    pub arcs: bool,
    /// Geometry of an alist input for --arcs, as M:Q.
    #[arg(long)]
    pub pg: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    /// alist path or builtin code name.
    pub source: String,
    /// Size of the column sets to break.
    #[arg(long)]
    pub a: usize,
    /// No a-set may have between 1 and b-1 odd rows.
    #[arg(long)]
    pub b: usize,
    /// Rows to sample; defaults to the smallest m of the standard bound.
    #[arg(long)]
    pub m: Option<usize>,
    /// Only elementary sets must be broken.
    #[arg(long)]
    pub elementary: bool,
    /// Draws before giving up (exit code 1).
    #[arg(long, default_value_t = 100)]
    pub max_attempts: usize,
    /// Cap on C(n, a) * rows per verification scan.
    #[arg(long, default_value_t = trapredund::trapping::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Where to write the JSON report (default: the output path with a .json
    /// extension, or stderr).
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct BreakArgs {
    /// alist path or builtin code name.
    pub source: String,
    /// Column indices of the set, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "random")]
    pub columns: Vec<usize>,
    /// Use a random set of this many columns (from --seed).
    #[arg(long)]
    pub random: Option<usize>,
    /// Largest number of rows summed per candidate.
    #[arg(long, default_value_t = 3)]
    pub max_combo: usize,
    /// Classify a (12,4) set and list the S1/S2/S3 rows instead.
    #[arg(long)]
    pub expansion: bool,
    /// Write the matrix with the top candidate appended to this alist path.
    #[arg(long)]
    pub append_top: Option<PathBuf>,
}
