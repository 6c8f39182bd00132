use std::path::PathBuf;

use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand};
use sboxforge::BitPermutation;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "sboxforge",
    version,
    about = "Key-dependent clone s-boxes and their algebraic properties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a clone of a seed s-box from a key or explicit permutations.
    #[command(group(ArgGroup::new("mode").required(true).args(["key", "sigma1"])))]
    Clone {
        seed: PathBuf,
        /// Key as an even-length hex string.
        #[arg(long, conflicts_with_all = ["sigma1", "sigma2"])]
        key: Option<String>,
        /// Input-bit permutation, e.g. 1,2,0,3, or `identity`.
        #[arg(long, requires = "sigma2")]
        sigma1: Option<PermSpec>,
        /// Output-bit permutation, same syntax as --sigma1.
        #[arg(long, requires = "sigma1")]
        sigma2: Option<PermSpec>,
        /// Retry with perturbed permutations until the clone has no fixed
        /// or reverse fixed points.
        #[arg(long)]
        remove_fixed_points: bool,
        /// Cap on retries; defaults to (n!)^2.
        #[arg(long, requires = "remove_fixed_points")]
        max_attempts: Option<u128>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write entries as 0x-prefixed hex.
        #[arg(long)]
        hex: bool,
    },
    /// Report bijectivity, fixed points, nonlinearity, SAC and BIC.
    Analyze {
        sbox: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the two permutations a key selects for width n.
    Derive {
        #[arg(long)]
        key: String,
        #[arg(long)]
        n: u32,
    },
    /// Sweep the permutation-pair space of a seed and write one CSV row per clone.
    #[command(group(ArgGroup::new("plan").required(true).args(["all", "sample"])))]
    Enumerate {
        seed: PathBuf,
        /// Every (sigma1, sigma2) pair; only for n <= 4.
        #[arg(long)]
        all: bool,
        /// Number of uniformly drawn pairs.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        rng_seed: u64,
        /// Compare each clone's report with the seed's.
        #[arg(long)]
        check_invariance: bool,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a clone has the same properties as its seed.
    Verify { seed: PathBuf, clone: PathBuf },
}

/// A permutation given on the command line. `identity` defers its size
/// until the seed's width is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermSpec {
    Identity,
    Explicit(BitPermutation),
}

impl PermSpec {
    pub fn resolve(&self, n: usize) -> BitPermutation {
        match self {
            PermSpec::Identity => BitPermutation::identity(n),
            PermSpec::Explicit(p) => p.clone(),
        }
    }
}

impl FromStr for PermSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("identity") {
            return Ok(PermSpec::Identity);
        }
        s.parse::<BitPermutation>()
            .map(PermSpec::Explicit)
            .map_err(|e| e.to_string())
    }
}
