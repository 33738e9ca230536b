use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "incmin", version, about = "Inc-images, compressions and f-vector chains of set families")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// Input file; `-` or nothing reads standard input.
#[derive(Debug, Clone, Args)]
pub struct Input {
    #[arg(value_name = "FILE")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inc-images of families.
    #[command(subcommand)]
    Inc(IncCommand),
    /// Squashed order, ranks and the Borel order.
    #[command(subcommand)]
    Order(OrderCommand),
    /// Replace a family by the initial segment of the same size.
    Compress {
        /// Compress inside the sets whose elements all exceed K.
        #[arg(long, value_name = "K")]
        above: Option<u32>,
        #[command(flatten)]
        input: Input,
    },
    /// Left or right partial compression.
    #[command(subcommand)]
    Partial(PartialCommand),
    /// Alternate partial compressions until the family is stable.
    Fixpoint {
        /// Maximum number of partial-compression steps.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Numeric shadow and Inc-image sizes.
    #[command(subcommand)]
    Numeric(NumericCommand),
    /// f-vector feasibility.
    #[command(subcommand)]
    Fvector(FvectorCommand),
    /// Inc-invariant chains of complexes and their f-vectors.
    #[command(subcommand)]
    Chain(ChainCommand),
    /// Operations on a single simplicial complex.
    #[command(subcommand)]
    Complex(ComplexCommand),
    /// Exhaustive and randomized checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Counterexample searches.
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Debug, Subcommand)]
pub enum IncCommand {
    /// Inc(F).
    Image(Input),
    /// Inc applied STEPS times.
    Iterate {
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrderCommand {
    /// Position of a set in squashed order, starting at 1.
    Rank {
        /// Elements of the set; read from input when omitted.
        elements: Vec<u32>,
    },
    /// The M-th D-set in squashed order.
    Unrank {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: usize,
    },
    /// Compare two sets in squashed order.
    Cmp {
        /// First set, e.g. "1 2 4".
        left: String,
        /// Second set.
        right: String,
    },
    /// Whether LEFT <= RIGHT coordinatewise.
    Borel { left: String, right: String },
}

#[derive(Debug, Subcommand)]
pub enum PartialCommand {
    /// Compress every slice with a fixed smallest element.
    Left(Input),
    /// Compress every slice with a fixed largest element.
    Right(Input),
}

#[derive(Debug, Subcommand)]
pub enum NumericCommand {
    /// Size of the shadow of the size-M initial segment of D-sets.
    Shadow {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: usize,
    },
    /// Size of the Inc-image of the size-M initial segment of D-sets.
    Inc {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: usize,
    },
    /// Greedy D-binomial representation of M.
    Rep {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FvectorCommand {
    /// Whether an f-vector belongs to some simplicial complex.
    Check(Input),
}

#[derive(Debug, Subcommand)]
pub enum ChainCommand {
    /// Check an f-vector chain, or a chain of complexes (JSON) for Inc-invariance.
    Check(Input),
    /// Build compressed complexes realizing a feasible f-vector chain.
    Construct(Input),
    /// For each step of a chain of complexes, whether Inc(Δ_n) = Δ_{n+1}.
    Stabilize(Input),
}

#[derive(Debug, Subcommand)]
pub enum ComplexCommand {
    /// f-vector of a complex.
    Fvector(Input),
    /// Inc(Δ).
    Inc(Input),
    /// Gradewise compression.
    Compress(Input),
    /// Subsets of [N] that are not faces.
    NonFaces {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Worker threads for the sweep.
    #[arg(long, env = "INC_KK_JOBS")]
    pub jobs: Option<usize>,
    /// File of `key = value` lines supplying defaults for these flags.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Report wall-clock time (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// |Inc(F)| >= |Inc(C(F))| for every family of D-subsets of [N].
    Main {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        /// Only families of this size.
        #[arg(long, conflicts_with = "all_m")]
        m: Option<usize>,
        /// Every family size (the default when --m is absent).
        #[arg(long)]
        all_m: bool,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Slice formulas for Inc and partial compressions on random families.
    Identities {
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest element of the sampled sets.
        #[arg(long)]
        max_element: Option<u32>,
        /// Grades to sample, e.g. 2,3,4.
        #[arg(long, value_delimiter = ',')]
        grades: Option<Vec<usize>>,
        /// Check this one family instead of sampling.
        #[arg(long, value_name = "FILE")]
        family: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
    /// Inc(C(u)) = C(u+1) and Inc(B(u)) = B(u+1) for all small u.
    Segments {
        #[arg(long)]
        max_element: Option<u32>,
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
    /// Inc keeps shifted families shifted and initial segments initial.
    Structure {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Families of size M with |Inc(F)| equal to the numeric bound.
    Equality {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// A family F and index i with Inc(S_i(F)) and S_i(Inc(F)) incomparable.
    ShiftNoninclusion {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        /// Largest family size to try.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
}
