//! `psigma` — exact verification of McCool group presentations, their
//! rational cohomology rings, zero-divisor cup-length certificates, and
//! topological-complexity bounds.
//!
//! Exit codes: 0 all executed checks passed, 1 a check failed, 2 usage
//! error, 3 capacity exceeded.

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use psigma_core::algebra::{CapacityTier, Variant};
use psigma_core::tc::GroupFamily;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "psigma",
    version,
    about = "Exact computations for basis-conjugating automorphism groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. JSON is the stable, machine-readable surface.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached graded bases.
    #[arg(
        long,
        global = true,
        env = "PSIGMA_CACHE_DIR",
        default_value = ".psigma-cache"
    )]
    pub cache_dir: PathBuf,

    /// Compute bases fresh, bypassing the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Capacity tier for the full variant.
    #[arg(long, global = true, default_value_t = 5)]
    pub tier_full: usize,

    /// Capacity tier for the plus variant.
    #[arg(long, global = true, default_value_t = 6)]
    pub tier_plus: usize,

    /// Include wall-clock timings in reports. Timed output is not
    /// byte-reproducible across runs.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Full,
    Plus,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Plus => Variant::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Full,
    Plus,
    PlusQuotient,
    Free,
    Integers,
}

impl From<FamilyArg> for GroupFamily {
    fn from(f: FamilyArg) -> GroupFamily {
        match f {
            FamilyArg::Full => GroupFamily::Full,
            FamilyArg::Plus => GroupFamily::Plus,
            FamilyArg::PlusQuotient => GroupFamily::PlusQuotient,
            FamilyArg::Free => GroupFamily::Free,
            FamilyArg::Integers => GroupFamily::Integers,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every McCool relation instance as an automorphism identity.
    VerifyPresentation {
        #[arg(long)]
        n: usize,
        /// Restrict to one generating set; default checks both.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
    },
    /// Check that c = α_{1,n}⋯α_{n-1,n} is central with infinite-order
    /// evidence.
    VerifyCenter {
        #[arg(long)]
        n: usize,
        /// Largest power m for which c^m ≠ id is confirmed.
        #[arg(long, default_value_t = 16)]
        power_bound: u32,
    },
    /// Check the semidirect-product action formula on the upper triangular
    /// generators.
    VerifyAction {
        #[arg(long)]
        n: usize,
    },
    /// Compute (or load) the graded quotient basis and print it.
    Basis {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
    /// Print the Poincaré polynomial of the quotient and compare it with the
    /// closed form.
    Poincare {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
    /// Validate the combinatorial basis degree by degree.
    VerifyBasis {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
    /// Expand and check a zero-divisor cup-length certificate.
    ZclCertificate {
        #[command(subcommand)]
        which: CertificateKind,
    },
    /// Cup length of the quotient algebra, with a witness product.
    CupLength {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
    /// Quadratic dual Hilbert series and the Koszul numerical consistency
    /// test.
    KoszulTest {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Cap on dim(V)^D, the dual word-space width.
        #[arg(long, default_value_t = psigma_core::koszul::DEFAULT_MAX_WORDS)]
        max_words: usize,
    },
    /// Freeness decomposition of the plus-variant algebra over its shifted
    /// subalgebra, with the Hilbert factorization.
    Freeness {
        #[arg(long)]
        n: usize,
    },
    /// Topological-complexity bounds for one group.
    TcReport {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Run the full verification suite for one rank.
    All {
        #[arg(long)]
        n: usize,
        /// Seed for the rewriting-oracle samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random homogeneous elements per variant in the rewriting check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Inspect or maintain the basis cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertificateKind {
    /// The 2n−2 fold product for the full variant.
    #[command(alias = "M")]
    M {
        #[arg(long)]
        n: usize,
    },
    /// The 2n−3 fold product for the plus variant.
    #[command(alias = "N")]
    N {
        #[arg(long)]
        n: usize,
    },
    /// Best-effort search over bar(g) and g⊗g factors.
    Search {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// List cache entries and their validity.
    List,
    /// Remove one entry (no-op if absent).
    Evict {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
    /// Recompute and store one entry unconditionally.
    Rebuild {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        n: usize,
    },
}

impl Cli {
    pub fn tier(&self) -> CapacityTier {
        CapacityTier {
            max_full: self.tier_full,
            max_plus: self.tier_plus,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.render(cli.format));
            if outcome.passed {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
