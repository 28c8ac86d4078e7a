use clap::{Args, Parser, Subcommand, ValueEnum};

use hecke_core::Family;

#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Canonical basic sets of Hecke algebras of types A, B, D"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the canonical basic set in canonical order.
    BasicSet(QueryArgs),
    /// Count the canonical basic set (or all simple modules with --irr).
    Count(QueryArgs),
    /// Test FLOTW membership of a multipartition.
    Membership(MembershipArgs),
    /// Tabulate Lusztig's a-function on a small Weyl group.
    Afunction(AfunctionArgs),
    /// Check cyclotomic identities, or compute e from a specialization.
    Cyclo(CycloArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, env = "HECKE_FORMAT", default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    A,
    B,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("parameter").required(true).args(["e", "irr"]))]
pub struct QueryArgs {
    /// Weyl group family.
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub family: FamilyArg,

    /// Number of letters for type A, rank for types B and D.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,

    /// u specializes to a primitive e-th root of unity.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub e: Option<u32>,

    /// Characteristic of the target field: 0 or a prime.
    #[arg(long = "char", default_value_t = 0, conflicts_with = "irr")]
    pub characteristic: u64,

    /// Use all simple modules of the generic algebra (the semisimple case).
    #[arg(long)]
    pub irr: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MembershipArgs {
    /// Weight set, e.g. "{4;1,2}".
    #[arg(long)]
    pub weights: String,

    /// Multipartition, e.g. "[3,1]|[2]".
    #[arg(long)]
    pub mp: String,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AfunctionArgs {
    /// Group in Coxeter notation, e.g. A2, B3, D4.
    #[arg(long)]
    pub group: String,

    /// Dump every nonzero structure constant h_{x,y,z} instead of a-values.
    #[arg(long)]
    pub dump_h: bool,

    /// Refuse groups larger than this.
    #[arg(long, default_value_t = hecke_core::kl::DEFAULT_MAX_ORDER)]
    pub max_order: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["e", "order"]))]
pub struct CycloArgs {
    /// Check the Φ-identities for this e.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub e: Option<u32>,

    /// Multiplicative order of the image of u.
    #[arg(long, requires = "characteristic", value_parser = clap::value_parser!(u64).range(1..))]
    pub order: Option<u64>,

    /// Characteristic of the target field: 0 or a prime.
    #[arg(long = "char", requires = "order")]
    pub characteristic: Option<u64>,

    #[command(flatten)]
    pub output: OutputArgs,
}
