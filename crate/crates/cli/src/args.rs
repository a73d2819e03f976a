//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

use equimatch::polyring::Family;
use equimatch::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "equimatch",
    version,
    about = "Exact equivariant structure constants of projective space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one structure constant C_{i,j}^k.
    Coeff(CoeffArgs),
    /// Expand sigma_i * sigma_j over the classes of P^n.
    Expand(ExpandArgs),
    /// Run verification suites and report witnesses for any failure.
    Verify(VerifyArgs),
    /// List the lattice points of the polytope Q_{i,j}^k.
    Polytope(PolytopeArgs),
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(short)]
    pub i: u32,
    #[arg(short)]
    pub j: u32,
    #[arg(short)]
    pub k: u32,
    /// Computation route for the coefficient.
    #[arg(long, value_enum, default_value_t = RouteArg::Matchings)]
    pub route: RouteArg,
    /// Output variable family; defaults to the route's native family
    /// (beta for matchings, t otherwise). beta output requires the
    /// matchings route.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Ambient dimension n of P^n; omitted means no truncation.
    #[arg(short, long)]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(short)]
    pub i: u32,
    #[arg(short)]
    pub j: u32,
    /// Ambient dimension n of P^n (required: truncation depends on it).
    #[arg(short, long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run; omitted runs all eight.
    #[arg(value_enum)]
    pub suite: Option<SuiteArg>,
    /// Override the index bound of the grid.
    #[arg(long = "max-ij")]
    pub max_ij: Option<u32>,
    /// Override the largest scaling/dilation factor N (scaling, idp).
    #[arg(long = "max-scale")]
    pub max_scale: Option<u32>,
    /// Report format (text or json).
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[arg(short)]
    pub i: u32,
    #[arg(short)]
    pub j: u32,
    #[arg(short)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Matchings,
    Explicit,
    Recurrence,
    Puzzles,
    Tableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Beta,
    T,
}

impl From<FamilyArg> for Family {
    fn from(family: FamilyArg) -> Self {
        match family {
            FamilyArg::Beta => Family::Beta,
            FamilyArg::T => Family::T,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Equivalence,
    Symmetry,
    Snp,
    Scaling,
    Idp,
    Count,
    Associativity,
    Models,
}

impl From<SuiteArg> for Suite {
    fn from(suite: SuiteArg) -> Self {
        match suite {
            SuiteArg::Equivalence => Suite::Equivalence,
            SuiteArg::Symmetry => Suite::Symmetry,
            SuiteArg::Snp => Suite::Snp,
            SuiteArg::Scaling => Suite::Scaling,
            SuiteArg::Idp => Suite::Idp,
            SuiteArg::Count => Suite::Count,
            SuiteArg::Associativity => Suite::Associativity,
            SuiteArg::Models => Suite::Models,
        }
    }
}
