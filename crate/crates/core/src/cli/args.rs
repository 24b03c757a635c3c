use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chains::PhiShape;
use crate::congruent::FamilyShape;
use crate::exactnum::{parse_integer, parse_rational, Integer, Rational};

#[derive(Debug, Parser)]
#[command(name = "qf", version, about = "Exact constructions for diagonal quartic equations")]
pub struct Cli {
    /// Run every search on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Congruent-number certificate from one of the three families.
    Congruent(CongruentArgs),
    /// Points on v² = u³ − n²u and the quartic they map to.
    Ec(EcArgs),
    /// One of the three surface constructions.
    Surface(SurfaceArgs),
    /// Build and verify a solution for a named equation.
    Solve(SolveArgs),
    /// Expand a family witness into a many-variable diagonal equation.
    Expand(ExpandArgs),
    /// Chains of equal values and the equations they produce.
    Chain(ChainArgs),
    /// Check a solution file against a form.
    Verify(VerifyArgs),
    /// Bounded searches.
    #[command(subcommand)]
    Search(SearchCommand),
}

fn integer(s: &str) -> Result<Integer, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn family(s: &str) -> Result<FamilyShape, String> {
    FamilyShape::from_family_label(s).ok_or_else(|| format!("unknown family `{s}`, expected i, ii or iii"))
}

fn phi(s: &str) -> Result<PhiShape, String> {
    s.parse().map_err(|e: crate::chains::ChainError| e.to_string())
}

fn rational_pair(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    Ok((rational(a.trim())?, rational(b.trim())?))
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = family)]
    pub family: Option<FamilyShape>,
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub a: Option<Integer>,
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub b: Option<Integer>,
}

#[derive(Debug, Args)]
pub struct CongruentArgs {
    #[arg(long, value_parser = family)]
    pub family: FamilyShape,
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub a: Integer,
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub b: Integer,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub n: Option<Integer>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub v: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct EcArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Also report k·P.
    #[arg(long, value_parser = integer, allow_hyphen_values = true)]
    pub k: Option<Integer>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceChoice {
    Prop26,
    Lemma27,
    Lemma28,
}

#[derive(Debug, Args)]
pub struct SurfaceInputs {
    #[command(flatten)]
    pub point: PointArgs,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Quartic triple X⁴ − n²Y⁴ = K².
    #[arg(long = "x", value_parser = integer, allow_hyphen_values = true)]
    pub big_x: Option<Integer>,
    #[arg(long = "y", value_parser = integer, allow_hyphen_values = true)]
    pub big_y: Option<Integer>,
    #[arg(long = "k", value_parser = integer, allow_hyphen_values = true)]
    pub big_k: Option<Integer>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub s: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub t: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub clear_denominators: bool,
    /// Include the parametric solution and check it symbolically.
    #[arg(long)]
    pub symbolic: bool,
    /// Also write the result to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long, value_enum)]
    pub kind: SurfaceChoice,
    #[command(flatten)]
    pub inputs: SurfaceInputs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// eq16, eq17, eq18, eq19_variant, eq19, eq20, surface21, surface38,
    /// lemma28 or remark_family.
    #[arg(long)]
    pub equation: String,
    #[command(flatten)]
    pub inputs: SurfaceInputs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Witness parameter s of the two-term family.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    pub s: Rational,
    /// Point at which to evaluate the expansion.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    pub t: Rational,
    /// Only report the term count for an m-term witness.
    #[arg(long)]
    pub count: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    pub t: Rational,
    #[arg(long, default_value_t = 1)]
    pub s: u8,
    /// Ternary form per block: 2z4 or z4.
    #[arg(long, value_parser = phi, value_delimiter = ',', default_values = ["2z4", "2z4"])]
    pub phi: Vec<PhiShape>,
    /// Family parameters `a,b` per block; defaults to each block's arguments.
    #[arg(long = "params", value_parser = rational_pair, allow_hyphen_values = true)]
    pub params: Vec<(Rational, Rational)>,
    /// Solve the three six-variable equations instead.
    #[arg(long)]
    pub corollary: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Form file; defaults to the `form` field of the solution file.
    #[arg(long)]
    pub form: Option<PathBuf>,
    #[arg(long)]
    pub solution: PathBuf,
    /// Coordinates that must be nonzero.
    #[arg(long, value_delimiter = ',')]
    pub required_nonzero: Vec<usize>,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// All primitive solutions of a form up to a height.
    Brute {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        height: u64,
    },
    /// Groups of triples with equal values of a ternary form.
    Chain {
        #[arg(long, value_parser = phi)]
        phi: PhiShape,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        height: u64,
    },
    /// Identity 2n² = Σ cᵢgᵢ⁴ for a family value n(a, b).
    Splitting {
        #[arg(long, value_parser = family)]
        family: FamilyShape,
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true)]
        signature: Vec<Rational>,
        #[arg(long, default_value_t = 4)]
        max_exponent: u32,
        #[arg(long, default_value_t = 4)]
        max_coeff: u32,
        #[arg(long, default_value_t = 1)]
        max_denominator: u32,
        #[arg(long)]
        no_binomials: bool,
        #[arg(long)]
        non_homogeneous: bool,
    },
    /// Smallest-y congruent certificate for n.
    Congruent {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        bound: u64,
    },
}
