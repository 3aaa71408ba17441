use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuspgate_core::curve::WeierstrassModel;
use cuspgate_core::{Rat, Sign};

// Aliases keep clap from treating these comma-separated values as repeated flags.
pub type SignList = Vec<Sign>;
pub type IntList = Vec<i64>;
pub type RatList = Vec<Rat>;
pub type FactorList = Vec<(u64, Sign)>;

#[derive(Debug, Parser)]
#[command(name = "cuspgate", version, about = "Cuspidal orders, Atkin-Lehner signs, parity gates and conductor searches")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of a cuspidal divisor class on X0(N), N square-free
    CuspOrder(CuspOrderArgs),
    /// Invariant factors of the cuspidal subgroup of J0(N), N square-free
    CuspGroup(LevelArgs),
    /// Ligozat's conditions for an eta quotient
    EtaCheck(EtaArgs),
    /// Divisor of an eta quotient on X0(N), N square-free
    EtaDivisor(EtaArgs),
    /// Fixed points and cusp action of the Atkin-Lehner involution w_r
    AlFixed(AlFixedArgs),
    /// Admissible Atkin-Lehner sign assignments, optionally expanding a product of (1 +- w_r)
    AlSigns(AlSignsArgs),
    /// Parity gate for odd congruence number / odd modular degree at level N
    Gate(LevelArgs),
    /// Refined gate for N = pq with full rational 2-torsion
    GatePq(GatePqArgs),
    /// Exhaustive search over one diophantine family
    Search(SearchArgs),
    /// Tate's algorithm at one prime
    Tate(TateArgs),
    /// Conductor with local data at every bad prime
    Conductor(CurveArgs),
    /// Rational 2-torsion and the reduction-mod-2 bound
    Torsion2(Torsion2Args),
    /// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
    CurveTransform(Box<TransformArgs>),
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    #[arg(long)]
    pub level: u64,
}

#[derive(Debug, Args)]
pub struct CuspOrderArgs {
    #[arg(long)]
    pub level: u64,
    /// One of + or - per prime factor, ascending; the divisor sum over d | N of (prod of signs) P_d
    #[arg(long, allow_hyphen_values = true, value_parser = parse_signs, conflicts_with = "divisor", required_unless_present = "divisor")]
    pub signs: Option<SignList>,
    /// Coefficients of P_d for the divisors d of N in ascending order
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
    pub divisor: Option<IntList>,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    #[arg(long)]
    pub level: u64,
    /// Exponents r_d for the divisors d of N in ascending order; fractions allowed
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat_list)]
    pub exponents: RatList,
}

#[derive(Debug, Args)]
pub struct AlFixedArgs {
    #[arg(long)]
    pub level: u64,
    #[arg(long)]
    pub r: u64,
}

#[derive(Debug, Args)]
pub struct AlSignsArgs {
    #[arg(long)]
    pub level: u64,
    /// Factors r:s expanded as prod (1 + s w_r) P_1, e.g. 2:-,7:+
    #[arg(long, allow_hyphen_values = true, value_parser = parse_factor_list)]
    pub expand: Option<FactorList>,
}

#[derive(Debug, Args)]
pub struct GatePqArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    NeumannSetzer,
    #[value(name = "2p")]
    TwoP,
    #[value(name = "8p")]
    EightP,
    #[value(name = "4pq")]
    FourPq,
    Z2z4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Upper end of the outer parameter: m, k, p, the prime-power bound, or the pq bound
    #[arg(long)]
    pub max: Option<u64>,
    /// |p^alpha - q^beta| for the 4pq family
    #[arg(long, default_value_t = 8)]
    pub difference: u64,
    /// Worker threads; the merged output does not depend on it
    #[arg(long, env = "CUSPGATE_JOBS", default_value = "1")]
    pub jobs: NonZeroUsize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Weierstrass coefficients a1,a2,a3,a4,a6
    #[arg(long, allow_hyphen_values = true, value_parser = parse_curve)]
    pub curve: WeierstrassModel,
}

#[derive(Debug, Args)]
pub struct TateArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_curve)]
    pub curve: WeierstrassModel,
    #[arg(long)]
    pub prime: u64,
}

#[derive(Debug, Args)]
pub struct Torsion2Args {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_curve)]
    pub curve: WeierstrassModel,
    /// A torsion order to test against the reduction mod 2
    #[arg(long)]
    pub claimed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_curve)]
    pub curve: WeierstrassModel,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, default_value = "1")]
    pub u: Rat,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, default_value = "0")]
    pub r: Rat,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, default_value = "0")]
    pub s: Rat,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, default_value = "0")]
    pub t: Rat,
    /// A point x,y on the input model to carry across
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat_list)]
    pub point: Option<RatList>,
}

fn parse_curve(s: &str) -> Result<WeierstrassModel, String> {
    s.parse()
}

fn parse_signs(s: &str) -> Result<SignList, String> {
    s.chars().map(|c| Sign::from_char(c).ok_or_else(|| format!("expected + or -, found {c:?}"))).collect()
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("invalid integer {x:?}")))
        .collect()
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse().map_err(|_| format!("invalid rational {s:?}"))
}

fn parse_rat_list(s: &str) -> Result<RatList, String> {
    s.split(',').map(parse_rat).collect()
}

fn parse_factor_list(s: &str) -> Result<FactorList, String> {
    s.split(',')
        .map(|item| {
            let (r, sign) = item.split_once(':').ok_or_else(|| format!("expected r:sign, found {item:?}"))?;
            let r = r.trim().parse().map_err(|_| format!("invalid divisor {r:?}"))?;
            let sign = match parse_signs(sign.trim())?.as_slice() {
                [s] => *s,
                _ => return Err(format!("expected a single sign in {item:?}")),
            };
            Ok((r, sign))
        })
        .collect()
}
