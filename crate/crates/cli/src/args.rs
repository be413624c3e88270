use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hhbounds_core::bounds::{ConstantVariant, MForm, Rule};
use hhbounds_core::harness::IntervalSpec;
use hhbounds_core::oracle::{parse_rational, rational_to_f64, Rational};
use hhbounds_core::RuleParameter;

#[derive(Parser, Debug)]
#[command(
    name = "hhbounds",
    version,
    about = "Hermite-Hadamard and Simpson bounds for P-convex functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one bound
    Bound(Box<BoundArgs>),
    /// Run a verification campaign and write a report
    Verify(VerifyArgs),
    /// Randomized counterexample search for one claim
    Search(SearchArgs),
    /// Special means, or a proposition check with --prop
    Means(MeansArgs),
    /// Residual of the kernel identity
    Identity(IdentityArgs),
    /// Grid check of the P-function inequality
    Pconvex(PconvexArgs),
    /// List the claims ledger
    Claims,
}

/// A real number given as an integer, decimal or `p/q`.
#[derive(Debug, Clone)]
pub struct RealArg(pub Rational);

impl RealArg {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.0)
    }
}

impl FromStr for RealArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(RealArg).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy)]
pub enum RuleArg {
    Named(Rule),
    Lambda(f64),
}

impl RuleArg {
    pub fn named(self) -> Option<Rule> {
        match self {
            RuleArg::Named(r) => Some(r),
            RuleArg::Lambda(_) => None,
        }
    }

    pub fn parameter(self) -> Result<RuleParameter> {
        Ok(match self {
            RuleArg::Named(r) => r.parameter(),
            RuleArg::Lambda(l) => RuleParameter::new(l)?,
        })
    }
}

impl FromStr for RuleArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "midpoint" => Ok(RuleArg::Named(Rule::Midpoint)),
            "trapezoid" => Ok(RuleArg::Named(Rule::Trapezoid)),
            "simpson" => Ok(RuleArg::Named(Rule::Simpson)),
            _ => match s.strip_prefix("lambda=") {
                Some(v) => RealArg::from_str(v).map(|r| RuleArg::Lambda(r.to_f64())),
                None => Err(format!(
                    "expected midpoint, trapezoid, simpson or lambda=<x>, got `{s}`"
                )),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum VariantArg {
    #[default]
    Stated,
    Derived,
}

impl From<VariantArg> for ConstantVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Stated => ConstantVariant::Stated,
            VariantArg::Derived => ConstantVariant::Derived,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum FormArg {
    WithQ,
    #[default]
    Relaxed,
}

impl From<FormArg> for MForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::WithQ => MForm::WithQ,
            FormArg::Relaxed => MForm::Relaxed,
        }
    }
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// midpoint, trapezoid, simpson or lambda=<x>
    #[arg(long)]
    pub rule: RuleArg,
    #[arg(long, allow_hyphen_values = true)]
    pub a: RealArg,
    #[arg(long, allow_hyphen_values = true)]
    pub b: RealArg,
    /// Power-mean exponent; selects the power-mean bound
    #[arg(long)]
    pub q: Option<RealArg>,
    /// Constant variant of the power-mean bound [default: stated]
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// |f''(a)|
    #[arg(long)]
    pub ma: Option<RealArg>,
    /// |f''(b)|
    #[arg(long)]
    pub mb: Option<RealArg>,
    /// sup |f''|; selects the bounded-M form
    #[arg(long)]
    pub m: Option<RealArg>,
    #[arg(long, value_enum, default_value_t = FormArg::Relaxed)]
    pub form: FormArg,
    /// Classical bound: needs --k and --K, or --d4 for simpson
    #[arg(long)]
    pub classical: bool,
    /// Lower bound on f''
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<RealArg>,
    /// Upper bound on f''
    #[arg(long = "K", allow_hyphen_values = true)]
    pub big_k: Option<RealArg>,
    /// sup |f''''|
    #[arg(long)]
    pub d4: Option<RealArg>,
    /// Width exponent of the classical Simpson bound
    #[arg(long, default_value_t = 4)]
    pub p: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated claim ids, or `all`
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Comma-separated function ids, or `all`
    #[arg(long, default_value = "all")]
    pub functions: String,
    /// Overridden by HHBOUNDS_SEED when set
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random intervals added to the fixed ones
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    /// Comma-separated λ values [default: k/20 and 1/3, 2/3]
    #[arg(long)]
    pub lambda_grid: Option<String>,
    /// Comma-separated q values [default: 1,3/2,2,4,10]
    #[arg(long)]
    pub q_grid: Option<String>,
    /// Fixed intervals `a:b,...` [default: 0:1,1:2]
    #[arg(long)]
    pub intervals: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub claim: String,
    #[arg(long, default_value = "all")]
    pub functions: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long)]
    pub lambda_grid: Option<String>,
    #[arg(long)]
    pub q_grid: Option<String>,
    /// Intervals tried first, `a:b,...`
    #[arg(long)]
    pub intervals: Option<String>,
}

#[derive(Args, Debug)]
pub struct MeansArgs {
    #[arg(long)]
    pub a: RealArg,
    #[arg(long)]
    pub b: RealArg,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i32>,
    /// Check proposition 1, 2 or 3 for x^n
    #[arg(long)]
    pub prop: Option<u8>,
    #[arg(long)]
    pub q: Option<RealArg>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long)]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: RealArg,
    #[arg(long, allow_hyphen_values = true)]
    pub b: RealArg,
    #[arg(long)]
    pub lambda: RealArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PconvexTarget {
    /// f itself
    F,
    /// |f''|^q
    D2,
}

#[derive(Args, Debug)]
pub struct PconvexArgs {
    #[arg(long)]
    pub function: String,
    #[arg(long, allow_hyphen_values = true)]
    pub a: RealArg,
    #[arg(long, allow_hyphen_values = true)]
    pub b: RealArg,
    #[arg(long, value_enum, default_value_t = PconvexTarget::F)]
    pub target: PconvexTarget,
    #[arg(long)]
    pub q: Option<RealArg>,
    #[arg(long, default_value_t = 41)]
    pub nx: usize,
    #[arg(long, default_value_t = 21)]
    pub nlam: usize,
}

/// `all`, an empty string, or comma-separated ids.
pub fn parse_id_list(text: &str, all: impl FnOnce() -> Vec<String>) -> Vec<String> {
    if text.trim() == "all" {
        return all();
    }
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}

pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let values: Vec<Rational> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        bail!("empty list");
    }
    Ok(values)
}

pub fn parse_interval_list(text: &str) -> Result<Vec<IntervalSpec>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let Some((a, b)) = item.split_once(':') else {
                bail!("interval `{item}` is not of the form a:b");
            };
            Ok(IntervalSpec::new(
                parse_rational(a.trim())?,
                parse_rational(b.trim())?,
            )?)
        })
        .collect()
}
