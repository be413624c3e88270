//! Right-hand sides: P-convexity bounds (single-exponent and power-mean
//! families), their midpoint/trapezoid/Simpson specialisations, the
//! `|f''| <= M` forms, the classical enclosures and the bound comparator.
//!
//! The power-mean family exists in two constant variants. `Stated` carries the
//! `/48` normalisation printed with the theorem; `Derived` carries the `/24`
//! normalisation obtained by substituting the moment integrals into the
//! power-mean chain, which coincides with the single-exponent bound at `q = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::kernel::{is_small_lambda, RuleParameter};
use crate::oracle::power_mean_sum_f64;
use crate::real::{cube, int, ratio, square, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointData {
    m_a: f64,
    m_b: f64,
}

impl EndpointData {
    pub fn new(m_a: f64, m_b: f64) -> Result<Self> {
        if !(m_a >= 0.0 && m_b >= 0.0 && m_a.is_finite() && m_b.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "endpoint data",
                reason: format!(
                    "|f''(a)| and |f''(b)| must be finite and nonnegative, got {m_a}, {m_b}"
                ),
            });
        }
        Ok(Self { m_a, m_b })
    }

    /// `|f''(a)|`, `|f''(b)|` from raw second-derivative values.
    pub fn from_second_derivatives(d2a: f64, d2b: f64) -> Result<Self> {
        Self::new(d2a.abs(), d2b.abs())
    }

    pub fn m_a(&self) -> f64 {
        self.m_a
    }

    pub fn m_b(&self) -> f64 {
        self.m_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerExponent(f64);

impl PowerExponent {
    pub const ONE: Self = Self(1.0);

    pub fn new(q: f64) -> Result<Self> {
        if !(q >= 1.0 && q.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "q",
                reason: format!("must be finite and >= 1, got {q}"),
            });
        }
        Ok(Self(q))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Optional derivative information: `M = sup|f''|`, `k <= f'' <= K`, `sup|f⁽⁴⁾|`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct DerivativeEnvelope {
    pub sup_abs_d2: Option<f64>,
    pub lower_d2: Option<f64>,
    pub upper_d2: Option<f64>,
    pub sup_abs_d4: Option<f64>,
}

impl DerivativeEnvelope {
    pub fn validate(&self) -> Result<()> {
        if let (Some(lo), Some(hi)) = (self.lower_d2, self.upper_d2) {
            if lo > hi {
                return Err(Error::InvalidParameter {
                    name: "envelope",
                    reason: format!("lower bound {lo} exceeds upper bound {hi}"),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantVariant {
    Stated,
    Derived,
}

impl ConstantVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Stated => "stated",
            Self::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Midpoint,
    Trapezoid,
    Simpson,
}

impl Rule {
    /// The λ that turns the deviation functional into this rule's error.
    pub fn lambda<T: Real>(self) -> T {
        match self {
            Self::Midpoint => T::zero(),
            Self::Trapezoid => T::one(),
            Self::Simpson => ratio(1, 3),
        }
    }

    pub fn parameter(self) -> RuleParameter {
        match self {
            Self::Midpoint => RuleParameter::MIDPOINT,
            Self::Trapezoid => RuleParameter::TRAPEZOID,
            Self::Simpson => RuleParameter::SIMPSON,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MForm {
    /// `M · c · 2^(1/q)`.
    WithQ,
    /// `2^(1/q) <= 2` applied.
    Relaxed,
}

/// Width exponent of the classical Simpson bound: `4` is the standard
/// `(b-a)⁴/2880`, `2` reproduces the printed `(b-a)²/2880`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpsonPower {
    Quadratic,
    #[default]
    Quartic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalBound {
    /// Two-sided enclosure of the signed rule error.
    Enclosure { lower: f64, upper: f64 },
    /// Upper bound on the absolute rule error.
    Upper(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    NewBetter,
    Same,
    ClassicalBetter,
}

// Generic closed forms.

/// `8λ³ - 3λ + 1` on the small branch, `3λ - 1` on the large one.
pub fn lambda_shape<T: Real>(lam: &T) -> T {
    if is_small_lambda(lam) {
        int::<T>(8) * cube(lam) - int::<T>(3) * lam.clone() + T::one()
    } else {
        int::<T>(3) * lam.clone() - T::one()
    }
}

pub fn theorem5_bound<T: Real>(width: &T, lam: &T, m_a: &T, m_b: &T) -> T {
    square(width) * lambda_shape(lam) * ratio(1, 24) * (m_a.clone() + m_b.clone())
}

/// Everything in the power-mean bound except `(m_a^q + m_b^q)^(1/q)`.
pub fn theorem6_prefactor<T: Real>(width: &T, lam: &T, variant: ConstantVariant) -> T {
    let denom = match variant {
        ConstantVariant::Stated => 48,
        ConstantVariant::Derived => 24,
    };
    square(width) * lambda_shape(lam) * ratio(1, denom)
}

pub fn corollary_prefactor<T: Real>(rule: Rule, width: &T, variant: ConstantVariant) -> T {
    theorem6_prefactor(width, &rule.lambda::<T>(), variant)
}

/// Prefactor of the `|f''| <= M` forms, to be multiplied by `M` and, for
/// [`MForm::WithQ`], by `2^(1/q)`.
pub fn bounded_m_prefactor<T: Real>(rule: Rule, width: &T, form: MForm) -> T {
    let denom = match (rule, form) {
        (Rule::Midpoint, MForm::WithQ) => 48,
        (Rule::Midpoint, MForm::Relaxed) => 24,
        (Rule::Trapezoid, MForm::WithQ) => 24,
        (Rule::Trapezoid, MForm::Relaxed) => 12,
        (Rule::Simpson, MForm::WithQ) => 162,
        (Rule::Simpson, MForm::Relaxed) => 81,
    };
    square(width) * ratio(1, denom)
}

/// `[k/3·((b-a)/2)², K/3·((b-a)/2)²]` for the trapezoid gap.
pub fn trapezoid_enclosure<T: Real>(width: &T, lower: &T, upper: &T) -> (T, T) {
    let c = square(width) * ratio(1, 12);
    (c.clone() * lower.clone(), c * upper.clone())
}

/// `[γ(b-a)²/24, Γ(b-a)²/24]` for the midpoint gap.
pub fn midpoint_enclosure<T: Real>(width: &T, lower: &T, upper: &T) -> (T, T) {
    let c = square(width) * ratio(1, 24);
    (c.clone() * lower.clone(), c * upper.clone())
}

pub fn simpson_classical<T: Real>(width: &T, sup_abs_d4: &T, power: SimpsonPower) -> T {
    let w2 = square(width);
    let wp = match power {
        SimpsonPower::Quadratic => w2,
        SimpsonPower::Quartic => square(&w2),
    };
    wp * sup_abs_d4.clone() * ratio(1, 2880)
}

// Floating-point entry points.

pub fn bound_theorem5(domain: &Interval, lam: RuleParameter, e: EndpointData) -> f64 {
    theorem5_bound(&domain.width(), &lam.get(), &e.m_a, &e.m_b)
}

pub fn bound_theorem6(
    domain: &Interval,
    lam: RuleParameter,
    q: PowerExponent,
    e: EndpointData,
    variant: ConstantVariant,
) -> f64 {
    theorem6_prefactor(&domain.width(), &lam.get(), variant)
        * power_mean_sum_f64(e.m_a, e.m_b, q.get())
}

pub fn bound_corollary(
    rule: Rule,
    domain: &Interval,
    q: PowerExponent,
    e: EndpointData,
    variant: ConstantVariant,
) -> f64 {
    bound_theorem6(domain, rule.parameter(), q, e, variant)
}

pub fn bound_bounded_m(
    rule: Rule,
    domain: &Interval,
    q: PowerExponent,
    env: &DerivativeEnvelope,
    form: MForm,
) -> Result<f64> {
    let m = env.sup_abs_d2.ok_or(Error::MissingData("sup |f''| (M)"))?;
    let base = bounded_m_prefactor(rule, &domain.width(), form) * m;
    Ok(match form {
        MForm::WithQ => base * 2f64.powf(1.0 / q.get()),
        MForm::Relaxed => base,
    })
}

pub fn bound_classical(
    rule: Rule,
    domain: &Interval,
    env: &DerivativeEnvelope,
    power: SimpsonPower,
) -> Result<ClassicalBound> {
    env.validate()?;
    let w = domain.width();
    let pair = || -> Result<(f64, f64)> {
        Ok((
            env.lower_d2
                .ok_or(Error::MissingData("lower bound on f''"))?,
            env.upper_d2
                .ok_or(Error::MissingData("upper bound on f''"))?,
        ))
    };
    Ok(match rule {
        Rule::Trapezoid => {
            let (k, big_k) = pair()?;
            let (lower, upper) = trapezoid_enclosure(&w, &k, &big_k);
            ClassicalBound::Enclosure { lower, upper }
        }
        Rule::Midpoint => {
            let (g, big_g) = pair()?;
            let (lower, upper) = midpoint_enclosure(&w, &g, &big_g);
            ClassicalBound::Enclosure { lower, upper }
        }
        Rule::Simpson => {
            let d4 = env.sup_abs_d4.ok_or(Error::MissingData("sup |f''''|"))?;
            ClassicalBound::Upper(simpson_classical(&w, &d4, power))
        }
    })
}

/// Relative tie tolerance `1e-14·(1 + classical)`.
pub fn compare_bounds(new_bound: f64, classical_bound: f64) -> Result<Comparison> {
    for (name, v) in [
        ("new bound", new_bound),
        ("classical bound", classical_bound),
    ] {
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "bound",
                reason: format!("{name} must be finite and nonnegative, got {v}"),
            });
        }
    }
    let tie = 1e-14 * (1.0 + classical_bound);
    Ok(if (new_bound - classical_bound).abs() <= tie {
        Comparison::Same
    } else if new_bound < classical_bound {
        Comparison::NewBetter
    } else {
        Comparison::ClassicalBetter
    })
}
