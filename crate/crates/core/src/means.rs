//! Arithmetic, logarithmic and generalized logarithmic means, and the
//! mean-value inequalities obtained by applying the midpoint, trapezoid and
//! Simpson bounds to `f(x) = xⁿ`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{corollary_prefactor, ConstantVariant, Rule};
use crate::error::{Error, Result};
use crate::oracle::{
    power_mean_sum, power_mean_sum_f64, rational_from_int, rational_powi, rational_to_f64, Rational,
};
use crate::real::{half, ratio};
use crate::record::{classify_exact, Status, Tolerances, VerificationRecord};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanArgs {
    alpha: f64,
    beta: f64,
}

impl MeanArgs {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0 && alpha.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "mean arguments",
                reason: format!("both must be positive and finite, got {alpha}, {beta}"),
            });
        }
        Ok(Self { alpha, beta })
    }

    fn require_distinct(&self) -> Result<()> {
        if self.alpha == self.beta {
            return Err(Error::InvalidParameter {
                name: "mean arguments",
                reason: format!(
                    "logarithmic means need distinct arguments, got {0}, {0}",
                    self.alpha
                ),
            });
        }
        Ok(())
    }
}

/// Order `n` of the generalized logarithmic mean, `n ∉ {-1, 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeanOrder(i32);

impl MeanOrder {
    pub fn new(n: i32) -> Result<Self> {
        if n == 0 || n == -1 {
            return Err(Error::InvalidParameter {
                name: "n",
                reason: format!("order must not be 0 or -1, got {n}"),
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> i32 {
        self.0
    }

    /// `|n(n-1)| >= 3`, recorded alongside proposition checks.
    pub fn meets_magnitude_hypothesis(self) -> bool {
        (self.0 as i64 * (self.0 as i64 - 1)).abs() >= 3
    }
}

pub fn mean_arithmetic(args: &MeanArgs) -> f64 {
    0.5 * (args.alpha + args.beta)
}

pub fn mean_logarithmic(args: &MeanArgs) -> Result<f64> {
    args.require_distinct()?;
    Ok((args.alpha - args.beta) / (args.alpha.ln() - args.beta.ln()))
}

pub fn mean_generalized_log(args: &MeanArgs, order: MeanOrder) -> Result<f64> {
    args.require_distinct()?;
    let n = order.get() as f64;
    let (a, b) = (args.alpha, args.beta);
    let inner = (b.powf(n + 1.0) - a.powf(n + 1.0)) / ((n + 1.0) * (b - a));
    Ok(inner.powf(1.0 / n))
}

pub fn arithmetic_exact(a: &Rational, b: &Rational) -> Rational {
    (a + b) * half::<Rational>()
}

/// `Lₙⁿ(a, b) = (b^{n+1} - a^{n+1}) / ((n+1)(b-a))`, the mean value of `xⁿ` on `[a, b]`.
pub fn generalized_log_power_exact(a: &Rational, b: &Rational, order: MeanOrder) -> Rational {
    let n = order.get();
    (rational_powi(b, n + 1) - rational_powi(a, n + 1))
        / (rational_from_int(n as i64 + 1) * (b - a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Proposition {
    /// `|Lₙⁿ - Aⁿ|`, midpoint form.
    One,
    /// `|A(aⁿ, bⁿ) - Lₙⁿ|`, trapezoid form.
    Two,
    /// `|⅓A(aⁿ, bⁿ) + ⅔Aⁿ - Lₙⁿ|`, Simpson form.
    Three,
}

impl Proposition {
    pub fn from_index(idx: u8) -> Result<Self> {
        match idx {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::InvalidParameter {
                name: "proposition",
                reason: format!("expected 1, 2 or 3, got {idx}"),
            }),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
        }
    }

    pub fn rule(self) -> Rule {
        match self {
            Self::One => Rule::Midpoint,
            Self::Two => Rule::Trapezoid,
            Self::Three => Rule::Simpson,
        }
    }

    pub fn claim_id(self, variant: ConstantVariant) -> String {
        format!("prop{}-{}", self.index(), variant.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionCheck {
    pub record: VerificationRecord,
    /// Whether `|n(n-1)| >= 3` held; informational only.
    pub magnitude_hypothesis: bool,
}

/// Left side of a proposition, exactly.
pub fn proposition_lhs(
    prop: Proposition,
    a: &Rational,
    b: &Rational,
    order: MeanOrder,
) -> Rational {
    let n = order.get();
    let ln_n = generalized_log_power_exact(a, b, order);
    let a_n = rational_powi(&arithmetic_exact(a, b), n);
    let a_of_powers = arithmetic_exact(&rational_powi(a, n), &rational_powi(b, n));
    let value = match prop {
        Proposition::One => ln_n - a_n,
        Proposition::Two => a_of_powers - ln_n,
        Proposition::Three => {
            a_of_powers * ratio::<Rational>(1, 3) + a_n * ratio::<Rational>(2, 3) - ln_n
        }
    };
    value.abs()
}

/// Evaluates one proposition for `f(x) = xⁿ` on `[a, b]`, `0 < a < b`.
///
/// The left side is exact. The right side
/// `|n(n-1)| (b-a)²/C · (a^{q(n-2)} + b^{q(n-2)})^{1/q}` is enclosed rigorously
/// when `q` has small numerator and denominator, otherwise evaluated in floating
/// point and classified with `tolerances`.
pub fn check_proposition(
    prop: Proposition,
    a: &Rational,
    b: &Rational,
    order: MeanOrder,
    q: &Rational,
    variant: ConstantVariant,
    tolerances: &Tolerances,
) -> Result<PropositionCheck> {
    if !a.is_positive() || a >= b {
        return Err(Error::Precondition(format!(
            "need 0 < a < b, got a = {a}, b = {b}"
        )));
    }
    if q < &rational_from_int(1) {
        return Err(Error::InvalidParameter {
            name: "q",
            reason: format!("must be >= 1, got {q}"),
        });
    }
    let n = order.get();
    let nn1 = rational_from_int((n as i64 * (n as i64 - 1)).abs());
    let m_a = &nn1 * rational_powi(a, n - 2);
    let m_b = &nn1 * rational_powi(b, n - 2);
    let width = b - a;
    let prefactor = corollary_prefactor(prop.rule(), &width, variant);
    let lhs = proposition_lhs(prop, a, b, order);

    let outcome = match power_mean_sum(&m_a, &m_b, q) {
        Some(s) => classify_exact(&lhs, &s.scale(&prefactor)),
        None => {
            let rhs = rational_to_f64(&prefactor)
                * power_mean_sum_f64(
                    rational_to_f64(&m_a),
                    rational_to_f64(&m_b),
                    rational_to_f64(q),
                );
            tolerances
                .classify_float(rational_to_f64(&lhs), rhs)
                .ok_or(Error::NonFinite {
                    x: rational_to_f64(a),
                    value: rhs,
                })?
        }
    };
    debug_assert!(!lhs.is_negative() && !prefactor.is_zero());

    Ok(PropositionCheck {
        record: VerificationRecord {
            claim: prop.claim_id(variant),
            function: format!("poly{n}"),
            a: rational_to_f64(a),
            b: rational_to_f64(b),
            lambda: Some(rational_to_f64(&prop.rule().lambda::<Rational>())),
            q: Some(rational_to_f64(q)),
            lhs: Some(outcome.lhs),
            rhs: Some(outcome.rhs),
            margin: Some(outcome.margin),
            status: outcome.status,
            exact: outcome.exact,
        },
        magnitude_hypothesis: order.meets_magnitude_hypothesis(),
    })
}

impl PropositionCheck {
    pub fn status(&self) -> Status {
        self.record.status
    }
}
