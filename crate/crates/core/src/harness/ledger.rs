//! The claims ledger: one entry per inequality, each tied to a left-hand side,
//! a right-hand side and a hypothesis that the campaign knows how to evaluate.

use serde::Serialize;

use crate::bounds::{ConstantVariant, MForm, Rule, SimpsonPower};
use crate::error::{Error, Result};
use crate::means::Proposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The constant follows from the proof; a violation is an implementation bug.
    ProofBacked,
    /// Printed but not implied by the proof; tested as a falsifiable hypothesis.
    StatedOnly,
}

/// Which deviation is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LhsSpec {
    /// `|functional_lambda|` at the campaign's λ.
    Functional,
    /// `|functional_lambda|` at a fixed rule.
    RuleFunctional { rule: Rule },
    /// `|simpson_deviation|`.
    Simpson,
    /// Position of the mean value inside `[f(m), (f(a)+f(b))/2]`.
    HermiteHadamard,
    /// Position of twice the mean value inside `[f(m), 2(f(a)+f(b))]`.
    HermiteHadamardP,
    /// Trapezoid gap inside its `f''`-enclosure.
    TrapezoidGap,
    /// Midpoint gap inside its `f''`-enclosure.
    MidpointGap,
    /// Proposition left side for `xⁿ`.
    Proposition { prop: Proposition },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum RhsSpec {
    Theorem5,
    Theorem6 {
        variant: ConstantVariant,
    },
    Corollary {
        rule: Rule,
        variant: ConstantVariant,
    },
    BoundedM {
        rule: Rule,
        form: MForm,
    },
    SimpsonClassical {
        power: SimpsonPower,
    },
    /// The two-sided claims carry their own enclosure.
    Enclosure,
    Proposition {
        variant: ConstantVariant,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// `check_p_convex(|f''|)`.
    AbsSecondDerivativePConvex,
    /// `check_p_convex(|f''|^q)`.
    AbsSecondDerivativePowerPConvex,
    /// `f'' >= 0` on the interval.
    Convex,
    /// `check_p_convex(f)`.
    PConvex,
    /// A fourth derivative is available.
    FourthDerivative,
    /// Only `f(x) = xⁿ` with `0 < a`.
    PowerFunction,
    /// `f` twice differentiable on the interval; every corpus member qualifies.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundClaim {
    pub id: String,
    pub lhs: LhsSpec,
    pub rhs: RhsSpec,
    pub hypothesis: Hypothesis,
    pub provenance: Provenance,
    pub uses_lambda: bool,
    pub uses_q: bool,
}

impl BoundClaim {
    fn new(
        id: impl Into<String>,
        lhs: LhsSpec,
        rhs: RhsSpec,
        hypothesis: Hypothesis,
        provenance: Provenance,
    ) -> Self {
        Self {
            id: id.into(),
            lhs,
            rhs,
            hypothesis,
            provenance,
            uses_lambda: matches!(lhs, LhsSpec::Functional),
            uses_q: matches!(
                rhs,
                RhsSpec::Theorem6 { .. }
                    | RhsSpec::Corollary { .. }
                    | RhsSpec::Proposition { .. }
                    | RhsSpec::BoundedM {
                        form: MForm::WithQ,
                        ..
                    }
            ),
        }
    }

    /// The λ recorded for claims pinned to one rule.
    pub fn fixed_rule(&self) -> Option<Rule> {
        match (self.lhs, self.rhs) {
            (LhsSpec::RuleFunctional { rule }, _) => Some(rule),
            (LhsSpec::Proposition { prop }, _) => Some(prop.rule()),
            _ => None,
        }
    }

    pub fn is_proof_backed(&self) -> bool {
        self.provenance == Provenance::ProofBacked
    }
}

fn rule_label(rule: Rule) -> &'static str {
    match rule {
        Rule::Midpoint => "cor1",
        Rule::Trapezoid => "cor2",
        Rule::Simpson => "cor3",
    }
}

fn m_form_label(rule: Rule) -> &'static str {
    match rule {
        Rule::Midpoint => "cor4",
        Rule::Trapezoid => "cor5",
        Rule::Simpson => "cor8",
    }
}

/// Every claim, in a fixed order.
///
/// The trapezoid forms with the stated constant (`cor2-stated`, `prop2-stated`)
/// are stated-only: they fail for `x³` on `[1, 2]` at `q = 2`.
pub fn ledger_standard() -> Vec<BoundClaim> {
    use ConstantVariant::{Derived, Stated};
    use Provenance::{ProofBacked, StatedOnly};
    let rules = [Rule::Midpoint, Rule::Trapezoid, Rule::Simpson];
    let variant_provenance = |v| {
        if v == Derived {
            ProofBacked
        } else {
            StatedOnly
        }
    };

    let mut out = vec![BoundClaim::new(
        "thm5",
        LhsSpec::Functional,
        RhsSpec::Theorem5,
        Hypothesis::AbsSecondDerivativePConvex,
        ProofBacked,
    )];
    for variant in [Stated, Derived] {
        out.push(BoundClaim::new(
            format!("thm6-{}", variant.as_str()),
            LhsSpec::Functional,
            RhsSpec::Theorem6 { variant },
            Hypothesis::AbsSecondDerivativePowerPConvex,
            variant_provenance(variant),
        ));
    }
    for rule in rules {
        for variant in [Stated, Derived] {
            out.push(BoundClaim::new(
                format!("{}-{}", rule_label(rule), variant.as_str()),
                LhsSpec::RuleFunctional { rule },
                RhsSpec::Corollary { rule, variant },
                Hypothesis::AbsSecondDerivativePowerPConvex,
                variant_provenance(variant),
            ));
        }
    }
    for rule in rules {
        out.push(BoundClaim::new(
            format!("{}-q", m_form_label(rule)),
            LhsSpec::RuleFunctional { rule },
            RhsSpec::BoundedM {
                rule,
                form: MForm::WithQ,
            },
            Hypothesis::AbsSecondDerivativePowerPConvex,
            StatedOnly,
        ));
        out.push(BoundClaim::new(
            format!("{}-relaxed", m_form_label(rule)),
            LhsSpec::RuleFunctional { rule },
            RhsSpec::BoundedM {
                rule,
                form: MForm::Relaxed,
            },
            Hypothesis::AbsSecondDerivativePConvex,
            ProofBacked,
        ));
    }
    out.push(BoundClaim::new(
        "hh",
        LhsSpec::HermiteHadamard,
        RhsSpec::Enclosure,
        Hypothesis::Convex,
        ProofBacked,
    ));
    out.push(BoundClaim::new(
        "eq19-p4",
        LhsSpec::Simpson,
        RhsSpec::SimpsonClassical {
            power: SimpsonPower::Quartic,
        },
        Hypothesis::FourthDerivative,
        ProofBacked,
    ));
    out.push(BoundClaim::new(
        "eq19-p2",
        LhsSpec::Simpson,
        RhsSpec::SimpsonClassical {
            power: SimpsonPower::Quadratic,
        },
        Hypothesis::FourthDerivative,
        StatedOnly,
    ));
    out.push(BoundClaim::new(
        "eq20",
        LhsSpec::TrapezoidGap,
        RhsSpec::Enclosure,
        Hypothesis::None,
        ProofBacked,
    ));
    out.push(BoundClaim::new(
        "eq21",
        LhsSpec::MidpointGap,
        RhsSpec::Enclosure,
        Hypothesis::None,
        ProofBacked,
    ));
    out.push(BoundClaim::new(
        "thm2",
        LhsSpec::HermiteHadamardP,
        RhsSpec::Enclosure,
        Hypothesis::PConvex,
        ProofBacked,
    ));
    for prop in [Proposition::One, Proposition::Two, Proposition::Three] {
        for variant in [Stated, Derived] {
            out.push(BoundClaim::new(
                prop.claim_id(variant),
                LhsSpec::Proposition { prop },
                RhsSpec::Proposition { variant },
                Hypothesis::PowerFunction,
                variant_provenance(variant),
            ));
        }
    }
    out
}

pub fn claim_lookup(id: &str) -> Result<BoundClaim> {
    ledger_standard()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_owned()))
}
