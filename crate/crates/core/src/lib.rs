//! Hermite–Hadamard and Simpson-type error bounds for functions whose second
//! derivative (in absolute value, or a power of it) is a P-function, with
//! exact and high-precision oracles and a harness that checks each bound.
//!
//! The deviation functional
//! `F_λ(f; a, b) = (λ-1) f(m) - λ (f(a)+f(b))/2 + (1/(b-a)) ∫ₐᵇ f`
//! covers the midpoint (`λ = 0`), trapezoid (`λ = 1`) and Simpson (`λ = 1/3`)
//! rules. Bounds come in a "stated" and a "derived" constant variant; see
//! [`bounds::ConstantVariant`].

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod functionals;
pub mod harness;
pub mod interval;
pub mod kernel;
pub mod means;
pub mod oracle;
pub mod real;
pub mod record;
pub mod report;

pub use bounds::{
    bound_bounded_m, bound_classical, bound_corollary, bound_theorem5, bound_theorem6,
    compare_bounds, ClassicalBound, Comparison, ConstantVariant, DerivativeEnvelope, EndpointData,
    MForm, PowerExponent, Rule, SimpsonPower,
};
pub use corpus::{
    check_p_convex, corpus_lookup, corpus_standard, GridSpec, PConvexityReport, TestFunction,
    Witness,
};
pub use error::{Error, Result};
pub use functionals::{
    functional_lambda, hh_gap_left, hh_gap_right, hh_p_check, identity_residual, simpson_deviation,
    DeviationValue,
};
pub use harness::{
    find_counterexample, ledger_standard, run_campaign, BoundClaim, CampaignConfig, SearchOutcome,
};
pub use interval::{ExactInterval, Interval};
pub use kernel::{verify_moments_numeric, RuleParameter};
pub use means::{
    check_proposition, mean_arithmetic, mean_generalized_log, mean_logarithmic, MeanArgs,
    MeanOrder, Proposition,
};
pub use oracle::{integrate, parse_rational, Rational};
pub use record::{Status, Tolerances, VerificationRecord};
pub use report::{ReportDocument, Verdict};
