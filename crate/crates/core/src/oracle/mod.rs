//! Ground truth for every claim: adaptive quadrature for general integrands,
//! exact rational arithmetic for polynomials, and rigorous enclosures of the
//! irrational power sums that appear in the bounds.

mod power;
mod quadrature;
mod rational;

pub use power::{
    power_mean_sum, power_mean_sum_f64, Enclosure, ENCLOSURE_DIGITS, MAX_EXPONENT_PART,
};
#[allow(unused_imports)]
pub(crate) use quadrature::integrate_budgeted;
pub use quadrature::{
    integrate, integrate_with_breaks, QuadratureResult, DEFAULT_TOL, SUBDIVISION_BUDGET,
};
pub use rational::{
    integrate_exact_poly, parse_rational, rational, rational_from_f64, rational_from_int,
    rational_powi, rational_to_f64, serde_text, serde_text_vec, Polynomial, Rational,
};
