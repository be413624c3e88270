use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::oracle::{rational_to_f64, Enclosure, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Equality,
    Violated,
    HypothesisFailed,
    Undefined,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Holds,
        Status::Equality,
        Status::Violated,
        Status::HypothesisFailed,
        Status::Undefined,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Equality => "equality",
            Status::Violated => "violated",
            Status::HypothesisFailed => "hypothesis_failed",
            Status::Undefined => "undefined",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated instance of a claim. `margin = rhs - lhs`; for two-sided
/// claims `lhs` is the distance of the tested quantity from the enclosure's
/// center and `rhs` the enclosure's half-width.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim: String,
    pub function: String,
    pub a: f64,
    pub b: f64,
    pub lambda: Option<f64>,
    pub q: Option<f64>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub status: Status,
    /// Status decided by exact rational arithmetic (with a rigorous enclosure
    /// for irrational right-hand sides).
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative violation threshold on the floating-point path.
    pub tol: f64,
    /// Relative equality threshold on the floating-point path.
    pub eq_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            eq_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Outcome {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub status: Status,
    pub exact: bool,
}

impl Tolerances {
    /// Thresholds scale with `max(1, |lhs|, |rhs|)`.
    pub fn classify_float(&self, lhs: f64, rhs: f64) -> Option<Outcome> {
        if !(lhs.is_finite() && rhs.is_finite()) {
            return None;
        }
        let margin = rhs - lhs;
        let scale = 1f64.max(lhs.abs()).max(rhs.abs());
        let status = if margin < -self.tol * scale {
            Status::Violated
        } else if margin.abs() <= self.eq_tol * scale {
            Status::Equality
        } else {
            Status::Holds
        };
        Some(Outcome {
            lhs,
            rhs,
            margin,
            status,
            exact: false,
        })
    }
}

/// Exact decision: violated iff the whole margin enclosure is negative,
/// equality iff it contains zero (a point enclosure means exact equality).
pub fn classify_exact(lhs: &Rational, rhs: &Enclosure) -> Outcome {
    let margin = rhs.sub_rational(lhs);
    let status = if margin.hi().is_negative() {
        Status::Violated
    } else if margin.lo().is_positive() {
        Status::Holds
    } else {
        Status::Equality
    };
    let margin_f64 = if margin.is_point() && margin.lo().is_zero() {
        0.0
    } else {
        margin.to_f64()
    };
    Outcome {
        lhs: rational_to_f64(lhs),
        rhs: rhs.to_f64(),
        margin: margin_f64,
        status,
        exact: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{power_mean_sum, rational};

    #[test]
    fn float_classification() {
        let t = Tolerances::default();
        assert_eq!(t.classify_float(1.0, 2.0).unwrap().status, Status::Holds);
        assert_eq!(
            t.classify_float(1.0, 1.0 + 1e-13).unwrap().status,
            Status::Equality
        );
        assert_eq!(
            t.classify_float(1.0, 1.0 - 1e-10).unwrap().status,
            Status::Holds
        );
        assert_eq!(t.classify_float(1.0, 0.5).unwrap().status, Status::Violated);
        assert!(t.classify_float(f64::NAN, 0.5).is_none());
    }

    #[test]
    fn exact_classification() {
        let o = classify_exact(&rational(3, 8), &Enclosure::point(rational(3, 8)));
        assert_eq!(o.status, Status::Equality);
        assert_eq!(o.margin, 0.0);
        // 6/48·√5 = √5/8 < 3/8
        let s = power_mean_sum(&rational(6, 1), &rational(12, 1), &rational(2, 1)).unwrap();
        let rhs = s.scale(&rational(1, 48));
        let o = classify_exact(&rational(3, 8), &rhs);
        assert_eq!(o.status, Status::Violated);
        assert!((o.rhs - 5f64.sqrt() / 8.0).abs() < 1e-16);
        assert!((o.margin - (5f64.sqrt() - 3.0) / 8.0).abs() < 1e-16);
        let o = classify_exact(&rational(1, 8), &rhs);
        assert_eq!(o.status, Status::Holds);
    }

    #[test]
    fn status_serializes_snake_case() {
        assert_eq!(
            serde_json::to_string(&Status::HypothesisFailed).unwrap(),
            "\"hypothesis_failed\""
        );
    }
}
