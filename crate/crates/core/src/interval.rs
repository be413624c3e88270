use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::oracle::{rational_from_f64, Rational};
use crate::real::half;

/// A closed integration domain `[lo, hi]` with finite endpoints and `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_point(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Uniform grid of `n >= 2` points including both endpoints.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        debug_assert!(n >= 2);
        let step = self.width() / (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }

    /// Exact rational image of the (binary) endpoints.
    pub fn to_exact(&self) -> ExactInterval {
        ExactInterval {
            lo: rational_from_f64(self.lo),
            hi: rational_from_f64(self.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Interval with exact rational endpoints, used by the rational verification path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactInterval {
    lo: Rational,
    hi: Rational,
}

impl ExactInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * half::<Rational>()
    }

    /// Nearest floating-point interval. Fails only if rounding collapses the endpoints.
    pub fn to_interval(&self) -> Result<Interval> {
        Interval::new(
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for ExactInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_and_non_finite() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn grid_hits_endpoints() {
        let iv = Interval::new(0.1, 10.0).unwrap();
        let g = iv.grid(41);
        assert_eq!(g.len(), 41);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[40], 10.0);
    }

    #[test]
    fn exact_round_trip() {
        let iv = Interval::new(0.25, 3.5).unwrap();
        let ex = iv.to_exact();
        assert_eq!(ex.to_interval().unwrap(), iv);
        assert_eq!(ex.width(), Rational::new(13.into(), 4.into()));
    }
}
