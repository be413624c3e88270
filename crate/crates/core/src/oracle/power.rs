//! Rigorous enclosures of `(m_a^q + m_b^q)^(1/q)` for rational data.
//!
//! Irrational powers are bracketed with integer `n`-th roots on a fixed-point
//! grid of `10^-ENCLOSURE_DIGITS`, so a comparison against an exact rational is
//! decided unless the two agree to about sixty digits.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{rational_to_f64, Rational};

pub const ENCLOSURE_DIGITS: u32 = 60;

/// Exponents `q = p/r` with `p` or `r` above this are evaluated in floating point only.
pub const MAX_EXPONENT_PART: u32 = 256;

/// A closed rational interval known to contain a real quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Scales by a nonnegative rational.
    pub fn scale(&self, factor: &Rational) -> Self {
        debug_assert!(!factor.is_negative());
        Self::new(&self.lo * factor, &self.hi * factor)
    }

    /// `self - x`.
    pub fn sub_rational(&self, x: &Rational) -> Self {
        Self::new(&self.lo - x, &self.hi - x)
    }
}

fn scale_factor() -> BigInt {
    num_traits::pow(BigInt::from(10), ENCLOSURE_DIGITS as usize)
}

/// Bracket `x^(p/r)` for rational `x >= 0` as integers `[k, k+1]` on the grid `1/F`.
fn fractional_power_floor(x: &Rational, p: u32, r: u32, f: &BigInt) -> BigInt {
    let num = num_traits::pow(x.numer().clone(), p as usize);
    let den = num_traits::pow(x.denom().clone(), p as usize);
    let scaled = num * num_traits::pow(f.clone(), r as usize) / den;
    scaled.nth_root(r)
}

/// Enclosure of `(m_a^q + m_b^q)^(1/q)` for `m_a, m_b >= 0` and rational `q >= 1`.
///
/// Returns `None` when `q` has a numerator or denominator too large for the
/// integer-root construction; callers then fall back to floating point.
pub fn power_mean_sum(m_a: &Rational, m_b: &Rational, q: &Rational) -> Option<Enclosure> {
    debug_assert!(!m_a.is_negative() && !m_b.is_negative());
    if m_a.is_zero() {
        return Some(Enclosure::point(m_b.clone()));
    }
    if m_b.is_zero() {
        return Some(Enclosure::point(m_a.clone()));
    }
    if q.is_one() {
        return Some(Enclosure::point(m_a + m_b));
    }
    if q < &Rational::one() {
        return None;
    }
    let p = q.numer().to_u32().filter(|p| *p <= MAX_EXPONENT_PART)?;
    let r = q.denom().to_u32().filter(|r| *r <= MAX_EXPONENT_PART)?;

    let f = scale_factor();
    let wa = fractional_power_floor(m_a, p, r, &f);
    let wb = fractional_power_floor(m_b, p, r, &f);
    let w_lo = &wa + &wb;
    let w_hi = w_lo.clone() + BigInt::from(2);

    // S·F = (W^r · F^(p-r))^(1/p) with W = w·F.
    let lift = num_traits::pow(f.clone(), (p - r) as usize);
    let s_lo = (num_traits::pow(w_lo, r as usize) * &lift).nth_root(p);
    let s_hi = (num_traits::pow(w_hi, r as usize) * &lift).nth_root(p) + BigInt::one();
    Some(Enclosure::new(
        Rational::new(s_lo, f.clone()),
        Rational::new(s_hi, f),
    ))
}

/// Floating-point `(m_a^q + m_b^q)^(1/q)`, scaled to avoid overflow.
pub fn power_mean_sum_f64(m_a: f64, m_b: f64, q: f64) -> f64 {
    let big = m_a.max(m_b);
    if big == 0.0 {
        return 0.0;
    }
    if q == 1.0 {
        return m_a + m_b;
    }
    let small = m_a.min(m_b) / big;
    big * (1.0 + small.powf(q)).powf(1.0 / q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rational::rational;

    #[test]
    fn sqrt_five_is_bracketed() {
        // (1^2 + 2^2)^(1/2) = √5
        let e = power_mean_sum(&rational(1, 1), &rational(2, 1), &rational(2, 1)).unwrap();
        assert!(!e.is_point());
        assert!(
            e.width()
                < rational(1, 1) / Rational::from_integer(num_traits::pow(BigInt::from(10), 55))
        );
        let lo2 = e.lo() * e.lo();
        let hi2 = e.hi() * e.hi();
        assert!(lo2 <= rational(5, 1) && rational(5, 1) <= hi2);
        assert!((e.to_f64() - 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn fractional_exponent() {
        let q = rational(3, 2);
        let e = power_mean_sum(&rational(2, 1), &rational(3, 1), &q).unwrap();
        let expect = power_mean_sum_f64(2.0, 3.0, 1.5);
        assert!((e.to_f64() - expect).abs() < 1e-14);
        // S^q = 2^q + 3^q, check S^3 = (2^1.5 + 3^1.5)^2 against bracket cubes.
        let target = 2f64.powf(1.5) + 3f64.powf(1.5);
        assert!((e.to_f64().powf(1.5) - target).abs() < 1e-13);
    }

    #[test]
    fn degenerate_cases_are_exact() {
        let e = power_mean_sum(&rational(0, 1), &rational(7, 3), &rational(5, 1)).unwrap();
        assert!(e.is_point());
        assert_eq!(e.lo(), &rational(7, 3));
        let e = power_mean_sum(&rational(1, 2), &rational(1, 3), &rational(1, 1)).unwrap();
        assert_eq!(e.lo(), &rational(5, 6));
    }

    #[test]
    fn huge_denominators_fall_back() {
        let q = rational(1_000_001, 1_000_000);
        assert!(power_mean_sum(&rational(1, 1), &rational(2, 1), &q).is_none());
    }

    #[test]
    fn float_version_is_stable() {
        assert_eq!(power_mean_sum_f64(0.0, 0.0, 2.0), 0.0);
        assert!((power_mean_sum_f64(3.0, 4.0, 2.0) - 5.0).abs() < 1e-15);
        assert!(power_mean_sum_f64(1e300, 1e300, 2.0).is_finite());
    }
}
