//! The piecewise-quadratic kernel `k(t; λ)` representing the λ-family
//! deviation functional as `(b-a)² ∫₀¹ k(t) f''(ta + (1-t)b) dt`, and the
//! closed-form moment integrals of `|k|` used by the bounds.
//!
//! Every closed form is generic over [`Real`] so it can be evaluated exactly
//! for rational λ. The seam λ = ½ belongs to the small-λ branch.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::oracle::{integrate_with_breaks, DEFAULT_TOL};
use crate::real::{cube, half, int, ratio, square, Real};

/// The rule parameter λ ∈ [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct RuleParameter(f64);

impl RuleParameter {
    pub fn new(lam: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lam) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: format!("must lie in [0, 1], got {lam}"),
            });
        }
        Ok(Self(lam))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub const MIDPOINT: Self = Self(0.0);
    pub const TRAPEZOID: Self = Self(1.0);
    pub const SIMPSON: Self = Self(1.0 / 3.0);
}

/// `∫₀^½ |t(t-λ)| dt` and `∫_½^1 |(1-t)(1-λ-t)| dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentPair<T> {
    pub first_half: T,
    pub second_half: T,
}

pub fn is_small_lambda<T: Real>(lam: &T) -> bool {
    lam <= &half::<T>()
}

pub fn kernel_value<T: Real>(t: &T, lam: &T) -> T {
    let one = T::one();
    if t <= &half::<T>() {
        half::<T>() * t.clone() * (t.clone() - lam.clone())
    } else {
        half::<T>() * (one.clone() - t.clone()) * (one - lam.clone() - t.clone())
    }
}

/// `λ³/3 - λ/8 + 1/24`: one half of `∫|t(t-λ)|` for λ <= ½.
pub fn weighted_moment_small_closed<T: Real>(lam: &T) -> T {
    cube(lam) * ratio(1, 3) - lam.clone() * ratio(1, 8) + ratio(1, 24)
}

/// The second-half form `2(1-λ)³/3 + λ(1-λ)² + 7λ/8 - 5/8`; algebraically equal
/// to [`weighted_moment_small_closed`].
pub fn second_half_small_closed<T: Real>(lam: &T) -> T {
    let u = T::one() - lam.clone();
    cube(&u) * ratio(2, 3) + lam.clone() * square(&u) + lam.clone() * ratio(7, 8) - ratio(5, 8)
}

/// `λ³/3 + (1-3λ)/24`, the printed form of the first-half absolute moment.
pub fn moment_abs_small_printed<T: Real>(lam: &T) -> T {
    cube(lam) * ratio(1, 3) + (T::one() - int::<T>(3) * lam.clone()) * ratio(1, 24)
}

/// `λ/8 - 1/24` = `(3λ-1)/24`: one half for λ >= ½.
pub fn weighted_moment_large_closed<T: Real>(lam: &T) -> T {
    lam.clone() * ratio(1, 8) - ratio(1, 24)
}

/// `∫₀¹ k(t) dt = (1-3λ)/24`.
pub fn kernel_integral<T: Real>(lam: &T) -> T {
    (T::one() - int::<T>(3) * lam.clone()) * ratio(1, 24)
}

/// `∫₀¹ |k(t)| dt`: half the sum of both absolute half-moments.
pub fn kernel_abs_integral<T: Real>(lam: &T) -> T {
    let m = moment_abs(lam);
    half::<T>() * (m.first_half + m.second_half)
}

pub fn moment_abs<T: Real>(lam: &T) -> MomentPair<T> {
    let v = if is_small_lambda(lam) {
        weighted_moment_small_closed(lam)
    } else {
        weighted_moment_large_closed(lam)
    };
    MomentPair {
        first_half: v.clone(),
        second_half: v,
    }
}

pub fn weighted_moment_small_lambda<T: Real>(lam: &T) -> Result<T> {
    if !is_small_lambda(lam) {
        return Err(Error::Precondition(format!(
            "small-λ moment needs λ <= 1/2, got {lam:?}"
        )));
    }
    Ok(weighted_moment_small_closed(lam))
}

pub fn weighted_moment_large_lambda<T: Real>(lam: &T) -> Result<T> {
    if lam < &half::<T>() {
        return Err(Error::Precondition(format!(
            "large-λ moment needs λ >= 1/2, got {lam:?}"
        )));
    }
    Ok(weighted_moment_large_closed(lam))
}

/// Integrates every moment numerically (split at the sign changes `t = λ` and
/// `t = 1-λ`) and returns the largest deviation from the closed forms.
pub fn verify_moments_numeric(lam: RuleParameter) -> Result<f64> {
    let l = lam.get();
    let first = Interval::new(0.0, 0.5)?;
    let second = Interval::new(0.5, 1.0)?;
    let whole = Interval::new(0.0, 1.0)?;
    let kinks = [l, 1.0 - l, 0.5];
    let num = |g: &dyn Fn(f64) -> f64, iv: &Interval| -> Result<f64> {
        integrate_with_breaks(g, iv, &kinks, DEFAULT_TOL).map(|r| r.value)
    };

    let abs_first = num(&|t| (t * (t - l)).abs(), &first)?;
    let abs_second = num(&|t| ((1.0 - t) * (1.0 - l - t)).abs(), &second)?;
    let signed = num(&|t| kernel_value(&t, &l), &whole)?;
    let abs_whole = num(&|t| kernel_value(&t, &l).abs(), &whole)?;

    let pair = moment_abs(&l);
    let mut checks = vec![
        (pair.first_half, abs_first),
        (pair.second_half, abs_second),
        (kernel_integral(&l), signed),
        (kernel_abs_integral(&l), abs_whole),
    ];
    if is_small_lambda(&l) {
        checks.push((weighted_moment_small_closed(&l), abs_first));
        checks.push((moment_abs_small_printed(&l), abs_first));
        checks.push((second_half_small_closed(&l), abs_second));
    }
    if l >= 0.5 {
        // On [0, ½] the integrand is t(λ-t) without sign change, likewise the mirror half.
        let plain_first = num(&|t| t * (l - t), &first)?;
        let plain_second = num(&|t| (1.0 - t) * (t + l - 1.0), &second)?;
        let closed = weighted_moment_large_closed(&l);
        checks.push((closed, plain_first));
        checks.push((closed, plain_second));
        checks.push((2.0 * closed, plain_first + plain_second));
    }
    Ok(checks
        .into_iter()
        .map(|(c, n)| (c - n).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{rational, Rational};

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_value(&0.25, &0.0), 0.03125);
        assert_eq!(kernel_value(&0.5, &0.5), 0.0);
        assert_eq!(kernel_value(&0.75, &1.0), -0.09375);
        assert_eq!(
            kernel_value(&rational(1, 4), &rational(0, 1)),
            rational(1, 32)
        );
        assert_eq!(
            kernel_value(&rational(3, 4), &rational(1, 1)),
            rational(-3, 32)
        );
    }

    #[test]
    fn moment_examples() {
        let r = |p, q| rational(p, q);
        assert_eq!(moment_abs(&r(0, 1)).first_half, r(1, 24));
        assert_eq!(moment_abs(&r(1, 1)).second_half, r(1, 12));
        assert_eq!(moment_abs(&r(1, 2)).first_half, r(1, 48));
        assert_eq!(weighted_moment_small_lambda(&r(0, 1)).unwrap(), r(1, 24));
        assert_eq!(weighted_moment_small_lambda(&r(1, 4)).unwrap(), r(1, 64));
        assert_eq!(weighted_moment_small_lambda(&r(1, 2)).unwrap(), r(1, 48));
        assert_eq!(weighted_moment_large_lambda(&r(1, 1)).unwrap(), r(1, 12));
        assert_eq!(weighted_moment_large_lambda(&r(1, 2)).unwrap(), r(1, 48));
        // λ/8 - 1/24 at λ = 2/3 is 1/12 - 1/24.
        assert_eq!(weighted_moment_large_lambda(&r(2, 3)).unwrap(), r(1, 24));
    }

    #[test]
    fn branch_preconditions() {
        assert!(weighted_moment_small_lambda(&0.6).is_err());
        assert!(weighted_moment_large_lambda(&0.4).is_err());
        assert!(RuleParameter::new(1.5).is_err());
        assert!(RuleParameter::new(-0.1).is_err());
    }

    #[test]
    fn seam_values_are_one_forty_eighth() {
        let h = rational(1, 2);
        let target = rational(1, 48);
        assert_eq!(weighted_moment_small_closed(&h), target);
        assert_eq!(weighted_moment_large_closed(&h), target);
        assert_eq!(second_half_small_closed(&h), target);
        assert_eq!(moment_abs_small_printed(&h), target);
    }

    #[test]
    fn numeric_moments() {
        for lam in [0.0, 1.0, 0.3, 0.5, 0.77] {
            let d = verify_moments_numeric(RuleParameter::new(lam).unwrap()).unwrap();
            assert!(d <= 1e-12, "λ={lam}: {d}");
        }
    }

    #[test]
    fn printed_forms_agree_exactly() {
        for k in 0..=50 {
            let lam: Rational = rational(k, 100);
            assert_eq!(
                weighted_moment_small_closed(&lam),
                second_half_small_closed(&lam)
            );
            assert_eq!(
                weighted_moment_small_closed(&lam),
                moment_abs_small_printed(&lam)
            );
        }
    }
}
