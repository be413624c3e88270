//! Left-hand sides of the inequalities: the λ-family deviation functional,
//! Hermite–Hadamard gaps, the Simpson deviation and the kernel-identity residual.
//!
//! Polynomials with rational data go through exact arithmetic automatically;
//! everything else uses the closed-form antiderivative when one is known and
//! the adaptive oracle otherwise.

use serde::Serialize;

use crate::corpus::TestFunction;
use crate::error::{Error, Result};
use crate::interval::{ExactInterval, Interval};
use crate::kernel::{kernel_value, RuleParameter};
use crate::oracle::{
    integrate_with_breaks, rational_from_f64, rational_to_f64, Rational, DEFAULT_TOL,
};
use crate::real::{half, int, ratio, Real};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeviationValue {
    pub value: f64,
    pub abs_value: f64,
    /// Computed on the exact rational path.
    pub exact: bool,
}

impl DeviationValue {
    fn new(value: f64, exact: bool) -> Self {
        Self {
            value,
            abs_value: value.abs(),
            exact,
        }
    }
}

/// Point values and mean value of `f` on one interval, in either scalar type.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples<T> {
    pub fa: T,
    pub fb: T,
    pub fm: T,
    /// `(1/(b-a)) ∫ₐᵇ f`.
    pub avg: T,
    pub width: T,
}

impl<T: Real> Samples<T> {
    /// `(λ-1) f(m) - λ (f(a)+f(b))/2 + avg`.
    pub fn functional(&self, lam: &T) -> T {
        (lam.clone() - T::one()) * self.fm.clone()
            - lam.clone() * (self.fa.clone() + self.fb.clone()) * half::<T>()
            + self.avg.clone()
    }

    /// `avg - f(m)`.
    pub fn gap_left(&self) -> T {
        self.avg.clone() - self.fm.clone()
    }

    /// `(f(a)+f(b))/2 - avg`.
    pub fn gap_right(&self) -> T {
        (self.fa.clone() + self.fb.clone()) * half::<T>() - self.avg.clone()
    }

    /// `⅓[(f(a)+f(b))/2 + 2 f(m)] - avg`.
    pub fn simpson(&self) -> T {
        ((self.fa.clone() + self.fb.clone()) * half::<T>() + int::<T>(2) * self.fm.clone())
            * ratio(1, 3)
            - self.avg.clone()
    }
}

impl Samples<Rational> {
    /// Exact samples; `None` unless `f` is a rational polynomial.
    pub fn exact(f: &TestFunction, iv: &ExactInterval) -> Option<Self> {
        let p = f.polynomial()?;
        let width = iv.width();
        Some(Self {
            fa: p.eval(iv.lo()),
            fb: p.eval(iv.hi()),
            fm: p.eval(&iv.midpoint()),
            avg: p.integrate(iv.lo(), iv.hi()) / &width,
            width,
        })
    }

    pub fn to_f64(&self) -> Samples<f64> {
        Samples {
            fa: rational_to_f64(&self.fa),
            fb: rational_to_f64(&self.fb),
            fm: rational_to_f64(&self.fm),
            avg: rational_to_f64(&self.avg),
            width: rational_to_f64(&self.width),
        }
    }
}

impl Samples<f64> {
    /// Floating-point samples. The mean comes from the exact antiderivative when
    /// available, otherwise from the oracle at absolute tolerance `tol`.
    pub fn float(f: &TestFunction, iv: &Interval, tol: f64) -> Result<Self> {
        let avg = average_value(f, iv, tol)?;
        let vals = [f.eval(iv.lo()), f.eval(iv.hi()), f.eval(iv.midpoint())];
        if let Some(v) = vals.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                x: iv.lo(),
                value: *v,
            });
        }
        Ok(Self {
            fa: vals[0],
            fb: vals[1],
            fm: vals[2],
            avg,
            width: iv.width(),
        })
    }
}

pub fn average_value(f: &TestFunction, iv: &Interval, tol: f64) -> Result<f64> {
    let integral = match f.exact_integral(iv) {
        Some(v) => v,
        None => integrate_with_breaks(|x| f.eval(x), iv, f.breakpoints(), tol)?.value,
    };
    Ok(integral / iv.width())
}

fn require_domain(f: &TestFunction, iv: &Interval) -> Result<()> {
    if !f.domain().contains(iv) {
        return Err(Error::Precondition(format!(
            "interval {iv} is outside the domain {} of `{}`",
            f.domain(),
            f.id()
        )));
    }
    Ok(())
}

/// Samples on the best available path: exact when `f` is a polynomial.
fn samples(f: &TestFunction, iv: &Interval) -> Result<(Samples<f64>, Option<Samples<Rational>>)> {
    require_domain(f, iv)?;
    match Samples::exact(f, &iv.to_exact()) {
        Some(ex) => Ok((ex.to_f64(), Some(ex))),
        None => Ok((Samples::float(f, iv, DEFAULT_TOL)?, None)),
    }
}

pub fn functional_lambda(
    f: &TestFunction,
    iv: &Interval,
    lam: RuleParameter,
) -> Result<DeviationValue> {
    let (fl, ex) = samples(f, iv)?;
    Ok(match ex {
        Some(ex) => DeviationValue::new(
            rational_to_f64(&ex.functional(&rational_from_f64(lam.get()))),
            true,
        ),
        None => DeviationValue::new(fl.functional(&lam.get()), false),
    })
}

pub fn functional_lambda_exact(
    f: &TestFunction,
    iv: &ExactInterval,
    lam: &Rational,
) -> Option<Rational> {
    Samples::exact(f, iv).map(|s| s.functional(lam))
}

/// `|functional - (b-a)² ∫₀¹ k(t) f''(ta + (1-t)b) dt|`, the t-integral split at
/// the kernel's kinks.
pub fn identity_residual(f: &TestFunction, iv: &Interval, lam: RuleParameter) -> Result<f64> {
    let lhs = functional_lambda(f, iv, lam)?.value;
    let l = lam.get();
    let (a, b) = (iv.lo(), iv.hi());
    let unit = Interval::new(0.0, 1.0)?;
    let t_integral = integrate_with_breaks(
        |t| kernel_value(&t, &l) * f.d2(t * a + (1.0 - t) * b),
        &unit,
        &[l, 0.5, 1.0 - l],
        DEFAULT_TOL,
    )?;
    let rhs = iv.width() * iv.width() * t_integral.value;
    Ok((lhs - rhs).abs())
}

pub fn hh_gap_left(f: &TestFunction, iv: &Interval) -> Result<f64> {
    let (fl, ex) = samples(f, iv)?;
    Ok(ex.map_or(fl.gap_left(), |ex| rational_to_f64(&ex.gap_left())))
}

pub fn hh_gap_right(f: &TestFunction, iv: &Interval) -> Result<f64> {
    let (fl, ex) = samples(f, iv)?;
    Ok(ex.map_or(fl.gap_right(), |ex| rational_to_f64(&ex.gap_right())))
}

/// `f(m) <= (2/(b-a)) ∫f <= 2[f(a) + f(b)]`, each side with margin >= -1e-12.
pub fn hh_p_check(f: &TestFunction, iv: &Interval) -> Result<bool> {
    let (fl, ex) = samples(f, iv)?;
    if let Some(ex) = ex {
        let two = Rational::from_integer(2.into());
        let mean2 = &ex.avg * &two;
        return Ok(ex.fm <= mean2 && mean2 <= two * (&ex.fa + &ex.fb));
    }
    let mean2 = 2.0 * fl.avg;
    Ok(mean2 - fl.fm >= -1e-12 && 2.0 * (fl.fa + fl.fb) - mean2 >= -1e-12)
}

pub fn simpson_deviation(f: &TestFunction, iv: &Interval) -> Result<DeviationValue> {
    let (fl, ex) = samples(f, iv)?;
    Ok(match ex {
        Some(ex) => DeviationValue::new(rational_to_f64(&ex.simpson()), true),
        None => DeviationValue::new(fl.simpson(), false),
    })
}
