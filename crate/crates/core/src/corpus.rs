//! Test functions with analytic derivatives, and the grid-based P-convexity
//! checker (`g(λx + (1-λ)y) <= g(x) + g(y)` for nonnegative `g`).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bounds::DerivativeEnvelope;
use crate::error::{Error, Result};
use crate::interval::{ExactInterval, Interval};
use crate::oracle::{rational_to_f64, Polynomial, Rational};

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    Nonnegative,
    Monotone,
    Convex,
    QuasiConvex,
    Polynomial,
}

#[derive(Clone)]
pub struct TestFunction {
    id: String,
    eval: RealFn,
    d1: RealFn,
    d2: RealFn,
    d4: Option<RealFn>,
    antiderivative: Option<RealFn>,
    domain: Interval,
    tags: BTreeSet<ClassTag>,
    poly: Option<Polynomial>,
    power: Option<i32>,
    breakpoints: Vec<f64>,
    monotone_derivatives: bool,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("tags", &self.tags)
            .field("poly", &self.poly)
            .finish_non_exhaustive()
    }
}

impl TestFunction {
    pub fn new(
        id: impl Into<String>,
        domain: Interval,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            eval: Arc::new(eval),
            d1: Arc::new(d1),
            d2: Arc::new(d2),
            d4: None,
            antiderivative: None,
            domain,
            tags: BTreeSet::new(),
            poly: None,
            power: None,
            breakpoints: Vec::new(),
            monotone_derivatives: false,
        }
    }

    /// Builds every derivative and the antiderivative from exact coefficients.
    pub fn from_polynomial(id: impl Into<String>, poly: Polynomial, domain: Interval) -> Self {
        let p1 = poly.derivative();
        let p2 = p1.derivative();
        let horner = |p: &Polynomial| {
            let c: Vec<f64> = p.coeffs().iter().map(rational_to_f64).collect();
            move |x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k)
        };
        let (e0, e1, e2) = (horner(&poly), horner(&p1), horner(&p2));
        let e4 = horner(&p2.derivative().derivative());
        let mut anti = vec![Rational::from_integer(0.into())];
        anti.extend(
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer((k as i64 + 1).into())),
        );
        let anti = horner(&Polynomial::new(anti));

        let mut f = Self::new(id, domain, e0, e1, e2);
        f.d4 = Some(Arc::new(e4));
        f.antiderivative = Some(Arc::new(anti));
        f.tags.insert(ClassTag::Polynomial);
        f.poly = Some(poly);
        f
    }

    pub fn with_d4(mut self, d4: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.d4 = Some(Arc::new(d4));
        self
    }

    pub fn with_antiderivative(
        mut self,
        anti: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.antiderivative = Some(Arc::new(anti));
        self
    }

    pub fn with_tags(mut self, tags: impl IntoIterator<Item = ClassTag>) -> Self {
        self.tags.extend(tags);
        self
    }

    pub fn with_breakpoints(mut self, points: Vec<f64>) -> Self {
        self.breakpoints = points;
        self
    }

    /// Declares `f''` and `f⁽⁴⁾` monotone on the whole domain, so their extremes
    /// over any subinterval sit at its endpoints.
    pub fn with_monotone_derivatives(mut self) -> Self {
        self.monotone_derivatives = true;
        self
    }

    fn with_power(mut self, n: i32) -> Self {
        self.power = Some(n);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn d1(&self, x: f64) -> f64 {
        (self.d1)(x)
    }

    pub fn d2(&self, x: f64) -> f64 {
        (self.d2)(x)
    }

    pub fn d4(&self, x: f64) -> Option<f64> {
        self.d4.as_ref().map(|d| d(x))
    }

    pub fn has_d4(&self) -> bool {
        self.d4.is_some()
    }

    /// `F(b) - F(a)` when a closed-form antiderivative is known.
    pub fn exact_integral(&self, iv: &Interval) -> Option<f64> {
        self.antiderivative.as_ref().map(|anti| {
            if let Some(p) = &self.poly {
                let ex = iv.to_exact();
                return rational_to_f64(&p.integrate(ex.lo(), ex.hi()));
            }
            anti(iv.hi()) - anti(iv.lo())
        })
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn tags(&self) -> &BTreeSet<ClassTag> {
        &self.tags
    }

    pub fn has_tag(&self, tag: ClassTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn polynomial(&self) -> Option<&Polynomial> {
        self.poly.as_ref()
    }

    /// `n` when this function is exactly `x^n`.
    pub fn power(&self) -> Option<i32> {
        self.power
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn monotone_derivatives(&self) -> bool {
        self.monotone_derivatives
    }

    /// `f + c0 + c1·x`. Tags that an affine shift can break are dropped.
    pub fn plus_affine(&self, c0: f64, c1: f64) -> Self {
        let base = self.clone();
        let (e, d1) = (base.eval.clone(), base.d1.clone());
        let mut out = Self {
            id: format!("{}+affine", self.id),
            eval: Arc::new(move |x| e(x) + c0 + c1 * x),
            d1: Arc::new(move |x| d1(x) + c1),
            ..base
        };
        out.antiderivative = self
            .antiderivative
            .clone()
            .map(|a| Arc::new(move |x: f64| a(x) + c0 * x + 0.5 * c1 * x * x) as RealFn);
        out.poly = self.poly.as_ref().map(|p| {
            p.add(&Polynomial::new(vec![
                crate::oracle::rational_from_f64(c0),
                crate::oracle::rational_from_f64(c1),
            ]))
        });
        out.power = None;
        out.tags
            .retain(|t| matches!(t, ClassTag::Convex | ClassTag::Polynomial));
        out
    }

    /// Bounds on `f''` and `|f⁽⁴⁾|` over `iv`.
    ///
    /// Endpoint evaluation when the derivatives are declared monotone, otherwise a
    /// dense sample refined by golden-section search around the extreme samples.
    pub fn envelope(&self, iv: &Interval) -> DerivativeEnvelope {
        let (lower, upper, sup_d4) = if self.monotone_derivatives {
            let (da, db) = (self.d2(iv.lo()), self.d2(iv.hi()));
            let d4 = self
                .d4
                .as_ref()
                .map(|d| d(iv.lo()).abs().max(d(iv.hi()).abs()));
            (da.min(db), da.max(db), d4)
        } else {
            let d2 = self.d2.clone();
            let lower = search_extreme(&*d2, iv, false);
            let upper = search_extreme(&*d2, iv, true);
            let d4 = self.d4.as_ref().map(|d| {
                let d = d.clone();
                search_extreme(&move |x| d(x).abs(), iv, true)
            });
            (lower, upper, d4)
        };
        DerivativeEnvelope {
            sup_abs_d2: Some(lower.abs().max(upper.abs())),
            lower_d2: Some(lower),
            upper_d2: Some(upper),
            sup_abs_d4: sup_d4,
        }
    }

    /// Exact envelope for polynomials with monotone derivatives on rational intervals.
    pub fn exact_envelope(&self, iv: &ExactInterval) -> Option<ExactEnvelope> {
        if !self.monotone_derivatives {
            return None;
        }
        let p2 = self.poly.as_ref()?.derivative().derivative();
        let p4 = p2.derivative().derivative();
        let (da, db) = (p2.eval(iv.lo()), p2.eval(iv.hi()));
        let (fa, fb) = (p4.eval(iv.lo()), p4.eval(iv.hi()));
        let lower = da.clone().min(db.clone());
        let upper = da.max(db);
        Some(ExactEnvelope {
            sup_abs_d2: num_traits::Signed::abs(&lower).max(num_traits::Signed::abs(&upper)),
            lower_d2: lower,
            upper_d2: upper,
            sup_abs_d4: num_traits::Signed::abs(&fa).max(num_traits::Signed::abs(&fb)),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactEnvelope {
    pub sup_abs_d2: Rational,
    pub lower_d2: Rational,
    pub upper_d2: Rational,
    pub sup_abs_d4: Rational,
}

fn search_extreme(g: &dyn Fn(f64) -> f64, iv: &Interval, maximize: bool) -> f64 {
    const SAMPLES: usize = 4001;
    let sign = if maximize { 1.0 } else { -1.0 };
    let xs = iv.grid(SAMPLES);
    let (best_i, best) =
        xs.iter()
            .map(|&x| sign * g(x))
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (i, v)| if v > acc.1 { (i, v) } else { acc },
            );
    let lo = xs[best_i.saturating_sub(1)];
    let hi = xs[(best_i + 1).min(SAMPLES - 1)];
    let (mut a, mut b) = (lo, hi);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (sign * g(c), sign * g(d));
    for _ in 0..60 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = sign * g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = sign * g(d);
        }
    }
    sign * best.max(fc).max(fd)
}

/// Sampling plan for [`check_p_convex`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct GridSpec {
    pub nx: usize,
    pub ny: usize,
    pub nlam: usize,
    /// Extra λ samples on the pair `(lo, hi)`; catches features narrower than the x/y grid.
    pub edge_samples: usize,
    pub tol_abs: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            nx: 41,
            ny: 41,
            nlam: 21,
            edge_samples: 2001,
            tol_abs: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub lam: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PConvexityReport {
    pub passed: bool,
    pub witness: Option<Witness>,
    pub samples_checked: usize,
    /// Set when `g` produced NaN or ±∞; neither a pass nor a violation.
    pub undefined_at: Option<f64>,
}

impl PConvexityReport {
    pub fn is_undefined(&self) -> bool {
        self.undefined_at.is_some()
    }
}

/// Checks `g(λx + (1-λ)y) <= g(x) + g(y) + tol` on a grid of triples.
///
/// The diagonal `x = y` encodes nonnegativity (`g(x) <= 2 g(x)`). Pairs are
/// scanned in order of increasing separation, so the first violating pair is
/// the most local one; its witness is the λ with the largest excess.
pub fn check_p_convex(
    g: &dyn Fn(f64) -> f64,
    domain: &Interval,
    grid: &GridSpec,
) -> Result<PConvexityReport> {
    if grid.nx < 3 || grid.ny < 3 || grid.nlam < 3 {
        return Err(Error::InvalidParameter {
            name: "grid",
            reason: format!(
                "need at least 3 points per axis, got {}x{}x{}",
                grid.nx, grid.ny, grid.nlam
            ),
        });
    }
    let xs = domain.grid(grid.nx);
    let ys = domain.grid(grid.ny);
    let lams: Vec<f64> = (0..grid.nlam)
        .map(|k| k as f64 / (grid.nlam - 1) as f64)
        .collect();

    let undefined = |x: f64, samples: usize| PConvexityReport {
        passed: false,
        witness: None,
        samples_checked: samples,
        undefined_at: Some(x),
    };
    let mut gx = Vec::with_capacity(xs.len());
    for &x in &xs {
        let v = g(x);
        if !v.is_finite() {
            return Ok(undefined(x, 0));
        }
        gx.push(v);
    }
    let mut gy = Vec::with_capacity(ys.len());
    for &y in &ys {
        let v = g(y);
        if !v.is_finite() {
            return Ok(undefined(y, 0));
        }
        gy.push(v);
    }

    let mut pairs: Vec<(usize, usize)> = (0..xs.len())
        .flat_map(|i| (0..ys.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by(|&(i1, j1), &(i2, j2)| {
        let s1 = (xs[i1] - ys[j1]).abs();
        let s2 = (xs[i2] - ys[j2]).abs();
        s1.total_cmp(&s2)
            .then(xs[i1].total_cmp(&xs[i2]))
            .then(ys[j1].total_cmp(&ys[j2]))
    });

    let mut samples = 0;
    let scan = |x: f64,
                y: f64,
                gxv: f64,
                gyv: f64,
                lams: &[f64],
                samples: &mut usize|
     -> std::result::Result<Option<Witness>, f64> {
        let rhs = gxv + gyv;
        let mut worst: Option<Witness> = None;
        for &lam in lams {
            let z = lam * x + (1.0 - lam) * y;
            let lhs = g(z);
            *samples += 1;
            if !lhs.is_finite() {
                return Err(z);
            }
            if lhs > rhs + grid.tol_abs && worst.is_none_or(|w| lhs - rhs > w.lhs - w.rhs) {
                worst = Some(Witness {
                    x,
                    y,
                    lam,
                    lhs,
                    rhs,
                });
            }
        }
        Ok(worst)
    };

    for &(i, j) in &pairs {
        match scan(xs[i], ys[j], gx[i], gy[j], &lams, &mut samples) {
            Err(z) => return Ok(undefined(z, samples)),
            Ok(Some(w)) => {
                return Ok(PConvexityReport {
                    passed: false,
                    witness: Some(w),
                    samples_checked: samples,
                    undefined_at: None,
                })
            }
            Ok(None) => {}
        }
    }

    if grid.edge_samples >= 2 {
        let edge_lams: Vec<f64> = (0..grid.edge_samples)
            .map(|k| k as f64 / (grid.edge_samples - 1) as f64)
            .collect();
        let (lo, hi) = (domain.lo(), domain.hi());
        match scan(lo, hi, gx[0], gy[ys.len() - 1], &edge_lams, &mut samples) {
            Err(z) => return Ok(undefined(z, samples)),
            Ok(Some(w)) => {
                return Ok(PConvexityReport {
                    passed: false,
                    witness: Some(w),
                    samples_checked: samples,
                    undefined_at: None,
                })
            }
            Ok(None) => {}
        }
    }

    Ok(PConvexityReport {
        passed: true,
        witness: None,
        samples_checked: samples,
        undefined_at: None,
    })
}

/// Center and width parameter of the narrow Gaussian bump `exp(-(x-c)²/w)`.
const BUMP_CENTER: f64 = 0.5;
const BUMP_WIDTH: f64 = 0.001;

fn bump() -> TestFunction {
    let sigma = BUMP_WIDTH.sqrt();
    let s = move |x: f64| (x - BUMP_CENTER) / sigma;
    let e = move |x: f64| (-s(x) * s(x)).exp();
    // Derivatives of exp(-s²) are (-1)^n H_n(s) exp(-s²) / σ^n with physicists' Hermite H_n.
    TestFunction::new(
        "bump",
        Interval::new(0.0, 1.0).expect("valid"),
        e,
        move |x| -2.0 * s(x) * e(x) / sigma,
        move |x| (4.0 * s(x) * s(x) - 2.0) * e(x) / (sigma * sigma),
    )
    .with_d4(move |x| {
        let t = s(x) * s(x);
        (16.0 * t * t - 48.0 * t + 12.0) * e(x) / (sigma * sigma * sigma * sigma)
    })
    .with_tags([ClassTag::Nonnegative])
    .with_breakpoints(vec![BUMP_CENTER])
}

fn power(n: usize) -> TestFunction {
    TestFunction::from_polynomial(
        format!("poly{n}"),
        Polynomial::monomial(n),
        Interval::new(0.0, 10.0).expect("valid"),
    )
    .with_tags([
        ClassTag::Nonnegative,
        ClassTag::Monotone,
        ClassTag::Convex,
        ClassTag::QuasiConvex,
    ])
    .with_monotone_derivatives()
    .with_power(n as i32)
}

/// The compiled-in corpus. Ids: `poly2`..`poly5`, `expx`, `const1`, `affine`, `bump`.
pub fn corpus_standard() -> Vec<TestFunction> {
    let domain = Interval::new(0.0, 10.0).expect("valid");
    let all_tags = [
        ClassTag::Nonnegative,
        ClassTag::Monotone,
        ClassTag::Convex,
        ClassTag::QuasiConvex,
    ];
    let mut out: Vec<TestFunction> = (2..=5).map(power).collect();
    out.push(
        TestFunction::new(
            "expx",
            Interval::new(-20.0, 20.0).expect("valid"),
            f64::exp,
            f64::exp,
            f64::exp,
        )
        .with_d4(f64::exp)
        .with_antiderivative(f64::exp)
        .with_tags(all_tags)
        .with_monotone_derivatives(),
    );
    out.push(
        TestFunction::from_polynomial("const1", Polynomial::monomial(0), domain)
            .with_tags(all_tags)
            .with_monotone_derivatives(),
    );
    out.push(
        TestFunction::from_polynomial(
            "affine",
            Polynomial::new(vec![
                Rational::from_integer(1.into()),
                Rational::from_integer(2.into()),
            ]),
            domain,
        )
        .with_tags(all_tags)
        .with_monotone_derivatives(),
    );
    out.push(bump());
    out
}

pub fn corpus_lookup(id: &str) -> Result<TestFunction> {
    corpus_standard()
        .into_iter()
        .find(|f| f.id() == id)
        .ok_or_else(|| Error::UnknownFunction(id.to_owned()))
}

/// `max |d2(x) - (d1(x+h) - d1(x-h))/2h| / (1 + |d2(x)|)` on a 101-point grid
/// of the function's domain, with `h = 1e-5·width`.
pub fn finite_difference_discrepancy(f: &TestFunction) -> f64 {
    let dom = f.domain();
    let h = 1e-5 * dom.width();
    dom.grid(101)
        .into_iter()
        .map(|x| {
            let fd = (f.d1(x + h) - f.d1(x - h)) / (2.0 * h);
            (f.d2(x) - fd).abs() / (1.0 + f.d2(x).abs())
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval {
        Interval::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn square_and_constant_are_p_functions() {
        let grid = GridSpec::default();
        let r = check_p_convex(&|x: f64| x * x, &unit(), &grid).unwrap();
        assert!(r.passed && r.witness.is_none());
        assert_eq!(r.samples_checked, 41 * 41 * 21 + 2001);
        let r = check_p_convex(&|_| 1.0, &unit(), &grid).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn bump_fails_near_center() {
        let r = check_p_convex(
            &|x: f64| (-(x - 0.5) * (x - 0.5) / 0.001).exp(),
            &unit(),
            &GridSpec::default(),
        )
        .unwrap();
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert!(w.lhs > w.rhs);
        assert!((0.35..=0.5).contains(&w.x), "{w:?}");
        assert!((0.5..=0.65).contains(&w.y), "{w:?}");
        let z = w.lam * w.x + (1.0 - w.lam) * w.y;
        assert!((z - 0.5).abs() < 0.01, "{w:?}");
    }

    #[test]
    fn negative_values_fail_on_the_diagonal() {
        let r = check_p_convex(&|x: f64| x - 0.5, &unit(), &GridSpec::default()).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.x, w.y);
        assert!(w.lhs < 0.0);
    }

    #[test]
    fn undefined_is_not_a_violation() {
        let r = check_p_convex(&|x: f64| 1.0 / (x - 0.5), &unit(), &GridSpec::default()).unwrap();
        assert!(!r.passed);
        assert!(r.witness.is_none());
        assert_eq!(r.undefined_at, Some(0.5));
    }

    #[test]
    fn grid_too_small_is_rejected() {
        let grid = GridSpec {
            nlam: 2,
            ..GridSpec::default()
        };
        assert!(check_p_convex(&|x| x, &unit(), &grid).is_err());
    }

    #[test]
    fn deterministic() {
        let g = |x: f64| (10.0 * x).sin().abs();
        let a = check_p_convex(&g, &unit(), &GridSpec::default()).unwrap();
        let b = check_p_convex(&g, &unit(), &GridSpec::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corpus_contents() {
        let corpus = corpus_standard();
        let ids: Vec<&str> = corpus.iter().map(|f| f.id()).collect();
        for id in ["poly2", "poly3", "poly4", "poly5", "expx", "const1", "bump"] {
            assert!(ids.contains(&id), "{id}");
        }
        let p3 = corpus_lookup("poly3").unwrap();
        assert_eq!(p3.d2(1.0).abs(), 6.0);
        assert_eq!(p3.d2(2.0).abs(), 12.0);
        let c = corpus_lookup("const1").unwrap();
        assert_eq!(c.d2(0.3), 0.0);
        let p2 = corpus_lookup("poly2").unwrap();
        assert_eq!(p2.exact_integral(&unit()), Some(1.0 / 3.0));
        assert!(corpus_lookup("nope").is_err());
        let bump = corpus_lookup("bump").unwrap();
        assert!(!bump.has_tag(ClassTag::Convex));
        assert!(bump.polynomial().is_none());
    }

    #[test]
    fn finite_differences_agree() {
        for f in corpus_standard() {
            let d = finite_difference_discrepancy(&f);
            assert!(d <= 1e-6, "{}: {d}", f.id());
        }
    }

    #[test]
    fn abs_second_derivative_of_powers_is_p_convex() {
        let iv = Interval::new(0.1, 10.0).unwrap();
        for f in corpus_standard()
            .into_iter()
            .filter(|f| f.power().is_some())
        {
            let r = check_p_convex(&|x| f.d2(x).abs(), &iv, &GridSpec::default()).unwrap();
            assert!(r.passed, "{}", f.id());
        }
    }

    #[test]
    fn envelope_of_bump_is_found_by_search() {
        let bump = corpus_lookup("bump").unwrap();
        let env = bump.envelope(&unit());
        // f''(c) = -2/w and the maximum 4 e^{-3/2}/w sits at |x-c| = sqrt(3w/2).
        assert!((env.lower_d2.unwrap() + 2.0 / BUMP_WIDTH).abs() < 1e-6);
        let peak = 4.0 * (-1.5f64).exp() / BUMP_WIDTH;
        assert!((env.upper_d2.unwrap() - peak).abs() < 1e-6 * peak);
    }

    #[test]
    fn exact_envelope_for_monomials() {
        let p3 = corpus_lookup("poly3").unwrap();
        let iv = Interval::new(1.0, 2.0).unwrap().to_exact();
        let env = p3.exact_envelope(&iv).unwrap();
        assert_eq!(env.lower_d2, Rational::from_integer(6.into()));
        assert_eq!(env.upper_d2, Rational::from_integer(12.into()));
        assert_eq!(env.sup_abs_d4, Rational::from_integer(0.into()));
        assert!(corpus_lookup("expx").unwrap().exact_envelope(&iv).is_none());
    }

    #[test]
    fn affine_shift_keeps_second_derivative() {
        let p = corpus_lookup("poly4").unwrap();
        let q = p.plus_affine(3.0, -2.0);
        assert_eq!(q.d2(1.5), p.d2(1.5));
        assert_eq!(q.eval(2.0), 16.0 + 3.0 - 4.0);
        assert!(q.polynomial().is_some());
        assert!(!q.has_tag(ClassTag::Nonnegative));
    }
}
