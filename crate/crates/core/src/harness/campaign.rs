//! Verification campaigns over (claim, function, interval, λ, q).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    bounded_m_prefactor, corollary_prefactor, midpoint_enclosure, simpson_classical,
    theorem5_bound, theorem6_prefactor, trapezoid_enclosure, MForm,
};
use crate::corpus::{check_p_convex, corpus_lookup, GridSpec, TestFunction};
use crate::error::{Error, Result};
use crate::functionals::Samples;
use crate::harness::ledger::{claim_lookup, BoundClaim, Hypothesis, LhsSpec, Provenance, RhsSpec};
use crate::interval::{ExactInterval, Interval};
use crate::means::{check_proposition, MeanOrder};
use crate::oracle::{
    power_mean_sum, power_mean_sum_f64, rational, rational_to_f64, serde_text, serde_text_vec,
    Enclosure, Rational, DEFAULT_TOL,
};
use crate::real::{half, int, Real};
use crate::record::{classify_exact, Outcome, Status, Tolerances, VerificationRecord};

/// Oracle tolerance used to re-check a floating-point violation.
pub const CONFIRM_TOL: f64 = 1e-14;

/// Random intervals on a grid of step `1/1000`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalSampler {
    pub count: usize,
    pub lo: f64,
    pub hi: f64,
    pub min_width: f64,
}

impl Default for IntervalSampler {
    fn default() -> Self {
        Self {
            count: 0,
            lo: 0.1,
            hi: 10.0,
            min_width: 0.05,
        }
    }
}

const SAMPLER_STEPS: f64 = 1000.0;

impl IntervalSampler {
    fn validate(&self) -> Result<()> {
        let ok = self.lo.is_finite()
            && self.hi.is_finite()
            && self.min_width > 0.0
            && self.lo + self.min_width <= self.hi;
        if !ok {
            return Err(Error::InvalidParameter {
                name: "sampler",
                reason: format!(
                    "need lo + min_width <= hi, got lo = {}, hi = {}, min_width = {}",
                    self.lo, self.hi, self.min_width
                ),
            });
        }
        Ok(())
    }

    pub fn draw(&self, rng: &mut impl Rng) -> ExactInterval {
        let lo = (self.lo * SAMPLER_STEPS).ceil() as i64;
        let hi = (self.hi * SAMPLER_STEPS).floor() as i64;
        let min_w = ((self.min_width * SAMPLER_STEPS).ceil() as i64).max(1);
        let a = rng.gen_range(lo..=hi - min_w);
        let b = rng.gen_range(a + min_w..=hi);
        let step = SAMPLER_STEPS as i64;
        ExactInterval::new(rational(a, step), rational(b, step)).expect("a < b by construction")
    }
}

/// A fixed interval with exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalSpec {
    #[serde(with = "serde_text")]
    pub a: Rational,
    #[serde(with = "serde_text")]
    pub b: Rational,
}

impl IntervalSpec {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        ExactInterval::new(a.clone(), b.clone())?;
        Ok(Self { a, b })
    }

    fn to_exact(&self) -> ExactInterval {
        ExactInterval::new(self.a.clone(), self.b.clone()).expect("validated")
    }
}

/// `k/20` for `k = 0..=20`, plus `1/3` and `2/3`.
pub fn default_lambda_grid() -> Vec<Rational> {
    let mut grid: Vec<Rational> = (0..=20).map(|k| rational(k, 20)).collect();
    grid.extend([rational(1, 3), rational(2, 3)]);
    grid.sort();
    grid
}

pub fn default_q_grid() -> Vec<Rational> {
    vec![
        rational(1, 1),
        rational(3, 2),
        rational(2, 1),
        rational(4, 1),
        rational(10, 1),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub claims: Vec<String>,
    pub functions: Vec<String>,
    /// Always evaluated, before any random interval.
    pub intervals: Vec<IntervalSpec>,
    pub sampler: IntervalSampler,
    #[serde(with = "serde_text_vec")]
    pub lambda_grid: Vec<Rational>,
    #[serde(with = "serde_text_vec")]
    pub q_grid: Vec<Rational>,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub grid: GridSpec,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            claims: Vec::new(),
            functions: Vec::new(),
            intervals: vec![
                IntervalSpec::new(rational(0, 1), rational(1, 1)).expect("valid"),
                IntervalSpec::new(rational(1, 1), rational(2, 1)).expect("valid"),
            ],
            sampler: IntervalSampler::default(),
            lambda_grid: default_lambda_grid(),
            q_grid: default_q_grid(),
            seed: 0,
            tolerances: Tolerances::default(),
            grid: GridSpec::default(),
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lambda_grid.is_empty() || self.q_grid.is_empty() {
            return Err(Error::InvalidParameter {
                name: "grid",
                reason: "λ-grid and q-grid must be nonempty".into(),
            });
        }
        if let Some(l) = self
            .lambda_grid
            .iter()
            .find(|l| l.is_negative() || **l > Rational::one())
        {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: format!("grid values must lie in [0, 1], got {l}"),
            });
        }
        if let Some(q) = self.q_grid.iter().find(|q| **q < Rational::one()) {
            return Err(Error::InvalidParameter {
                name: "q",
                reason: format!("grid values must be >= 1, got {q}"),
            });
        }
        self.sampler.validate()?;
        for id in &self.claims {
            claim_lookup(id)?;
        }
        for id in &self.functions {
            corpus_lookup(id)?;
        }
        Ok(())
    }

    /// Fixed intervals followed by `sampler.count` seeded draws, duplicates removed.
    pub fn interval_list(&self) -> Vec<ExactInterval> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut seen = BTreeSet::new();
        let fixed = self.intervals.iter().map(IntervalSpec::to_exact);
        let random: Vec<ExactInterval> = (0..self.sampler.count)
            .map(|_| self.sampler.draw(&mut rng))
            .collect();
        fixed
            .chain(random)
            .filter(|iv| seen.insert((iv.lo().clone(), iv.hi().clone())))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HypothesisResult {
    Holds,
    Failed,
    Undefined,
}

/// Derivative data shared by both arithmetic paths.
struct Inputs<T> {
    samples: Samples<T>,
    m_a: T,
    m_b: T,
    sup_abs_d2: Option<T>,
    lower_d2: Option<T>,
    upper_d2: Option<T>,
    sup_abs_d4: Option<T>,
}

/// Right-hand side before the `q`-dependent factor is applied.
enum Rhs<T> {
    Point(T),
    /// `prefactor · (m_a^q + m_b^q)^(1/q)`.
    PowerSum {
        prefactor: T,
        m_a: T,
        m_b: T,
    },
}

fn two_sided<T: Real>(lo: T, x: T, hi: T) -> (T, Rhs<T>) {
    let center = (lo.clone() + hi.clone()) * half::<T>();
    let radius = (hi - lo) * half::<T>();
    ((x - center).abs(), Rhs::Point(radius))
}

fn need<T: Clone>(v: &Option<T>, what: &'static str) -> Result<T> {
    v.clone().ok_or(Error::MissingData(what))
}

/// Left side and unfinished right side of `claim` on one input.
fn measure<T: Real>(claim: &BoundClaim, inp: &Inputs<T>, lam: &T) -> Result<(T, Rhs<T>)> {
    let s = &inp.samples;
    let w = &s.width;
    let lhs = match claim.lhs {
        LhsSpec::Functional => s.functional(lam).abs(),
        LhsSpec::RuleFunctional { rule } => s.functional(&rule.lambda::<T>()).abs(),
        LhsSpec::Simpson => s.simpson().abs(),
        LhsSpec::HermiteHadamard => {
            let t = (s.fa.clone() + s.fb.clone()) * half::<T>();
            return Ok(two_sided(s.fm.clone(), s.avg.clone(), t));
        }
        LhsSpec::HermiteHadamardP => {
            let two = int::<T>(2);
            return Ok(two_sided(
                s.fm.clone(),
                two.clone() * s.avg.clone(),
                two * (s.fa.clone() + s.fb.clone()),
            ));
        }
        LhsSpec::TrapezoidGap => {
            let (lo, hi) = trapezoid_enclosure(
                w,
                &need(&inp.lower_d2, "lower bound on f''")?,
                &need(&inp.upper_d2, "upper bound on f''")?,
            );
            return Ok(two_sided(lo, s.gap_right(), hi));
        }
        LhsSpec::MidpointGap => {
            let (lo, hi) = midpoint_enclosure(
                w,
                &need(&inp.lower_d2, "lower bound on f''")?,
                &need(&inp.upper_d2, "upper bound on f''")?,
            );
            return Ok(two_sided(lo, s.gap_left(), hi));
        }
        LhsSpec::Proposition { .. } => {
            return Err(Error::Precondition(
                "propositions are evaluated by check_proposition".into(),
            ))
        }
    };
    let (m_a, m_b) = (inp.m_a.clone(), inp.m_b.clone());
    let rhs = match claim.rhs {
        RhsSpec::Theorem5 => Rhs::Point(theorem5_bound(w, lam, &m_a, &m_b)),
        RhsSpec::Theorem6 { variant } => Rhs::PowerSum {
            prefactor: theorem6_prefactor(w, lam, variant),
            m_a,
            m_b,
        },
        RhsSpec::Corollary { rule, variant } => Rhs::PowerSum {
            prefactor: corollary_prefactor(rule, w, variant),
            m_a,
            m_b,
        },
        RhsSpec::BoundedM { rule, form } => {
            let base = bounded_m_prefactor(rule, w, form) * need(&inp.sup_abs_d2, "sup |f''| (M)")?;
            match form {
                // 2^(1/q) = (1^q + 1^q)^(1/q)
                MForm::WithQ => Rhs::PowerSum {
                    prefactor: base,
                    m_a: T::one(),
                    m_b: T::one(),
                },
                MForm::Relaxed => Rhs::Point(base),
            }
        }
        RhsSpec::SimpsonClassical { power } => Rhs::Point(simpson_classical(
            w,
            &need(&inp.sup_abs_d4, "sup |f''''|")?,
            power,
        )),
        RhsSpec::Enclosure | RhsSpec::Proposition { .. } => {
            return Err(Error::Precondition(format!(
                "claim `{}` has no scalar bound",
                claim.id
            )))
        }
    };
    Ok((lhs, rhs))
}

/// Per-(function, interval) state: samples and hypothesis verdicts are computed
/// once and shared by every claim, λ and q.
struct Task<'a> {
    f: &'a TestFunction,
    exact_iv: ExactInterval,
    iv: Interval,
    in_domain: bool,
    grid: &'a GridSpec,
    tolerances: &'a Tolerances,
    exact: Option<Option<Inputs<Rational>>>,
    float: Option<Result<Inputs<f64>>>,
    hyp: BTreeMap<(Hypothesis, Option<Rational>), HypothesisResult>,
    power_sums: BTreeMap<(Rational, Rational, Rational), Option<Enclosure>>,
}

impl<'a> Task<'a> {
    fn new(
        f: &'a TestFunction,
        exact_iv: ExactInterval,
        grid: &'a GridSpec,
        tolerances: &'a Tolerances,
    ) -> Self {
        let iv = exact_iv.to_interval().expect("rational endpoints convert");
        Self {
            in_domain: f.domain().contains(&iv),
            f,
            exact_iv,
            iv,
            grid,
            tolerances,
            exact: None,
            float: None,
            hyp: BTreeMap::new(),
            power_sums: BTreeMap::new(),
        }
    }

    fn base_record(
        &self,
        claim: &BoundClaim,
        lam: Option<&Rational>,
        q: Option<&Rational>,
    ) -> VerificationRecord {
        VerificationRecord {
            claim: claim.id.clone(),
            function: self.f.id().to_owned(),
            a: rational_to_f64(self.exact_iv.lo()),
            b: rational_to_f64(self.exact_iv.hi()),
            lambda: lam.map(rational_to_f64),
            q: q.map(rational_to_f64),
            lhs: None,
            rhs: None,
            margin: None,
            status: Status::Undefined,
            exact: false,
        }
    }

    fn hypothesis(&mut self, h: Hypothesis, q: Option<&Rational>) -> HypothesisResult {
        let key = (
            h,
            q.cloned()
                .filter(|_| h == Hypothesis::AbsSecondDerivativePowerPConvex),
        );
        if let Some(r) = self.hyp.get(&key) {
            return *r;
        }
        let r = self.evaluate_hypothesis(h, q);
        self.hyp.insert(key, r);
        r
    }

    fn evaluate_hypothesis(&mut self, h: Hypothesis, q: Option<&Rational>) -> HypothesisResult {
        let from_report = |r: Result<crate::corpus::PConvexityReport>| match r {
            Ok(r) if r.passed => HypothesisResult::Holds,
            Ok(r) if r.is_undefined() => HypothesisResult::Undefined,
            Ok(_) => HypothesisResult::Failed,
            Err(_) => HypothesisResult::Undefined,
        };
        let f = self.f;
        match h {
            Hypothesis::None => HypothesisResult::Holds,
            Hypothesis::AbsSecondDerivativePConvex => {
                from_report(check_p_convex(&|x| f.d2(x).abs(), &self.iv, self.grid))
            }
            Hypothesis::AbsSecondDerivativePowerPConvex => {
                let q = q.map_or(1.0, rational_to_f64);
                from_report(check_p_convex(
                    &|x| f.d2(x).abs().powf(q),
                    &self.iv,
                    self.grid,
                ))
            }
            Hypothesis::PConvex => from_report(check_p_convex(&|x| f.eval(x), &self.iv, self.grid)),
            Hypothesis::FourthDerivative => {
                if f.has_d4() {
                    HypothesisResult::Holds
                } else {
                    HypothesisResult::Failed
                }
            }
            Hypothesis::Convex => {
                if let Some(env) = f.exact_envelope(&self.exact_iv) {
                    return if env.lower_d2.is_negative() {
                        HypothesisResult::Failed
                    } else {
                        HypothesisResult::Holds
                    };
                }
                match f.envelope(&self.iv).lower_d2 {
                    Some(lo) if lo.is_finite() => {
                        if lo >= 0.0 {
                            HypothesisResult::Holds
                        } else {
                            HypothesisResult::Failed
                        }
                    }
                    _ => HypothesisResult::Undefined,
                }
            }
            Hypothesis::PowerFunction => {
                if f.power().is_some() && self.exact_iv.lo().is_positive() {
                    HypothesisResult::Holds
                } else {
                    HypothesisResult::Failed
                }
            }
        }
    }

    fn exact_inputs(&mut self) -> Option<&Inputs<Rational>> {
        if self.exact.is_none() {
            let f = self.f;
            let iv = &self.exact_iv;
            let built = Samples::exact(f, iv).map(|samples| {
                let p2 = f
                    .polynomial()
                    .expect("exact samples imply a polynomial")
                    .derivative()
                    .derivative();
                let env = f.exact_envelope(iv);
                Inputs {
                    samples,
                    m_a: p2.eval(iv.lo()).abs(),
                    m_b: p2.eval(iv.hi()).abs(),
                    sup_abs_d2: env.as_ref().map(|e| e.sup_abs_d2.clone()),
                    lower_d2: env.as_ref().map(|e| e.lower_d2.clone()),
                    upper_d2: env.as_ref().map(|e| e.upper_d2.clone()),
                    sup_abs_d4: env.map(|e| e.sup_abs_d4),
                }
            });
            self.exact = Some(built);
        }
        self.exact.as_ref().and_then(Option::as_ref)
    }

    fn float_inputs(f: &TestFunction, iv: &Interval, tol: f64) -> Result<Inputs<f64>> {
        let samples = Samples::float(f, iv, tol)?;
        let env = f.envelope(iv);
        let (m_a, m_b) = (f.d2(iv.lo()).abs(), f.d2(iv.hi()).abs());
        for v in [m_a, m_b] {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    x: iv.lo(),
                    value: v,
                });
            }
        }
        Ok(Inputs {
            samples,
            m_a,
            m_b,
            sup_abs_d2: env.sup_abs_d2,
            lower_d2: env.lower_d2,
            upper_d2: env.upper_d2,
            sup_abs_d4: env.sup_abs_d4,
        })
    }

    fn power_sum(&mut self, m_a: &Rational, m_b: &Rational, q: &Rational) -> Option<Enclosure> {
        self.power_sums
            .entry((m_a.clone(), m_b.clone(), q.clone()))
            .or_insert_with(|| power_mean_sum(m_a, m_b, q))
            .clone()
    }

    fn exact_outcome(
        &mut self,
        claim: &BoundClaim,
        lam: &Rational,
        q: &Rational,
    ) -> Option<Outcome> {
        let (lhs, rhs) = measure(claim, self.exact_inputs()?, lam).ok()?;
        let rhs = match rhs {
            Rhs::Point(v) => Enclosure::point(v),
            Rhs::PowerSum {
                prefactor,
                m_a,
                m_b,
            } => self.power_sum(&m_a, &m_b, q)?.scale(&prefactor),
        };
        Some(classify_exact(&lhs, &rhs))
    }

    fn float_outcome_at(
        &self,
        claim: &BoundClaim,
        lam: &Rational,
        q: &Rational,
        inputs: &Inputs<f64>,
    ) -> Result<Outcome> {
        let (lhs, rhs) = measure(claim, inputs, &rational_to_f64(lam))?;
        let rhs = match rhs {
            Rhs::Point(v) => v,
            Rhs::PowerSum {
                prefactor,
                m_a,
                m_b,
            } => prefactor * power_mean_sum_f64(m_a, m_b, rational_to_f64(q)),
        };
        self.tolerances
            .classify_float(lhs, rhs)
            .ok_or(Error::NonFinite {
                x: self.iv.lo(),
                value: rhs,
            })
    }

    fn float_outcome(
        &mut self,
        claim: &BoundClaim,
        lam: &Rational,
        q: &Rational,
    ) -> Result<Outcome> {
        if self.float.is_none() {
            self.float = Some(Self::float_inputs(self.f, &self.iv, DEFAULT_TOL));
        }
        let inputs = match self.float.as_ref().expect("just set") {
            Ok(i) => i,
            Err(e) => return Err(replay(e)),
        };
        let first = self.float_outcome_at(claim, lam, q, inputs)?;
        if first.status != Status::Violated {
            return Ok(first);
        }
        let tight = Self::float_inputs(self.f, &self.iv, CONFIRM_TOL)?;
        self.float_outcome_at(claim, lam, q, &tight)
    }

    fn proposition(&self, claim: &BoundClaim, q: &Rational) -> Result<Outcome> {
        let (LhsSpec::Proposition { prop }, RhsSpec::Proposition { variant }) =
            (claim.lhs, claim.rhs)
        else {
            return Err(Error::Precondition(format!(
                "`{}` is not a proposition",
                claim.id
            )));
        };
        let n = self
            .f
            .power()
            .ok_or_else(|| Error::Precondition("not a power function".into()))?;
        let check = check_proposition(
            prop,
            self.exact_iv.lo(),
            self.exact_iv.hi(),
            MeanOrder::new(n)?,
            q,
            variant,
            self.tolerances,
        )?;
        let r = check.record;
        Ok(Outcome {
            lhs: r.lhs.unwrap_or(f64::NAN),
            rhs: r.rhs.unwrap_or(f64::NAN),
            margin: r.margin.unwrap_or(f64::NAN),
            status: r.status,
            exact: r.exact,
        })
    }

    fn evaluate(
        &mut self,
        claim: &BoundClaim,
        lam: Option<&Rational>,
        q: Option<&Rational>,
    ) -> VerificationRecord {
        let mut record = self.base_record(claim, lam, q);
        if !self.in_domain {
            record.status = Status::HypothesisFailed;
            return record;
        }
        match self.hypothesis(claim.hypothesis, q) {
            HypothesisResult::Holds => {}
            HypothesisResult::Failed => {
                record.status = Status::HypothesisFailed;
                return record;
            }
            HypothesisResult::Undefined => return record,
        }
        let lam_value = lam.cloned().unwrap_or_else(Rational::zero);
        let q_value = q.cloned().unwrap_or_else(Rational::one);
        let outcome = if matches!(claim.lhs, LhsSpec::Proposition { .. }) {
            self.proposition(claim, &q_value)
        } else {
            match self.exact_outcome(claim, &lam_value, &q_value) {
                Some(o) => Ok(o),
                None => self.float_outcome(claim, &lam_value, &q_value),
            }
        };
        if let Ok(o) = outcome {
            record.lhs = Some(o.lhs);
            record.rhs = Some(o.rhs);
            record.margin = Some(o.margin);
            record.status = o.status;
            record.exact = o.exact;
        }
        record
    }
}

/// Errors are not `Clone`; a cached failure is replayed as its message.
fn replay(e: &Error) -> Error {
    Error::Precondition(e.to_string())
}

/// The λ and q values a claim is evaluated at.
fn parameter_grid(
    claim: &BoundClaim,
    config: &CampaignConfig,
) -> Vec<(Option<Rational>, Option<Rational>)> {
    let lams: Vec<Option<Rational>> = if claim.uses_lambda {
        config.lambda_grid.iter().cloned().map(Some).collect()
    } else {
        vec![claim.fixed_rule().map(|r| r.lambda::<Rational>())]
    };
    let qs: Vec<Option<Rational>> = if claim.uses_q {
        config.q_grid.iter().cloned().map(Some).collect()
    } else {
        vec![None]
    };
    lams.iter()
        .flat_map(|l| qs.iter().map(move |q| (l.clone(), q.clone())))
        .collect()
}

/// Evaluates one claim on a single input, outside any campaign.
pub fn evaluate_claim(
    claim: &BoundClaim,
    f: &TestFunction,
    iv: &ExactInterval,
    lam: Option<&Rational>,
    q: Option<&Rational>,
    grid: &GridSpec,
    tolerances: &Tolerances,
) -> VerificationRecord {
    let lam = if claim.uses_lambda {
        lam.cloned()
    } else {
        claim.fixed_rule().map(|r| r.lambda::<Rational>())
    };
    let q = if claim.uses_q { q.cloned() } else { None };
    Task::new(f, iv.clone(), grid, tolerances).evaluate(claim, lam.as_ref(), q.as_ref())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub provenance: String,
    pub records: usize,
    /// Count per status, every status present.
    pub counts: BTreeMap<String, usize>,
    pub min_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub records: usize,
    pub counts: BTreeMap<String, usize>,
    pub claims: Vec<ClaimSummary>,
    pub violated_proof_backed: Vec<String>,
    pub violated_stated_only: Vec<String>,
}

fn status_counts<'r>(
    records: impl Iterator<Item = &'r VerificationRecord>,
) -> BTreeMap<String, usize> {
    let mut counts: BTreeMap<String, usize> = Status::ALL
        .iter()
        .map(|s| (s.as_str().to_owned(), 0))
        .collect();
    for r in records {
        *counts
            .get_mut(r.status.as_str())
            .expect("all statuses present") += 1;
    }
    counts
}

impl CampaignSummary {
    pub fn from_records(claims: &[BoundClaim], records: &[VerificationRecord]) -> Self {
        let mut per_claim = Vec::new();
        let mut violated_proof_backed = Vec::new();
        let mut violated_stated_only = Vec::new();
        for claim in claims {
            let mine: Vec<&VerificationRecord> =
                records.iter().filter(|r| r.claim == claim.id).collect();
            let counts = status_counts(mine.iter().copied());
            if counts[Status::Violated.as_str()] > 0 {
                match claim.provenance {
                    Provenance::ProofBacked => violated_proof_backed.push(claim.id.clone()),
                    Provenance::StatedOnly => violated_stated_only.push(claim.id.clone()),
                }
            }
            per_claim.push(ClaimSummary {
                claim: claim.id.clone(),
                provenance: match claim.provenance {
                    Provenance::ProofBacked => "proof-backed".into(),
                    Provenance::StatedOnly => "stated-only".into(),
                },
                records: mine.len(),
                counts,
                min_margin: mine.iter().filter_map(|r| r.margin).reduce(f64::min),
            });
        }
        Self {
            records: records.len(),
            counts: status_counts(records.iter()),
            claims: per_claim,
            violated_proof_backed,
            violated_stated_only,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub records: Vec<VerificationRecord>,
    pub summary: CampaignSummary,
}

/// Canonical order: claim, function, a, b, λ, q (missing values first).
pub fn sort_records(records: &mut [VerificationRecord]) {
    let opt = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(x), Some(y)) => x.total_cmp(&y),
        (a, b) => a.is_some().cmp(&b.is_some()),
    };
    records.sort_by(|x, y| {
        x.claim
            .cmp(&y.claim)
            .then_with(|| x.function.cmp(&y.function))
            .then_with(|| x.a.total_cmp(&y.a))
            .then_with(|| x.b.total_cmp(&y.b))
            .then_with(|| opt(x.lambda, y.lambda))
            .then_with(|| opt(x.q, y.q))
    });
}

pub fn resolve_claims(ids: &[String]) -> Result<Vec<BoundClaim>> {
    ids.iter().map(|id| claim_lookup(id)).collect()
}

pub fn resolve_functions(ids: &[String]) -> Result<Vec<TestFunction>> {
    ids.iter().map(|id| corpus_lookup(id)).collect()
}

/// Runs every (claim, function, interval, λ, q) combination.
///
/// Tasks run in parallel; the output order does not depend on scheduling.
/// Oracle failures become `undefined` records.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignResult> {
    config.validate()?;
    let claims = resolve_claims(&config.claims)?;
    let functions = resolve_functions(&config.functions)?;
    let intervals = config.interval_list();
    let grids: Vec<_> = claims.iter().map(|c| parameter_grid(c, config)).collect();

    let tasks: Vec<(&TestFunction, &ExactInterval)> = functions
        .iter()
        .flat_map(|f| intervals.iter().map(move |iv| (f, iv)))
        .collect();
    let mut records: Vec<VerificationRecord> = tasks
        .par_iter()
        .flat_map_iter(|&(f, iv)| {
            let mut task = Task::new(f, iv.clone(), &config.grid, &config.tolerances);
            let mut out = Vec::new();
            for (claim, grid) in claims.iter().zip(&grids) {
                for (lam, q) in grid {
                    out.push(task.evaluate(claim, lam.as_ref(), q.as_ref()));
                }
            }
            out
        })
        .collect();
    sort_records(&mut records);
    let summary = CampaignSummary::from_records(&claims, &records);
    Ok(CampaignResult { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(claims: &[&str], functions: &[&str]) -> CampaignConfig {
        CampaignConfig {
            claims: claims.iter().map(|s| s.to_string()).collect(),
            functions: functions.iter().map(|s| s.to_string()).collect(),
            ..CampaignConfig::default()
        }
    }

    #[test]
    fn prop1_counterexample_is_the_only_violation() {
        let mut c = config(&["prop1-stated"], &["poly3"]);
        c.q_grid = vec![rational(1, 1), rational(2, 1)];
        let r = run_campaign(&c).unwrap();
        let violated: Vec<_> = r
            .records
            .iter()
            .filter(|r| r.status == Status::Violated)
            .collect();
        assert_eq!(violated.len(), 1);
        let v = violated[0];
        assert_eq!((v.a, v.b, v.q), (1.0, 2.0, Some(2.0)));
        assert!(v.exact);
        assert!((v.margin.unwrap() + 0.0954915028125263).abs() < 1e-12);
        assert_eq!(
            r.summary.violated_stated_only,
            vec!["prop1-stated".to_string()]
        );
    }

    #[test]
    fn empty_function_list_gives_empty_report() {
        let c = config(&["thm5", "hh"], &[]);
        let r = run_campaign(&c).unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.summary.records, 0);
        assert!(r.summary.counts.values().all(|&n| n == 0));
        assert_eq!(r.summary.claims.len(), 2);
    }

    #[test]
    fn proof_backed_claims_hold_on_polynomials() {
        let ids: Vec<String> = crate::harness::ledger_standard()
            .into_iter()
            .filter(|c| c.is_proof_backed())
            .map(|c| c.id)
            .collect();
        let mut c = config(
            &[],
            &["poly2", "poly3", "poly4", "poly5", "const1", "affine"],
        );
        c.claims = ids;
        c.sampler.count = 5;
        let r = run_campaign(&c).unwrap();
        assert!(
            r.summary.violated_proof_backed.is_empty(),
            "{:?}",
            r.summary.violated_proof_backed
        );
        assert!(r.records.iter().any(|r| r.status == Status::Holds));
    }

    #[test]
    fn out_of_domain_and_failed_hypotheses() {
        let c = config(&["thm5", "prop1-derived", "eq20"], &["bump", "expx"]);
        let r = run_campaign(&c).unwrap();
        let bump_12: Vec<_> = r
            .records
            .iter()
            .filter(|r| r.function == "bump" && r.a == 1.0)
            .collect();
        assert!(!bump_12.is_empty());
        assert!(bump_12.iter().all(|r| r.status == Status::HypothesisFailed));
        // props need x^n
        assert!(r
            .records
            .iter()
            .filter(|r| r.claim == "prop1-derived")
            .all(|r| r.status == Status::HypothesisFailed));
        let eq20_exp = r
            .records
            .iter()
            .find(|r| r.claim == "eq20" && r.function == "expx")
            .unwrap();
        assert_eq!(eq20_exp.status, Status::Holds);
        assert!(!eq20_exp.exact);
    }

    #[test]
    fn random_intervals_are_deterministic_and_in_range() {
        let mut c = config(&["thm5"], &["poly2"]);
        c.sampler.count = 50;
        c.seed = 9;
        let a = c.interval_list();
        assert_eq!(a, c.interval_list());
        assert!(a.len() > 40);
        for iv in &a[2..] {
            let (lo, hi) = (rational_to_f64(iv.lo()), rational_to_f64(iv.hi()));
            assert!(0.1 <= lo && hi <= 10.0 && hi - lo >= 0.05 - 1e-12);
        }
    }

    #[test]
    fn config_validation() {
        assert!(run_campaign(&config(&["nope"], &[])).is_err());
        assert!(run_campaign(&config(&[], &["nope"])).is_err());
        let mut c = config(&[], &[]);
        c.q_grid = vec![rational(1, 2)];
        assert!(run_campaign(&c).is_err());
        let mut c = config(&[], &[]);
        c.lambda_grid.clear();
        assert!(run_campaign(&c).is_err());
    }
}
