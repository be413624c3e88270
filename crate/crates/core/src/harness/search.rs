//! Randomized counterexample search with shrinking.

use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::TestFunction;
use crate::error::Result;
use crate::harness::campaign::{evaluate_claim, resolve_functions, CampaignConfig};
use crate::harness::ledger::{claim_lookup, BoundClaim};
use crate::interval::ExactInterval;
use crate::oracle::{rational, rational_from_int, Rational};
use crate::record::{Status, VerificationRecord};

const BATCH: usize = 256;
const SHRINK_ROUNDS: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub claim: String,
    /// The shrunk violation, if any. `None` only means none was found in `trials`.
    pub counterexample: Option<VerificationRecord>,
    pub trials: usize,
    pub shrink_steps: usize,
}

struct Trial {
    function: usize,
    interval: ExactInterval,
    lam: Rational,
    q: Rational,
}

fn draw_trials(config: &CampaignConfig, n_functions: usize) -> Vec<Trial> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.sampler.count)
        .map(|k| {
            let interval = match config.intervals.get(k) {
                Some(spec) => {
                    ExactInterval::new(spec.a.clone(), spec.b.clone()).expect("validated")
                }
                None => config.sampler.draw(&mut rng),
            };
            Trial {
                function: rng.gen_range(0..n_functions),
                interval,
                lam: config
                    .lambda_grid
                    .choose(&mut rng)
                    .expect("nonempty")
                    .clone(),
                q: config.q_grid.choose(&mut rng).expect("nonempty").clone(),
            }
        })
        .collect()
}

struct Probe<'a> {
    claim: &'a BoundClaim,
    f: &'a TestFunction,
    config: &'a CampaignConfig,
}

impl Probe<'_> {
    fn run(&self, iv: &ExactInterval, lam: &Rational, q: &Rational) -> VerificationRecord {
        evaluate_claim(
            self.claim,
            self.f,
            iv,
            Some(lam),
            Some(q),
            &self.config.grid,
            &self.config.tolerances,
        )
    }

    fn violates(&self, iv: &ExactInterval, lam: &Rational, q: &Rational) -> bool {
        self.run(iv, lam, q).status == Status::Violated
    }
}

fn interval_candidates(iv: &ExactInterval) -> Vec<ExactInterval> {
    let (a, b) = (iv.lo().clone(), iv.hi().clone());
    let w = iv.width();
    let one = Rational::one();
    let half = rational(1, 2);
    let mut out = Vec::new();
    let mut push = |lo: Rational, hi: Rational| {
        if let Ok(c) = ExactInterval::new(lo, hi) {
            if &c != iv {
                out.push(c);
            }
        }
    };
    if w != one {
        push(a.clone(), &a + &one);
        push(&b - &one, b.clone());
        let m = iv.midpoint();
        push(&m - &half, &m + &half);
    }
    let a_round = a.round();
    push(a_round.clone(), &a_round + &w);
    if w > one {
        push(a.clone(), &a + w.round());
    }
    if !a.is_integer() && a.is_positive() {
        push(a.floor().max(rational_from_int(0)), b.clone());
    }
    out
}

/// Moves `q` to the smallest violating grid value, then the interval toward
/// unit width and integer endpoints, keeping the violation at every step.
fn shrink(
    probe: &Probe,
    mut iv: ExactInterval,
    lam: Rational,
    mut q: Rational,
) -> (VerificationRecord, usize) {
    let mut steps = 0;
    let mut qs = probe.config.q_grid.clone();
    qs.sort();
    if let Some(smaller) = qs
        .iter()
        .filter(|c| **c < q)
        .find(|c| probe.violates(&iv, &lam, c))
    {
        q = smaller.clone();
        steps += 1;
    }
    for _ in 0..SHRINK_ROUNDS {
        match interval_candidates(&iv)
            .into_iter()
            .find(|c| probe.violates(c, &lam, &q))
        {
            Some(c) => {
                iv = c;
                steps += 1;
            }
            None => break,
        }
    }
    (probe.run(&iv, &lam, &q), steps)
}

/// Searches `search.sampler.count` random inputs for a violation of `claim_id`.
///
/// Trial `k` uses `search.intervals[k]` when present and a seeded draw otherwise;
/// function, λ and q are drawn uniformly from the config. The lowest-index
/// violating trial wins, so the result does not depend on thread scheduling.
pub fn find_counterexample(claim_id: &str, search: &CampaignConfig) -> Result<SearchOutcome> {
    let claim = claim_lookup(claim_id)?;
    let mut config = search.clone();
    config.claims = vec![claim.id.clone()];
    config.validate()?;
    let functions = resolve_functions(&config.functions)?;
    let mut outcome = SearchOutcome {
        claim: claim.id.clone(),
        counterexample: None,
        trials: 0,
        shrink_steps: 0,
    };
    if functions.is_empty() {
        return Ok(outcome);
    }
    let trials = draw_trials(&config, functions.len());
    for (batch_index, batch) in trials.chunks(BATCH).enumerate() {
        let hit = batch.par_iter().position_first(|t| {
            let probe = Probe {
                claim: &claim,
                f: &functions[t.function],
                config: &config,
            };
            probe.violates(&t.interval, &t.lam, &t.q)
        });
        match hit {
            Some(i) => {
                let t = &batch[i];
                outcome.trials = batch_index * BATCH + i + 1;
                let probe = Probe {
                    claim: &claim,
                    f: &functions[t.function],
                    config: &config,
                };
                let (record, steps) =
                    shrink(&probe, t.interval.clone(), t.lam.clone(), t.q.clone());
                outcome.counterexample = Some(record);
                outcome.shrink_steps = steps;
                return Ok(outcome);
            }
            None => outcome.trials += batch.len(),
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::campaign::IntervalSpec;

    fn search(claim: &str, functions: &[&str], trials: usize) -> SearchOutcome {
        let config = CampaignConfig {
            functions: functions.iter().map(|s| s.to_string()).collect(),
            sampler: crate::harness::IntervalSampler {
                count: trials,
                ..Default::default()
            },
            seed: 3,
            ..CampaignConfig::default()
        };
        find_counterexample(claim, &config).unwrap()
    }

    #[test]
    fn finds_and_shrinks_stated_theorem6_violation() {
        let config = CampaignConfig {
            functions: vec!["poly2".into()],
            intervals: vec![IntervalSpec::new(rational(0, 1), rational(1, 1)).unwrap()],
            lambda_grid: vec![rational(0, 1)],
            q_grid: vec![
                rational(1, 1),
                rational(3, 2),
                rational(2, 1),
                rational(4, 1),
            ],
            sampler: crate::harness::IntervalSampler {
                count: 200,
                ..Default::default()
            },
            seed: 1,
            ..CampaignConfig::default()
        };
        let out = find_counterexample("thm6-stated", &config).unwrap();
        let r = out.counterexample.expect("violation exists");
        assert_eq!(r.status, Status::Violated);
        assert!(r.exact);
        // shrunk to the smallest violating q and a unit interval
        assert_eq!(r.q, Some(1.5));
        assert_eq!(r.b - r.a, 1.0);
        assert_eq!(r.lhs, Some(1.0 / 12.0));
    }

    #[test]
    fn proof_backed_claims_survive_search() {
        let out = search("thm5", &["poly2", "poly3", "poly4", "expx"], 300);
        assert!(out.counterexample.is_none());
        assert_eq!(out.trials, 300);
        let out = search("hh", &["poly2", "poly5", "expx", "const1"], 300);
        assert!(out.counterexample.is_none());
    }

    #[test]
    fn search_is_deterministic() {
        let a = search("prop1-stated", &["poly3", "poly4"], 100);
        assert_eq!(a, search("prop1-stated", &["poly3", "poly4"], 100));
        assert!(a.counterexample.is_some());
    }

    #[test]
    fn no_functions_no_trials() {
        let out = search("thm5", &[], 100);
        assert_eq!(out.trials, 0);
        assert!(out.counterexample.is_none());
        assert!(find_counterexample("nope", &CampaignConfig::default()).is_err());
    }
}
