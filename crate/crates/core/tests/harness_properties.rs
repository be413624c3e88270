use hhbounds_core::corpus::{corpus_lookup, corpus_standard};
use hhbounds_core::harness::*;
use hhbounds_core::oracle::rational;
use hhbounds_core::record::Status;
use hhbounds_core::{ExactInterval, ReportDocument};

fn all_claims() -> Vec<String> {
    ledger_standard().into_iter().map(|c| c.id).collect()
}

fn all_functions() -> Vec<String> {
    corpus_standard()
        .iter()
        .map(|f| f.id().to_owned())
        .collect()
}

fn config(count: usize, seed: u64) -> CampaignConfig {
    CampaignConfig {
        claims: all_claims(),
        functions: all_functions(),
        sampler: IntervalSampler {
            count,
            ..Default::default()
        },
        seed,
        ..CampaignConfig::default()
    }
}

#[test]
fn identical_configs_give_identical_reports() {
    let c = config(4, 21);
    let a = ReportDocument::new(c.clone(), run_campaign(&c).unwrap())
        .to_json()
        .unwrap();
    let b = ReportDocument::new(c.clone(), run_campaign(&c).unwrap())
        .to_json()
        .unwrap();
    assert_eq!(a, b);
    let other = config(4, 22);
    assert_ne!(
        a,
        ReportDocument::new(other.clone(), run_campaign(&other).unwrap())
            .to_json()
            .unwrap()
    );
}

#[test]
fn violations_on_polynomials_are_exact_and_reconfirm() {
    let c = config(6, 3);
    let result = run_campaign(&c).unwrap();
    let mut violations = 0;
    for r in result
        .records
        .iter()
        .filter(|r| r.status == Status::Violated)
    {
        violations += 1;
        let f = corpus_lookup(&r.function).unwrap();
        if f.polynomial().is_some() {
            assert!(r.exact, "{r:?}");
        }
        let claim = claim_lookup(&r.claim).unwrap();
        assert!(!claim.is_proof_backed(), "{r:?}");
        let spec = c
            .interval_list()
            .into_iter()
            .find(|iv| {
                hhbounds_core::oracle::rational_to_f64(iv.lo()) == r.a
                    && hhbounds_core::oracle::rational_to_f64(iv.hi()) == r.b
            })
            .unwrap();
        let lam = r.lambda.map(hhbounds_core::oracle::rational_from_f64);
        let q = r.q.map(hhbounds_core::oracle::rational_from_f64);
        let again = evaluate_claim(
            &claim,
            &f,
            &spec,
            lam.as_ref(),
            q.as_ref(),
            &c.grid,
            &c.tolerances,
        );
        assert_eq!(again.status, Status::Violated);
        let scale = 1f64
            .max(again.lhs.unwrap().abs())
            .max(again.rhs.unwrap().abs());
        assert!(again.margin.unwrap() < -c.tolerances.tol / 10.0 * scale);
    }
    assert!(violations > 0);
    assert!(result.summary.violated_proof_backed.is_empty());
}

#[test]
fn statuses_partition_the_records() {
    let r = run_campaign(&config(3, 8)).unwrap();
    let total: usize = r.summary.counts.values().sum();
    assert_eq!(total, r.records.len());
    for c in &r.summary.claims {
        assert_eq!(c.counts.values().sum::<usize>(), c.records);
    }
    for rec in &r.records {
        let has_values = rec.lhs.is_some() && rec.rhs.is_some() && rec.margin.is_some();
        match rec.status {
            Status::HypothesisFailed | Status::Undefined => assert!(!has_values),
            _ => assert!(has_values),
        }
    }
}

#[test]
fn enlarging_grids_keeps_existing_records() {
    let mut small = config(3, 4);
    small.lambda_grid = vec![rational(0, 1), rational(1, 2), rational(1, 1)];
    small.q_grid = vec![rational(1, 1), rational(2, 1)];
    let mut big = small.clone();
    big.lambda_grid.extend([rational(1, 3), rational(3, 4)]);
    big.q_grid.extend([rational(3, 2), rational(10, 1)]);
    let a = run_campaign(&small).unwrap().records;
    let b = run_campaign(&big).unwrap().records;
    assert!(b.len() > a.len());
    for r in &a {
        assert!(b.contains(r), "{r:?}");
    }
}

#[test]
fn campaign_records_match_standalone_evaluation() {
    let c = config(0, 0);
    let result = run_campaign(&c).unwrap();
    let iv = ExactInterval::new(rational(1, 1), rational(2, 1)).unwrap();
    let claim = claim_lookup("thm6-stated").unwrap();
    let f = corpus_lookup("poly4").unwrap();
    let standalone = evaluate_claim(
        &claim,
        &f,
        &iv,
        Some(&rational(1, 4)),
        Some(&rational(3, 2)),
        &c.grid,
        &c.tolerances,
    );
    assert!(result.records.contains(&standalone));
}
