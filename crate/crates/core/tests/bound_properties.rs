use hhbounds_core::bounds::*;
use hhbounds_core::corpus::{check_p_convex, corpus_standard, GridSpec};
use hhbounds_core::functionals::functional_lambda;
use hhbounds_core::kernel::RuleParameter;
use hhbounds_core::oracle::{power_mean_sum, rational, Rational};
use hhbounds_core::Interval;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q_GRID: [f64; 5] = [1.0, 1.5, 2.0, 4.0, 10.0];

fn iv(a: f64, b: f64) -> Interval {
    Interval::new(a, b).unwrap()
}

#[test]
fn seam_is_continuous_in_exact_arithmetic() {
    let half = rational(1, 2);
    let small = rational(8, 1) * &half * &half * &half - rational(3, 1) * &half + rational(1, 1);
    let large = rational(3, 1) * &half - rational(1, 1);
    assert_eq!(small, large);
    assert_eq!(lambda_shape(&half), small);
    for (w, ma, mb) in [
        (rational(1, 1), rational(2, 1), rational(3, 1)),
        (rational(7, 3), rational(1, 5), rational(0, 1)),
    ] {
        let t5 = theorem5_bound(&w, &half, &ma, &mb);
        assert_eq!(t5, &w * &w * &small / rational(24, 1) * (&ma + &mb));
        for variant in [ConstantVariant::Stated, ConstantVariant::Derived] {
            let p = theorem6_prefactor(&w, &half, variant);
            let d: Rational = if variant == ConstantVariant::Stated {
                rational(48, 1)
            } else {
                rational(24, 1)
            };
            assert_eq!(p, &w * &w * &large / d);
        }
    }
}

proptest! {
    #[test]
    fn derived_q1_reduces_to_theorem5(a in -5.0f64..5.0, w in 0.01f64..5.0, lam in 0.0f64..=1.0, ma in 0.0f64..100.0, mb in 0.0f64..100.0) {
        let d = iv(a, a + w);
        let lam = RuleParameter::new(lam).unwrap();
        let e = EndpointData::new(ma, mb).unwrap();
        let t5 = bound_theorem5(&d, lam, e);
        let t6 = bound_theorem6(&d, lam, PowerExponent::ONE, e, ConstantVariant::Derived);
        prop_assert!((t5 - t6).abs() <= 1e-15 * t5.abs().max(1e-300), "{t5} vs {t6}");
    }

    #[test]
    fn theorem6_family_is_nonincreasing_in_q(lam in 0.0f64..=1.0, ma in 0.0f64..100.0, mb in 0.0f64..100.0, w in 0.01f64..5.0) {
        let d = iv(0.0, w);
        let lam = RuleParameter::new(lam).unwrap();
        let e = EndpointData::new(ma, mb).unwrap();
        for variant in [ConstantVariant::Stated, ConstantVariant::Derived] {
            let values: Vec<f64> = Q_GRID.iter().map(|&q| bound_theorem6(&d, lam, PowerExponent::new(q).unwrap(), e, variant)).collect();
            for pair in values.windows(2) {
                prop_assert!(pair[1] <= pair[0] * (1.0 + 1e-15), "{values:?}");
            }
            for rule in [Rule::Midpoint, Rule::Trapezoid, Rule::Simpson] {
                let vals: Vec<f64> = Q_GRID.iter().map(|&q| bound_corollary(rule, &d, PowerExponent::new(q).unwrap(), e, variant)).collect();
                prop_assert!(vals.windows(2).all(|p| p[1] <= p[0] * (1.0 + 1e-15)));
            }
        }
        let env = DerivativeEnvelope { sup_abs_d2: Some(ma), ..Default::default() };
        let with_q: Vec<f64> = Q_GRID.iter().map(|&q| bound_bounded_m(Rule::Simpson, &d, PowerExponent::new(q).unwrap(), &env, MForm::WithQ).unwrap()).collect();
        prop_assert!(with_q.windows(2).all(|p| p[1] <= p[0] * (1.0 + 1e-15)));
    }

    #[test]
    fn bounds_scale_with_width_squared(a in -5.0f64..5.0, w in 0.01f64..2.0, lam in 0.0f64..=1.0, ma in 0.0f64..10.0, mb in 0.0f64..10.0, q in 1.0f64..10.0) {
        let lam = RuleParameter::new(lam).unwrap();
        let e = EndpointData::new(ma, mb).unwrap();
        let q = PowerExponent::new(q).unwrap();
        let env = DerivativeEnvelope { sup_abs_d2: Some(ma.max(mb)), lower_d2: Some(ma.min(mb)), upper_d2: Some(ma.max(mb)), sup_abs_d4: Some(mb) };
        let all = |d: &Interval| -> Vec<f64> {
            let mut v = vec![
                bound_theorem5(d, lam, e),
                bound_theorem6(d, lam, q, e, ConstantVariant::Stated),
                bound_theorem6(d, lam, q, e, ConstantVariant::Derived),
            ];
            for rule in [Rule::Midpoint, Rule::Trapezoid, Rule::Simpson] {
                v.push(bound_corollary(rule, d, q, e, ConstantVariant::Stated));
                v.push(bound_bounded_m(rule, d, q, &env, MForm::WithQ).unwrap());
                v.push(bound_bounded_m(rule, d, q, &env, MForm::Relaxed).unwrap());
            }
            if let ClassicalBound::Upper(u) = bound_classical(Rule::Simpson, d, &env, SimpsonPower::Quadratic).unwrap() {
                v.push(u);
            }
            v
        };
        let base = all(&iv(a, a + w));
        for k in [2.0, 10.0] {
            let scaled = all(&iv(a, a + k * w));
            for (x, y) in base.iter().zip(&scaled) {
                prop_assert!((y - k * k * x).abs() <= 1e-13 * (k * k * x).abs().max(1e-300), "{x} {y}");
            }
        }
    }

    #[test]
    fn power_sum_enclosure_contains_float(ma in 0i64..10_000, mb in 0i64..10_000, qi in 0usize..5) {
        let q = [rational(1, 1), rational(3, 2), rational(2, 1), rational(4, 1), rational(10, 1)][qi].clone();
        let (a, b) = (rational(ma, 100), rational(mb, 100));
        let e = power_mean_sum(&a, &b, &q).unwrap();
        let f = hhbounds_core::oracle::power_mean_sum_f64(ma as f64 / 100.0, mb as f64 / 100.0, Q_GRID[qi]);
        prop_assert!((e.to_f64() - f).abs() <= 1e-14 * (1.0 + f));
        prop_assert!(e.width() <= rational(1, 1_000_000_000_000));
    }
}

#[test]
fn proof_backed_bounds_are_sound_on_the_corpus() {
    let grid = GridSpec::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let lams: Vec<f64> = (0..=20)
        .map(|k| k as f64 / 20.0)
        .chain([1.0 / 3.0, 2.0 / 3.0])
        .collect();
    let mut checked = 0;
    for f in corpus_standard() {
        if !check_p_convex(&|x| f.d2(x).abs(), f.domain(), &grid)
            .unwrap()
            .passed
        {
            continue;
        }
        for _ in 0..10 {
            let dom = f.domain();
            let a = rng.gen_range(dom.lo()..dom.hi() - 0.05);
            let b = rng.gen_range(a + 0.01..dom.hi().min(a + 5.0));
            let d = iv(a, b);
            let e = EndpointData::from_second_derivatives(f.d2(a), f.d2(b)).unwrap();
            for &l in &lams {
                let lam = RuleParameter::new(l).unwrap();
                let lhs = functional_lambda(&f, &d, lam).unwrap().abs_value;
                let t5 = bound_theorem5(&d, lam, e);
                assert!(
                    t5 - lhs >= -1e-9 * (1.0 + lhs),
                    "{} thm5 on {d}, λ = {l}: {lhs} > {t5}",
                    f.id()
                );
                for q in Q_GRID {
                    let t6 = bound_theorem6(
                        &d,
                        lam,
                        PowerExponent::new(q).unwrap(),
                        e,
                        ConstantVariant::Derived,
                    );
                    assert!(
                        t6 - lhs >= -1e-9 * (1.0 + lhs),
                        "{} thm6 on {d}, λ = {l}, q = {q}",
                        f.id()
                    );
                }
                checked += 1;
            }
        }
    }
    assert!(checked >= 7 * 10 * 23);
}

#[test]
fn comparator_cases() {
    let d = iv(0.0, 1.0);
    let q = PowerExponent::ONE;
    for (m, k, expected) in [
        (1.0, 2.0, Comparison::NewBetter),
        (1.0, 1.0, Comparison::Same),
        (2.0, 1.0, Comparison::ClassicalBetter),
    ] {
        let new = bound_bounded_m(
            Rule::Trapezoid,
            &d,
            q,
            &DerivativeEnvelope {
                sup_abs_d2: Some(m),
                ..Default::default()
            },
            MForm::Relaxed,
        )
        .unwrap();
        let env = DerivativeEnvelope {
            lower_d2: Some(0.0),
            upper_d2: Some(k),
            ..Default::default()
        };
        let ClassicalBound::Enclosure { upper, .. } =
            bound_classical(Rule::Trapezoid, &d, &env, SimpsonPower::Quartic).unwrap()
        else {
            panic!("trapezoid gives an enclosure");
        };
        assert_eq!(compare_bounds(new, upper).unwrap(), expected);
    }
}
