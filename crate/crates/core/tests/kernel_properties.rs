use hhbounds_core::kernel::*;
use hhbounds_core::oracle::{rational, Rational};
use proptest::prelude::*;

proptest! {
    #[test]
    fn kernel_is_symmetric(t in 0.0f64..=1.0, lam in 0.0f64..=1.0) {
        let a = kernel_value(&(1.0 - t), &lam);
        let b = kernel_value(&t, &lam);
        prop_assert!((a - b).abs() <= 1e-15);
    }

    #[test]
    fn kernel_is_symmetric_exactly(t in 0i64..=1000, lam in 0i64..=1000) {
        let t = rational(t, 1000);
        let lam = rational(lam, 1000);
        prop_assert_eq!(kernel_value(&(rational(1, 1) - &t), &lam), kernel_value(&t, &lam));
    }

    #[test]
    fn branches_meet_at_half(lam in 0i64..=1000) {
        let lam = rational(lam, 1000);
        let t = rational(1, 2);
        let left = rational(1, 2) * &t * (&t - &lam);
        let right = rational(1, 2) * (rational(1, 1) - &t) * (rational(1, 1) - &lam - &t);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(kernel_value(&t, &lam), left);
    }

    #[test]
    fn moment_halves_agree(lam in 0.0f64..=1.0) {
        let m = moment_abs(&lam);
        prop_assert_eq!(m.first_half, m.second_half);
    }
}

#[test]
fn printed_second_half_form_matches_on_grid() {
    for k in 0..=100 {
        let lam = 0.5 * k as f64 / 100.0;
        let a = weighted_moment_small_closed(&lam);
        let b = second_half_small_closed(&lam);
        assert!((a - b).abs() <= 1e-15, "λ = {lam}: {a} vs {b}");
        let lr: Rational = rational(k, 200);
        assert_eq!(
            weighted_moment_small_closed(&lr),
            second_half_small_closed(&lr)
        );
        assert_eq!(
            weighted_moment_small_closed(&lr),
            moment_abs_small_printed(&lr)
        );
    }
}

#[test]
fn seam_values_are_one_forty_eighth() {
    let half = rational(1, 2);
    let target = rational(1, 48);
    assert_eq!(weighted_moment_small_closed(&half), target);
    assert_eq!(weighted_moment_large_closed(&half), target);
    assert_eq!(second_half_small_closed(&half), target);
    assert_eq!(moment_abs_small_printed(&half), target);
    let m = moment_abs(&half);
    assert_eq!(
        (m.first_half, m.second_half),
        (target.clone(), target.clone())
    );
    assert_eq!(weighted_moment_small_lambda(&half).unwrap(), target);
    assert_eq!(weighted_moment_large_lambda(&half).unwrap(), target);
}

#[test]
fn numeric_moments_on_fine_grid() {
    for k in 0..=100 {
        let lam = RuleParameter::new(k as f64 / 100.0).unwrap();
        let err = verify_moments_numeric(lam).unwrap();
        assert!(err <= 1e-12, "λ = {}: {err}", lam.get());
    }
}
