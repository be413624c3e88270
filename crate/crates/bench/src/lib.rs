//! Shared inputs for the criterion benches.

use hhbounds_core::interval::Interval;

/// Intervals of increasing width inside `[0.1, 10]`.
pub fn sample_intervals() -> Vec<Interval> {
    [(0.1, 0.2), (1.0, 2.0), (0.5, 4.0), (0.1, 10.0)]
        .into_iter()
        .map(|(a, b)| Interval::new(a, b).expect("valid interval"))
        .collect()
}
