//! Scalar abstraction shared by the floating-point and exact rational paths.
//!
//! Closed forms in `kernel` and `bounds` are written once against [`Real`] and
//! instantiated with `f64` for fast evaluation and with [`Rational`] when an
//! equality case has to be decided without rounding.
//!
//! [`Rational`]: crate::oracle::Rational

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed};

pub trait Real: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {}

impl<T> Real for T where T: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {}

/// `p / q` in the target scalar type.
pub fn ratio<T: Real>(p: i64, q: i64) -> T {
    T::from_i64(p).expect("integer fits") / T::from_i64(q).expect("integer fits")
}

pub fn int<T: Real>(n: i64) -> T {
    T::from_i64(n).expect("integer fits")
}

pub fn half<T: Real>() -> T {
    ratio(1, 2)
}

pub fn square<T: Real>(x: &T) -> T {
    x.clone() * x.clone()
}

pub fn cube<T: Real>(x: &T) -> T {
    x.clone() * x.clone() * x.clone()
}
