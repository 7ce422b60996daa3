//! Floating-point abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar the estimators are generic over (`f32` or `f64`).
///
/// The associated constants carry precision-dependent defaults for the
/// Newton-Raphson stopping rules, since an absolute score tolerance of
/// `1e-8` is not reachable in single precision.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Default bound on `max |score|` for inner solvers.
    const SCORE_TOL: f64;
    /// Default bound on `max |step|` for inner solvers.
    const STEP_TOL: f64;
    /// Relative slack allowed when comparing log-likelihoods across a step.
    const ASCENT_SLACK: f64;

    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const SCORE_TOL: f64 = 1e-8;
    const STEP_TOL: f64 = 1e-10;
    const ASCENT_SLACK: f64 = 1e-12;
}

impl Scalar for f32 {
    const SCORE_TOL: f64 = 1e-3;
    const STEP_TOL: f64 = 1e-5;
    const ASCENT_SLACK: f64 = 1e-5;
}

/// Logistic function `1 / (1 + exp(-t))`, evaluated without overflow.
#[inline]
pub fn expit<T: Scalar>(t: T) -> T {
    if t >= T::zero() {
        T::one() / (T::one() + (-t).exp())
    } else {
        let e = t.exp();
        e / (T::one() + e)
    }
}

/// `log(1 + exp(t))` without overflow or loss of precision for large `|t|`.
#[inline]
pub fn softplus<T: Scalar>(t: T) -> T {
    t.max(T::zero()) + (-t.abs()).exp().ln_1p()
}

/// `log(expit(t))`.
#[inline]
pub fn log_expit<T: Scalar>(t: T) -> T {
    -softplus(-t)
}

/// `log(exp(a_1) + ... + exp(a_k))`.
pub fn log_sum_exp<T: Scalar>(values: &[T]) -> T {
    let m = values.iter().copied().fold(T::neg_infinity(), T::max);
    if !m.is_finite() {
        return m;
    }
    let s: T = values.iter().map(|&v| (v - m).exp()).sum();
    m + s.ln()
}
