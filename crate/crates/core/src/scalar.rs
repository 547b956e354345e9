use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the whole crate is generic over.
///
/// The associated constants are the numerical-noise allowances that have to
/// track the precision of the type; contract-level thresholds that are part
/// of the public API (input normalization, ξ bounds, …) are fixed values
/// independent of the scalar and live next to the operations that use them.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + fmt::Debug + fmt::Display + 'static
{
    /// Jacobi sweep convergence threshold, relative to the Frobenius norm
    /// of the input matrix.
    const EIG_TOL: Self;
    /// Slack below zero tolerated for eigenvalues of physical states.
    const PSD_SLACK: Self;
    /// Amplitude-pair normalization tolerance for bath sites.
    const AMP_TOL: Self;
    /// Negativity results at or below this are reported as exactly zero.
    const NEG_CLAMP: Self;
    /// Powered factor magnitudes below this underflow to exactly zero.
    const MAG_UNDERFLOW: Self;

    /// Shorthand for lossless conversion of an `f64` constant.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant representable in every Real type")
    }
}

impl Real for f64 {
    const EIG_TOL: f64 = 1e-13;
    const PSD_SLACK: f64 = 1e-10;
    const AMP_TOL: f64 = 1e-12;
    const NEG_CLAMP: f64 = 1e-12;
    const MAG_UNDERFLOW: f64 = 1e-300;
}

impl Real for f32 {
    const EIG_TOL: f32 = 1e-6;
    const PSD_SLACK: f32 = 1e-4;
    const AMP_TOL: f32 = 1e-6;
    const NEG_CLAMP: f32 = 1e-6;
    const MAG_UNDERFLOW: f32 = 1e-38;
}
