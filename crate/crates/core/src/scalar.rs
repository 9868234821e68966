//! Scalar abstraction for the numeric kernels.
//!
//! Everything in this crate is generic over [`Real`], which bundles the
//! `num-traits` and `ndarray` bounds the linear algebra needs together with
//! per-type default tolerances. `f64` is the intended precision for model
//! analysis; `f32` works but the default tolerances are necessarily looser.

use ndarray::ScalarOperand;
use num_traits::{Float, FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar usable in all kernels and model computations.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + ScalarOperand
    + Sum<Self>
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance for structural validation (row sums, probability
    /// normalization, sign checks).
    fn validation_tol() -> Self;

    /// Absolute tolerance for algebraic identity checks (deviation-matrix
    /// identities, stochasticity of matrix exponentials).
    fn identity_tol() -> Self;

    /// Shorthand for converting an `f64` literal.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal not representable in this scalar type")
    }
}

impl Real for f64 {
    fn validation_tol() -> Self {
        1e-12
    }
    fn identity_tol() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn validation_tol() -> Self {
        1e-5
    }
    fn identity_tol() -> Self {
        1e-4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions() {
        assert_eq!(f64::of(2.5), 2.5);
        assert_eq!(f32::of(0.5), 0.5f32);
    }

    #[test]
    fn tolerances_ordered() {
        assert!(f64::validation_tol() < f64::identity_tol());
        assert!(f32::validation_tol() < f32::identity_tol());
    }
}
