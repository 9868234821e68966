//! Analysis toolkit for Markovian arrival processes (MAPs).
//!
//! A MAP of order p is a point process driven by an irreducible CTMC with
//! generator `Q = C + D`: transitions recorded in `C` are silent, transitions
//! in `D` emit an event. Two boundary cases get dedicated support: MMPPs
//! (diagonal `D`, events never move the phase) and MTCPs (diagonal `C`, every
//! phase jump is an event).
//!
//! The crate provides:
//! - [`kernels`]: CTMC numerics (matrix exponentials, stationary and
//!   deviation matrices, augmented-exponential integrals),
//! - [`model`]: the MAP object and counting-process moments,
//! - [`interevent`]: event-stationary inter-event moments and lag
//!   autocorrelations,
//! - [`transforms`]: MMPP ↔ MTCP constructions (second-order equivalent
//!   MTCP of a slow MMPP, event-coupled MAP, aggregation),
//! - [`fit`]: moment/autocorrelation fitting of a 4-phase MTCP,
//! - [`qbd`]: MAP/M/1 queue evaluation as a quasi-birth-death process,
//! - [`sim`]: Monte Carlo estimation for cross-validating the analytics.
//!
//! All numerics are generic over the scalar type via [`scalar::Real`];
//! `f64` aliases for the main types are exported at the crate root.

pub mod error;
pub mod kernels;
pub mod scalar;

pub use error::{Diagnostic, DiagnosticKind, Error, Result};
pub use scalar::Real;

/// `f64` CTMC generator.
pub type Generator64 = kernels::Generator<f64>;
/// `f64` probability vector.
pub type ProbVector64 = kernels::ProbVector<f64>;
