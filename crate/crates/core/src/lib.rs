//! Cylindrical translating λ-solitons and their Plateau-Rayleigh instability.
//!
//! - [`numerics`]: adaptive quadrature and bracketed root finding.
//! - [`curve`]: closed-form base curves for λ > 1, λ = 1 and λ < 1.
//! - [`stability`]: the weighted second variation on compact pieces,
//!   critical lengths and the circular-cylinder comparison.

// `!(a < b)` comparisons are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod numerics;
pub mod stability;

pub use curve::{make_curve, CurveError, CurveSample, ProfileCurve, SolitonCase};
pub use numerics::{QuadratureConfig, QuadratureResult, RootConfig};
pub use stability::{CriticalLength, LengthVerdict, Method, PieceSpec, StabilityError, StabilityMode};
