//! Weighted second variation of compact cylindrical soliton pieces and the
//! critical lengths beyond which they are unstable.
//!
//! A piece is `Σ = Ψ([a, b] × [0, L])`. Test functions separate as
//! `u(s, t) = f(s) g(t)` with `g(t) = sin(nπt/L)`: `n = 2` keeps the
//! weighted mean zero (volume-preserving variations), `n = 1` is the
//! first Dirichlet mode used for strong stability. Integrating out `t`
//! leaves
//!
//! ```text
//! Q(u) = L/2 · ∫_a^b ( f'² − ((α1' + λ)² − n²π²/L²) f² ) e^{α3} ds
//! ```
//!
//! which is negative for long enough pieces.

mod certificate;
mod closed;
mod cylinder;
mod lt1;
mod profile;
mod qform;

pub use certificate::{
    graph_stability_probe, instability_certificate, weighted_profile_mean, Surface, Witness, WitnessFamily,
    MEAN_RESIDUAL_TOL,
};
pub use closed::{
    critical_length_eq1, critical_length_gt1, critical_length_gt1_uniform, eq1_threshold, q_eq1_closed,
    q_gt1_closed, varphi_eq1,
};
pub use cylinder::{
    cyl_alt_q, cyl_alt_q_quadrature, cyl_cmc_critical_length, cyl_cmc_q, cyl_soliton_critical_length,
    cyl_soliton_q, cyl_soliton_q_closed, cyl_soliton_q_printed, AltVariant, CylinderSpec,
};
pub use lt1::{critical_length_lt1, reduced_integral_table, ReducedTable, ScanConfig};
pub use profile::{CustomProfile, TestProfile};
pub use qform::{qform_profile, reduced_integral, reduced_integral_with_error, zero_weighted_mean_residual, QFormBreakdown};

use std::f64::consts::PI;

use thiserror::Error;

use crate::curve::{CurveError, ProfileCurve, SolitonCase};
use crate::numerics::NumericsError;

/// Lengths below this are rejected; `1/L²` terms overflow long before zero.
pub const MIN_LENGTH: f64 = 1e-6;

/// Largest admissible `|f|` at the ends of the s-interval.
pub const ENDPOINT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("test function does not vanish at the boundary: f({s}) = {value:e}")]
    EndpointViolation { s: f64, value: f64 },
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("s0 = {s0} is at or below the threshold s̄0 ≈ 1.0213; no critical length")]
    BelowThreshold { s0: f64 },
    #[error("s0 = {s0} is within the graph bound s1 = {s1}; the piece is a graph")]
    GraphRegime { s0: f64, s1: f64 },
    #[error("reduced integral stays positive up to L = {l_max}")]
    NotFoundInRange { l_max: f64 },
    #[error("radius {radius} ≥ √2; this test family gives no instability")]
    RadiusTooLarge { radius: f64 },
    #[error("quadrature ({quadrature:e}) and closed form ({closed_form:e}) disagree in sign")]
    MismatchBeyondTolerance { quadrature: f64, closed_form: f64 },
    #[error("not a graphical piece: {0}")]
    NotGraphRegime(String),
}

pub type Result<T> = std::result::Result<T, StabilityError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityMode {
    /// `g(t) = sin(2πt/L)`, zero mean in `t`.
    VolumePreserving,
    /// `g(t) = sin(πt/L)`, no mean constraint.
    Strong,
}

impl StabilityMode {
    /// Number of half-waves of `g` on `[0, L]`.
    pub fn half_waves(self) -> u32 {
        match self {
            StabilityMode::VolumePreserving => 2,
            StabilityMode::Strong => 1,
        }
    }

    /// `c` in `g'' = −cπ²/L² g`.
    pub fn axial_coefficient(self) -> f64 {
        let n = f64::from(self.half_waves());
        n * n
    }

    pub fn axial_wavenumber(self, length: f64) -> f64 {
        f64::from(self.half_waves()) * PI / length
    }

    pub fn axial_profile(self, length: f64, t: f64) -> f64 {
        (self.axial_wavenumber(length) * t).sin()
    }

    /// `∫_0^L g(t) dt`.
    pub fn axial_mean(self, length: f64) -> f64 {
        let k = self.axial_wavenumber(length);
        (1.0 - (k * length).cos()) / k
    }

    pub fn name(self) -> &'static str {
        match self {
            StabilityMode::VolumePreserving => "volume-preserving",
            StabilityMode::Strong => "strong",
        }
    }

    // Critical lengths scale as 1/n, so the strong value is half the
    // volume-preserving one.
    fn length_scale(self) -> f64 {
        match self {
            StabilityMode::VolumePreserving => 1.0,
            StabilityMode::Strong => 0.5,
        }
    }
}

pub(crate) fn check_length(length: f64) -> Result<()> {
    if !length.is_finite() || length < MIN_LENGTH {
        return Err(StabilityError::InvalidParameter(format!(
            "length L = {length} must be finite and at least {MIN_LENGTH}"
        )));
    }
    Ok(())
}

/// The compact piece `Ψ([a, b] × [0, L])` of a profile-curve soliton.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PieceSpec {
    curve: ProfileCurve,
    a: f64,
    b: f64,
    length: f64,
}

impl PieceSpec {
    pub fn new(curve: ProfileCurve, a: f64, b: f64, length: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(StabilityError::InvalidParameter(format!("need a < b, got [{a}, {b}]")));
        }
        check_length(length)?;
        Ok(Self { curve, a, b, length })
    }

    /// `[−s0 + σ, s0 + σ] × [0, L]` with `s0` the half period (λ > 1).
    ///
    /// Any real `σ` gives a fundamental piece; `[0, s0]` already covers
    /// all of them up to symmetry.
    pub fn fundamental(curve: ProfileCurve, sigma: f64, length: f64) -> Result<Self> {
        let s0 = curve.half_period()?;
        if !sigma.is_finite() {
            return Err(StabilityError::InvalidParameter(format!("σ = {sigma}")));
        }
        Self::new(curve, sigma - s0, sigma + s0, length)
    }

    /// `[−s0, s0] × [0, L]`.
    pub fn symmetric(curve: ProfileCurve, s0: f64, length: f64) -> Result<Self> {
        if !(s0 > 0.0) {
            return Err(StabilityError::InvalidParameter(format!("s0 = {s0} must be positive")));
        }
        Self::new(curve, -s0, s0, length)
    }

    pub fn curve(&self) -> &ProfileCurve {
        &self.curve
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn with_length(&self, length: f64) -> Result<Self> {
        Self::new(self.curve, self.a, self.b, length)
    }

    pub(crate) fn is_symmetric(&self) -> bool {
        (self.a + self.b).abs() <= 1e-12 * self.b.abs().max(1.0)
    }

    pub(crate) fn is_fundamental(&self) -> bool {
        match self.curve.half_period() {
            Ok(s0) => ((self.b - self.a) - 2.0 * s0).abs() <= 1e-9 * s0.max(1.0),
            Err(_) => false,
        }
    }

    pub(crate) fn case(&self) -> SolitonCase {
        self.curve.case()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    RootFound,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::RootFound => "root-found",
        }
    }
}

/// Outcome of comparing a length with a critical length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthVerdict {
    /// `L > L0`: the test family certifies instability.
    Unstable,
    /// `L = L0` exactly: `Q = 0`, neither verdict.
    Marginal,
    /// `L < L0`: this family gives no certificate. Stability is not claimed.
    NoCertificate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalLength {
    pub value: f64,
    pub method: Method,
    pub mode: StabilityMode,
}

impl CriticalLength {
    pub fn classify(&self, length: f64) -> LengthVerdict {
        if length > self.value {
            LengthVerdict::Unstable
        } else if length == self.value {
            LengthVerdict::Marginal
        } else {
            LengthVerdict::NoCertificate
        }
    }
}
