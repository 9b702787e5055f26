use crate::numerics::{integrate, QuadratureConfig, QuadratureResult};

use super::{PieceSpec, Result, StabilityError, StabilityMode, TestProfile, ENDPOINT_TOL};

/// The three s-integrals of the reduced quadratic form and their assembly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QFormBreakdown {
    /// `∫ f'² e^{α3} ds`
    pub grad_term: f64,
    /// `∫ (α1' + λ)² f² e^{α3} ds`
    pub curvature_term: f64,
    /// `∫ f² e^{α3} ds`
    pub mass_term: f64,
    pub total: f64,
}

impl QFormBreakdown {
    pub(crate) fn from_terms(grad: f64, curvature: f64, mass: f64, length: f64, mode: StabilityMode) -> Self {
        Self {
            grad_term: grad,
            curvature_term: curvature,
            mass_term: mass,
            total: assemble(grad, curvature, mass, length, mode),
        }
    }
}

pub(crate) fn assemble(grad: f64, curvature: f64, mass: f64, length: f64, mode: StabilityMode) -> f64 {
    let k = mode.axial_wavenumber(length);
    0.5 * length * (grad - curvature + k * k * mass)
}

fn check_endpoints(piece: &PieceSpec, profile: &TestProfile) -> Result<()> {
    let bound = profile.bind(piece.curve())?;
    let (a, b) = piece.interval();
    for s in [a, b] {
        let value = bound.value(piece.curve(), s);
        if !(value.abs() <= ENDPOINT_TOL) {
            return Err(StabilityError::EndpointViolation { s, value });
        }
    }
    Ok(())
}

/// Evaluate `Q_φ(f·g)` on `piece` by quadrature of its three s-integrals.
pub fn qform_profile(
    piece: &PieceSpec,
    profile: &TestProfile,
    mode: StabilityMode,
    cfg: &QuadratureConfig,
) -> Result<QFormBreakdown> {
    check_endpoints(piece, profile)?;
    let curve = piece.curve();
    let bound = profile.bind(curve)?;
    let (a, b) = piece.interval();

    let grad = integrate(|s| bound.amplitudes(curve, s).1.powi(2), a, b, cfg)?;
    let curvature = integrate(
        |s| {
            let p = bound.amplitudes(curve, s).0;
            let kappa = curve.curvature(s);
            kappa * kappa * p * p
        },
        a,
        b,
        cfg,
    )?;
    let mass = integrate(|s| bound.amplitudes(curve, s).0.powi(2), a, b, cfg)?;

    Ok(QFormBreakdown::from_terms(
        grad.value,
        curvature.value,
        mass.value,
        piece.length(),
        mode,
    ))
}

/// `I(u)` with its quadrature error estimate; `Q = (L/2)·I`.
pub fn reduced_integral_with_error(
    piece: &PieceSpec,
    profile: &TestProfile,
    mode: StabilityMode,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    check_endpoints(piece, profile)?;
    let curve = piece.curve();
    let bound = profile.bind(curve)?;
    let (a, b) = piece.interval();
    let k = mode.axial_wavenumber(piece.length());
    let k2 = k * k;
    Ok(integrate(
        |s| {
            let (p, q) = bound.amplitudes(curve, s);
            let kappa = curve.curvature(s);
            q * q - (kappa * kappa - k2) * p * p
        },
        a,
        b,
        cfg,
    )?)
}

/// `I(u) = ∫_a^b (f'² − ((α1' + λ)² − 4π²/L²) f²) e^{α3} ds`, the
/// volume-preserving reduced integral.
pub fn reduced_integral(piece: &PieceSpec, profile: &TestProfile, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(reduced_integral_with_error(piece, profile, StabilityMode::VolumePreserving, cfg)?.value)
}

/// The `t`-factor of the weighted-mean condition, `∫_0^L g(t) dt`.
///
/// For separated functions the weighted mean is `∫ f e^{α3} ds · ∫ g dt`,
/// and the families here make the second factor vanish.
pub fn zero_weighted_mean_residual(piece: &PieceSpec, mode: StabilityMode) -> f64 {
    mode.axial_mean(piece.length())
}
