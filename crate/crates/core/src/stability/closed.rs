//! Closed forms for λ > 1 (fundamental pieces) and λ = 1 (symmetric pieces).

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::curve::make_curve;
use crate::numerics::{find_root, RootConfig};

use super::{check_length, CriticalLength, Method, Result, StabilityError, StabilityMode};

fn gt1_params(lambda: f64, sigma: f64) -> Result<(f64, f64)> {
    let curve = make_curve(lambda)?;
    let s0 = curve.half_period()?;
    let slack = 1e-12 * s0;
    if !(sigma >= -slack && sigma <= s0 + slack) {
        return Err(StabilityError::OutOfRange {
            name: "σ",
            value: sigma,
            min: 0.0,
            max: s0,
        });
    }
    let omega = curve.omega();
    Ok((omega, lambda + (sigma * omega).cos()))
}

/// `Q` on the fundamental piece `Σ(σ; L)` with the sine family.
///
/// The three s-integrals are `(π/4)c`, `πc` and `π/ω` with
/// `c = λ + cos(σω)`; in volume-preserving mode this is
/// `π/(8Lω) (16π² − 3L²ωc)`.
pub fn q_gt1_closed(lambda: f64, sigma: f64, length: f64, mode: StabilityMode) -> Result<f64> {
    let (omega, c) = gt1_params(lambda, sigma)?;
    check_length(length)?;
    let k = mode.axial_wavenumber(length);
    Ok(0.5 * length * (-0.75 * PI * c + k * k * PI / omega))
}

pub fn critical_length_gt1(lambda: f64, sigma: f64, mode: StabilityMode) -> Result<CriticalLength> {
    let (omega, c) = gt1_params(lambda, sigma)?;
    let value = 4.0 * PI / (3.0 * c * omega).sqrt();
    Ok(CriticalLength {
        value: value * mode.length_scale(),
        method: Method::ClosedForm,
        mode,
    })
}

/// `L0*`, the σ = s0 critical length, which bounds every other σ.
pub fn critical_length_gt1_uniform(lambda: f64, mode: StabilityMode) -> Result<CriticalLength> {
    let curve = make_curve(lambda)?;
    curve.half_period()?;
    let omega = curve.omega();
    let value = 4.0 * PI / (3.0 * (lambda - 1.0) * omega).sqrt();
    Ok(CriticalLength {
        value: value * mode.length_scale(),
        method: Method::ClosedForm,
        mode,
    })
}

/// `φ(s0) = −s0³/3 − 9s0 + (9 + 6s0² − 3s0⁴) atan(s0)`, the large-L limit
/// of the λ = 1 reduced integral.
pub fn varphi_eq1(s0: f64) -> f64 {
    let s2 = s0 * s0;
    -s0 * s2 / 3.0 - 9.0 * s0 + (9.0 + 6.0 * s2 - 3.0 * s2 * s2) * s0.atan()
}

/// The unique positive zero `s̄0 ≈ 1.0213` of [`varphi_eq1`].
pub fn eq1_threshold() -> f64 {
    static THRESHOLD: OnceLock<f64> = OnceLock::new();
    *THRESHOLD.get_or_init(|| {
        let cfg = RootConfig {
            x_tol: 1e-15,
            max_iterations: 200,
        };
        find_root(varphi_eq1, 1.0, 1.05, &cfg).expect("φ changes sign on [1, 1.05]")
    })
}

fn check_s0(s0: f64) -> Result<()> {
    if !(s0.is_finite() && s0 > 0.0) {
        return Err(StabilityError::InvalidParameter(format!("s0 = {s0} must be positive")));
    }
    Ok(())
}

/// `Q` on `Σ(s0; L)` for λ = 1 with `f = (s² − s0²) e^{−α3/2}`:
/// `L/2 · (n²·16π²s0⁵/(15L²) + φ(s0))`.
pub fn q_eq1_closed(s0: f64, length: f64, mode: StabilityMode) -> Result<f64> {
    check_s0(s0)?;
    check_length(length)?;
    let k = mode.axial_wavenumber(length);
    let mass = 16.0 * s0.powi(5) / 15.0;
    Ok(0.5 * length * (k * k * mass + varphi_eq1(s0)))
}

pub fn critical_length_eq1(s0: f64, mode: StabilityMode) -> Result<CriticalLength> {
    check_s0(s0)?;
    let phi = varphi_eq1(s0);
    if phi >= 0.0 {
        return Err(StabilityError::BelowThreshold { s0 });
    }
    let value = 8.0 * PI * s0.powf(2.5) / (-15.0 * phi).sqrt();
    Ok(CriticalLength {
        value: value * mode.length_scale(),
        method: Method::ClosedForm,
        mode,
    })
}
