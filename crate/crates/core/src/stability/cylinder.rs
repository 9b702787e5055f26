//! Circular cylinders `C_r(L)` with rulings along the density vector.
//!
//! Here the weight is `e^t` along the axis, the base circle has length
//! `2πr` and `|A|² = 1/r²`. For `u = f(s) g(t)` with `g(0) = g(L) = 0`,
//!
//! ```text
//! Q = ∫ f'² ds · ∫ g² e^t dt + ∫ f² ds · ∫ (g'² − g²/r²) e^t dt.
//! ```

use std::f64::consts::{PI, SQRT_2};

use crate::numerics::{integrate, QuadratureConfig};

use super::{check_length, CriticalLength, Method, Result, StabilityError, StabilityMode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderSpec {
    radius: f64,
    length: f64,
}

impl CylinderSpec {
    pub fn new(radius: f64, length: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(StabilityError::InvalidParameter(format!("radius {radius} must be positive")));
        }
        check_length(length)?;
        Ok(Self { radius, length })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn length(&self) -> f64 {
        self.length
    }
}

/// The two extra test functions with `f(s) = sin(s/r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AltVariant {
    /// `g(t) = sin(πt/L)`
    HalfSinPlain,
    /// `g(t) = sin(πt/L) e^{−t}`
    HalfSinDamped,
}

/// Circle factor of the test function.
#[derive(Debug, Clone, Copy)]
pub(crate) enum CircleFactor {
    Constant,
    SinOverRadius,
}

impl CircleFactor {
    // (∫ f'² ds, ∫ f² ds) over [0, 2πr]
    fn integrals(self, r: f64) -> (f64, f64) {
        match self {
            CircleFactor::Constant => (0.0, 2.0 * PI * r),
            CircleFactor::SinOverRadius => (PI / r, PI * r),
        }
    }
}

/// `Q` by quadrature in `t` for `g(t) = sin(nπt/L) e^{−δt}`.
pub(crate) fn cylinder_q_quadrature(
    spec: &CylinderSpec,
    circle: CircleFactor,
    half_waves: u32,
    damping: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let r = spec.radius;
    let (grad_s, mass_s) = circle.integrals(r);
    let k = f64::from(half_waves) * PI / spec.length;
    let integrand = |t: f64| {
        let (sn, cs) = (k * t).sin_cos();
        let g = sn;
        let dg = k * cs - damping * sn;
        // e^{−2δt} from g², e^t from the weight
        let w = ((1.0 - 2.0 * damping) * t).exp();
        (grad_s * g * g + mass_s * (dg * dg - g * g / (r * r))) * w
    };
    Ok(integrate(integrand, 0.0, spec.length, cfg)?.value)
}

/// Area second variation of the cylinder as a cmc surface, `f = 1`,
/// `g = sin(2πt/L)`: `−πrL (1/r² − 4π²/L²)`.
pub fn cyl_cmc_q(spec: &CylinderSpec) -> f64 {
    let (r, l) = (spec.radius, spec.length);
    -PI * r * l * (1.0 / (r * r) - 4.0 * PI * PI / (l * l))
}

/// `2πr` (volume-preserving) or `πr` (strong).
pub fn cyl_cmc_critical_length(radius: f64, mode: StabilityMode) -> Result<CriticalLength> {
    CylinderSpec::new(radius, 1.0)?;
    Ok(CriticalLength {
        value: 2.0 * PI * radius * mode.length_scale(),
        method: Method::ClosedForm,
        mode,
    })
}

/// Closed form of the soliton `Q` for `f = 1`, `g = sin(2πt/L) e^{−t}`:
/// `8π³ (1 − e^{−L}) / (r L² (L² + 16π²)) · (8π²r² + L²(r² − 2))`.
pub fn cyl_soliton_q_closed(spec: &CylinderSpec) -> f64 {
    let (r, l) = (spec.radius, spec.length);
    let l2 = l * l;
    let prefactor = 8.0 * PI.powi(3) * (-(-l).exp_m1()) / (r * l2 * (l2 + 16.0 * PI * PI));
    prefactor * (8.0 * PI * PI * r * r + l2 * (r * r - 2.0))
}

/// The same expression with the additional `e^{−L}` factor found in the
/// literature. Same sign and zero, different magnitude; kept for comparison.
pub fn cyl_soliton_q_printed(spec: &CylinderSpec) -> f64 {
    (-spec.length).exp() * cyl_soliton_q_closed(spec)
}

/// Soliton `Q` for `f = 1`, `g = sin(2πt/L) e^{−t}` by quadrature of
/// `2πr ∫ (g'² − g²/r²) e^t dt`, checked for sign agreement with
/// [`cyl_soliton_q_closed`].
pub fn cyl_soliton_q(spec: &CylinderSpec, cfg: &QuadratureConfig) -> Result<f64> {
    let quadrature = cylinder_q_quadrature(spec, CircleFactor::Constant, 2, 1.0, cfg)?;
    let closed_form = cyl_soliton_q_closed(spec);
    let tol = 1e-8 * (quadrature.abs() + closed_form.abs()).max(1.0);
    if quadrature * closed_form < 0.0 && quadrature.abs().min(closed_form.abs()) > tol {
        return Err(StabilityError::MismatchBeyondTolerance {
            quadrature,
            closed_form,
        });
    }
    Ok(quadrature)
}

/// `L0 = √8 π r / √(2 − r²)`, defined for `r < √2`.
pub fn cyl_soliton_critical_length(radius: f64) -> Result<CriticalLength> {
    CylinderSpec::new(radius, 1.0)?;
    if radius >= SQRT_2 {
        return Err(StabilityError::RadiusTooLarge { radius });
    }
    Ok(CriticalLength {
        value: 8f64.sqrt() * PI * radius / (2.0 - radius * radius).sqrt(),
        method: Method::ClosedForm,
        mode: StabilityMode::VolumePreserving,
    })
}

/// Closed forms for the two `f = sin(s/r)` test functions; both positive.
pub fn cyl_alt_q(spec: &CylinderSpec, variant: AltVariant) -> f64 {
    let (r, l) = (spec.radius, spec.length);
    let l2 = l * l;
    let growth = match variant {
        AltVariant::HalfSinPlain => l.exp_m1(),
        AltVariant::HalfSinDamped => -(-l).exp_m1(),
    };
    r * PI.powi(3) * growth * (l2 + 2.0 * PI * PI) / (l2 * l2 + 4.0 * PI * PI * l2)
}

pub fn cyl_alt_q_quadrature(spec: &CylinderSpec, variant: AltVariant, cfg: &QuadratureConfig) -> Result<f64> {
    let damping = match variant {
        AltVariant::HalfSinPlain => 0.0,
        AltVariant::HalfSinDamped => 1.0,
    };
    cylinder_q_quadrature(spec, CircleFactor::SinOverRadius, 1, damping, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyl(r: f64, l: f64) -> CylinderSpec {
        CylinderSpec::new(r, l).unwrap()
    }

    #[test]
    fn cmc_examples() {
        assert!(cyl_cmc_q(&cyl(1.0, 2.0 * PI)).abs() < 1e-12);
        assert!(cyl_cmc_q(&cyl(1.0, PI)) > 0.0);
        assert!(cyl_cmc_q(&cyl(1.0, 10.0)) < 0.0);
        assert_eq!(cyl_cmc_critical_length(1.0, StabilityMode::VolumePreserving).unwrap().value, 2.0 * PI);
        assert_eq!(cyl_cmc_critical_length(1.0, StabilityMode::Strong).unwrap().value, PI);
    }

    #[test]
    fn soliton_closed_form_matches_quadrature() {
        let cfg = QuadratureConfig::default();
        for (r, l) in [(1.0, 3.0), (1.0, 10.0), (0.5, 2.0), (1.3, 40.0), (2.0, 0.7)] {
            let spec = cyl(r, l);
            let q = cyl_soliton_q(&spec, &cfg).unwrap();
            let c = cyl_soliton_q_closed(&spec);
            assert!((q - c).abs() < 1e-9 * c.abs().max(1.0), "r={r} L={l}: {q} vs {c}");
        }
    }

    #[test]
    fn soliton_examples() {
        let cfg = QuadratureConfig::default();
        let l0 = cyl_soliton_critical_length(1.0).unwrap().value;
        assert!((l0 - 8.885_765_876_316_732).abs() < 1e-12);
        assert!(cyl_soliton_q(&cyl(1.0, l0), &cfg).unwrap().abs() < 1e-8);
        assert!(cyl_soliton_q(&cyl(1.0, 10.0), &cfg).unwrap() < 0.0);
        for l in [0.1, 1.0, 10.0, 100.0] {
            assert!(cyl_soliton_q(&cyl(SQRT_2, l), &cfg).unwrap() > 0.0);
        }
        assert!(l0 > cyl_cmc_critical_length(1.0, StabilityMode::VolumePreserving).unwrap().value);
    }

    #[test]
    fn radius_limit() {
        assert!(matches!(
            cyl_soliton_critical_length(SQRT_2),
            Err(StabilityError::RadiusTooLarge { .. })
        ));
        assert!(cyl_soliton_critical_length(1.5).is_err());
        assert!(cyl_soliton_critical_length(SQRT_2 - 1e-9).unwrap().value > 1e4);
        assert!(cyl_soliton_critical_length(0.0).is_err());
    }

    #[test]
    fn alt_values_positive_and_match_quadrature() {
        let cfg = QuadratureConfig::default();
        for variant in [AltVariant::HalfSinPlain, AltVariant::HalfSinDamped] {
            for (r, l) in [(1.0, 5.0), (0.3, 0.2), (2.5, 12.0)] {
                let spec = cyl(r, l);
                let closed = cyl_alt_q(&spec, variant);
                let quad = cyl_alt_q_quadrature(&spec, variant, &cfg).unwrap();
                assert!(closed > 0.0);
                assert!((closed - quad).abs() < 1e-9 * closed, "{variant:?} r={r} L={l}");
            }
        }
        let small = cyl_alt_q(&cyl(1.0, 1e-4), AltVariant::HalfSinDamped);
        assert!(small > 1e4);
    }

    #[test]
    fn printed_prefactor_only_rescales() {
        let spec = cyl(1.0, 3.0);
        let ratio = cyl_soliton_q_printed(&spec) / cyl_soliton_q_closed(&spec);
        assert!((ratio - (-3.0f64).exp()).abs() < 1e-15);
    }
}
