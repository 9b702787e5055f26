use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{make_curve, SolitonCase};
use crate::numerics::{integrate, QuadratureConfig};

use super::cylinder::{cylinder_q_quadrature, CircleFactor};
use super::qform::assemble;
use super::{
    qform_profile, zero_weighted_mean_residual, CustomProfile, CylinderSpec, PieceSpec, Result, StabilityError,
    StabilityMode, TestProfile,
};

/// Largest weighted-mean residual accepted for a volume-preserving witness.
pub const MEAN_RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface {
    Piece(PieceSpec),
    Cylinder(CylinderSpec),
}

#[derive(Debug, Clone)]
pub enum WitnessFamily {
    Profile(TestProfile),
    /// `f = 1` on the circle, `g = sin(nπt/L) e^{−t}`.
    CylinderConstant { half_waves: u32 },
}

/// A test function with `Q < 0` that vanishes on the boundary.
#[derive(Debug, Clone)]
pub struct Witness {
    pub family: WitnessFamily,
    pub mode: StabilityMode,
    pub q_value: f64,
    pub mean_residual: f64,
}

fn family_for_piece(piece: &PieceSpec) -> Option<TestProfile> {
    let (a, b) = piece.interval();
    match piece.case() {
        SolitonCase::GreaterThanOne if piece.is_fundamental() => Some(TestProfile::FundamentalSine {
            sigma: 0.5 * (a + b),
        }),
        SolitonCase::EqualOne if piece.is_symmetric() => Some(TestProfile::Quadratic { s0: b }),
        SolitonCase::LessThanOne if piece.is_symmetric() => Some(TestProfile::Cosine { s0: b }),
        _ => None,
    }
}

/// Try the standard test family for `surface` and return it if it shows
/// instability.
///
/// Only canonical pieces (fundamental for λ > 1, symmetric otherwise)
/// have a family; other pieces yield `None`. `Q = 0` exactly is marginal
/// and yields `None` as well.
pub fn instability_certificate(
    surface: &Surface,
    mode: StabilityMode,
    cfg: &QuadratureConfig,
) -> Result<Option<Witness>> {
    let (family, q_value, mean_residual) = match surface {
        Surface::Piece(piece) => {
            let Some(profile) = family_for_piece(piece) else {
                return Ok(None);
            };
            let q = qform_profile(piece, &profile, mode, cfg)?.total;
            (WitnessFamily::Profile(profile), q, zero_weighted_mean_residual(piece, mode))
        }
        Surface::Cylinder(spec) => {
            let n = mode.half_waves();
            let q = cylinder_q_quadrature(spec, CircleFactor::Constant, n, 1.0, cfg)?;
            // ∫ g e^t dt = ∫ sin(nπt/L) dt
            (
                WitnessFamily::CylinderConstant { half_waves: n },
                q,
                mode.axial_mean(spec.length()),
            )
        }
    };
    let admissible = mode == StabilityMode::Strong || mean_residual.abs() < MEAN_RESIDUAL_TOL;
    Ok((q_value < 0.0 && admissible).then_some(Witness {
        family,
        mode,
        q_value,
        mean_residual,
    }))
}

const PROBE_TERMS: usize = 5;
const PROBE_LENGTHS: [f64; 9] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 200.0];

/// Smallest `Q` found over random endpoint-vanishing profiles on a graphical
/// piece `[−s0, s0]`, in both modes and over a fixed grid of lengths.
///
/// Profiles are 5-term sine series with unit-norm coefficients drawn from a
/// ChaCha8 stream seeded by `seed`, so results are reproducible.
pub fn graph_stability_probe(
    lambda: f64,
    s0: f64,
    n_random: usize,
    seed: u64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let curve = make_curve(lambda)?;
    let bound = match curve.case() {
        SolitonCase::EqualOne => 1.0,
        SolitonCase::LessThanOne => curve.graph_bound()?,
        SolitonCase::GreaterThanOne => {
            return Err(StabilityError::NotGraphRegime(format!(
                "λ = {lambda} > 1 curves are never graphs"
            )))
        }
    };
    if !(s0 > 0.0 && s0 < bound) {
        return Err(StabilityError::NotGraphRegime(format!(
            "s0 = {s0} outside (0, {bound})"
        )));
    }
    if n_random == 0 {
        return Err(StabilityError::InvalidParameter("n_random must be positive".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_q = f64::INFINITY;
    for _ in 0..n_random {
        let mut coeffs = [0.0; PROBE_TERMS];
        for c in coeffs.iter_mut() {
            *c = rng.gen_range(-1.0..1.0);
        }
        let norm = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        coeffs.iter_mut().for_each(|c| *c /= norm);

        let k = PI / (2.0 * s0);
        let f = move |s: f64| -> f64 {
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * (k * (j + 1) as f64 * (s + s0)).sin())
                .sum()
        };
        let df = move |s: f64| -> f64 {
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let kj = k * (j + 1) as f64;
                    c * kj * (kj * (s + s0)).cos()
                })
                .sum()
        };
        let profile = TestProfile::Custom(CustomProfile::new(f, df));

        let piece = PieceSpec::symmetric(curve, s0, 1.0)?;
        let terms = qform_profile(&piece, &profile, StabilityMode::Strong, cfg)?;
        for &length in &PROBE_LENGTHS {
            for mode in [StabilityMode::VolumePreserving, StabilityMode::Strong] {
                let q = assemble(terms.grad_term, terms.curvature_term, terms.mass_term, length, mode);
                min_q = min_q.min(q);
            }
        }
    }
    Ok(min_q)
}

/// `∫_a^b f e^{α3} ds` for a profile, the s-factor of the weighted mean.
pub fn weighted_profile_mean(piece: &PieceSpec, profile: &TestProfile, cfg: &QuadratureConfig) -> Result<f64> {
    let curve = piece.curve();
    let bound = profile.bind(curve)?;
    let (a, b) = piece.interval();
    Ok(integrate(|s| bound.value(curve, s) * curve.weight(s), a, b, cfg)?.value)
}
