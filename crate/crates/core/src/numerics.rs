//! Scalar adaptive quadrature and bracketed root finding.
//!
//! Every integral in this crate is one-dimensional and smooth on a compact
//! interval, so a globally adaptive 7/15-point Gauss-Kronrod rule with
//! interval bisection is all we need. Root finding is bracketing only: a
//! secant step guarded by bisection, so convergence never depends on the
//! secant behaving.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("tolerance not met after {limit} steps (estimate {estimate:e})")]
    NonConvergence { limit: usize, estimate: f64 },
    #[error("non-finite function value at x = {x}")]
    NonFinite { x: f64 },
    #[error("no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
}

pub type Result<T> = std::result::Result<T, NumericsError>;

/// Tolerances for [`integrate`]. The integral is accepted once the summed
/// error estimate is below `max(abs_tol, rel_tol * |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let cfg = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(NumericsError::InvalidConfig("abs_tol must be positive"));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(NumericsError::InvalidConfig("rel_tol must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(NumericsError::InvalidConfig("max_subdivisions must be at least 1"));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    pub x_tol: f64,
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            x_tol: 1e-12,
            max_iterations: 200,
        }
    }
}

impl RootConfig {
    pub fn new(x_tol: f64, max_iterations: usize) -> Result<Self> {
        let cfg = Self {
            x_tol,
            max_iterations,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_tol > 0.0 && self.x_tol.is_finite()) {
            return Err(NumericsError::InvalidConfig("x_tol must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(NumericsError::InvalidConfig("max_iterations must be at least 1"));
        }
        Ok(())
    }
}

// Kronrod abscissae on [0, 1] of the 15-point rule; odd indices are the
// embedded 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Largest error first; ties broken on the left endpoint so the
    // refinement order is fully determined by the inputs.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(NumericsError::NonFinite { x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kronrod += w * (f1 + f2);
        abs_sum += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let value = kronrod * half;
    let roundoff = 50.0 * f64::EPSILON * abs_sum * half.abs();
    let error = ((kronrod - gauss) * half).abs().max(roundoff);
    Ok(Segment { a, b, value, error })
}

const EVALS_PER_SEGMENT: usize = 15;

/// Integrate `f` over `[a, b]` with globally adaptive Gauss-Kronrod bisection.
///
/// Any non-finite sample aborts with [`NumericsError::NonFinite`].
pub fn integrate<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(NumericsError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let first = kronrod15(&f, a, b)?;
    let mut evaluations = EVALS_PER_SEGMENT;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    let mut subdivisions = 0;
    while error > cfg.target(value) {
        if subdivisions >= cfg.max_subdivisions {
            return Err(NumericsError::NonConvergence {
                limit: cfg.max_subdivisions,
                estimate: error,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Segment cannot be split further in floating point.
            return Err(NumericsError::NonConvergence {
                limit: subdivisions,
                estimate: error,
            });
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        evaluations += 2 * EVALS_PER_SEGMENT;
        subdivisions += 1;

        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);

        // Re-sum occasionally so the running totals do not drift.
        if subdivisions % 64 == 0 {
            value = heap.iter().map(|s| s.value).sum();
            error = heap.iter().map(|s| s.error).sum();
        }
    }

    // Final sum in a fixed order for bit-reproducibility.
    let mut segments = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = segments.iter().map(|s| s.value).sum();
    let error_estimate = segments.iter().map(|s| s.error).sum();

    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations,
    })
}

/// Bracketed root of a fallible function.
///
/// The bracket `[a, b]` must have `f(a) * f(b) < 0`. It shrinks until its
/// width is at most `cfg.x_tol`, and the bracket endpoint with the smaller
/// residual is returned.
pub fn try_find_root<F, E>(mut f: F, a: f64, b: f64, cfg: &RootConfig) -> std::result::Result<f64, E>
where
    F: FnMut(f64) -> std::result::Result<f64, E>,
    E: From<NumericsError>,
{
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(NumericsError::InvalidInterval { a, b }.into());
    }
    let mut eval = |x: f64| -> std::result::Result<f64, E> {
        let y = f(x)?;
        if y.is_nan() {
            return Err(NumericsError::NonFinite { x }.into());
        }
        Ok(y)
    };

    let (mut lo, mut hi) = (a, b);
    let (mut flo, mut fhi) = (eval(lo)?, eval(hi)?);
    if !(flo * fhi < 0.0) {
        return Err(NumericsError::NoSignChange { a, b, fa: flo, fb: fhi }.into());
    }

    let mut force_bisect = false;
    for _ in 0..cfg.max_iterations {
        let width = hi - lo;
        if width <= cfg.x_tol {
            return Ok(if flo.abs() <= fhi.abs() { lo } else { hi });
        }

        let mut x = if force_bisect || !(flo.is_finite() && fhi.is_finite()) {
            0.5 * (lo + hi)
        } else {
            (lo * fhi - hi * flo) / (fhi - flo)
        };
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }

        let fx = eval(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        // A secant step that failed to halve the bracket is followed by
        // a plain bisection.
        force_bisect = !force_bisect && (hi - lo) > 0.5 * width;
    }

    if hi - lo <= cfg.x_tol {
        return Ok(if flo.abs() <= fhi.abs() { lo } else { hi });
    }
    Err(NumericsError::NonConvergence {
        limit: cfg.max_iterations,
        estimate: hi - lo,
    }
    .into())
}

pub fn find_root<F>(mut f: F, a: f64, b: f64, cfg: &RootConfig) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    try_find_root(|x| Ok::<f64, NumericsError>(f(x)), a, b, cfg)
}

/// First adjacent grid pair on which `f` changes sign (or touches zero).
///
/// Grid values are evaluated left to right and evaluation stops at the
/// first bracket found.
pub fn try_scan_sign_change<F, E>(mut f: F, grid: &[f64]) -> std::result::Result<Option<(f64, f64)>, E>
where
    F: FnMut(f64) -> std::result::Result<f64, E>,
    E: From<NumericsError>,
{
    if grid.len() < 2 {
        return Err(NumericsError::InvalidConfig("grid needs at least two points").into());
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(NumericsError::InvalidConfig("grid must be strictly increasing").into());
    }
    let mut prev = f(grid[0])?;
    for pair in grid.windows(2) {
        let next = f(pair[1])?;
        if prev * next <= 0.0 {
            return Ok(Some((pair[0], pair[1])));
        }
        prev = next;
    }
    Ok(None)
}

pub fn scan_sign_change<F>(mut f: F, grid: &[f64]) -> Result<Option<(f64, f64)>>
where
    F: FnMut(f64) -> f64,
{
    try_scan_sign_change(|x| Ok::<f64, NumericsError>(f(x)), grid)
}

/// Geometric grid `start, start*ratio, ...` up to and including `end`.
pub fn geometric_grid(start: f64, end: f64, ratio: f64) -> Vec<f64> {
    assert!(start > 0.0 && end > start && ratio > 1.0);
    let mut grid = Vec::new();
    let mut x = start;
    while x < end {
        grid.push(x);
        x *= ratio;
    }
    grid.push(end);
    grid
}
