//! λ < 1: no closed form, so critical lengths are located numerically and
//! the reduced integral is tabulated.

use rayon::prelude::*;

use crate::curve::make_curve;
use crate::numerics::{geometric_grid, try_find_root, try_scan_sign_change, QuadratureConfig, RootConfig};

use super::qform::reduced_integral_with_error;
use super::{CriticalLength, Method, PieceSpec, Result, StabilityError, StabilityMode, TestProfile};

/// Geometric L-grid used to bracket the first sign change, then refined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub l_min: f64,
    pub l_max: f64,
    pub ratio: f64,
    pub x_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            l_min: 1.0,
            l_max: 200.0,
            ratio: 1.2,
            x_tol: 1e-6,
        }
    }
}

/// Root in `L` of the reduced integral on `Σ(s0; L)` with the cosine family.
pub fn critical_length_lt1(
    lambda: f64,
    s0: f64,
    mode: StabilityMode,
    scan: &ScanConfig,
    cfg: &QuadratureConfig,
) -> Result<CriticalLength> {
    let curve = make_curve(lambda)?;
    let s1 = curve.graph_bound()?;
    if !(s0 > s1) {
        return Err(StabilityError::GraphRegime { s0, s1 });
    }
    if !(scan.l_min > 0.0 && scan.l_max > scan.l_min && scan.ratio > 1.0) {
        return Err(StabilityError::InvalidParameter(format!("bad scan config {scan:?}")));
    }
    let root_cfg = RootConfig::new(scan.x_tol, 200)?;

    let base = PieceSpec::symmetric(curve, s0, scan.l_min)?;
    let profile = TestProfile::Cosine { s0 };
    let reduced = |length: f64| -> Result<f64> {
        let piece = base.with_length(length)?;
        Ok(reduced_integral_with_error(&piece, &profile, mode, cfg)?.value)
    };

    let grid = geometric_grid(scan.l_min, scan.l_max, scan.ratio);
    let Some((lo, hi)) = try_scan_sign_change(reduced, &grid)? else {
        return Err(StabilityError::NotFoundInRange { l_max: scan.l_max });
    };
    let value = if reduced(lo)? == 0.0 {
        lo
    } else if reduced(hi)? == 0.0 {
        hi
    } else {
        try_find_root(reduced, lo, hi, &root_cfg)?
    };
    Ok(CriticalLength {
        value,
        method: Method::RootFound,
        mode,
    })
}

/// Grid of reduced-integral values, one row per `s0`, one column per `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedTable {
    pub lambda: f64,
    pub s0_values: Vec<f64>,
    pub lengths: Vec<f64>,
    pub cells: Vec<Vec<f64>>,
    pub error_estimates: Vec<Vec<f64>>,
}

impl ReducedTable {
    /// Column of the first negative cell in each row.
    pub fn first_negative(&self) -> Vec<Option<usize>> {
        self.cells
            .iter()
            .map(|row| row.iter().position(|&v| v < 0.0))
            .collect()
    }

    pub fn max_error_estimate(&self) -> f64 {
        self.error_estimates.iter().flatten().copied().fold(0.0, f64::max)
    }
}

/// Volume-preserving reduced integral on every `(s0, L)` pair, cells
/// evaluated in parallel.
pub fn reduced_integral_table(
    lambda: f64,
    s0_values: &[f64],
    lengths: &[f64],
    cfg: &QuadratureConfig,
) -> Result<ReducedTable> {
    let curve = make_curve(lambda)?;
    let cells: Vec<(f64, f64)> = s0_values
        .par_iter()
        .flat_map_iter(|&s0| lengths.iter().map(move |&l| (s0, l)))
        .map(|(s0, length)| {
            let piece = PieceSpec::symmetric(curve, s0, length)?;
            let r = reduced_integral_with_error(
                &piece,
                &TestProfile::Cosine { s0 },
                StabilityMode::VolumePreserving,
                cfg,
            )?;
            Ok((r.value, r.error_estimate))
        })
        .collect::<Result<_>>()?;

    let width = lengths.len();
    let rows = |pick: fn(&(f64, f64)) -> f64| -> Vec<Vec<f64>> {
        if width == 0 {
            return vec![Vec::new(); s0_values.len()];
        }
        cells.chunks(width).map(|row| row.iter().map(pick).collect()).collect()
    };
    Ok(ReducedTable {
        lambda,
        s0_values: s0_values.to_vec(),
        lengths: lengths.to_vec(),
        cells: rows(|c| c.0),
        error_estimates: rows(|c| c.1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::qform_profile;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn brackets_from_tables() {
        let cases = [(0.25, 3.0, 20.0, 25.0), (0.5, 6.0, 12.0, 14.0), (0.75, 2.0, 6.0, 8.0)];
        for (lambda, s0, lo, hi) in cases {
            let l0 = critical_length_lt1(lambda, s0, StabilityMode::VolumePreserving, &ScanConfig::default(), &cfg())
                .unwrap();
            assert!(l0.value > lo && l0.value < hi, "λ={lambda} s0={s0}: {}", l0.value);
            assert_eq!(l0.method, Method::RootFound);
        }
    }

    #[test]
    fn root_matches_separated_form() {
        // I(L) = A + 4π²M/L²  ⇒  L0 = 2π√(M/−A)
        let lambda = 0.5;
        let s0 = 6.0;
        let curve = make_curve(lambda).unwrap();
        let piece = PieceSpec::symmetric(curve, s0, 1.0).unwrap();
        let q = qform_profile(&piece, &TestProfile::Cosine { s0 }, StabilityMode::VolumePreserving, &cfg()).unwrap();
        let a = q.grad_term - q.curvature_term;
        let expect = 2.0 * std::f64::consts::PI * (q.mass_term / -a).sqrt();
        for mode in [StabilityMode::VolumePreserving, StabilityMode::Strong] {
            let l0 = critical_length_lt1(lambda, s0, mode, &ScanConfig::default(), &cfg()).unwrap();
            let scale = if mode == StabilityMode::Strong { 0.5 } else { 1.0 };
            assert!((l0.value - scale * expect).abs() < 2e-6, "{mode:?}: {} vs {}", l0.value, expect);
        }
    }

    #[test]
    fn graph_regime_rejected() {
        let err = critical_length_lt1(0.5, 1.0, StabilityMode::VolumePreserving, &ScanConfig::default(), &cfg())
            .unwrap_err();
        assert!(matches!(err, StabilityError::GraphRegime { .. }));
        assert!(critical_length_lt1(1.0, 3.0, StabilityMode::VolumePreserving, &ScanConfig::default(), &cfg()).is_err());
    }

    #[test]
    fn not_found_in_short_range() {
        let scan = ScanConfig {
            l_max: 20.0,
            ..ScanConfig::default()
        };
        let err = critical_length_lt1(0.25, 7.0, StabilityMode::VolumePreserving, &scan, &cfg()).unwrap_err();
        assert!(matches!(err, StabilityError::NotFoundInRange { .. }));
    }

    #[test]
    fn table_cells_and_marks() {
        let t = reduced_integral_table(0.5, &[8.0, 10.0], &[16.0, 18.0, 20.0], &cfg()).unwrap();
        assert!((t.cells[0][1] + 0.0153).abs() < 1e-3);
        assert!((t.cells[1][2] - 0.2851).abs() < 1e-3);
        assert_eq!(t.first_negative(), vec![Some(1), None]);
    }

    #[test]
    fn parallel_table_is_bit_identical_to_sequential() {
        let s0s = [3.0, 5.0];
        let ls = [15.0, 25.0, 40.0];
        let t = reduced_integral_table(0.25, &s0s, &ls, &cfg()).unwrap();
        let curve = make_curve(0.25).unwrap();
        for (i, &s0) in s0s.iter().enumerate() {
            for (j, &l) in ls.iter().enumerate() {
                let piece = PieceSpec::symmetric(curve, s0, l).unwrap();
                let v = super::super::reduced_integral(&piece, &TestProfile::Cosine { s0 }, &cfg()).unwrap();
                assert_eq!(v.to_bits(), t.cells[i][j].to_bits());
            }
        }
    }
}
