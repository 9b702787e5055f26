//! CSV and OBJ writers. All numbers use the shortest decimal form that
//! round-trips, so output is byte-identical for identical input.

use std::f64::consts::PI;
use std::io::Write;

use soliton_core::{ProfileCurve, SolitonCase};

use crate::error::{CliError, Result};

pub const CURVE_HEADER: &str = "s,x1,x3,dx1,dx3,kappa,weight";

/// Shortest round-trip decimal, with `-0` printed as `0`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// `samples` uniform points on `[lo, hi]`, hitting both ends exactly.
pub fn uniform(lo: f64, hi: f64, samples: usize) -> Vec<f64> {
    let last = samples - 1;
    (0..samples)
        .map(|i| {
            if i == last {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last as f64
            }
        })
        .collect()
}

pub fn write_curve_csv<W: Write>(out: &mut W, curve: &ProfileCurve, s_min: f64, s_max: f64, samples: usize) -> Result<()> {
    if samples < 2 {
        return Err(CliError::Usage(format!("--samples must be at least 2, got {samples}")));
    }
    if !(s_min.is_finite() && s_max.is_finite() && s_min < s_max) {
        return Err(CliError::Usage(format!("need s-min < s-max, got [{s_min}, {s_max}]")));
    }
    let mut text = String::with_capacity(64 * samples);
    text.push_str(CURVE_HEADER);
    text.push('\n');
    for s in uniform(s_min, s_max, samples) {
        let p = curve.sample(s);
        let row = [p.s, p.x1, p.x3, p.dx1, p.dx3, p.kappa, p.weight].map(fmt_num);
        text.push_str(&row.join(","));
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<output>", e))
}

/// Parameter domain and embedding of a surface to be meshed.
#[derive(Debug, Clone, Copy)]
pub enum MeshSurface {
    /// `Ψ(s, t) = (α1(s), t, α3(s))` on `[a, b] × [0, L]`.
    Piece { curve: ProfileCurve, a: f64, b: f64 },
    /// `(r cos(s/r), r sin(s/r), t)` on `[0, 2πr] × [0, L]`.
    Cylinder { radius: f64 },
}

impl MeshSurface {
    pub fn for_piece(curve: ProfileCurve, sigma: Option<f64>, s0: Option<f64>) -> Result<Self> {
        let (a, b) = match curve.case() {
            SolitonCase::GreaterThanOne => {
                if s0.is_some() {
                    return Err(CliError::Usage("--s0 applies to λ ≤ 1; use --sigma for λ > 1".into()));
                }
                let half = curve.half_period()?;
                let sigma = sigma.unwrap_or(0.0);
                (sigma - half, sigma + half)
            }
            _ => {
                if sigma.is_some() {
                    return Err(CliError::Usage("--sigma applies to λ > 1; use --s0 for λ ≤ 1".into()));
                }
                let s0 = s0.ok_or_else(|| CliError::Usage("--s0 is required for λ ≤ 1".into()))?;
                if !(s0 > 0.0 && s0.is_finite()) {
                    return Err(CliError::Usage(format!("--s0 must be positive, got {s0}")));
                }
                (-s0, s0)
            }
        };
        Ok(MeshSurface::Piece { curve, a, b })
    }

    fn s_range(&self) -> (f64, f64) {
        match *self {
            MeshSurface::Piece { a, b, .. } => (a, b),
            MeshSurface::Cylinder { radius } => (0.0, 2.0 * PI * radius),
        }
    }

    fn point(&self, s: f64, t: f64) -> [f64; 3] {
        match *self {
            MeshSurface::Piece { curve, .. } => {
                let (x1, x3) = curve.position(s);
                [x1, t, x3]
            }
            MeshSurface::Cylinder { radius } => {
                let (sn, cs) = (s / radius).sin_cos();
                [radius * cs, radius * sn, t]
            }
        }
    }
}

/// Quad grid with `ns · nt` vertices in s-major order and two triangles
/// `(v00, v10, v11)`, `(v00, v11, v01)` per cell, 1-based.
pub fn write_obj<W: Write>(out: &mut W, surface: &MeshSurface, length: f64, ns: usize, nt: usize) -> Result<()> {
    if ns < 2 || nt < 2 {
        return Err(CliError::Usage(format!("--ns and --nt must be at least 2, got {ns} and {nt}")));
    }
    if !(length.is_finite() && length > 0.0) {
        return Err(CliError::Usage(format!("--length must be positive, got {length}")));
    }
    let (lo, hi) = surface.s_range();
    let ss = uniform(lo, hi, ns);
    let ts = uniform(0.0, length, nt);
    let mut text = String::new();
    for &s in &ss {
        for &t in &ts {
            let [x, y, z] = surface.point(s, t).map(fmt_num);
            text.push_str(&format!("v {x} {y} {z}\n"));
        }
    }
    let idx = |i: usize, j: usize| i * nt + j + 1;
    for i in 0..ns - 1 {
        for j in 0..nt - 1 {
            let (v00, v10, v11, v01) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
            text.push_str(&format!("f {v00} {v10} {v11}\nf {v00} {v11} {v01}\n"));
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<output>", e))
}
