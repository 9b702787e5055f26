use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use soliton_core::stability::{
    critical_length_eq1, critical_length_gt1, critical_length_gt1_uniform, critical_length_lt1, cyl_alt_q,
    cyl_cmc_critical_length, cyl_cmc_q, cyl_soliton_critical_length, cyl_soliton_q, cyl_soliton_q_closed,
    q_eq1_closed, q_gt1_closed, qform_profile, reduced_integral_table, zero_weighted_mean_residual, AltVariant,
    CylinderSpec, ScanConfig, TestProfile, MEAN_RESIDUAL_TOL,
};
use soliton_core::{make_curve, CriticalLength, PieceSpec, ProfileCurve, SolitonCase, StabilityError, StabilityMode};

use crate::args::{
    mode, CriticalArgs, CurveArgs, CylinderArgs, MeshArgs, OutputFormat, QformArgs, TableArgs, TableFormat,
};
use crate::emit::{fmt_num, write_curve_csv, write_obj, MeshSurface};
use crate::error::{CliError, Result};
use crate::reference::published;
use crate::table::TableReport;

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

fn write_target(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::io(p.display().to_string(), e)),
        None => out.write_all(bytes).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn render<T: Serialize>(format: OutputFormat, value: &T, text: impl FnOnce(&T) -> String) -> Result<String> {
    Ok(match format {
        OutputFormat::Text => text(value),
        OutputFormat::Json => serde_json::to_string_pretty(value)? + "\n",
    })
}

pub fn curve(args: &CurveArgs, out: &mut dyn Write) -> Result<()> {
    let curve = make_curve(args.lambda)?;
    let mut buf = Vec::new();
    write_curve_csv(&mut buf, &curve, args.s_min, args.s_max, args.samples)?;
    write_target(args.out.as_deref(), &buf, out)
}

/// The canonical piece and test family for a curve.
fn canonical_piece(
    curve: ProfileCurve,
    sigma: Option<f64>,
    s0: Option<f64>,
    length: f64,
) -> Result<(PieceSpec, TestProfile)> {
    match curve.case() {
        SolitonCase::GreaterThanOne => {
            if s0.is_some() {
                return Err(CliError::Usage("--s0 applies to λ ≤ 1; use --sigma for λ > 1".into()));
            }
            let sigma = sigma.unwrap_or(0.0);
            Ok((PieceSpec::fundamental(curve, sigma, length)?, TestProfile::FundamentalSine { sigma }))
        }
        case => {
            if sigma.is_some() {
                return Err(CliError::Usage("--sigma applies to λ > 1; use --s0 for λ ≤ 1".into()));
            }
            let s0 = s0.ok_or_else(|| CliError::Usage("--s0 is required for λ ≤ 1".into()))?;
            let piece = PieceSpec::symmetric(curve, s0, length)?;
            let profile = if case == SolitonCase::EqualOne {
                TestProfile::Quadratic { s0 }
            } else {
                TestProfile::Cosine { s0 }
            };
            Ok((piece, profile))
        }
    }
}

#[derive(Debug, Serialize)]
struct QformReport {
    lambda: f64,
    interval: (f64, f64),
    length: f64,
    mode: &'static str,
    grad_term: f64,
    curvature_term: f64,
    mass_term: f64,
    total: f64,
    reduced_integral: f64,
    closed_form: Option<f64>,
    mean_residual: f64,
    certificate: bool,
}

pub fn qform(args: &QformArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = args.quad.config()?;
    let mode = mode(args.strong);
    let curve = make_curve(args.piece.lambda)?;
    let (piece, profile) = canonical_piece(curve, args.piece.sigma, args.piece.s0, args.length)?;
    let terms = qform_profile(&piece, &profile, mode, &cfg)?;
    let closed_form = match profile {
        TestProfile::FundamentalSine { sigma } => q_gt1_closed(curve.lambda(), sigma, args.length, mode).ok(),
        TestProfile::Quadratic { s0 } => q_eq1_closed(s0, args.length, mode).ok(),
        _ => None,
    };
    let mean_residual = zero_weighted_mean_residual(&piece, mode);
    let admissible = mode == StabilityMode::Strong || mean_residual.abs() < MEAN_RESIDUAL_TOL;
    let report = QformReport {
        lambda: curve.lambda(),
        interval: piece.interval(),
        length: args.length,
        mode: mode.name(),
        grad_term: terms.grad_term,
        curvature_term: terms.curvature_term,
        mass_term: terms.mass_term,
        total: terms.total,
        reduced_integral: 2.0 * terms.total / args.length,
        closed_form,
        mean_residual,
        certificate: terms.total < 0.0 && admissible,
    };
    let text = render(args.format, &report, |r| {
        let mut s = format!(
            "lambda: {}\ninterval: [{}, {}]\nlength: {}\nmode: {}\n",
            fmt_num(r.lambda),
            fmt_num(r.interval.0),
            fmt_num(r.interval.1),
            fmt_num(r.length),
            r.mode
        );
        s += &format!(
            "grad_term: {}\ncurvature_term: {}\nmass_term: {}\ntotal: {}\nreduced_integral: {}\n",
            fmt_num(r.grad_term),
            fmt_num(r.curvature_term),
            fmt_num(r.mass_term),
            fmt_num(r.total),
            fmt_num(r.reduced_integral)
        );
        if let Some(c) = r.closed_form {
            s += &format!("closed_form: {}\n", fmt_num(c));
        }
        s += &format!(
            "mean_residual: {}\ncertificate: {}\n",
            fmt_num(r.mean_residual),
            if r.certificate { "unstable" } else { "none" }
        );
        s
    })?;
    emit(out, &text)
}

#[derive(Debug, Serialize)]
struct CriticalReport {
    surface: String,
    l0: f64,
    method: &'static str,
    mode: &'static str,
}

pub fn critical_length(args: &CriticalArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = args.quad.config()?;
    let mode = mode(args.strong);
    let (surface, cl): (String, CriticalLength) = if let Some(r) = args.radius {
        if args.cmc {
            (format!("cmc cylinder r = {}", fmt_num(r)), cyl_cmc_critical_length(r, mode)?)
        } else {
            if args.strong {
                return Err(CliError::Usage(
                    "the soliton cylinder family is volume-preserving only; add --cmc for strong mode".into(),
                ));
            }
            (format!("cylinder r = {}", fmt_num(r)), cyl_soliton_critical_length(r)?)
        }
    } else {
        let lambda = args.lambda.ok_or_else(|| CliError::Usage("--lambda or --radius is required".into()))?;
        let curve = make_curve(lambda)?;
        match curve.case() {
            SolitonCase::GreaterThanOne => {
                if args.s0.is_some() {
                    return Err(CliError::Usage("--s0 applies to λ ≤ 1; use --sigma for λ > 1".into()));
                }
                if args.uniform {
                    (format!("λ = {}, all σ", fmt_num(lambda)), critical_length_gt1_uniform(lambda, mode)?)
                } else {
                    let sigma = args.sigma.unwrap_or(0.0);
                    (
                        format!("λ = {}, σ = {}", fmt_num(lambda), fmt_num(sigma)),
                        critical_length_gt1(lambda, sigma, mode)?,
                    )
                }
            }
            case => {
                if args.sigma.is_some() || args.uniform {
                    return Err(CliError::Usage("--sigma and --uniform apply to λ > 1 only".into()));
                }
                let s0 = args.s0.ok_or_else(|| CliError::Usage("--s0 is required for λ ≤ 1".into()))?;
                let cl = if case == SolitonCase::EqualOne {
                    critical_length_eq1(s0, mode)?
                } else {
                    let scan = ScanConfig {
                        l_max: args.l_max,
                        ..ScanConfig::default()
                    };
                    critical_length_lt1(lambda, s0, mode, &scan, &cfg)?
                };
                (format!("λ = {}, s0 = {}", fmt_num(lambda), fmt_num(s0)), cl)
            }
        }
    };
    let report = CriticalReport {
        surface,
        l0: cl.value,
        method: cl.method.name(),
        mode: cl.mode.name(),
    };
    let text = render(args.format, &report, |r| {
        format!(
            "surface: {}\nL0: {}\nmethod: {}\nmode: {}\n",
            r.surface,
            fmt_num(r.l0),
            r.method,
            r.mode
        )
    })?;
    emit(out, &text)
}

pub fn table(args: &TableArgs, out: &mut dyn Write) -> Result<()> {
    if !(args.lambda > 0.0 && args.lambda < 1.0) {
        return Err(CliError::Usage(format!("table needs 0 < λ < 1, got {}", args.lambda)));
    }
    let cfg = args.quad.config()?;
    let defaults = published(args.lambda);
    let missing = || {
        CliError::Usage(format!(
            "no default grid for λ = {}; pass --s0 and --lengths",
            args.lambda
        ))
    };
    let s0: Vec<f64> = match (&args.s0, defaults) {
        (Some(v), _) => v.clone(),
        (None, Some(t)) => t.s0.to_vec(),
        (None, None) => return Err(missing()),
    };
    let lengths: Vec<f64> = match (&args.lengths, defaults) {
        (Some(v), _) => v.clone(),
        (None, Some(t)) => t.lengths.to_vec(),
        (None, None) => return Err(missing()),
    };
    if s0.is_empty() || lengths.is_empty() {
        return Err(CliError::Usage("--s0 and --lengths must be non-empty".into()));
    }
    let computed = reduced_integral_table(args.lambda, &s0, &lengths, &cfg)?;
    let report = TableReport::from_table(&computed);
    let text = match args.format {
        TableFormat::Markdown => report.to_markdown(),
        TableFormat::Csv => report.to_csv(),
    };
    write_target(args.out.as_deref(), text.as_bytes(), out)
}

#[derive(Debug, Serialize)]
struct CylinderReport {
    radius: f64,
    length: f64,
    cmc_q: f64,
    cmc_l0: f64,
    soliton_q: f64,
    soliton_q_closed: f64,
    soliton_l0: Option<f64>,
    alt_q_plain: f64,
    alt_q_damped: f64,
}

pub fn cylinder(args: &CylinderArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = args.quad.config()?;
    let spec = CylinderSpec::new(args.radius, args.length)?;
    let soliton_l0 = match cyl_soliton_critical_length(args.radius) {
        Ok(cl) => Some(cl.value),
        Err(StabilityError::RadiusTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let report = CylinderReport {
        radius: args.radius,
        length: args.length,
        cmc_q: cyl_cmc_q(&spec),
        cmc_l0: cyl_cmc_critical_length(args.radius, StabilityMode::VolumePreserving)?.value,
        soliton_q: cyl_soliton_q(&spec, &cfg)?,
        soliton_q_closed: cyl_soliton_q_closed(&spec),
        soliton_l0,
        alt_q_plain: cyl_alt_q(&spec, AltVariant::HalfSinPlain),
        alt_q_damped: cyl_alt_q(&spec, AltVariant::HalfSinDamped),
    };
    let text = render(args.format, &report, |r| {
        format!(
            "radius: {}\nlength: {}\ncmc_q: {}\ncmc_l0: {}\nsoliton_q: {}\nsoliton_q_closed: {}\nsoliton_l0: {}\nalt_q_plain: {}\nalt_q_damped: {}\n",
            fmt_num(r.radius),
            fmt_num(r.length),
            fmt_num(r.cmc_q),
            fmt_num(r.cmc_l0),
            fmt_num(r.soliton_q),
            fmt_num(r.soliton_q_closed),
            r.soliton_l0.map_or_else(|| "none (r ≥ √2)".to_string(), fmt_num),
            fmt_num(r.alt_q_plain),
            fmt_num(r.alt_q_damped),
        )
    })?;
    emit(out, &text)
}

pub fn mesh(args: &MeshArgs) -> Result<()> {
    let surface = match (args.lambda, args.radius) {
        (_, Some(radius)) => {
            CylinderSpec::new(radius, 1.0)?;
            MeshSurface::Cylinder { radius }
        }
        (Some(lambda), None) => MeshSurface::for_piece(make_curve(lambda)?, args.sigma, args.s0)?,
        (None, None) => return Err(CliError::Usage("--lambda or --radius is required".into())),
    };
    let mut buf = Vec::new();
    write_obj(&mut buf, &surface, args.length, args.ns, args.nt)?;
    fs::write(&args.out, buf).map_err(|e| CliError::io(args.out.display().to_string(), e))
}
