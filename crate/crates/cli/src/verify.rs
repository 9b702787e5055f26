//! Verification suites. Each check prints one `PASS`/`FAIL` line; errata
//! findings print `INFO` lines and never fail.

use std::f64::consts::{PI, SQRT_2};
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use soliton_core::numerics::{find_root, integrate, scan_sign_change, RootConfig};
use soliton_core::stability::{
    critical_length_eq1, critical_length_gt1, critical_length_gt1_uniform, critical_length_lt1, cyl_alt_q,
    cyl_alt_q_quadrature, cyl_cmc_critical_length, cyl_cmc_q, cyl_soliton_critical_length, cyl_soliton_q,
    cyl_soliton_q_closed, cyl_soliton_q_printed, eq1_threshold, graph_stability_probe, q_eq1_closed, q_gt1_closed,
    qform_profile, reduced_integral, reduced_integral_table, AltVariant, CylinderSpec, ScanConfig, TestProfile,
};
use soliton_core::{make_curve, PieceSpec, QuadratureConfig, StabilityMode};

use crate::args::{Suite, VerifyArgs};
use crate::error::{CliError, Result};
use crate::reference::{printed_eq1_components, published, PublishedTable, ROUTINE_VALUE, TABLES};

type Outcome = std::result::Result<String, String>;

const VP: StabilityMode = StabilityMode::VolumePreserving;
const ST: StabilityMode = StabilityMode::Strong;

/// Largest quadrature error estimate accepted for a table cell.
pub const TABLE_ERROR_BUDGET: f64 = 1e-6;

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Reporter<'a> {
    out: &'a mut dyn Write,
    passed: usize,
    failed: usize,
}

impl Reporter<'_> {
    fn line(&mut self, text: String) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| CliError::io("<stdout>", e))
    }

    fn check(&mut self, name: &str, outcome: Outcome) -> Result<()> {
        match outcome {
            Ok(detail) => {
                self.passed += 1;
                self.line(format!("PASS  {name}: {detail}"))
            }
            Err(detail) => {
                self.failed += 1;
                self.line(format!("FAIL  {name}: {detail}"))
            }
        }
    }

    fn info(&mut self, name: &str, detail: String) -> Result<()> {
        self.line(format!("INFO  {name}: {detail}"))
    }
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = args.quad.config()?;
    let tables: Vec<&PublishedTable> = match args.lambda {
        None => TABLES.iter().collect(),
        Some(l) => vec![published(l)
            .ok_or_else(|| CliError::Usage(format!("--lambda must be one of 0.25, 0.5, 0.75, got {l}")))?],
    };
    if args.probe_samples == 0 {
        return Err(CliError::Usage("--probe-samples must be positive".into()));
    }
    let wants = |s: Suite| args.suite == Suite::All || args.suite == s;

    let mut rep = Reporter {
        out,
        passed: 0,
        failed: 0,
    };
    if wants(Suite::Numerics) {
        rep.check("numerics: quadrature examples", quadrature_examples(&cfg))?;
        rep.check("numerics: root examples", root_examples())?;
        rep.check("numerics: sign-change scans", scan_examples(&cfg))?;
    }
    if wants(Suite::Geometry) {
        rep.check("geometry: residuals", geometry_residuals(args.seed))?;
        rep.check("geometry: branch continuity", branch_continuity())?;
        rep.check("geometry: graph bounds and periods", bounds_and_periods())?;
    }
    if wants(Suite::ClosedForms) {
        rep.check("closed forms: λ > 1 vs quadrature", gt1_agreement(&cfg))?;
        rep.check("closed forms: λ = 1 vs quadrature", eq1_agreement(&cfg))?;
        rep.check("closed forms: σ-monotonicity", sigma_monotone())?;
        rep.check("closed forms: strong halving", strong_halving())?;
    }
    if wants(Suite::Tables) {
        for t in &tables {
            rep.check(&format!("tables: λ = {}", t.lambda), table_check(t, &cfg))?;
        }
        if tables.iter().any(|t| t.lambda == 0.25) {
            rep.check("tables: routine value", routine_check(&cfg))?;
        }
    }
    if wants(Suite::Brackets) {
        rep.check("brackets: closed-form critical lengths", closed_brackets(&cfg))?;
        rep.check("brackets: λ < 1 root-found critical lengths", lt1_brackets(&cfg))?;
        rep.check("brackets: cylinders", cylinder_brackets(&cfg))?;
    }
    if wants(Suite::Cylinder) {
        rep.check("cylinder: cmc critical length", cmc_check())?;
        rep.check("cylinder: soliton sign factor", cylinder_signs(&cfg))?;
        rep.check("cylinder: alternative test functions", cylinder_alt(&cfg))?;
    }
    if wants(Suite::Probe) {
        rep.check("probe: graph stability", probe_check(args.probe_samples, args.seed, &cfg))?;
    }
    if wants(Suite::Errata) {
        eq1_components_finding(&mut rep, &cfg)?;
        cylinder_prefactor_finding(&mut rep)?;
    }

    let (passed, failed) = (rep.passed, rep.failed);
    rep.line(format!("verify: {passed} passed, {failed} failed"))?;
    if failed > 0 {
        Err(CliError::VerificationFailed(failed))
    } else {
        Ok(())
    }
}

fn quadrature_examples(cfg: &QuadratureConfig) -> Outcome {
    let sin = integrate(f64::sin, 0.0, PI, cfg).map_err(e2s)?.value;
    ensure((sin - 2.0).abs() <= 1e-10, || format!("∫ sin over [0, π] = {sin}"))?;
    let sq = integrate(|x| x * x, 0.0, 1.0, cfg).map_err(e2s)?.value;
    ensure((sq - 1.0 / 3.0).abs() <= 1e-12, || format!("∫ x² over [0, 1] = {sq}"))?;
    Ok("∫ sin = 2, ∫ x² = 1/3".into())
}

fn root_examples() -> Outcome {
    let rc = RootConfig::default();
    let r = find_root(|x| x * x - 2.0, 1.0, 2.0, &rc).map_err(e2s)?;
    ensure((r - SQRT_2).abs() <= 1e-12, || format!("√2 ≈ {r}"))?;
    let z = find_root(|x| x, -1.0, 1.0, &rc).map_err(e2s)?;
    ensure(z.abs() <= 1e-12, || format!("odd root {z}"))?;
    let s_bar = eq1_threshold();
    ensure((s_bar - 1.0213).abs() <= 5e-4, || format!("s̄0 = {s_bar}"))?;
    Ok(format!("√2, 0, s̄0 = {s_bar:.6}"))
}

fn scan_examples(cfg: &QuadratureConfig) -> Outcome {
    let reduced = |lambda: f64, s0: f64| {
        let curve = make_curve(lambda).unwrap();
        move |l: f64| {
            let piece = PieceSpec::symmetric(curve, s0, l).unwrap();
            reduced_integral(&piece, &TestProfile::Cosine { s0 }, cfg).unwrap_or(f64::NAN)
        }
    };
    let a = scan_sign_change(reduced(0.25, 3.0), &[15.0, 20.0, 25.0, 30.0, 35.0, 40.0]).map_err(e2s)?;
    ensure(a == Some((20.0, 25.0)), || format!("λ=1/4 s0=3 bracket {a:?}"))?;
    let b = scan_sign_change(reduced(0.5, 4.0), &[10.0, 12.0, 14.0, 16.0, 18.0, 20.0]).map_err(e2s)?;
    ensure(b == Some((10.0, 12.0)), || format!("λ=1/2 s0=4 bracket {b:?}"))?;
    let none = scan_sign_change(|_| 1.0, &[1.0, 2.0, 3.0]).map_err(e2s)?;
    ensure(none.is_none(), || "constant function bracketed".into())?;
    Ok("(20, 25), (10, 12), none".into())
}

const GEOMETRY_LAMBDAS: [f64; 6] = [0.25, 0.5, 0.75, 1.0, 1.5, 3.0];

fn geometry_residuals(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut arc, mut ode, mut wt) = (0.0f64, 0.0f64, 0.0f64);
    for lambda in GEOMETRY_LAMBDAS {
        let c = make_curve(lambda).map_err(e2s)?;
        for _ in 0..1000 {
            let s: f64 = rng.gen_range(-10.0..10.0);
            let (dx1, dx3) = c.tangent(s);
            arc = arc.max((dx1 * dx1 + dx3 * dx3 - 1.0).abs());
            ode = ode.max(c.soliton_residual(s).abs());
            let w = c.weight(s);
            wt = wt.max((w - c.position(s).1.exp()).abs() / w);
        }
    }
    ensure(arc < 1e-9 && ode < 1e-6 && wt < 1e-12, || {
        format!("arc {arc:e}, ODE {ode:e}, weight {wt:e}")
    })?;
    Ok(format!("6000 samples: arc {arc:.1e}, ODE {ode:.1e}, weight {wt:.1e}"))
}

fn branch_continuity() -> Outcome {
    let mut worst = 0.0f64;
    for lambda in [1.5, 3.0] {
        let c = make_curve(lambda).map_err(e2s)?;
        for k in -5..5 {
            let sb = f64::from(2 * k + 1) * PI / c.omega();
            let eps = 1e-12 * sb.abs().max(1.0);
            worst = worst.max((c.position(sb + eps).0 - c.position(sb - eps).0).abs());
        }
    }
    ensure(worst < 1e-9, || format!("jump {worst:e}"))?;
    Ok(format!("20 branch points, max jump {worst:.1e}"))
}

fn bounds_and_periods() -> Outcome {
    for (lambda, s1) in [(0.25, 2.1311), (0.5, 1.5206), (0.75, 1.2024)] {
        let got = make_curve(lambda).and_then(|c| c.graph_bound()).map_err(e2s)?;
        ensure((got - s1).abs() <= 5e-4, || format!("s1({lambda}) = {got}"))?;
    }
    let t = make_curve(3.0).and_then(|c| c.period()).map_err(e2s)?;
    ensure((t - 2.0 * PI / 8f64.sqrt()).abs() < 1e-14, || format!("T(3) = {t}"))?;
    let t = make_curve(SQRT_2).and_then(|c| c.period()).map_err(e2s)?;
    ensure((t - 2.0 * PI).abs() < 1e-12, || format!("T(√2) = {t}"))?;
    Ok("s1(1/4, 1/2, 3/4), T(3), T(√2)".into())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn gt1_agreement(cfg: &QuadratureConfig) -> Outcome {
    let mut worst = 0.0f64;
    for lambda in [1.5, 2.0, 3.0, 5.0] {
        let curve = make_curve(lambda).map_err(e2s)?;
        let s0 = curve.half_period().map_err(e2s)?;
        for sigma in [0.0, 0.5 * s0, s0] {
            for l in [0.5, 1.0, 2.0, 5.0, 10.0] {
                let closed = q_gt1_closed(lambda, sigma, l, VP).map_err(e2s)?;
                let piece = PieceSpec::fundamental(curve, sigma, l).map_err(e2s)?;
                let quad = qform_profile(&piece, &TestProfile::FundamentalSine { sigma }, VP, cfg)
                    .map_err(e2s)?
                    .total;
                worst = worst.max(rel(quad, closed));
                ensure(rel(quad, closed) <= 1e-6, || format!("λ={lambda} σ={sigma} L={l}: {quad} vs {closed}"))?;
            }
        }
    }
    Ok(format!("60 points, max rel {worst:.1e}"))
}

fn eq1_agreement(cfg: &QuadratureConfig) -> Outcome {
    let curve = make_curve(1.0).map_err(e2s)?;
    let mut worst = 0.0f64;
    for s0 in [1.5, 2.0, 3.0, 5.0] {
        for l in [2.0, 5.0, 10.0, 20.0] {
            let closed = q_eq1_closed(s0, l, VP).map_err(e2s)?;
            let piece = PieceSpec::symmetric(curve, s0, l).map_err(e2s)?;
            let quad = qform_profile(&piece, &TestProfile::Quadratic { s0 }, VP, cfg).map_err(e2s)?.total;
            worst = worst.max(rel(quad, closed));
            ensure(rel(quad, closed) <= 1e-6, || format!("s0={s0} L={l}: {quad} vs {closed}"))?;
        }
    }
    Ok(format!("16 points, max rel {worst:.1e}"))
}

fn sigma_monotone() -> Outcome {
    for lambda in [1.5, 2.0, 3.0, 5.0] {
        let s0 = make_curve(lambda).and_then(|c| c.half_period()).map_err(e2s)?;
        let mut prev = 0.0;
        for i in 0..100 {
            let l0 = critical_length_gt1(lambda, s0 * f64::from(i) / 99.0, VP).map_err(e2s)?.value;
            ensure(l0 >= prev, || format!("λ={lambda}: L0 decreases at step {i}"))?;
            prev = l0;
        }
        let uniform = critical_length_gt1_uniform(lambda, VP).map_err(e2s)?.value;
        ensure((prev - uniform).abs() <= 1e-12 * uniform, || format!("λ={lambda}: max {prev} vs L0* {uniform}"))?;
    }
    Ok("4 × 100-point σ grids, maximum equals L0*".into())
}

fn strong_halving() -> Outcome {
    let mut n = 0;
    let mut pair = |vp: f64, st: f64, label: String| {
        n += 1;
        ensure((st - 0.5 * vp).abs() <= 1e-12, || format!("{label}: {st} vs {vp}/2"))
    };
    for lambda in [1.5, 2.0, 3.0, 5.0] {
        let s0 = make_curve(lambda).and_then(|c| c.half_period()).map_err(e2s)?;
        for sigma in [0.0, 0.5 * s0, s0] {
            pair(
                critical_length_gt1(lambda, sigma, VP).map_err(e2s)?.value,
                critical_length_gt1(lambda, sigma, ST).map_err(e2s)?.value,
                format!("λ={lambda} σ={sigma}"),
            )?;
        }
    }
    for s0 in [1.5, 2.0, 3.0, 5.0] {
        pair(
            critical_length_eq1(s0, VP).map_err(e2s)?.value,
            critical_length_eq1(s0, ST).map_err(e2s)?.value,
            format!("λ=1 s0={s0}"),
        )?;
    }
    pair(
        cyl_cmc_critical_length(1.0, VP).map_err(e2s)?.value,
        cyl_cmc_critical_length(1.0, ST).map_err(e2s)?.value,
        "cmc r=1".into(),
    )?;
    Ok(format!("{n} pairs"))
}

fn table_check(t: &PublishedTable, cfg: &QuadratureConfig) -> Outcome {
    let computed = reduced_integral_table(t.lambda, &t.s0, &t.lengths, cfg).map_err(e2s)?;
    let mut worst = 0.0f64;
    for (i, row) in computed.cells.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let d = (v - t.cells[i][j]).abs();
            worst = worst.max(d);
            ensure(d <= t.tolerance, || {
                format!("s0={} L={}: {v:.6} vs published {}", t.s0[i], t.lengths[j], t.cells[i][j])
            })?;
        }
    }
    let budget = computed.max_error_estimate();
    ensure(budget <= TABLE_ERROR_BUDGET, || {
        format!("quadrature error estimate {budget:.1e} exceeds {TABLE_ERROR_BUDGET:e}")
    })?;
    for (i, mark) in computed.first_negative().iter().enumerate() {
        let got = mark.map(|j| t.lengths[j]);
        ensure(got == t.first_negative[i], || {
            format!("s0={}: first negative {got:?}, published {:?}", t.s0[i], t.first_negative[i])
        })?;
    }
    Ok(format!("30 cells within {:e} (max {worst:.1e}), marks match", t.tolerance))
}

fn routine_check(cfg: &QuadratureConfig) -> Outcome {
    let piece = PieceSpec::symmetric(make_curve(0.25).map_err(e2s)?, 3.0, 4.0).map_err(e2s)?;
    let v = reduced_integral(&piece, &TestProfile::Cosine { s0: 3.0 }, cfg).map_err(e2s)?;
    ensure((v - ROUTINE_VALUE).abs() <= 1e-3, || format!("I = {v}"))?;
    Ok(format!("I(u) = {v:.6} (λ=1/4, s0=3, L=4)"))
}

fn bracket(label: &str, l0: f64, q: impl Fn(f64) -> std::result::Result<f64, String>) -> std::result::Result<(), String> {
    let (lo, hi) = (q(0.99 * l0)?, q(1.01 * l0)?);
    ensure(lo > 0.0 && hi < 0.0, || format!("{label}: Q(0.99 L0) = {lo:e}, Q(1.01 L0) = {hi:e}"))
}

fn closed_brackets(cfg: &QuadratureConfig) -> Outcome {
    let mut n = 0;
    for mode in [VP, ST] {
        for lambda in [1.5, 3.0] {
            let curve = make_curve(lambda).map_err(e2s)?;
            let s0 = curve.half_period().map_err(e2s)?;
            for sigma in [0.0, 0.5 * s0, s0] {
                let l0 = critical_length_gt1(lambda, sigma, mode).map_err(e2s)?.value;
                bracket(&format!("λ={lambda} σ={sigma}"), l0, |l| {
                    let piece = PieceSpec::fundamental(curve, sigma, l).map_err(e2s)?;
                    Ok(qform_profile(&piece, &TestProfile::FundamentalSine { sigma }, mode, cfg).map_err(e2s)?.total)
                })?;
                n += 1;
            }
        }
        let curve = make_curve(1.0).map_err(e2s)?;
        for s0 in [1.5, 2.0, 5.0] {
            let l0 = critical_length_eq1(s0, mode).map_err(e2s)?.value;
            bracket(&format!("λ=1 s0={s0}"), l0, |l| {
                let piece = PieceSpec::symmetric(curve, s0, l).map_err(e2s)?;
                Ok(qform_profile(&piece, &TestProfile::Quadratic { s0 }, mode, cfg).map_err(e2s)?.total)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} critical lengths"))
}

fn lt1_brackets(cfg: &QuadratureConfig) -> Outcome {
    let mut n = 0;
    for t in &TABLES {
        let curve = make_curve(t.lambda).map_err(e2s)?;
        for (i, mark) in t.first_negative.iter().enumerate() {
            let Some(hi) = *mark else { continue };
            let s0 = t.s0[i];
            let j = t.lengths.iter().position(|&l| l == hi).unwrap_or(0);
            let lo = if j > 0 { t.lengths[j - 1] } else { 0.0 };
            let l0 = critical_length_lt1(t.lambda, s0, VP, &ScanConfig::default(), cfg)
                .map_err(e2s)?
                .value;
            ensure(l0 > lo && l0 < hi, || format!("λ={} s0={s0}: L0 = {l0} outside ({lo}, {hi})", t.lambda))?;
            bracket(&format!("λ={} s0={s0}", t.lambda), l0, |l| {
                let piece = PieceSpec::symmetric(curve, s0, l).map_err(e2s)?;
                Ok(qform_profile(&piece, &TestProfile::Cosine { s0 }, VP, cfg).map_err(e2s)?.total)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} table brackets"))
}

fn cylinder_brackets(cfg: &QuadratureConfig) -> Outcome {
    for r in [0.5, 1.0, 1.3] {
        let l0 = cyl_soliton_critical_length(r).map_err(e2s)?.value;
        bracket(&format!("r={r}"), l0, |l| {
            cyl_soliton_q(&CylinderSpec::new(r, l).map_err(e2s)?, cfg).map_err(e2s)
        })?;
    }
    Ok("r = 0.5, 1, 1.3".into())
}

fn cmc_check() -> Outcome {
    for r in [0.5, 1.0, 2.0] {
        let l0 = cyl_cmc_critical_length(r, VP).map_err(e2s)?.value;
        let at = cyl_cmc_q(&CylinderSpec::new(r, l0).map_err(e2s)?);
        let below = cyl_cmc_q(&CylinderSpec::new(r, 0.99 * l0).map_err(e2s)?);
        let above = cyl_cmc_q(&CylinderSpec::new(r, 1.01 * l0).map_err(e2s)?);
        ensure(at.abs() < 1e-12 * r.max(1.0) && below > 0.0 && above < 0.0, || {
            format!("r={r}: Q = {below:e}, {at:e}, {above:e}")
        })?;
    }
    Ok("L0 = 2πr".into())
}

fn cylinder_signs(cfg: &QuadratureConfig) -> Outcome {
    let mut crossings = 0;
    for i in 0..10 {
        let r = 0.1 + 0.2 * f64::from(i);
        for j in 0..10 {
            let l = 0.5 * 1.6f64.powi(j);
            let spec = CylinderSpec::new(r, l).map_err(e2s)?;
            let factor = 8.0 * PI * PI * r * r + l * l * (r * r - 2.0);
            let quad = cyl_soliton_q(&spec, cfg).map_err(e2s)?;
            let closed = cyl_soliton_q_closed(&spec);
            ensure(quad.signum() == factor.signum() && closed.signum() == factor.signum(), || {
                format!("r={r} L={l}: quadrature {quad:e}, closed {closed:e}, factor {factor:e}")
            })?;
        }
        if r < SQRT_2 {
            let l0 = cyl_soliton_critical_length(r).map_err(e2s)?.value;
            let q = |l: f64| cyl_soliton_q(&CylinderSpec::new(r, l).unwrap(), cfg).unwrap_or(f64::NAN);
            let rc = RootConfig {
                x_tol: 1e-9,
                max_iterations: 200,
            };
            let root = find_root(q, 0.5 * l0, 2.0 * l0, &rc).map_err(e2s)?;
            ensure((root - l0).abs() <= 1e-6, || format!("r={r}: zero at {root}, L0 = {l0}"))?;
            crossings += 1;
        }
    }
    Ok(format!("100 signs match, {crossings} zeros at L0 ± 1e-6"))
}

fn cylinder_alt(cfg: &QuadratureConfig) -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..10 {
        let r = 0.1 + 0.3 * f64::from(i);
        for j in 0..10 {
            let l = 0.05 * 1.9f64.powi(j);
            let spec = CylinderSpec::new(r, l).map_err(e2s)?;
            for variant in [AltVariant::HalfSinPlain, AltVariant::HalfSinDamped] {
                let closed = cyl_alt_q(&spec, variant);
                let quad = cyl_alt_q_quadrature(&spec, variant, cfg).map_err(e2s)?;
                worst = worst.max((closed - quad).abs() / closed);
                ensure(closed > 0.0 && (closed - quad).abs() <= 1e-9 * closed, || {
                    format!("{variant:?} r={r} L={l}: closed {closed:e}, quadrature {quad:e}")
                })?;
            }
        }
    }
    Ok(format!("100 pairs positive, max rel {worst:.1e}"))
}

fn probe_check(samples: usize, seed: u64, cfg: &QuadratureConfig) -> Outcome {
    let a = graph_stability_probe(0.5, 1.0, samples, seed, cfg).map_err(e2s)?;
    let b = graph_stability_probe(1.0, 0.9, samples, seed, cfg).map_err(e2s)?;
    ensure(a >= -1e-6 && b >= -1e-6, || format!("min Q = {a:e}, {b:e}"))?;
    Ok(format!("{samples} profiles: min Q = {a:.4} (λ=1/2, s0=1), {b:.4} (λ=1, s0=0.9)"))
}

fn eq1_components_finding(rep: &mut Reporter, cfg: &QuadratureConfig) -> Result<()> {
    let curve = make_curve(1.0)?;
    for s0 in [1.0, 2.0] {
        let piece = PieceSpec::symmetric(curve, s0, 10.0)?;
        let q = qform_profile(&piece, &TestProfile::Quadratic { s0 }, VP, cfg)?;
        let (g, c, m) = printed_eq1_components(s0);
        let closed = q_eq1_closed(s0, 10.0, VP)?;
        rep.info(
            "errata: λ = 1 component integrals",
            format!(
                "s0={s0}: printed (grad, curvature, mass) = ({g:.4}, {c:.4}, {m:.4}), quadrature = ({:.4}, {:.4}, {:.4}); assembled Q at L=10 closed {closed:.6} vs quadrature {:.6}",
                q.grad_term, q.curvature_term, q.mass_term, q.total
            ),
        )?;
    }
    Ok(())
}

fn cylinder_prefactor_finding(rep: &mut Reporter) -> Result<()> {
    let spec = CylinderSpec::new(1.0, 3.0)?;
    let cfg = QuadratureConfig::default();
    let quad = cyl_soliton_q(&spec, &cfg)?;
    let printed = cyl_soliton_q_printed(&spec);
    rep.info(
        "errata: cylinder prefactor",
        format!(
            "r=1 L=3: quadrature {quad:.6e}, printed form {printed:.6e}, ratio {:.6} = e^(-L); sign and L0 agree",
            printed / quad
        ),
    )
}
