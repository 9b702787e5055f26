//! Base curves of cylindrical translating λ-solitons.
//!
//! With density vector `e3` and rulings along `e2`, the surface is
//! `Ψ(s, t) = (α1(s), t, α3(s))` where `α` is an arc-length curve solving
//! `κ(s) = α1'(s) + λ`. The solutions come in three closed-form families
//! depending on whether `λ` is above, equal to or below one. Everything is
//! written in terms of the weight `W(s) = e^{α3(s)}`:
//!
//! | case  | `W(s)`          | `κ(s)`           |
//! |-------|-----------------|------------------|
//! | λ > 1 | `λ − cos ωs`    | `(λ² − 1) / W`   |
//! | λ = 1 | `1 + s²`        | `2 / W`          |
//! | λ < 1 | `cosh ωs − λ`   | `(1 − λ²) / W`   |
//!
//! with `ω = √|λ² − 1|`.

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("unsupported soliton constant λ = {0}")]
    UnsupportedLambda(f64),
    #[error("operation requires the {expected} case, curve has λ = {lambda}")]
    WrongCase { expected: SolitonCase, lambda: f64 },
}

/// Values of λ this close to one (but not equal) are rejected: `ω → 0`
/// makes the period and graph bound blow up.
pub const LAMBDA_ONE_EXCLUSION: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolitonCase {
    GreaterThanOne,
    EqualOne,
    LessThanOne,
}

impl std::fmt::Display for SolitonCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolitonCase::GreaterThanOne => "λ > 1",
            SolitonCase::EqualOne => "λ = 1",
            SolitonCase::LessThanOne => "λ < 1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileCurve {
    lambda: f64,
    case: SolitonCase,
    omega: f64,
}

/// Everything known about the curve at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub s: f64,
    pub x1: f64,
    pub x3: f64,
    pub dx1: f64,
    pub dx3: f64,
    pub kappa: f64,
    pub weight: f64,
}

impl ProfileCurve {
    pub fn new(lambda: f64) -> Result<Self, CurveError> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(CurveError::UnsupportedLambda(lambda));
        }
        let case = if lambda == 1.0 {
            SolitonCase::EqualOne
        } else if (lambda - 1.0).abs() <= LAMBDA_ONE_EXCLUSION {
            return Err(CurveError::UnsupportedLambda(lambda));
        } else if lambda > 1.0 {
            SolitonCase::GreaterThanOne
        } else {
            SolitonCase::LessThanOne
        };
        // (λ-1)(λ+1) is exact-er than λ²-1 for λ near 1.
        let omega = ((lambda - 1.0) * (lambda + 1.0)).abs().sqrt();
        Ok(Self {
            lambda,
            case,
            omega,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn case(&self) -> SolitonCase {
        self.case
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `(α1(s), α3(s))`.
    pub fn position(&self, s: f64) -> (f64, f64) {
        let lambda = self.lambda;
        let w = self.omega;
        match self.case {
            SolitonCase::GreaterThanOne => {
                let c = ((lambda + 1.0) / (lambda - 1.0)).sqrt();
                let x1 = -lambda * s + 2.0 * unwrapped_atan_tan(c, 0.5 * w * s);
                (x1, self.weight(s).ln())
            }
            SolitonCase::EqualOne => (-s + 2.0 * s.atan(), s.mul_add(s, 1.0).ln()),
            SolitonCase::LessThanOne => {
                let c = ((1.0 + lambda) / (1.0 - lambda)).sqrt();
                let x1 = -lambda * s + 2.0 * (c * (0.5 * w * s).tanh()).atan();
                // ln(cosh x − λ) = |x| − ln 2 + ln(1 + e^{−2|x|} − 2λe^{−|x|})
                let x = (w * s).abs();
                let e = (-x).exp();
                let x3 = x - std::f64::consts::LN_2 + (e * e - 2.0 * lambda * e).ln_1p();
                (x1, x3)
            }
        }
    }

    /// Unit tangent `(α1'(s), α3'(s))`.
    pub fn tangent(&self, s: f64) -> (f64, f64) {
        let lambda = self.lambda;
        let w = self.omega;
        let weight = self.weight(s);
        match self.case {
            SolitonCase::GreaterThanOne => {
                let (sn, cs) = (w * s).sin_cos();
                ((lambda * cs - 1.0) / weight, w * sn / weight)
            }
            SolitonCase::EqualOne => ((1.0 - s * s) / weight, 2.0 * s / weight),
            SolitonCase::LessThanOne => {
                let x = w * s;
                ((1.0 - lambda * x.cosh()) / weight, w * x.sinh() / weight)
            }
        }
    }

    /// Unit normal `n = (−α3', α1')`, which is also the Gauss map of the surface.
    pub fn normal(&self, s: f64) -> (f64, f64) {
        let (dx1, dx3) = self.tangent(s);
        (-dx3, dx1)
    }

    pub fn curvature(&self, s: f64) -> f64 {
        let weight = self.weight(s);
        match self.case {
            SolitonCase::EqualOne => 2.0 / weight,
            // ω² from (λ−1)(λ+1) directly; squaring the rounded ω loses an ulp
            _ => ((self.lambda - 1.0) * (self.lambda + 1.0)).abs() / weight,
        }
    }

    /// `e^{α3(s)}`, the weighted area density of the surface.
    pub fn weight(&self, s: f64) -> f64 {
        let lambda = self.lambda;
        match self.case {
            // λ − cos ωs = (λ − 1) + 2 sin²(ωs/2)
            SolitonCase::GreaterThanOne => {
                let h = (0.5 * self.omega * s).sin();
                (lambda - 1.0) + 2.0 * h * h
            }
            SolitonCase::EqualOne => s.mul_add(s, 1.0),
            // cosh ωs − λ = (1 − λ) + 2 sinh²(ωs/2)
            SolitonCase::LessThanOne => {
                let h = (0.5 * self.omega * s).sinh();
                (1.0 - lambda) + 2.0 * h * h
            }
        }
    }

    /// `d/ds e^{α3(s)}`.
    pub fn weight_derivative(&self, s: f64) -> f64 {
        let w = self.omega;
        match self.case {
            SolitonCase::GreaterThanOne => w * (w * s).sin(),
            SolitonCase::EqualOne => 2.0 * s,
            SolitonCase::LessThanOne => w * (w * s).sinh(),
        }
    }

    pub fn sample(&self, s: f64) -> CurveSample {
        let (x1, x3) = self.position(s);
        let (dx1, dx3) = self.tangent(s);
        CurveSample {
            s,
            x1,
            x3,
            dx1,
            dx3,
            kappa: self.curvature(s),
            weight: self.weight(s),
        }
    }

    /// Parameter period `T = 2π/ω` of the λ > 1 curve.
    pub fn period(&self) -> Result<f64, CurveError> {
        self.require(SolitonCase::GreaterThanOne)?;
        Ok(2.0 * PI / self.omega)
    }

    /// `s0 = T/2 = π/ω`, the half-width of a fundamental piece.
    pub fn half_period(&self) -> Result<f64, CurveError> {
        Ok(0.5 * self.period()?)
    }

    /// Half-width `s1` of the parameter interval on which the λ < 1 curve
    /// is a graph over the `x1`-axis.
    pub fn graph_bound(&self) -> Result<f64, CurveError> {
        self.require(SolitonCase::LessThanOne)?;
        Ok((1.0 / self.lambda).acosh() / self.omega)
    }

    /// `κ(s) − (α1'(s) + λ)` with `α1'` taken by central differences of the
    /// closed-form position, so it exercises an independent route to the
    /// soliton equation.
    pub fn soliton_residual(&self, s: f64) -> f64 {
        const H: f64 = 1e-5;
        let dx1 = (self.position(s + H).0 - self.position(s - H).0) / (2.0 * H);
        self.curvature(s) - (dx1 + self.lambda)
    }

    fn require(&self, expected: SolitonCase) -> Result<(), CurveError> {
        if self.case == expected {
            Ok(())
        } else {
            Err(CurveError::WrongCase {
                expected,
                lambda: self.lambda,
            })
        }
    }
}

pub fn make_curve(lambda: f64) -> Result<ProfileCurve, CurveError> {
    ProfileCurve::new(lambda)
}

/// Continuous branch of `y ↦ atan(c·tan y)`, agreeing with it on
/// `(−π/2, π/2)` and advancing by π per half-turn of `y`.
///
/// For `c > 0` the branch stays within π/2 of `y`, so the wrap back onto it
/// is never ambiguous, even exactly at the poles of `tan`.
fn unwrapped_atan_tan(c: f64, y: f64) -> f64 {
    let (sn, cs) = y.sin_cos();
    let d = (c * sn).atan2(cs) - y;
    y + (d - 2.0 * PI * (d / (2.0 * PI)).round())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd<F: Fn(f64) -> f64>(f: F, s: f64) -> f64 {
        let h = 1e-5;
        (f(s + h) - f(s - h)) / (2.0 * h)
    }

    #[test]
    fn cases_and_frequency() {
        let c = make_curve(3.0).unwrap();
        assert_eq!(c.case(), SolitonCase::GreaterThanOne);
        assert!((c.omega() - 8f64.sqrt()).abs() < 1e-15);
        let c = make_curve(1.0).unwrap();
        assert_eq!(c.case(), SolitonCase::EqualOne);
        assert_eq!(c.omega(), 0.0);
        let c = make_curve(0.25).unwrap();
        assert_eq!(c.case(), SolitonCase::LessThanOne);
        assert!((c.omega() - 15f64.sqrt() / 4.0).abs() < 1e-15);
        assert!((c.omega() - 0.968_246).abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_lambda() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY, 1.0 + 1e-10, 1.0 - 5e-10] {
            assert!(matches!(make_curve(bad), Err(CurveError::UnsupportedLambda(_))), "{bad}");
        }
        assert!(make_curve(1.0 + 1e-8).is_ok());
    }

    #[test]
    fn omega_squared_matches() {
        for lambda in [0.1, 0.5, 0.99, 1.01, 2.0, 7.5] {
            let c = make_curve(lambda).unwrap();
            let rel = (c.omega() * c.omega() - (lambda * lambda - 1.0).abs()) / (lambda * lambda - 1.0).abs();
            assert!(rel.abs() < 1e-14);
        }
    }

    #[test]
    fn positions_at_symmetric_point() {
        assert_eq!(make_curve(1.0).unwrap().position(0.0), (0.0, 0.0));
        let (x1, x3) = make_curve(3.0).unwrap().position(0.0);
        assert_eq!(x1, 0.0);
        assert!((x3 - 2f64.ln()).abs() < 1e-15);
        let (x1, x3) = make_curve(0.25).unwrap().position(0.0);
        assert_eq!(x1, 0.0);
        assert!((x3 - 0.75f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn lt1_height_grows_linearly() {
        let c = make_curve(0.25).unwrap();
        let slope = (1.0 - 0.25f64 * 0.25).sqrt();
        for s in [30.0, 100.0, 500.0, 1000.0] {
            let (_, x3) = c.position(s);
            let (_, y3) = c.position(-s);
            assert_eq!(x3, y3);
            // x3 − |s|√(1−λ²) → −ln 2
            assert!((x3 - s * slope + std::f64::consts::LN_2).abs() < 1e-9, "s={s}");
        }
    }

    #[test]
    fn curvature_at_symmetric_point_is_lambda_plus_one() {
        assert!((make_curve(3.0).unwrap().curvature(0.0) - 4.0).abs() < 1e-15);
        assert_eq!(make_curve(1.0).unwrap().curvature(0.0), 2.0);
        assert!((make_curve(0.25).unwrap().curvature(0.0) - 1.25).abs() < 1e-15);
    }

    #[test]
    fn weights() {
        assert_eq!(make_curve(3.0).unwrap().weight(0.0), 2.0);
        assert_eq!(make_curve(1.0).unwrap().weight(1.0), 2.0);
        assert_eq!(make_curve(0.5).unwrap().weight(0.0), 0.5);
    }

    #[test]
    fn periods() {
        let c = make_curve(3.0).unwrap();
        assert!((c.period().unwrap() - 2.221_441_469_079_183).abs() < 1e-14);
        assert!((c.half_period().unwrap() - 1.110_720_734_539_591_5).abs() < 1e-14);
        let c = make_curve(2f64.sqrt()).unwrap();
        assert!((c.period().unwrap() - 2.0 * PI).abs() < 1e-12);
        assert!(matches!(make_curve(1.0).unwrap().period(), Err(CurveError::WrongCase { .. })));
        assert!(make_curve(0.5).unwrap().period().is_err());
    }

    #[test]
    fn graph_bounds() {
        let expected = [(0.25, 2.1311), (0.5, 1.5206), (0.75, 1.2024)];
        for (lambda, s1) in expected {
            let got = make_curve(lambda).unwrap().graph_bound().unwrap();
            assert!((got - s1).abs() < 5e-4, "λ={lambda}: {got}");
        }
        assert!(make_curve(1.0).unwrap().graph_bound().is_err());
        assert!(make_curve(3.0).unwrap().graph_bound().is_err());
    }

    #[test]
    fn graph_bound_is_where_dx1_vanishes() {
        // α is a graph over x1 exactly while α1' > 0
        for lambda in [0.25, 0.5, 0.75] {
            let c = make_curve(lambda).unwrap();
            let s1 = c.graph_bound().unwrap();
            assert!(c.tangent(s1).0.abs() < 1e-12);
            assert!(c.tangent(0.99 * s1).0 > 0.0);
            assert!(c.tangent(1.01 * s1).0 < 0.0);
        }
    }

    #[test]
    fn residual_examples() {
        assert!(make_curve(3.0).unwrap().soliton_residual(0.7).abs() < 1e-8);
        assert!(make_curve(1.0).unwrap().soliton_residual(-2.0).abs() < 1e-8);
        assert!(make_curve(0.5).unwrap().soliton_residual(3.0).abs() < 1e-8);
    }

    #[test]
    fn closed_forms_match_finite_differences() {
        // every closed-form derivative against differences of position
        for lambda in [0.25, 0.5, 0.75, 1.0, 1.5, 3.0] {
            let c = make_curve(lambda).unwrap();
            for i in -20..=20 {
                let s = 0.37 * f64::from(i);
                let (dx1, dx3) = c.tangent(s);
                assert!((fd(|u| c.position(u).0, s) - dx1).abs() < 1e-7);
                assert!((fd(|u| c.position(u).1, s) - dx3).abs() < 1e-7);
                assert!((fd(|u| c.weight(u), s) - c.weight_derivative(s)).abs() < 1e-6 * c.weight(s).max(1.0));
                // κ = θ' where tangent = (cos θ, sin θ): κ = dx1·dx3' − dx3·dx1'
                let kappa = dx1 * fd(|u| c.tangent(u).1, s) - dx3 * fd(|u| c.tangent(u).0, s);
                assert!((kappa - c.curvature(s)).abs() < 1e-7, "λ={lambda} s={s}");
            }
        }
    }

    #[test]
    fn normal_is_rotated_tangent() {
        let c = make_curve(0.5).unwrap();
        let (t1, t3) = c.tangent(0.8);
        let (n1, n3) = c.normal(0.8);
        assert!((t1 * n1 + t3 * n3).abs() < 1e-15);
        assert_eq!(n3, t1);
    }

    #[test]
    fn gt1_x1_is_continuous_at_branch_points() {
        let c = make_curve(3.0).unwrap();
        let w = c.omega();
        for k in -5..5 {
            let s = f64::from(2 * k + 1) * PI / w;
            let jump = c.position(s + 1e-12).0 - c.position(s - 1e-12).0;
            assert!(jump.abs() < 1e-9, "k={k} jump={jump}");
            let at = c.position(s).0;
            assert!((at - c.position(s - 1e-12).0).abs() < 1e-9);
        }
    }

    #[test]
    fn gt1_translation_over_one_period() {
        let c = make_curve(3.0).unwrap();
        let t = c.period().unwrap();
        let shift = c.position(t).0;
        assert!((shift - (-3.0 * t + 2.0 * PI)).abs() < 1e-12);
        for s in [-2.0, -0.3, 0.0, 0.9, 4.0] {
            let (a1, a3) = c.position(s);
            let (b1, b3) = c.position(s + t);
            assert!((b1 - a1 - shift).abs() < 1e-12);
            assert!((b3 - a3).abs() < 1e-12);
        }
    }
}
