use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::curve::ProfileCurve;

use super::Result;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A user supplied `f` together with its derivative.
#[derive(Clone)]
pub struct CustomProfile {
    f: ScalarFn,
    df: ScalarFn,
}

impl CustomProfile {
    pub fn new<F, D>(f: F, df: D) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            f: Arc::new(f),
            df: Arc::new(df),
        }
    }
}

impl fmt::Debug for CustomProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CustomProfile")
    }
}

/// Transversal factor `f(s)` of a separated test function.
///
/// The three built-in families carry a factor `e^{−α3/2}`, which cancels
/// the weight in `f² e^{α3}`.
#[derive(Debug, Clone)]
pub enum TestProfile {
    /// `sin(πs/(2s0) + (π/2)(1 − σ/s0)) e^{−α3/2}` on `[−s0 + σ, s0 + σ]`,
    /// `s0` the half period of a λ > 1 curve.
    FundamentalSine { sigma: f64 },
    /// `(s² − s0²) e^{−α3/2}` on `[−s0, s0]`.
    Quadratic { s0: f64 },
    /// `cos(πs/(2s0)) e^{−α3/2}` on `[−s0, s0]`.
    Cosine { s0: f64 },
    Custom(CustomProfile),
}

/// A profile with its curve-dependent constants resolved.
///
/// Evaluates `p = f·√W` and `q = f'·√W` so that the quadratic-form
/// integrands are `q²`, `κ²p²` and `p²`.
pub(crate) enum BoundProfile<'a> {
    Sine { k: f64, phase: f64 },
    Quadratic { s0: f64 },
    Custom(&'a CustomProfile),
}

impl TestProfile {
    pub(crate) fn bind(&self, curve: &ProfileCurve) -> Result<BoundProfile<'_>> {
        Ok(match self {
            TestProfile::FundamentalSine { sigma } => {
                let s0 = curve.half_period()?;
                BoundProfile::Sine {
                    k: PI / (2.0 * s0),
                    phase: 0.5 * PI * (1.0 - sigma / s0),
                }
            }
            TestProfile::Quadratic { s0 } => BoundProfile::Quadratic { s0: *s0 },
            TestProfile::Cosine { s0 } => BoundProfile::Sine {
                k: PI / (2.0 * s0),
                phase: 0.5 * PI,
            },
            TestProfile::Custom(c) => BoundProfile::Custom(c),
        })
    }

    /// `f(s)` on the given curve.
    pub fn value(&self, curve: &ProfileCurve, s: f64) -> Result<f64> {
        let bound = self.bind(curve)?;
        Ok(bound.value(curve, s))
    }
}

impl BoundProfile<'_> {
    pub(crate) fn value(&self, curve: &ProfileCurve, s: f64) -> f64 {
        match self {
            BoundProfile::Custom(c) => (c.f)(s),
            _ => self.amplitudes(curve, s).0 / curve.weight(s).sqrt(),
        }
    }

    pub(crate) fn amplitudes(&self, curve: &ProfileCurve, s: f64) -> (f64, f64) {
        let (h, dh) = match self {
            BoundProfile::Sine { k, phase } => {
                let (sn, cs) = (k * s + phase).sin_cos();
                (sn, k * cs)
            }
            BoundProfile::Quadratic { s0 } => ((s - s0) * (s + s0), 2.0 * s),
            BoundProfile::Custom(c) => {
                let root_w = curve.weight(s).sqrt();
                return ((c.f)(s) * root_w, (c.df)(s) * root_w);
            }
        };
        // f = h W^{-1/2}  ⇒  f'√W = h' − h W'/(2W)
        let w = curve.weight(s);
        (h, dh - 0.5 * h * curve.weight_derivative(s) / w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;

    #[test]
    fn builtin_families_vanish_at_their_endpoints() {
        let c = make_curve(3.0).unwrap();
        let s0 = c.half_period().unwrap();
        for sigma in [0.0, 0.3 * s0, s0] {
            let p = TestProfile::FundamentalSine { sigma };
            assert!(p.value(&c, -s0 + sigma).unwrap().abs() < 1e-12);
            assert!(p.value(&c, s0 + sigma).unwrap().abs() < 1e-12);
            assert!(p.value(&c, sigma).unwrap() > 0.0);
        }
        let c = make_curve(1.0).unwrap();
        let p = TestProfile::Quadratic { s0: 2.0 };
        assert_eq!(p.value(&c, 2.0).unwrap(), 0.0);
        assert_eq!(p.value(&c, -2.0).unwrap(), 0.0);
        let c = make_curve(0.25).unwrap();
        let p = TestProfile::Cosine { s0: 3.0 };
        assert!(p.value(&c, 3.0).unwrap().abs() < 1e-15);
        assert!(p.value(&c, -3.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn fundamental_sine_needs_periodic_curve() {
        let c = make_curve(0.5).unwrap();
        assert!(TestProfile::FundamentalSine { sigma: 0.0 }.value(&c, 0.0).is_err());
    }

    #[test]
    fn amplitudes_match_direct_derivative() {
        let c = make_curve(0.75).unwrap();
        let p = TestProfile::Cosine { s0: 4.0 };
        let b = p.bind(&c).unwrap();
        let h = 1e-6;
        for s in [-3.1, -0.4, 0.0, 1.7, 3.9] {
            let (pa, qa) = b.amplitudes(&c, s);
            let df = (b.value(&c, s + h) - b.value(&c, s - h)) / (2.0 * h);
            let root_w = c.weight(s).sqrt();
            assert!((pa - b.value(&c, s) * root_w).abs() < 1e-12);
            assert!((qa - df * root_w).abs() < 1e-7);
        }
    }
}
