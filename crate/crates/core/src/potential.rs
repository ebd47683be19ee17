//! The hyperbolical potential and the shifted centrifugal approximation.
//!
//! ```text
//! V(r)   = D [1 - σ₀ coth(αr)]²
//! 1/r²  ≈ 4α² [c₀ + v + v²],      v = e^(-2αr) / (1 - e^(-2αr))
//! ```
//!
//! The shift `c₀` comes from matching `1/r²` to the exponential form at the
//! expansion radius `r₀ = γ / (2α)`. With `u = 1/(e^γ - 1)`:
//!
//! ```text
//! value:      γ² (c₀ + u + u²)          = 1
//! slope:      γ³ (u + 3u² + 2u³)        = 2
//! ```
//!
//! The slope condition is the same as `dc₀/dγ = 0` for
//! `c₀(γ) = 1/γ² - u - u²`, and `c₀(γ)` decreases monotonically from `1/12`,
//! so the slope condition has no positive root. [`solve_approx_constants`]
//! reports that as [`Error::NoRootBracketed`]. The tabulated constants are
//! available through [`ApproxConstants::published`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The expansion parameter `γ = 2αr₀` as tabulated in the literature.
pub const PUBLISHED_GAMMA: f64 = 0.4990429999;

/// The shift `c₀` as tabulated in the literature.
pub const PUBLISHED_C0: f64 = 0.0823058167837972;

const SCAN_LO: f64 = 0.05;
const SCAN_HI: f64 = 3.0;
const SCAN_STEP: f64 = 1e-3;
const BISECT_TOL: f64 = 1e-6;
const POLISH_TOL: f64 = 1e-14;
const MAX_ITERATIONS: usize = 200;

/// Physical inputs of the hyperbolical potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    /// Depth `D`.
    pub d: f64,
    /// Screening parameter `α` (inverse length).
    pub alpha: f64,
    /// Shape parameter `σ₀`.
    pub sigma0: f64,
    pub mu: f64,
    pub hbar: f64,
}

impl PotentialParams {
    pub fn new(d: f64, alpha: f64, sigma0: f64, mu: f64, hbar: f64) -> Result<Self> {
        let checks = [("D", d), ("alpha", alpha), ("sigma0", sigma0), ("mu", mu), ("hbar", hbar)];
        for (name, value) in checks {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        Ok(Self {
            d,
            alpha,
            sigma0,
            mu,
            hbar,
        })
    }

    /// Atomic units, `ħ = μ = 1`.
    pub fn atomic(d: f64, alpha: f64, sigma0: f64) -> Result<Self> {
        Self::new(d, alpha, sigma0, 1.0, 1.0)
    }

    /// Continuum threshold `V(∞) = D (1 - σ₀)²`.
    pub fn asymptote(&self) -> f64 {
        self.d * (1.0 - self.sigma0).powi(2)
    }

    /// Energy scale `2α²ħ²/μ` that converts the dimensionless spectrum.
    pub fn energy_scale(&self) -> f64 {
        2.0 * self.alpha * self.alpha * self.hbar * self.hbar / self.mu
    }

    pub fn with_sigma0(self, sigma0: f64) -> Result<Self> {
        Self::new(self.d, self.alpha, sigma0, self.mu, self.hbar)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("radius must be positive, got {r}")))
    }
}

/// `V(r) = D [1 - σ₀ coth(αr)]²`. Diverges to `+∞` as `r → 0⁺` when
/// `σ₀ > 0` and tends to `D (1 - σ₀)²` as `r → ∞`.
pub fn potential_value(p: &PotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let bracket = 1.0 - p.sigma0 / (p.alpha * r).tanh();
    Ok(p.d * bracket * bracket)
}

/// `v = e^(-2αr) / (1 - e^(-2αr)) = 1 / (e^(2αr) - 1)`.
#[inline]
pub(crate) fn exp_ratio(alpha: f64, r: f64) -> f64 {
    (2.0 * alpha * r).exp_m1().recip()
}

/// `1/(e^γ - 1)`, the per-γ building block of the matching conditions.
#[inline]
fn u_of(gamma: f64) -> f64 {
    gamma.exp_m1().recip()
}

/// `c₀(γ) = 1/γ² - u - u²`.
pub fn shift_for_gamma(gamma: f64) -> f64 {
    let u = u_of(gamma);
    1.0 / (gamma * gamma) - u - u * u
}

/// Residual of the value condition, `γ² (c₀ + u + u²) - 1`.
pub fn value_condition(gamma: f64, c0: f64) -> f64 {
    let u = u_of(gamma);
    gamma * gamma * (c0 + u + u * u) - 1.0
}

/// Residual of the slope condition, `γ³ (u + 3u² + 2u³) - 2`.
pub fn slope_condition(gamma: f64) -> f64 {
    let u = u_of(gamma);
    gamma.powi(3) * (u + 3.0 * u * u + 2.0 * u.powi(3)) - 2.0
}

fn slope_condition_derivative(gamma: f64) -> f64 {
    let u = u_of(gamma);
    let w = u + 3.0 * u * u + 2.0 * u.powi(3);
    let dw_du = 1.0 + 6.0 * u + 6.0 * u * u;
    let du_dgamma = -u * (1.0 + u);
    3.0 * gamma * gamma * w + gamma.powi(3) * dw_du * du_dgamma
}

/// The pair `(γ, c₀)` together with the residuals of both matching conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxConstants {
    pub gamma: f64,
    pub c0: f64,
    pub residual_first: f64,
    pub residual_second: f64,
}

impl ApproxConstants {
    /// Builds the constants for a given `γ`; `c₀` follows from the value
    /// condition, so `residual_first` vanishes up to rounding.
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma must be positive, got {gamma}"
            )));
        }
        let c0 = shift_for_gamma(gamma);
        Ok(Self {
            gamma,
            c0,
            residual_first: value_condition(gamma, c0),
            residual_second: slope_condition(gamma),
        })
    }

    /// Constants built from the tabulated `γ = 0.4990429999`.
    pub fn published() -> Self {
        Self::from_gamma(PUBLISHED_GAMMA).expect("published gamma is positive")
    }

    /// The conventional approximation, recovered with `c₀ = 0`.
    pub fn unshifted() -> Self {
        Self {
            gamma: f64::NAN,
            c0: 0.0,
            residual_first: f64::NAN,
            residual_second: f64::NAN,
        }
    }

    /// Expansion radius `r₀ = γ / (2α)`.
    pub fn expansion_radius(&self, alpha: f64) -> f64 {
        self.gamma / (2.0 * alpha)
    }
}

/// Bracket a sign change of `f` by a uniform scan, bisect, then finish with
/// Newton steps. Newton steps that leave the bracket fall back to bisection.
pub(crate) fn bracket_bisect_polish<F, G>(
    f: F,
    df: G,
    lo: f64,
    hi: f64,
    step: f64,
    tolerance: f64,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let (mut a, mut b) = scan_for_sign_change(&f, lo, hi, step)
        .into_iter()
        .next()
        .ok_or(Error::NoRootBracketed { lo, hi })?;
    let mut fa = f(a);

    let mut iterations = 0;
    while b - a > BISECT_TOL {
        iterations += 1;
        if iterations > MAX_ITERATIONS {
            return Err(Error::NoConvergence { iterations });
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }

    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_ITERATIONS {
        let fx = f(x);
        if fx.abs() <= tolerance {
            return Ok(x);
        }
        let slope = df(x);
        let mut next = x - fx / slope;
        if !next.is_finite() || next <= a || next >= b {
            next = 0.5 * (a + b);
        }
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        if (next - x).abs() <= POLISH_TOL * x.abs().max(1.0) {
            return if f(next).abs() <= tolerance {
                Ok(next)
            } else {
                // Stalled at the rounding floor above the requested tolerance.
                Err(Error::NoConvergence {
                    iterations: MAX_ITERATIONS,
                })
            };
        }
        x = next;
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// All sub-intervals `[x, x + step]` of `[lo, hi]` on which `f` changes sign.
pub fn scan_for_sign_change<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, step: f64) -> Vec<(f64, f64)> {
    let count = ((hi - lo) / step).ceil() as usize;
    let mut out = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..=count {
        let x = (lo + i as f64 * step).min(hi);
        let fx = f(x);
        if f_prev == 0.0 || (fx < 0.0) != (f_prev < 0.0) {
            out.push((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    out
}

/// Solves the slope condition for `γ` and derives `c₀`.
///
/// The slope condition has no positive root (see the module docs), so for the
/// scan window `[0.05, 3]` this returns [`Error::NoRootBracketed`].
pub fn solve_approx_constants(tolerance: f64) -> Result<ApproxConstants> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let gamma = bracket_bisect_polish(
        slope_condition,
        slope_condition_derivative,
        SCAN_LO,
        SCAN_HI,
        SCAN_STEP,
        tolerance,
    )?;
    ApproxConstants::from_gamma(gamma)
}

/// Solves the value condition for `γ` at a prescribed shift `c₀`, i.e. the
/// inverse of [`shift_for_gamma`].
pub fn gamma_for_shift(c0: f64, tolerance: f64) -> Result<f64> {
    if !(tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let f = |g: f64| shift_for_gamma(g) - c0;
    let df = |g: f64| {
        let u = u_of(g);
        -2.0 / g.powi(3) + u + 3.0 * u * u + 2.0 * u.powi(3)
    };
    bracket_bisect_polish(f, df, SCAN_LO, SCAN_HI, SCAN_STEP, tolerance)
}

/// `4α² [c₀ + v + v²]` with `v = 1/(e^(2αr) - 1)`.
pub fn centrifugal_approx(alpha: f64, c0: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let v = exp_ratio(alpha, r);
    Ok(4.0 * alpha * alpha * (c0 + v + v * v))
}

/// `|approx - 1/r²| · r²`.
pub fn approx_relative_error(alpha: f64, c0: f64, r: f64) -> Result<f64> {
    let approx = centrifugal_approx(alpha, c0, r)?;
    Ok((approx * r * r - 1.0).abs())
}
