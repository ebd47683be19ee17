//! Normalized radial wavefunctions
//!
//! ```text
//! R_nl(r) = N_nl e^(-2αβr) (1 - e^(-2αr))^(1+δ) P_n^(2β, 2δ+1)(1 - 2e^(-2αr))
//! ```
//!
//! `N_nl` comes from quadrature ([`normalization_quadrature`]). The printed
//! closed-form double sum is available as [`normalization_analytic`] for
//! comparison only.

use std::io::Write;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::jacobi::jacobi_unchecked;
use crate::potential::PotentialParams;
use crate::quadrature::{hybrid_edges, CompositeRule};
use crate::spectrum::{EnergyLevel, QuantumState};

pub const DEFAULT_SAMPLES: usize = 4000;
pub const DEFAULT_R_MIN: f64 = 1e-6;
pub const DEFAULT_QUADRATURE_POINTS: usize = 4096;
const GL_ORDER: usize = 16;
const MAX_TAIL: f64 = 1e-12;

/// Unnormalized `e^(-2αβr) (1-z)^(1+δ) P_n^(2β,2δ+1)(1-2z)`, `z = e^(-2αr)`.
fn shape(p: &PotentialParams, level: &EnergyLevel, r: f64) -> f64 {
    let two_ar = 2.0 * p.alpha * r;
    let z = (-two_ar).exp();
    let one_minus_z = -(-two_ar).exp_m1();
    let log_env = -two_ar * level.beta + (1.0 + level.delta) * one_minus_z.ln();
    let poly = jacobi_unchecked(2.0 * level.beta, 2.0 * level.delta + 1.0, level.state.n, 1.0 - 2.0 * z);
    log_env.exp() * poly
}

/// `max(30/(2αβ), 10/α)`: at least 30 e-folds of the exponential tail.
pub fn default_r_max(p: &PotentialParams, level: &EnergyLevel) -> f64 {
    (30.0 / (2.0 * p.alpha * level.beta)).max(10.0 / p.alpha)
}

fn quadrature_edges(r_max: f64, n_points: usize) -> Vec<f64> {
    let panels = (n_points / GL_ORDER).max(2);
    hybrid_edges(DEFAULT_R_MIN, 0.05 * r_max, r_max, panels)
}

/// `∫₀^r_max shape² dr` by composite Gauss–Legendre with about `n_points` nodes.
fn shape_norm_sq(p: &PotentialParams, level: &EnergyLevel, r_max: f64, n_points: usize) -> f64 {
    let rule = CompositeRule::new(GL_ORDER);
    rule.integrate_panels(&quadrature_edges(r_max, n_points), |r| {
        if r <= 0.0 {
            0.0
        } else {
            shape(p, level, r).powi(2)
        }
    })
}

/// `N_nl = 1/√(∫ R² dr)` with the integral truncated at `r_max`.
pub fn normalization_quadrature(
    p: &PotentialParams,
    level: &EnergyLevel,
    r_max: f64,
    n_points: usize,
) -> Result<f64> {
    level.require_bound()?;
    if n_points < 1000 {
        return Err(Error::InsufficientSampling(format!(
            "normalization needs at least 1000 quadrature points, got {n_points}"
        )));
    }
    let tail = (-2.0 * p.alpha * level.beta * r_max).exp();
    if !(tail < MAX_TAIL) {
        return Err(Error::TailTooLarge { r_max, tail });
    }
    let integral = shape_norm_sq(p, level, r_max, n_points);
    if !(integral.is_finite() && integral > 0.0) {
        return Err(Error::Domain(format!("norm integral is {integral}")));
    }
    Ok(integral.sqrt().recip())
}

/// The signed double sum `s(n)`, evaluated term by term in log space.
pub fn normalization_sum(p: &PotentialParams, level: &EnergyLevel) -> f64 {
    let n = level.state.n as i64;
    let (b2, d2) = (2.0 * level.beta, 2.0 * level.delta);
    let nf = n as f64;
    let ln_fact = |k: i64| ln_gamma(k as f64 + 1.0);

    let log_pre = ln_gamma(nf + d2 + 2.0) + 2.0 * ln_gamma(nf + b2 + 1.0) - ln_gamma(nf + b2 + d2 + 2.0)
        - (2.0 * p.alpha).ln();
    let mut terms = Vec::with_capacity(((n + 1) * (n + 1)) as usize);
    for pi in 0..=n {
        for ri in 0..=n {
            let (pf, rf) = (pi as f64, ri as f64);
            let log_mag = ln_gamma(nf + b2 + rf - pf + 1.0) + (pf + d2 + 2.0).ln()
                - ln_fact(pi)
                - ln_fact(ri)
                - ln_fact(n - pi)
                - ln_fact(n - ri)
                - ln_gamma(nf + b2 - pf + 1.0)
                - ln_gamma(b2 + rf + 1.0)
                - (nf + b2 + rf + d2 + 2.0).ln();
            let sign = if (pi + ri + n) % 2 == 0 { 1.0 } else { -1.0 };
            terms.push((sign, log_pre + log_mag));
        }
    }
    let peak = terms.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
    let scaled: f64 = terms.iter().map(|(s, l)| s * (l - peak).exp()).sum();
    scaled * peak.exp()
}

/// `N_nl = 1/√s(n)` from the printed closed-form sum.
pub fn normalization_analytic(p: &PotentialParams, level: &EnergyLevel) -> Result<f64> {
    level.require_bound()?;
    let s = normalization_sum(p, level);
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("normalization sum s(n) = {s} is not positive")));
    }
    Ok(s.sqrt().recip())
}

/// A bound level together with its quadrature normalization.
#[derive(Debug, Clone, Copy)]
pub struct RadialWavefunction {
    pub params: PotentialParams,
    pub level: EnergyLevel,
    pub norm_constant: f64,
}

impl RadialWavefunction {
    pub fn new(p: &PotentialParams, level: &EnergyLevel) -> Result<Self> {
        let norm = normalization_quadrature(p, level, default_r_max(p, level), DEFAULT_QUADRATURE_POINTS)?;
        Ok(Self {
            params: *p,
            level: *level,
            norm_constant: norm,
        })
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("radius must be positive, got {r}")));
        }
        Ok(self.norm_constant * shape(&self.params, &self.level, r))
    }

    pub fn sample(&self, grid: &[f64]) -> Vec<(f64, f64)> {
        grid.iter()
            .map(|&r| (r, self.norm_constant * shape(&self.params, &self.level, r)))
            .collect()
    }
}

/// `R_nl(r)` for a bound level. Normalizes on every call, so prefer
/// [`RadialWavefunction`] for repeated evaluation.
pub fn radial_wavefunction(p: &PotentialParams, level: &EnergyLevel, r: f64) -> Result<f64> {
    RadialWavefunction::new(p, level)?.value(r)
}

/// Geometric spacing on `[r_min, 0.05 r_max]`, uniform on the rest;
/// `n_points` in total, half in each part.
pub fn sample_grid(r_min: f64, r_max: f64, n_points: usize) -> Vec<f64> {
    let n_points = n_points.max(4);
    let r_switch = 0.05 * r_max;
    let geo = n_points / 2;
    let uni = n_points - geo;
    let ratio = (r_switch / r_min).powf(1.0 / geo as f64);
    let mut grid: Vec<f64> = (0..geo).map(|i| r_min * ratio.powi(i as i32)).collect();
    let h = (r_max - r_switch) / (uni - 1) as f64;
    grid.extend((0..uni).map(|i| r_switch + i as f64 * h));
    grid
}

/// Interior sign changes of a sampled function. Samples smaller than
/// `1e-12` of the peak count as zero and never open or close a node.
pub fn count_nodes(samples: &[(f64, f64)]) -> Result<usize> {
    if samples.len() < 100 {
        return Err(Error::InsufficientSampling(format!(
            "need at least 100 samples, got {}",
            samples.len()
        )));
    }
    if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(Error::InsufficientSampling("samples must be strictly increasing in r".into()));
    }
    let peak = samples.iter().map(|s| s.1.abs()).fold(0.0, f64::max);
    let floor = 1e-12 * peak;

    let mut crossings = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for &(r, v) in samples {
        if v.abs() <= floor {
            continue;
        }
        if let Some((r_prev, v_prev)) = last {
            if (v < 0.0) != (v_prev < 0.0) {
                crossings.push(0.5 * (r + r_prev));
            }
        }
        last = Some((r, v));
    }

    if crossings.len() >= 2 {
        let min_gap = crossings.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        let (lo, hi) = (crossings[0], *crossings.last().unwrap());
        let max_step = samples
            .windows(2)
            .filter(|w| w[1].0 >= lo && w[0].0 <= hi)
            .map(|w| w[1].0 - w[0].0)
            .fold(0.0, f64::max);
        if max_step > 0.25 * min_gap {
            return Err(Error::InsufficientSampling(format!(
                "sample spacing {max_step} exceeds a quarter of the node spacing {min_gap}"
            )));
        }
    }
    Ok(crossings.len())
}

/// A sampled, normalized radial state.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadialSolution {
    pub state: QuantumState,
    pub level: EnergyLevel,
    pub norm_constant: f64,
    pub samples: Vec<(f64, f64)>,
    pub node_count: usize,
}

impl RadialSolution {
    /// Samples on the default grid: 4000 points on `[1e-6, default_r_max]`.
    pub fn compute(p: &PotentialParams, level: &EnergyLevel) -> Result<Self> {
        let wf = RadialWavefunction::new(p, level)?;
        let grid = sample_grid(DEFAULT_R_MIN, default_r_max(p, level), DEFAULT_SAMPLES);
        let samples = wf.sample(&grid);
        let node_count = count_nodes(&samples)?;
        Ok(Self {
            state: level.state,
            level: *level,
            norm_constant: wf.norm_constant,
            samples,
            node_count,
        })
    }

    pub fn peak_amplitude(&self) -> f64 {
        self.samples.iter().map(|s| s.1.abs()).fold(0.0, f64::max)
    }

    /// `r,R` CSV with shortest round-trip decimals.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "r,R")?;
        for &(r, v) in &self.samples {
            writeln!(out, "{r:?},{v:?}")?;
        }
        Ok(())
    }
}

/// `∫ R_a R_b dr` of two normalized states of the same potential, each with
/// its own `(β, δ)`. A diagnostic only; the approximation does not make
/// these orthogonal.
pub fn overlap(a: &RadialWavefunction, b: &RadialWavefunction) -> f64 {
    let r_max = default_r_max(&a.params, &a.level).max(default_r_max(&b.params, &b.level));
    let rule = CompositeRule::new(GL_ORDER);
    rule.integrate_panels(&quadrature_edges(r_max, DEFAULT_QUADRATURE_POINTS), |r| {
        if r <= 0.0 {
            0.0
        } else {
            a.norm_constant * b.norm_constant * shape(&a.params, &a.level, r) * shape(&b.params, &b.level, r)
        }
    })
}
