//! Reference solver for the unapproximated radial equation
//!
//! ```text
//! u''(r) = (2μ/ħ²) [V(r) + ħ² l(l+1)/(2μr²) - E] u(r)
//! ```
//!
//! solved by Numerov integration from both ends with a matching point at the
//! outer classical turning point. Levels are isolated by counting nodes of the
//! outward solution and then refined on the sign of the Wronskian at the
//! matching point. Nothing here touches the centrifugal approximation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{potential_value, PotentialParams};
use crate::spectrum::QuantumState;

const RESCALE_ABOVE: f64 = 1e150;
const RESCALE_BY: f64 = 1e-150;
const INWARD_SEED: f64 = 1e-30;
const TAIL_EFOLDS: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShootingConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub n_grid: usize,
    pub energy_lo: f64,
    pub energy_hi: f64,
    pub energy_tol: f64,
    pub max_bisections: usize,
}

impl ShootingConfig {
    pub const DEFAULT_N_GRID: usize = 20_000;
    pub const DEFAULT_ENERGY_TOL: f64 = 1e-8;

    pub fn validate(&self) -> Result<()> {
        let ok = self.r_min > 0.0
            && self.r_max > self.r_min
            && self.n_grid >= 2000
            && self.energy_lo < self.energy_hi
            && self.energy_tol > 0.0
            && self.max_bisections > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("invalid shooting config {self:?}")))
        }
    }

    /// Bracket `[V_min + ε, V(∞) - ε]` and an outer radius giving
    /// `TAIL_EFOLDS` WKB e-folds of decay beyond the turning point of
    /// `energy_estimate`.
    pub fn auto(p: &PotentialParams, l: u32, energy_estimate: f64, n_grid: usize) -> Result<Self> {
        let r_min = 1e-6 / p.alpha;
        let asymptote = p.asymptote();
        let (_, v_min) = well_minimum(p, l)?;
        let eps = 1e-9 * (asymptote - v_min).abs().max(1.0);
        if v_min + eps >= asymptote - eps {
            return Err(Error::BracketFailure {
                lo: v_min,
                hi: asymptote,
                n: 0,
                nodes_at_hi: 0,
            });
        }
        let r_max = tail_radius(p, l, energy_estimate.min(asymptote - eps))?;
        Ok(Self {
            r_min,
            r_max,
            n_grid,
            energy_lo: v_min + eps,
            energy_hi: asymptote - eps,
            energy_tol: Self::DEFAULT_ENERGY_TOL,
            max_bisections: 200,
        })
    }

    /// Same configuration on a grid with twice as many steps.
    pub fn refined(&self) -> Self {
        Self {
            n_grid: 2 * self.n_grid - 1,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericLevel {
    pub state: QuantumState,
    pub energy: f64,
    pub node_count_at_solution: usize,
    pub matching_residual: f64,
    pub r_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    /// `r_m (u_out'/u_out - u_in'/u_in)` at the matching point.
    pub log_derivative_mismatch: f64,
    /// `u_out u_in' - u_out' u_in` with both solutions scaled to unit
    /// magnitude at the matching point; zero at an eigenvalue, and its sign
    /// changes across each one.
    pub wronskian: f64,
    /// Interior nodes of the outward solution on `(r_min, r_max)`.
    pub node_count: usize,
    pub matching_radius: f64,
}

/// `V(r) + ħ² l(l+1)/(2μr²)`.
pub fn effective_potential(p: &PotentialParams, l: u32, r: f64) -> Result<f64> {
    let v = potential_value(p, r)?;
    let lf = l as f64;
    Ok(v + p.hbar * p.hbar * lf * (lf + 1.0) / (2.0 * p.mu * r * r))
}

/// Location and value of the well bottom of `V_eff`, by golden-section search.
pub fn well_minimum(p: &PotentialParams, l: u32) -> Result<(f64, f64)> {
    // Coarse scan on a log grid, then golden-section refinement.
    let lo = 1e-4 / p.alpha;
    let hi = 50.0 / p.alpha;
    let steps = 2000;
    let ratio = (hi / lo).powf(1.0 / steps as f64);
    let mut best = (lo, effective_potential(p, l, lo)?);
    let mut r = lo;
    for _ in 0..steps {
        r *= ratio;
        let v = effective_potential(p, l, r)?;
        if v < best.1 {
            best = (r, v);
        }
    }
    let (mut a, mut b) = (best.0 / ratio, best.0 * ratio);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..100 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        if effective_potential(p, l, c)? < effective_potential(p, l, d)? {
            b = d;
        } else {
            a = c;
        }
    }
    let r_star = 0.5 * (a + b);
    Ok((r_star, effective_potential(p, l, r_star)?))
}

/// Outer radius with `TAIL_EFOLDS` WKB e-folds `∫ κ dr` beyond the outer
/// turning point of `energy`.
fn tail_radius(p: &PotentialParams, l: u32, energy: f64) -> Result<f64> {
    let asymptote = p.asymptote();
    if energy >= asymptote {
        return Err(Error::NoTurningPoint { energy, asymptote });
    }
    let (r_well, _) = well_minimum(p, l)?;
    let kappa = |r: f64| -> Result<f64> {
        let w = effective_potential(p, l, r)? - energy;
        Ok((2.0 * p.mu * w.max(0.0)).sqrt() / p.hbar)
    };
    let step = 0.01 / p.alpha;
    let mut r = r_well;
    while effective_potential(p, l, r)? < energy {
        r += step;
        if r > 1e4 / p.alpha {
            return Err(Error::NoTurningPoint { energy, asymptote });
        }
    }
    let mut efolds = 0.0;
    let mut k_prev = kappa(r)?;
    while efolds < TAIL_EFOLDS {
        let k = kappa(r + step)?;
        efolds += 0.5 * step * (k + k_prev);
        k_prev = k;
        r += step;
        if r > 1e4 / p.alpha {
            break;
        }
    }
    Ok(r)
}

/// Exponent `s` of the regular solution `u ∝ r^s` near the origin. The
/// potential behaves like `Dσ₀²/(αr)²` there, so
/// `s(s-1) = l(l+1) + 2μDσ₀²/(ħ²α²)`.
fn origin_exponent(p: &PotentialParams, l: u32) -> f64 {
    let lf = l as f64;
    let c = lf * (lf + 1.0) + 2.0 * p.mu * p.d * p.sigma0 * p.sigma0 / (p.hbar * p.alpha).powi(2);
    0.5 + (0.25 + c).sqrt()
}

struct Grid {
    r0: f64,
    h: f64,
    /// `(2μ/ħ²)(V_eff - E)` at each node.
    k: Vec<f64>,
}

impl Grid {
    fn r(&self, i: usize) -> f64 {
        self.r0 + i as f64 * self.h
    }

    fn len(&self) -> usize {
        self.k.len()
    }

    #[inline]
    fn f(&self, i: usize) -> f64 {
        1.0 - self.h * self.h * self.k[i] / 12.0
    }

    /// Outward Numerov sweep over the whole grid. Returns the solution and
    /// the number of interior sign changes.
    fn outward(&self, p: &PotentialParams, l: u32) -> (Vec<f64>, usize) {
        let n = self.len();
        let s = origin_exponent(p, l);
        let mut u = vec![0.0; n];
        // Numerov is only stable where h²k stays small; the regular solution
        // is negligible on the few points closer to the origin, so start past them.
        let h2 = self.h * self.h;
        let start = self.k.iter().position(|&k| h2 * k < 0.5).unwrap_or(0).min(n - 3);
        u[start] = 1e-200;
        u[start + 1] = 1e-200 * (self.r(start + 1) / self.r(start)).powf(s);
        let mut nodes = 0;
        for i in start + 1..n - 1 {
            let next = ((12.0 - 10.0 * self.f(i)) * u[i] - self.f(i - 1) * u[i - 1]) / self.f(i + 1);
            u[i + 1] = next;
            if next != 0.0 && u[i] != 0.0 && (next < 0.0) != (u[i] < 0.0) {
                nodes += 1;
            }
            if next.abs() > RESCALE_ABOVE {
                u[..=i + 1].iter_mut().for_each(|x| *x *= RESCALE_BY);
            }
        }
        (u, nodes)
    }

    /// Inward sweep from `r_max` down to index `stop - 1`.
    fn inward(&self, stop: usize) -> Vec<f64> {
        let n = self.len();
        let mut u = vec![0.0; n];
        let kappa = self.k[n - 1].max(0.0).sqrt();
        u[n - 1] = INWARD_SEED;
        u[n - 2] = INWARD_SEED * (kappa * self.h).exp();
        let lowest = stop.saturating_sub(1).max(1);
        for i in (lowest..n - 1).rev() {
            u[i - 1] = ((12.0 - 10.0 * self.f(i)) * u[i] - self.f(i + 1) * u[i + 1]) / self.f(i - 1);
            if u[i - 1].abs() > RESCALE_ABOVE {
                u[i - 1..].iter_mut().for_each(|x| *x *= RESCALE_BY);
            }
        }
        u
    }

    /// Last index where `V_eff ≤ E`, i.e. the outer classical turning point.
    fn turning_index(&self) -> Option<usize> {
        self.k.iter().rposition(|&k| k <= 0.0)
    }
}

/// `(2μ/ħ²) V_eff` tabulated once on the shooting grid; each trial energy
/// only shifts it.
struct Shooter<'a> {
    p: &'a PotentialParams,
    l: u32,
    r0: f64,
    h: f64,
    scale: f64,
    w: Vec<f64>,
}

impl<'a> Shooter<'a> {
    fn new(p: &'a PotentialParams, l: u32, cfg: &ShootingConfig) -> Result<Self> {
        cfg.validate()?;
        let h = (cfg.r_max - cfg.r_min) / (cfg.n_grid - 1) as f64;
        let scale = 2.0 * p.mu / (p.hbar * p.hbar);
        let w = (0..cfg.n_grid)
            .map(|i| effective_potential(p, l, cfg.r_min + i as f64 * h).map(|v| scale * v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            p,
            l,
            r0: cfg.r_min,
            h,
            scale,
            w,
        })
    }

    fn shoot(&self, energy: f64) -> Result<ShootingResult> {
        let asymptote = self.p.asymptote();
        if energy >= asymptote {
            return Err(Error::NoTurningPoint { energy, asymptote });
        }
        let shift = self.scale * energy;
        let grid = Grid {
            r0: self.r0,
            h: self.h,
            k: self.w.iter().map(|w| w - shift).collect(),
        };
        let n = grid.len();
        let (out, node_count) = grid.outward(self.p, self.l);

        // Below the well bottom there is no allowed region; match mid-grid.
        let m = grid.turning_index().unwrap_or(n / 2).clamp(2, n - 3);
        let inw = grid.inward(m);

        let (o_scale, i_scale) = (
            out[m].abs().max(f64::MIN_POSITIVE),
            inw[m].abs().max(f64::MIN_POSITIVE),
        );
        let (o, i) = (out[m] / o_scale, inw[m] / i_scale);
        let d_out = (out[m + 1] - out[m - 1]) / (2.0 * grid.h) / o_scale;
        let d_in = (inw[m + 1] - inw[m - 1]) / (2.0 * grid.h) / i_scale;
        let r_m = grid.r(m);

        Ok(ShootingResult {
            log_derivative_mismatch: r_m * (d_out / o - d_in / i),
            wronskian: r_m * (o * d_in - d_out * i),
            node_count,
            matching_radius: r_m,
        })
    }
}

/// One shooting pass at trial energy `energy`.
pub fn numerov_integrate(p: &PotentialParams, l: u32, energy: f64, cfg: &ShootingConfig) -> Result<ShootingResult> {
    Shooter::new(p, l, cfg)?.shoot(energy)
}

/// Node counts of the outward solution at `points` energies spread evenly
/// over the configured bracket.
pub fn scan_node_counts(p: &PotentialParams, l: u32, cfg: &ShootingConfig, points: usize) -> Result<Vec<(f64, usize)>> {
    let points = points.max(2);
    let shooter = Shooter::new(p, l, cfg)?;
    (0..points)
        .map(|i| {
            let e = cfg.energy_lo + (cfg.energy_hi - cfg.energy_lo) * i as f64 / (points - 1) as f64;
            shooter.shoot(e).map(|res| (e, res.node_count))
        })
        .collect()
}

/// Finds the level with `s.n` nodes inside `[energy_lo, energy_hi]`.
pub fn find_level(p: &PotentialParams, s: QuantumState, cfg: &ShootingConfig) -> Result<NumericLevel> {
    let shooter = Shooter::new(p, s.l, cfg)?;
    let target = s.n as usize;
    let nodes = |e: f64| shooter.shoot(e).map(|r| r.node_count);

    let (mut lo, mut hi) = (cfg.energy_lo, cfg.energy_hi);
    let nodes_lo = nodes(lo)?;
    let nodes_hi = nodes(hi)?;
    if nodes_lo > target || nodes_hi <= target {
        return Err(Error::BracketFailure {
            lo,
            hi,
            n: s.n,
            nodes_at_hi: nodes_hi,
        });
    }

    // Narrow until lo has `target` nodes and hi has exactly one more.
    let (mut n_lo, mut n_hi) = (nodes_lo, nodes_hi);
    let mut iterations = 0;
    while n_lo != target || n_hi != target + 1 {
        iterations += 1;
        if iterations > cfg.max_bisections {
            return Err(Error::NoConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        let c = nodes(mid)?;
        if c <= target {
            lo = mid;
            n_lo = c;
        } else {
            hi = mid;
            n_hi = c;
        }
    }

    let w_lo = shooter.shoot(lo)?.wronskian;
    while hi - lo > cfg.energy_tol {
        iterations += 1;
        if iterations > cfg.max_bisections {
            return Err(Error::NoConvergence { iterations });
        }
        let mid = 0.5 * (lo + hi);
        let w = shooter.shoot(mid)?.wronskian;
        if (w < 0.0) == (w_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let energy = 0.5 * (lo + hi);
    let at = shooter.shoot(energy)?;
    Ok(NumericLevel {
        state: s,
        energy,
        node_count_at_solution: nodes(lo)?,
        matching_residual: at.wronskian.abs(),
        r_max: cfg.r_max,
    })
}

/// Two-pass solve with automatic configuration: a first pass sizes the outer
/// radius from a provisional energy, the second pass settles the level.
pub fn solve_state(p: &PotentialParams, s: QuantumState, n_grid: usize) -> Result<NumericLevel> {
    solve_state_with(p, s, n_grid, |_| {})
}

/// [`solve_state`] with a hook applied to both passes' configurations,
/// e.g. to override the energy bracket or tolerance.
pub fn solve_state_with<F: Fn(&mut ShootingConfig)>(
    p: &PotentialParams,
    s: QuantumState,
    n_grid: usize,
    adjust: F,
) -> Result<NumericLevel> {
    let asymptote = p.asymptote();
    let (_, v_min) = well_minimum(p, s.l)?;
    let provisional = v_min + 0.95 * (asymptote - v_min);
    let mut cfg = ShootingConfig::auto(p, s.l, provisional, n_grid)?;
    adjust(&mut cfg);
    let first = find_level(p, s, &cfg)?;
    let mut cfg = ShootingConfig::auto(p, s.l, first.energy, n_grid)?;
    adjust(&mut cfg);
    find_level(p, s, &cfg)
}
