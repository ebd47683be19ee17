//! Closed-form bound-state spectrum.
//!
//! With `ν = μD/(2α²ħ²)` and the approximated centrifugal term, the radial
//! equation reduces to hypergeometric form in `z = e^(-2αr)`. The spectrum is
//!
//! ```text
//! δ = ½ [-1 + √(16νσ₀² + (1+2l)²)]
//! β = -[(n+1)² + l(l+1) + (2n+1)δ - 4νσ₀(1-σ₀)] / [2(n+δ+1)]
//! E = D(1-σ₀)² + (2α²ħ²/μ) l(l+1) c₀ - (2α²ħ²/μ) β²
//! ```
//!
//! A level is reported as bound when `β > 0`, which is what makes the factor
//! `e^(-2αβr)` of the wavefunction decay.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{ApproxConstants, PotentialParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumState {
    /// Radial quantum number (number of interior nodes).
    pub n: u32,
    /// Orbital angular momentum.
    pub l: u32,
}

impl QuantumState {
    pub const fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    fn l_factor(&self) -> f64 {
        let l = self.l as f64;
        l * (l + 1.0)
    }
}

/// Dimensionless parameters of one `(n, l)` state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralParams {
    pub nu: f64,
    pub delta: f64,
    pub beta: f64,
    /// `ΔE_l = l(l+1) c₀`.
    pub delta_e_l: f64,
    /// `ε'² = -μE/(2α²ħ²) + ΔE_l`.
    pub eps_prime_sq: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub state: QuantumState,
    pub energy: f64,
    pub beta: f64,
    pub delta: f64,
    pub is_bound: bool,
}

impl EnergyLevel {
    fn new(state: QuantumState, energy: f64, beta: f64, delta: f64) -> Self {
        Self {
            state,
            energy,
            beta,
            delta,
            is_bound: beta > 0.0,
        }
    }

    pub fn require_bound(&self) -> Result<&Self> {
        if self.is_bound {
            Ok(self)
        } else {
            Err(Error::Unbound {
                n: self.state.n,
                l: self.state.l,
                beta: self.beta,
            })
        }
    }
}

/// `ν = μD/(2α²ħ²)`.
pub fn compute_nu(p: &PotentialParams) -> f64 {
    p.mu * p.d / (2.0 * p.alpha * p.alpha * p.hbar * p.hbar)
}

/// `δ = ½ [-1 + √(16νσ₀² + (1+2l)²)]`.
pub fn compute_delta(p: &PotentialParams, l: u32) -> f64 {
    let nu = compute_nu(p);
    let two_l1 = 2.0 * l as f64 + 1.0;
    0.5 * (-1.0 + (16.0 * nu * p.sigma0 * p.sigma0 + two_l1 * two_l1).sqrt())
}

fn beta_from(nu: f64, sigma0: f64, s: QuantumState, delta: f64) -> f64 {
    let n = s.n as f64;
    let numerator =
        (n + 1.0).powi(2) + s.l_factor() + (2.0 * n + 1.0) * delta - 4.0 * nu * sigma0 * (1.0 - sigma0);
    -numerator / (2.0 * (n + delta + 1.0))
}

/// The decay exponent `β`. A non-positive value means the state is not bound.
///
/// `β` does not depend on `c₀`; the constants enter only through the energy.
pub fn compute_beta(p: &PotentialParams, s: QuantumState, _c: &ApproxConstants) -> f64 {
    beta_from(compute_nu(p), p.sigma0, s, compute_delta(p, s.l))
}

/// Full set of dimensionless parameters for one state.
pub fn spectral_params(p: &PotentialParams, s: QuantumState, c: &ApproxConstants) -> SpectralParams {
    let nu = compute_nu(p);
    let delta = compute_delta(p, s.l);
    let beta = beta_from(nu, p.sigma0, s, delta);
    let delta_e_l = s.l_factor() * c.c0;
    let energy = level_energy(p, s, c, beta);
    SpectralParams {
        nu,
        delta,
        beta,
        delta_e_l,
        eps_prime_sq: -p.mu * energy / (2.0 * p.alpha * p.alpha * p.hbar * p.hbar) + delta_e_l,
    }
}

fn level_energy(p: &PotentialParams, s: QuantumState, c: &ApproxConstants, beta: f64) -> f64 {
    let scale = p.energy_scale();
    p.asymptote() + scale * s.l_factor() * c.c0 - scale * beta * beta
}

/// Closed-form energy of the `(n, l)` level.
pub fn energy_level(p: &PotentialParams, s: QuantumState, c: &ApproxConstants) -> EnergyLevel {
    let delta = compute_delta(p, s.l);
    let beta = beta_from(compute_nu(p), p.sigma0, s, delta);
    EnergyLevel::new(s, level_energy(p, s, c, beta), beta, delta)
}

/// `β` recovered from an energy through `β² = ε'² + ν(1-σ₀)²`. Returns NaN
/// when the right-hand side is negative.
pub fn beta_from_energy(p: &PotentialParams, s: QuantumState, c: &ApproxConstants, energy: f64) -> f64 {
    let nu = compute_nu(p);
    let eps_sq = -p.mu * energy / (2.0 * p.alpha * p.alpha * p.hbar * p.hbar) + s.l_factor() * c.c0;
    (eps_sq + nu * (1.0 - p.sigma0).powi(2)).sqrt()
}

/// s-wave (`l = 0`) spectrum, written without the centrifugal machinery:
///
/// ```text
/// δ₁ = ½ [-1 + √(1 + 8μDσ₀²/(α²ħ²))]
/// E_n = D(1-σ₀)² - (2α²ħ²/μ) [((n+1)² + (2n+1)δ₁ - 4νσ₀(1-σ₀)) / (2(n+δ₁+1))]²
/// ```
pub fn s_wave_energy(p: &PotentialParams, n: u32) -> EnergyLevel {
    let nu = compute_nu(p);
    let s0 = p.sigma0;
    let delta1 = 0.5 * (-1.0 + (1.0 + 8.0 * p.mu * p.d * s0 * s0 / (p.alpha * p.alpha * p.hbar * p.hbar)).sqrt());
    let nf = n as f64;
    let beta1 = -((nf + 1.0).powi(2) + (2.0 * nf + 1.0) * delta1 - 4.0 * nu * s0 * (1.0 - s0))
        / (2.0 * (nf + delta1 + 1.0));
    let energy = p.asymptote() - p.energy_scale() * beta1 * beta1;
    EnergyLevel::new(QuantumState::new(n, 0), energy, beta1, delta1)
}

/// Spectrum of the `σ₀ = 1` potential `4D e^(-4αr) / (1 - e^(-2αr))²`:
///
/// ```text
/// δ₂ = ½ [-1 + √(8μD/(α²ħ²) + (1+2l)²)]
/// E = (2α²ħ²/μ) l(l+1) c₀ - (2α²ħ²/μ) [((n+1)² + l(l+1) + (2n+1)δ₂) / (2(n+δ₂+1))]²
/// ```
///
/// With `σ₀ = 1` the bracket is non-negative, so `β₂ = -bracket ≤ 0` and no
/// level of this potential is bound.
pub fn sigma1_energy(p: &PotentialParams, s: QuantumState, c: &ApproxConstants) -> Result<EnergyLevel> {
    if p.sigma0 != 1.0 {
        return Err(Error::InvalidParameter(format!(
            "sigma1_energy requires sigma0 = 1, got {}",
            p.sigma0
        )));
    }
    let two_l1 = 2.0 * s.l as f64 + 1.0;
    let delta2 = 0.5 * (-1.0 + (8.0 * p.mu * p.d / (p.alpha * p.alpha * p.hbar * p.hbar) + two_l1 * two_l1).sqrt());
    let nf = s.n as f64;
    let bracket = ((nf + 1.0).powi(2) + s.l_factor() + (2.0 * nf + 1.0) * delta2) / (2.0 * (nf + delta2 + 1.0));
    let scale = p.energy_scale();
    let energy = scale * s.l_factor() * c.c0 - scale * bracket * bracket;
    Ok(EnergyLevel::new(s, energy, -bracket, delta2))
}

/// All bound levels of angular momentum `l`, in increasing `n`.
pub fn bound_levels(p: &PotentialParams, l: u32, c: &ApproxConstants) -> Vec<EnergyLevel> {
    (0..)
        .map(|n| energy_level(p, QuantumState::new(n, l), c))
        .take_while(|lvl| lvl.is_bound)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(alpha: f64, sigma0: f64) -> PotentialParams {
        PotentialParams::atomic(10.0, alpha, sigma0).unwrap()
    }

    #[test]
    fn nu_direct() {
        assert_relative_eq!(compute_nu(&params(0.1, 0.1)), 500.0, max_relative = 1e-14);
        assert_relative_eq!(compute_nu(&params(0.2, 0.1)), 125.0, max_relative = 1e-14);
    }

    #[test]
    fn delta_values() {
        // ½(-1 + √89), √89 = 9.433981132056603
        let d = compute_delta(&params(0.1, 0.1), 1);
        assert_relative_eq!(d, 0.5 * (9.433981132056603 - 1.0), max_relative = 1e-14);
        assert!((d - 4.2169906).abs() < 1e-7);

        let tiny = params(0.1, 1e-12);
        for l in 0..6 {
            assert!((compute_delta(&tiny, l) - l as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn delta_at_l0_matches_s_wave_root() {
        let p = PotentialParams::new(7.0, 0.13, 0.37, 1.3, 0.9).unwrap();
        assert_relative_eq!(compute_delta(&p, 0), s_wave_energy(&p, 0).delta, max_relative = 1e-14);
    }

    #[test]
    fn beta_2p() {
        let c = ApproxConstants::published();
        let b = compute_beta(&params(0.1, 0.1), QuantumState::new(0, 1), &c);
        assert!((b - 16.5596).abs() < 1e-4, "{b}");
    }

    #[test]
    fn beta_turns_negative_at_high_n() {
        let c = ApproxConstants::published();
        let p = params(0.2, 0.2);
        let first_unbound = (0..200)
            .find(|&n| compute_beta(&p, QuantumState::new(n, 1), &c) <= 0.0)
            .unwrap();
        assert!(first_unbound > 0);
        assert!(!energy_level(&p, QuantumState::new(first_unbound, 1), &c).is_bound);
        assert!(energy_level(&p, QuantumState::new(first_unbound - 1, 1), &c).is_bound);
        assert_eq!(bound_levels(&p, 1, &c).len(), first_unbound as usize);
    }

    #[test]
    fn table_values() {
        let c = ApproxConstants::published();
        let e = energy_level(&params(0.1, 0.1), QuantumState::new(0, 1), &c).energy;
        // Printed 2.61874; direct binary64 evaluation lands at 2.618856.
        assert!((e - 2.61874).abs() < 2e-4, "{e}");
        let e = energy_level(&params(0.25, 0.2), QuantumState::new(1, 1), &c).energy;
        assert!((e - 5.09231).abs() < 1e-3, "{e}");
    }

    #[test]
    fn self_consistency() {
        let c = ApproxConstants::published();
        let p = params(0.15, 0.2);
        for n in 0..4 {
            for l in 1..5 {
                let s = QuantumState::new(n, l);
                let lvl = energy_level(&p, s, &c);
                assert!(lvl.is_bound);
                let b = beta_from_energy(&p, s, &c, lvl.energy);
                assert!((b - lvl.beta).abs() < 1e-10);
                let sp = spectral_params(&p, s, &c);
                assert!((sp.beta.powi(2) - (sp.eps_prime_sq + sp.nu * (1.0 - p.sigma0).powi(2))).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn s_wave_reduction() {
        let c = ApproxConstants::published();
        let p = params(0.1, 0.1);
        for n in 0..5 {
            let a = energy_level(&p, QuantumState::new(n, 0), &c);
            let b = s_wave_energy(&p, n);
            assert!((a.energy - b.energy).abs() < 1e-12);
        }
        // Independent evaluation of the s-wave form at n = 0:
        // δ₁ = ½(-1+√81) = 4, β₁ = -(1 + 4 - 180)/10 = 17.5, E = 8.1 - 0.02·17.5²
        let e = s_wave_energy(&p, 0);
        assert!((e.delta - 4.0).abs() < 1e-14);
        assert!((e.beta - 17.5).abs() < 1e-12);
        assert!((e.energy - 1.975).abs() < 1e-12);
    }

    #[test]
    fn sigma_one_reduction() {
        let c = ApproxConstants::published();
        let p = params(0.1, 1.0);
        for n in 0..3 {
            for l in 0..4 {
                let s = QuantumState::new(n, l);
                let a = energy_level(&p, s, &c).energy;
                let b = sigma1_energy(&p, s, &c).unwrap().energy;
                assert!((a - b).abs() < 1e-12);
            }
        }
        let s0 = s_wave_energy(&p, 0);
        let s1 = sigma1_energy(&p, QuantumState::new(0, 0), &c).unwrap();
        assert!((s0.energy - s1.energy).abs() < 1e-12);
        assert!((s0.delta - s1.delta).abs() < 1e-12);
        assert!(sigma1_energy(&params(0.1, 0.5), QuantumState::new(0, 0), &c).is_err());
    }

    #[test]
    fn shift_term_difference() {
        let c = ApproxConstants::published();
        let zero = ApproxConstants::unshifted();
        let p = params(0.2, 0.1);
        for l in 0..5 {
            let s = QuantumState::new(1, l);
            let with = energy_level(&p, s, &c);
            let without = energy_level(&p, s, &zero);
            assert_eq!(with.beta, without.beta);
            let expected = p.energy_scale() * (l * (l + 1)) as f64 * c.c0;
            assert!(((with.energy - without.energy) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn ladders_increase() {
        let c = ApproxConstants::published();
        for &sigma0 in &[0.1, 0.2] {
            let p = params(0.1, sigma0);
            for l in 1..5 {
                let energies: Vec<f64> = (0..(5 - l)).map(|n| energy_level(&p, QuantumState::new(n, l), &c).energy).collect();
                assert!(energies.windows(2).all(|w| w[0] < w[1]), "{energies:?}");
            }
        }
    }
}
