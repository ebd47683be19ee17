use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{solve_state_with, NumericLevel};
use crate::potential::{ApproxConstants, PotentialParams};
use crate::spectrum::{energy_level, s_wave_energy, sigma1_energy, EnergyLevel, QuantumState};
use crate::wavefunction::{default_r_max, normalization_analytic, normalization_quadrature, normalization_sum, RadialSolution, DEFAULT_QUADRATURE_POINTS};

use super::config::BenchConfig;
use super::labels::StateLabel;
use super::reference::{outside_published_band, reference_rows, ReferenceRow, PUBLISHED_BAND_PERCENT};

pub const CSV_HEADER: &str =
    "state,alpha,sigma0,E_analytic,E_numeric,E_paper_present,E_paper_lucha,E_paper_dong,rel_err_percent";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Analytic,
    Numeric,
    Both,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "analytic" => Ok(Self::Analytic),
            "numeric" => Ok(Self::Numeric),
            "both" => Ok(Self::Both),
            other => Err(Error::InvalidParameter(format!(
                "mode must be analytic, numeric or both, got {other:?}"
            ))),
        }
    }
}

/// Closed-form level, dispatched to the s-wave or `σ₀ = 1` form where those apply.
pub fn analytic_level(p: &PotentialParams, s: QuantumState, c: &ApproxConstants) -> Result<EnergyLevel> {
    if p.sigma0 == 1.0 {
        sigma1_energy(p, s, c)
    } else if s.l == 0 {
        Ok(s_wave_energy(p, s.n))
    } else {
        Ok(energy_level(p, s, c))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub reference: ReferenceRow,
    pub e_analytic: f64,
    pub e_numeric: f64,
    /// `100 |E_analytic - E_numeric| / |E_numeric|`.
    pub rel_err_ours_percent: f64,
    /// `100 |E_present - E_lucha| / |E_lucha|`.
    pub rel_err_published_percent: f64,
    pub analytic_deviation: f64,
    pub numeric_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_rel_err: f64,
    pub mean_rel_err: f64,
    pub min_rel_err: f64,
    pub published_min_rel_err: f64,
    pub published_max_rel_err: f64,
    pub max_analytic_deviation: f64,
    pub max_numeric_deviation: f64,
    /// Entries whose published present-vs-lucha deviation lies outside the claimed band.
    pub outside_published_band: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub constants: ApproxConstants,
    pub config: BenchConfig,
    pub rows: Vec<ComparisonRow>,
    pub summary: Summary,
}

impl ComparisonReport {
    /// One message per tolerance violation, in row order.
    pub fn violations(&self) -> Vec<String> {
        let cfg = &self.config;
        let mut out = Vec::new();
        for row in &self.rows {
            let r = &row.reference;
            let tag = format!("{} alpha={} sigma0={}", r.label, r.alpha, r.sigma0);
            if row.analytic_deviation > cfg.analytic_tolerance {
                out.push(format!(
                    "{tag}: |E_analytic - E_present| = {:.3e} > {:.1e}",
                    row.analytic_deviation, cfg.analytic_tolerance
                ));
            }
            if row.numeric_deviation > cfg.numeric_tolerance {
                out.push(format!(
                    "{tag}: |E_numeric - E_lucha| = {:.3e} > {:.1e}",
                    row.numeric_deviation, cfg.numeric_tolerance
                ));
            }
            if row.rel_err_ours_percent > cfg.accuracy_percent {
                out.push(format!(
                    "{tag}: analytic vs numeric {:.4}% > {}%",
                    row.rel_err_ours_percent, cfg.accuracy_percent
                ));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for row in &self.rows {
            let r = &row.reference;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.label, r.alpha, r.sigma0, row.e_analytic, row.e_numeric, r.e_present, r.e_lucha, r.e_dong,
                row.rel_err_ours_percent
            )?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Fixed five-decimal table for terminals.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<5} {:>5} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>9}",
            "state", "alpha", "sigma0", "analytic", "numeric", "present", "lucha", "dong", "err %"
        );
        for row in &self.rows {
            let r = &row.reference;
            let _ = writeln!(
                s,
                "{:<5} {:>5.2} {:>6.1} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>9.5}",
                r.label.text, r.alpha, r.sigma0, row.e_analytic, row.e_numeric, r.e_present, r.e_lucha, r.e_dong,
                row.rel_err_ours_percent
            );
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "analytic vs numeric: max {:.5}%  mean {:.5}%  min {:.5}%   (published present vs lucha: {:.5}% .. {:.5}%, claimed {}% .. {}%)",
            m.max_rel_err,
            m.mean_rel_err,
            m.min_rel_err,
            m.published_min_rel_err,
            m.published_max_rel_err,
            PUBLISHED_BAND_PERCENT.0,
            PUBLISHED_BAND_PERCENT.1
        );
        let _ = writeln!(
            s,
            "max |analytic - present| = {:.3e}   max |numeric - lucha| = {:.3e}",
            m.max_analytic_deviation, m.max_numeric_deviation
        );
        for r in &m.outside_published_band {
            let _ = writeln!(s, "published entry outside the claimed band: {r}");
        }
        s
    }

    /// Writes `table1.csv` and `table1.json` into `dir`.
    pub fn write_files(&self, dir: &Path) -> Result<(PathBuf, PathBuf)> {
        let csv = dir.join("table1.csv");
        let json = dir.join("table1.json");
        let mut w = BufWriter::new(File::create(&csv)?);
        self.write_csv(&mut w)?;
        w.flush()?;
        std::fs::write(&json, self.to_json()? + "\n")?;
        Ok((csv, json))
    }
}

fn rel_percent(a: f64, b: f64) -> f64 {
    100.0 * (a - b).abs() / b.abs()
}

fn row_params(cfg: &BenchConfig, r: &ReferenceRow) -> Result<PotentialParams> {
    PotentialParams::new(cfg.d, r.alpha, r.sigma0, cfg.mu, cfg.hbar)
}

fn numeric(p: &PotentialParams, s: QuantumState, cfg: &BenchConfig) -> Result<NumericLevel> {
    solve_state_with(p, s, cfg.n_grid, |c| {
        c.energy_tol = cfg.energy_tol;
        if let Some(lo) = cfg.energy_lo {
            c.energy_lo = lo;
        }
        if let Some(hi) = cfg.energy_hi {
            c.energy_hi = hi;
        }
    })
}

/// Analytic and numeric energies for every published entry. Rows are solved
/// in parallel and reported in table order.
pub fn run_table1(cfg: &BenchConfig) -> Result<ComparisonReport> {
    let constants = cfg.constants()?;
    let refs = reference_rows();
    let rows = refs
        .par_iter()
        .cloned()
        .map(|r| {
            let p = row_params(cfg, &r)?;
            let s = r.label.state();
            let e_analytic = analytic_level(&p, s, &constants)?.energy;
            let e_numeric = numeric(&p, s, cfg)?.energy;
            Ok(ComparisonRow {
                rel_err_ours_percent: rel_percent(e_analytic, e_numeric),
                rel_err_published_percent: r.published_deviation_percent(),
                analytic_deviation: (e_analytic - r.e_present).abs(),
                numeric_deviation: (e_numeric - r.e_lucha).abs(),
                e_analytic,
                e_numeric,
                reference: r,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let ours: Vec<f64> = rows.iter().map(|r| r.rel_err_ours_percent).collect();
    let published: Vec<f64> = rows.iter().map(|r| r.rel_err_published_percent).collect();
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let summary = Summary {
        max_rel_err: max(&ours),
        mean_rel_err: ours.iter().sum::<f64>() / ours.len() as f64,
        min_rel_err: min(&ours),
        published_min_rel_err: min(&published),
        published_max_rel_err: max(&published),
        max_analytic_deviation: max(&rows.iter().map(|r| r.analytic_deviation).collect::<Vec<_>>()),
        max_numeric_deviation: max(&rows.iter().map(|r| r.numeric_deviation).collect::<Vec<_>>()),
        outside_published_band: outside_published_band(&refs)
            .iter()
            .map(|r| format!("{} alpha={} sigma0={} ({:.5}%)", r.label, r.alpha, r.sigma0, r.published_deviation_percent()))
            .collect(),
    };
    Ok(ComparisonReport {
        constants,
        config: cfg.clone(),
        rows,
        summary,
    })
}

/// Formats with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingleReport {
    pub label: StateLabel,
    pub analytic: Option<f64>,
    pub numeric: Option<f64>,
}

impl SingleReport {
    /// `100 |analytic - numeric| / |numeric|` when both are present.
    pub fn rel_err_percent(&self) -> Option<f64> {
        Some(rel_percent(self.analytic?, self.numeric?))
    }
}

impl std::fmt::Display for SingleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label)?;
        if let Some(a) = self.analytic {
            write!(f, " analytic E = {}", sig6(a))?;
        }
        if let Some(n) = self.numeric {
            write!(f, " numeric E = {}", sig6(n))?;
        }
        if let Some(r) = self.rel_err_percent() {
            write!(f, " rel err = {}%", sig6(r))?;
        }
        Ok(())
    }
}

/// Energies of a single state; its `Display` is the one-line report.
pub fn run_single(label: &StateLabel, p: &PotentialParams, mode: Mode, cfg: &BenchConfig) -> Result<SingleReport> {
    let s = label.state();
    let analytic = match mode {
        Mode::Analytic | Mode::Both => {
            let lvl = analytic_level(p, s, &cfg.constants()?)?;
            lvl.require_bound()?;
            Some(lvl.energy)
        }
        Mode::Numeric => None,
    };
    let numeric = match mode {
        Mode::Numeric | Mode::Both => Some(numeric(p, s, cfg)?.energy),
        Mode::Analytic => None,
    };
    Ok(SingleReport {
        label: label.clone(),
        analytic,
        numeric,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionSidecar {
    pub state: String,
    pub n: u32,
    pub l: u32,
    #[serde(rename = "E")]
    pub energy: f64,
    pub beta: f64,
    pub delta: f64,
    #[serde(rename = "N_nl")]
    pub norm_constant: f64,
    pub node_count: usize,
    pub r_max: f64,
    pub samples: usize,
}

/// Writes the `r,R` samples to `out_path` and a JSON sidecar next to it
/// (same stem, `.json` extension).
pub fn dump_wavefunction(
    label: &StateLabel,
    p: &PotentialParams,
    constants: &ApproxConstants,
    out_path: &Path,
) -> Result<WavefunctionSidecar> {
    let level = analytic_level(p, label.state(), constants)?;
    level.require_bound()?;
    let sol = RadialSolution::compute(p, &level)?;

    let mut w = BufWriter::new(File::create(out_path)?);
    sol.write_csv(&mut w)?;
    w.flush()?;

    let sidecar = WavefunctionSidecar {
        state: label.text.clone(),
        n: label.n,
        l: label.l,
        energy: level.energy,
        beta: level.beta,
        delta: level.delta,
        norm_constant: sol.norm_constant,
        node_count: sol.node_count,
        r_max: sol.samples.last().map_or(0.0, |s| s.0),
        samples: sol.samples.len(),
    };
    std::fs::write(out_path.with_extension("json"), serde_json::to_string_pretty(&sidecar)? + "\n")?;
    Ok(sidecar)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    pub state: String,
    pub alpha: f64,
    pub sigma0: f64,
    pub beta: f64,
    pub delta: f64,
    pub n_quadrature: f64,
    pub n_printed_sum: f64,
    /// `s(n) / ∫ R² dr`; 1 when the printed sum is right.
    pub sum_over_exact: f64,
}

/// Printed closed-form normalization against quadrature, state by state.
pub fn normalization_audit(
    p: &PotentialParams,
    constants: &ApproxConstants,
    labels: &[StateLabel],
) -> Result<Vec<AuditRow>> {
    labels
        .iter()
        .map(|label| {
            let lvl = energy_level(p, label.state(), constants);
            let n_quad = normalization_quadrature(p, &lvl, default_r_max(p, &lvl), DEFAULT_QUADRATURE_POINTS)?;
            let n_sum = normalization_analytic(p, &lvl)?;
            Ok(AuditRow {
                state: label.text.clone(),
                alpha: p.alpha,
                sigma0: p.sigma0,
                beta: lvl.beta,
                delta: lvl.delta,
                n_quadrature: n_quad,
                n_printed_sum: n_sum,
                sum_over_exact: normalization_sum(p, &lvl) * n_quad * n_quad,
            })
        })
        .collect()
}
