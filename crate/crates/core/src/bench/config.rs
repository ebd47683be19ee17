//! Flat `key = value` run configuration. Blank lines and `#` comments are
//! ignored; every key is optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::ShootingConfig;
use crate::potential::ApproxConstants;

use super::reference::TABLE_D;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub d: f64,
    pub mu: f64,
    pub hbar: f64,
    pub n_grid: usize,
    pub energy_tol: f64,
    /// Replaces the automatic numeric energy bracket ends.
    pub energy_lo: Option<f64>,
    pub energy_hi: Option<f64>,
    /// Overrides the published `γ`; `c₀` is then derived from it.
    pub gamma: Option<f64>,
    /// Max `|E_analytic - E_present|`.
    pub analytic_tolerance: f64,
    /// Max `|E_numeric - E_lucha|`.
    pub numeric_tolerance: f64,
    /// Max `100 |E_analytic - E_numeric| / |E_numeric|`.
    pub accuracy_percent: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            d: TABLE_D,
            mu: 1.0,
            hbar: 1.0,
            n_grid: ShootingConfig::DEFAULT_N_GRID,
            energy_tol: ShootingConfig::DEFAULT_ENERGY_TOL,
            energy_lo: None,
            energy_hi: None,
            gamma: None,
            analytic_tolerance: 1e-3,
            numeric_tolerance: 5e-4,
            accuracy_percent: 0.2,
        }
    }
}

impl BenchConfig {
    pub fn constants(&self) -> Result<ApproxConstants> {
        match self.gamma {
            Some(g) => ApproxConstants::from_gamma(g),
            None => Ok(ApproxConstants::published()),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::Config { line: line_no, reason };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let float = || -> Result<f64> {
                value
                    .parse::<f64>()
                    .map_err(|e| err(format!("{key}: {e}")))
                    .and_then(|v| {
                        if v.is_finite() && v > 0.0 {
                            Ok(v)
                        } else {
                            Err(err(format!("{key} must be positive")))
                        }
                    })
            };
            match key {
                "D" | "d" => cfg.d = float()?,
                "mu" => cfg.mu = float()?,
                "hbar" => cfg.hbar = float()?,
                "n_grid" => {
                    cfg.n_grid = value.parse().map_err(|e| err(format!("{key}: {e}")))?;
                    if cfg.n_grid < 2000 {
                        return Err(err("n_grid must be at least 2000".into()));
                    }
                }
                "energy_tol" => cfg.energy_tol = float()?,
                "energy_lo" | "energy_hi" => {
                    let v = value.parse::<f64>().map_err(|e| err(format!("{key}: {e}")))?;
                    if !v.is_finite() {
                        return Err(err(format!("{key} must be finite")));
                    }
                    if key == "energy_lo" {
                        cfg.energy_lo = Some(v);
                    } else {
                        cfg.energy_hi = Some(v);
                    }
                }
                "gamma" => cfg.gamma = Some(float()?),
                "analytic_tolerance" => cfg.analytic_tolerance = float()?,
                "numeric_tolerance" => cfg.numeric_tolerance = float()?,
                "accuracy_percent" => cfg.accuracy_percent = float()?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }
}
