//! Unidirectionally coupled Hénon maps and the distance-distribution pipeline
//! run on their ordinal patterns.
//!
//! Driver `X`:
//! `x⁽¹⁾' = 1.4 − (x⁽¹⁾)² + 0.1·x⁽²⁾`, `x⁽²⁾' = x⁽¹⁾`.
//!
//! Responder `Y`, coupled to `X` with strength `C`:
//! `y⁽¹⁾' = 1.4 − [C·x⁽¹⁾·y⁽¹⁾ + (1 − C)·(y⁽¹⁾)²] + 0.3·y⁽²⁾`, `y⁽²⁾' = y⁽¹⁾`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embed::Variant;
use crate::error::{Error, Result};
use crate::ordinal::{ordinal_encode, RealSeries, TiePolicy};
use crate::perm::Metric;
use crate::seriesmetrics::{
    histogram, windowed_distances, Binning, DistanceHistogram, DistanceProvider, DistanceSeries, EmbeddedMetric,
    Exponent, GroupSeries, PermutationMetric,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HenonConfig {
    #[serde(rename = "C")]
    pub coupling: f64,
    #[serde(rename = "N")]
    pub length: usize,
    /// Iterations discarded before recording.
    pub transient: usize,
    #[serde(rename = "seed_x")]
    pub driver_seed: [f64; 2],
    #[serde(rename = "seed_y")]
    pub responder_seed: [f64; 2],
    /// A trajectory whose state exceeds this magnitude is reported as diverged.
    pub divergence_bound: f64,
}

impl Default for HenonConfig {
    fn default() -> Self {
        Self {
            coupling: 0.0,
            length: 10_000,
            transient: 1_000,
            driver_seed: [0.0, 0.9],
            responder_seed: [0.75, 0.0],
            divergence_bound: 1e6,
        }
    }
}

impl HenonConfig {
    pub fn with_coupling(coupling: f64) -> Self {
        Self {
            coupling,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.coupling.is_finite() && self.coupling >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "coupling must be a nonnegative real, got {}",
                self.coupling
            )));
        }
        if self.length == 0 {
            return Err(Error::InvalidParameter("series length must be at least 1".into()));
        }
        if self.divergence_bound.is_nan() || self.divergence_bound <= 0.0 {
            return Err(Error::InvalidParameter("divergence bound must be positive".into()));
        }
        if self.driver_seed.iter().chain(&self.responder_seed).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("seeds must be finite".into()));
        }
        Ok(())
    }
}

/// One iteration of the coupled system.
pub fn henon_step(x: [f64; 2], y: [f64; 2], coupling: f64) -> ([f64; 2], [f64; 2]) {
    let x_next = [1.4 - x[0] * x[0] + 0.1 * x[1], x[0]];
    let y_next = [
        1.4 - (coupling * x[0] * y[0] + (1.0 - coupling) * y[0] * y[0]) + 0.3 * y[1],
        y[0],
    ];
    (x_next, y_next)
}

/// First components of driver and responder for the `N` states following
/// the transient.
pub fn henon_coupled(cfg: &HenonConfig) -> Result<(RealSeries, RealSeries)> {
    cfg.validate()?;
    let (mut x, mut y) = (cfg.driver_seed, cfg.responder_seed);
    let mut driver = Vec::with_capacity(cfg.length);
    let mut responder = Vec::with_capacity(cfg.length);
    for step in 1..=cfg.transient + cfg.length {
        (x, y) = henon_step(x, y, cfg.coupling);
        if x.iter().chain(&y).any(|v| !v.is_finite() || v.abs() > cfg.divergence_bound) {
            return Err(Error::Diverged { step });
        }
        if step > cfg.transient {
            driver.push(x[0]);
            responder.push(y[0]);
        }
    }
    Ok((RealSeries::new(driver)?, RealSeries::new(responder)?))
}

/// Distance used to compare the two ordinal-pattern series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentMetric {
    Cayley,
    Kendall,
    /// Cayley distance between left-translation images in `Sym(L!)`.
    EmbeddedCayley,
    /// Kendall distance between left-translation images in `Sym(L!)`.
    EmbeddedKendall,
}

impl ExperimentMetric {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentMetric::Cayley => "cayley",
            ExperimentMetric::Kendall => "kendall",
            ExperimentMetric::EmbeddedCayley => "embedded-cayley",
            ExperimentMetric::EmbeddedKendall => "embedded-kendall",
        }
    }

    pub fn provider(self, degree: usize) -> Result<Box<dyn DistanceProvider>> {
        Ok(match self {
            ExperimentMetric::Cayley => Box::new(PermutationMetric::new(degree, Metric::Cayley)?),
            ExperimentMetric::Kendall => Box::new(PermutationMetric::new(degree, Metric::Kendall)?),
            ExperimentMetric::EmbeddedCayley => {
                Box::new(EmbeddedMetric::on_symmetric(degree, Variant::Left, Metric::Cayley)?)
            }
            ExperimentMetric::EmbeddedKendall => {
                Box::new(EmbeddedMetric::on_symmetric(degree, Variant::Left, Metric::Kendall)?)
            }
        })
    }
}

impl fmt::Display for ExperimentMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cayley" => Ok(ExperimentMetric::Cayley),
            "kendall" => Ok(ExperimentMetric::Kendall),
            "embedded-cayley" => Ok(ExperimentMetric::EmbeddedCayley),
            "embedded-kendall" => Ok(ExperimentMetric::EmbeddedKendall),
            _ => Err(Error::parse(
                s,
                "expected cayley, kendall, embedded-cayley or embedded-kendall",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub henon: HenonConfig,
    /// Ordinal pattern length.
    #[serde(rename = "L")]
    pub degree: usize,
    #[serde(rename = "W")]
    pub window: usize,
    pub p: Exponent,
    pub metric: ExperimentMetric,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            henon: HenonConfig::default(),
            degree: 4,
            window: 1,
            p: Exponent::One,
            metric: ExperimentMetric::Kendall,
        }
    }
}

pub const EXPERIMENT_DEGREES: std::ops::RangeInclusive<usize> = 3..=6;

/// Simulates, encodes both series and returns the distance series.
pub fn experiment_distances(cfg: &ExperimentConfig) -> Result<(DistanceSeries, Box<dyn DistanceProvider>)> {
    if !EXPERIMENT_DEGREES.contains(&cfg.degree) {
        return Err(Error::DegreeOutOfRange {
            degree: cfg.degree,
            min: *EXPERIMENT_DEGREES.start(),
            max: *EXPERIMENT_DEGREES.end(),
        });
    }
    let provider = cfg.metric.provider(cfg.degree)?;
    let (x, y) = henon_coupled(&cfg.henon)?;
    let alpha = GroupSeries::from_ordinal(&ordinal_encode(&x, cfg.degree, TiePolicy::IndexOrder)?)?;
    let beta = GroupSeries::from_ordinal(&ordinal_encode(&y, cfg.degree, TiePolicy::IndexOrder)?)?;
    let d = windowed_distances(&alpha, &beta, provider.as_ref(), cfg.window, cfg.p)?;
    Ok((d, provider))
}

/// Full pipeline: Hénon pair → ordinal patterns → distances → histogram.
///
/// Element-wise runs are binned exactly against the admissible values of the
/// metric; windowed runs with a non-integer norm are rounded half up.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<DistanceHistogram> {
    let (d, provider) = experiment_distances(cfg)?;
    if cfg.window == 1 {
        histogram(&d, Binning::Exact, Some(&provider.admissible()))
    } else if cfg.p.preserves_integers() {
        histogram(&d, Binning::Exact, None)
    } else {
        histogram(&d, Binning::RoundHalfUp, None)
    }
}
