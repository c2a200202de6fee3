use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};

use super::{DistanceSeries, Exponent};
use crate::error::{Error, Result};

/// How real distances are grouped into histogram bins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Binning {
    /// One bin per distinct value.
    Exact,
    /// `v` goes to the integer `n` with `v ∈ (n − 0.5, n + 0.5]`.
    RoundHalfUp,
}

/// `n` with `v ∈ (n − 0.5, n + 0.5]`.
pub fn round_half_up(v: f64) -> f64 {
    (v - 0.5).ceil()
}

/// Empirical distribution of a distance series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceHistogram {
    #[serde(serialize_with = "integral_as_int")]
    pub support: Vec<f64>,
    pub counts: Vec<usize>,
    pub probabilities: Vec<f64>,
    pub metric: String,
    #[serde(rename = "W")]
    pub window: usize,
    pub p: Exponent,
}

fn integral_as_int<S: Serializer>(values: &[f64], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for &v in values {
        if v.fract() == 0.0 && v.abs() < 9.0e15 {
            seq.serialize_element(&(v as i64))?;
        } else {
            seq.serialize_element(&v)?;
        }
    }
    seq.end()
}

impl DistanceHistogram {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Support values with a nonzero count.
    pub fn realized(&self) -> Vec<f64> {
        self.support
            .iter()
            .zip(&self.counts)
            .filter(|(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn probability_of(&self, value: f64) -> f64 {
        self.support
            .iter()
            .position(|&v| v == value)
            .map_or(0.0, |i| self.probabilities[i])
    }

    /// Same histogram with every support value divided by `divisor`.
    pub fn rescaled(&self, divisor: f64) -> Self {
        Self {
            support: self.support.iter().map(|v| v / divisor).collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Two columns `distance,probability` after a `#` metadata line.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# metric={} W={} p={} total={}\ndistance,probability\n",
            self.metric,
            self.window,
            self.p,
            self.total()
        );
        for (v, p) in self.support.iter().zip(&self.probabilities) {
            writeln!(out, "{v},{p}").unwrap();
        }
        out
    }
}

/// Bins a distance series. With `support`, every observed (binned) value must
/// be one of the listed values, and all of them appear in the output even
/// when their count is zero.
pub fn histogram(d: &DistanceSeries, binning: Binning, support: Option<&[usize]>) -> Result<DistanceHistogram> {
    if d.is_empty() {
        return Err(Error::InvalidParameter("cannot histogram an empty series".into()));
    }
    let mut binned: Vec<f64> = d
        .values()
        .iter()
        .map(|&v| match binning {
            Binning::Exact => v,
            Binning::RoundHalfUp => round_half_up(v),
        })
        .collect();
    binned.sort_by(f64::total_cmp);

    let mut values: Vec<f64> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for v in binned {
        if values.last() == Some(&v) {
            *counts.last_mut().unwrap() += 1;
        } else {
            values.push(v);
            counts.push(1);
        }
    }

    if let Some(support) = support {
        let mut full: Vec<usize> = support.to_vec();
        full.sort_unstable();
        full.dedup();
        let mut full_counts = vec![0; full.len()];
        for (v, c) in values.iter().zip(&counts) {
            let slot = (v.fract() == 0.0 && *v >= 0.0)
                .then(|| full.binary_search(&(*v as usize)).ok())
                .flatten()
                .ok_or(Error::UnexpectedDistance { value: *v })?;
            full_counts[slot] = *c;
        }
        values = full.into_iter().map(|v| v as f64).collect();
        counts = full_counts;
    }

    let total = d.len() as f64;
    Ok(DistanceHistogram {
        probabilities: counts.iter().map(|&c| c as f64 / total).collect(),
        support: values,
        counts,
        metric: d.metric().to_string(),
        window: d.window(),
        p: d.exponent(),
    })
}
