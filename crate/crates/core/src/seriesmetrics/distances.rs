use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_aligned, DistanceProvider, GroupSeries};
use crate::error::{Error, Result};

/// Exponent `p` of the window norm `(Σ dᵖ)^(1/p)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    One,
    Two,
    Infinity,
    /// Any other finite `p > 1`.
    Real(f64),
}

impl Exponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidParameter(format!("exponent p must be at least 1, got {p}")));
        }
        Ok(if p == 1.0 {
            Exponent::One
        } else if p == 2.0 {
            Exponent::Two
        } else if p.is_infinite() {
            Exponent::Infinity
        } else {
            Exponent::Real(p)
        })
    }

    pub fn value(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Two => 2.0,
            Exponent::Infinity => f64::INFINITY,
            Exponent::Real(p) => p,
        }
    }

    /// Whether window norms of integer distances stay integers.
    pub fn preserves_integers(self) -> bool {
        matches!(self, Exponent::One | Exponent::Infinity)
    }

    fn combine(self, window: &[usize]) -> f64 {
        match self {
            Exponent::One => window.iter().sum::<usize>() as f64,
            Exponent::Two => (window.iter().map(|&d| d * d).sum::<usize>() as f64).sqrt(),
            Exponent::Infinity => window.iter().copied().max().unwrap_or(0) as f64,
            Exponent::Real(p) => window
                .iter()
                .map(|&d| (d as f64).powf(p))
                .sum::<f64>()
                .powf(1.0 / p),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::One => f.write_str("1"),
            Exponent::Two => f.write_str("2"),
            Exponent::Infinity => f.write_str("inf"),
            Exponent::Real(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" | "max" => Ok(Exponent::Infinity),
            t => Exponent::new(t.parse().map_err(|_| Error::parse(s, "expected a number ≥ 1 or `inf`"))?),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::One => serializer.serialize_u64(1),
            Exponent::Two => serializer.serialize_u64(2),
            Exponent::Infinity => serializer.serialize_str("inf"),
            Exponent::Real(p) => serializer.serialize_f64(*p),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(p) => Exponent::new(p),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// Distances between aligned windows of two series.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceSeries {
    values: Vec<f64>,
    window: usize,
    exponent: Exponent,
    metric: String,
    dist_max: usize,
}

impl DistanceSeries {
    pub fn new(values: Vec<f64>, window: usize, exponent: Exponent, metric: impl Into<String>, dist_max: usize) -> Self {
        Self {
            values,
            window,
            exponent,
            metric: metric.into(),
            dist_max,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn exponent(&self) -> Exponent {
        self.exponent
    }

    pub fn metric(&self) -> &str {
        &self.metric
    }

    /// Bound on a single element distance.
    pub fn dist_max(&self) -> usize {
        self.dist_max
    }

    /// Bound on a window value: `W^(1/p) · dist_max`.
    pub fn bound(&self) -> f64 {
        let w = self.window as f64;
        match self.exponent {
            Exponent::Infinity => self.dist_max as f64,
            p => w.powf(1.0 / p.value()) * self.dist_max as f64,
        }
    }

    /// Largest value present.
    pub fn realized_max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Single-column CSV preceded by a `#` metadata line.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# metric={} W={} p={} dist_max={} realized_max={}\n",
            self.metric,
            self.window,
            self.exponent,
            self.dist_max,
            self.realized_max()
        );
        for v in &self.values {
            writeln!(out, "{v}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut series = Self::new(Vec::new(), 1, Exponent::One, "unknown", 0);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(meta) = line.strip_prefix('#') {
                for field in meta.split_whitespace() {
                    match field.split_once('=') {
                        Some(("metric", v)) => series.metric = v.to_string(),
                        Some(("W", v)) => series.window = v.parse().map_err(|_| Error::parse(v, "window"))?,
                        Some(("p", v)) => series.exponent = v.parse()?,
                        Some(("dist_max", v)) => {
                            series.dist_max = v.parse().map_err(|_| Error::parse(v, "dist_max"))?
                        }
                        _ => {}
                    }
                }
            } else if !line.is_empty() {
                let v: f64 = line
                    .parse()
                    .map_err(|_| Error::format(i + 1, format!("`{line}` is not a number")))?;
                series.values.push(v);
            }
        }
        Ok(series)
    }
}

fn check_provider(alpha: &GroupSeries, beta: &GroupSeries, metric: &dyn DistanceProvider) -> Result<()> {
    check_aligned(alpha, beta)?;
    if alpha.domain() != metric.domain() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// `dist(a_t, b_t)` for every `t`.
pub fn elementwise_distances(
    alpha: &GroupSeries,
    beta: &GroupSeries,
    metric: &dyn DistanceProvider,
) -> Result<DistanceSeries> {
    windowed_distances(alpha, beta, metric, 1, Exponent::One)
}

/// `(Σ_{k<W} dist(a_{t+k}, b_{t+k})ᵖ)^(1/p)` for every window start `t`.
pub fn windowed_distances(
    alpha: &GroupSeries,
    beta: &GroupSeries,
    metric: &dyn DistanceProvider,
    window: usize,
    exponent: Exponent,
) -> Result<DistanceSeries> {
    check_provider(alpha, beta, metric)?;
    if window == 0 {
        return Err(Error::InvalidParameter("window must be at least 1".into()));
    }
    if window > alpha.len() {
        return Err(Error::WindowTooLarge {
            window,
            len: alpha.len(),
        });
    }
    let d: Vec<usize> = alpha
        .elements()
        .par_iter()
        .zip(beta.elements())
        .map(|(&a, &b)| metric.distance(a, b))
        .collect();
    let values = d.par_windows(window).map(|w| exponent.combine(w)).collect();
    Ok(DistanceSeries::new(values, window, exponent, metric.descriptor(), metric.bound()))
}
