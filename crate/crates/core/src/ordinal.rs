//! Ordinal patterns: the rank vectors of sliding windows of a real series.
//!
//! The pattern of `x_t, …, x_{t+L-1}` is the permutation `r` with
//! `x_{t+r_1-1} ≤ x_{t+r_2-1} ≤ … ≤ x_{t+r_L-1}`, equal values ordered by
//! their position in the window. The time delay is always 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite sequence of finite reals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct RealSeries {
    values: Vec<f64>,
}

impl TryFrom<Vec<f64>> for RealSeries {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        RealSeries::new(values)
    }
}

impl From<RealSeries> for Vec<f64> {
    fn from(s: RealSeries) -> Self {
        s.values
    }
}

impl RealSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSample { index });
        }
        Ok(Self { values })
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

    /// Reads one value per line (or several separated by whitespace).
    /// `#` starts a comment, and a non-numeric first line is taken as a
    /// column header. Surrounding double quotes are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut first_data_line = true;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().map(|t| t.trim_matches('"')).collect();
            let header = first_data_line && tokens.iter().any(|t| t.parse::<f64>().is_err());
            first_data_line = false;
            if header {
                continue;
            }
            for t in tokens {
                let v: f64 = t
                    .parse()
                    .map_err(|_| Error::format(i + 1, format!("`{t}` is not a number")))?;
                if !v.is_finite() {
                    return Err(Error::InvalidSample { index: values.len() });
                }
                values.push(v);
            }
        }
        Ok(Self { values })
    }

    /// One value per line, printed with round-trip precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 20);
        for v in &self.values {
            writeln!(out, "{v}").unwrap();
        }
        out
    }
}

/// How equal values inside a window are ordered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "policy")]
pub enum TiePolicy {
    /// The earlier sample ranks lower.
    #[default]
    IndexOrder,
    /// Add uniform noise from `(-amplitude, amplitude)` to every sample,
    /// drawn in series order from a generator seeded with `seed`.
    Jitter { amplitude: f64, seed: u64 },
}

/// The series of ordinal patterns of degree `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinalSeries {
    degree: usize,
    patterns: Vec<Permutation>,
}

impl OrdinalSeries {
    pub fn new(degree: usize, patterns: Vec<Permutation>) -> Result<Self> {
        if let Some(p) = patterns.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: degree,
            });
        }
        Ok(Self { degree, patterns })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// One pattern per line in 1-based one-line form, e.g. `2 3 1 4`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.patterns {
            writeln!(out, "{p}").unwrap();
        }
        out
    }

    /// Reads a pattern file; all patterns must share one degree.
    pub fn parse(text: &str) -> Result<Self> {
        let mut patterns = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p: Permutation = line
                .parse()
                .map_err(|e: Error| Error::format(i + 1, e.to_string()))?;
            if let Some(first) = patterns.first() {
                let first: &Permutation = first;
                if first.degree() != p.degree() {
                    return Err(Error::format(
                        i + 1,
                        format!("pattern of degree {} after degree {}", p.degree(), first.degree()),
                    ));
                }
            }
            patterns.push(p);
        }
        let degree = patterns
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::format(1, "no patterns"))?;
        Ok(Self { degree, patterns })
    }
}

/// Rank vector of one window, ties broken by position.
pub fn rank_vector(window: &[f64]) -> Permutation {
    let mut order: Vec<usize> = (0..window.len()).collect();
    // stable sort keeps equal values in index order
    order.sort_by(|&i, &j| window[i].partial_cmp(&window[j]).expect("finite samples"));
    Permutation::from_vec_unchecked(order)
}

pub fn ordinal_encode(x: &RealSeries, degree: usize, ties: TiePolicy) -> Result<OrdinalSeries> {
    if degree < 2 {
        return Err(Error::InvalidParameter(format!(
            "pattern length must be at least 2, got {degree}"
        )));
    }
    if x.len() < degree {
        return Err(Error::SeriesTooShort {
            len: x.len(),
            needed: degree,
        });
    }
    let jittered;
    let values = match ties {
        TiePolicy::IndexOrder => x.values(),
        TiePolicy::Jitter { amplitude, seed } => {
            if !(amplitude.is_finite() && amplitude > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "jitter amplitude must be positive, got {amplitude}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let noise = Uniform::new(-amplitude, amplitude);
            jittered = x
                .values()
                .iter()
                .map(|v| {
                    let mut e = noise.sample(&mut rng);
                    while e == -amplitude {
                        e = noise.sample(&mut rng);
                    }
                    v + e
                })
                .collect::<Vec<_>>();
            if let Some(index) = jittered.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidSample { index });
            }
            &jittered
        }
    };
    let patterns = values.par_windows(degree).map(rank_vector).collect();
    Ok(OrdinalSeries { degree, patterns })
}

/// Occurrences of each pattern, keyed in lexicographic order.
pub fn pattern_histogram(o: &OrdinalSeries) -> BTreeMap<Permutation, usize> {
    let mut counts = BTreeMap::new();
    for p in o.patterns() {
        *counts.entry(p.clone()).or_insert(0) += 1;
    }
    counts
}
