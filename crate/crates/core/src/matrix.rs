//! Labelled symmetric distance matrices with CSV and JSON exports.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{enumerate_sym, Metric};

/// Largest order for which a full matrix is materialized.
pub const MAX_MATRIX_ORDER: usize = 720;

/// A symmetric `n × n` matrix of natural distances with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRecord", into = "MatrixRecord")]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<Vec<usize>>,
    metric: String,
    variant: Option<String>,
    generators: Option<Vec<String>>,
    admissible: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    order: usize,
    metric: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<String>>,
    labels: Vec<String>,
    values: Vec<Vec<usize>>,
    admissible: Vec<usize>,
}

impl TryFrom<MatrixRecord> for DistanceMatrix {
    type Error = Error;

    fn try_from(r: MatrixRecord) -> Result<Self> {
        if r.order != r.labels.len() {
            return Err(Error::BadShape { expected: r.order });
        }
        let m = DistanceMatrix::new(r.labels, r.values, r.metric)?
            .with_variant(r.variant)
            .with_generators(r.generators);
        if m.admissible != r.admissible {
            return Err(Error::InvalidParameter(format!(
                "admissible set {:?} does not match the matrix entries {:?}",
                r.admissible, m.admissible
            )));
        }
        Ok(m)
    }
}

impl From<DistanceMatrix> for MatrixRecord {
    fn from(m: DistanceMatrix) -> Self {
        MatrixRecord {
            order: m.labels.len(),
            metric: m.metric,
            variant: m.variant,
            generators: m.generators,
            labels: m.labels,
            values: m.values,
            admissible: m.admissible,
        }
    }
}

impl DistanceMatrix {
    /// Validates shape, zero diagonal and symmetry.
    pub fn new(labels: Vec<String>, values: Vec<Vec<usize>>, metric: impl Into<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(Error::BadShape { expected: n });
        }
        for i in 0..n {
            if values[i][i] != 0 {
                return Err(Error::InvalidParameter(format!(
                    "nonzero diagonal entry at {}",
                    labels[i]
                )));
            }
            for j in i + 1..n {
                if values[i][j] != values[j][i] {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric entries at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let admissible = values
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(Self {
            labels,
            values,
            metric: metric.into(),
            variant: None,
            generators: None,
            admissible,
        })
    }

    /// Builds the matrix row by row in parallel from a pair function.
    pub fn from_fn<F>(labels: Vec<String>, metric: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        let n = labels.len();
        if n > MAX_MATRIX_ORDER {
            return Err(Error::Unsupported(format!(
                "full matrices are limited to order {MAX_MATRIX_ORDER}, got {n}"
            )));
        }
        let values = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| f(i, j)).collect())
            .collect();
        Self::new(labels, values, metric)
    }

    /// `d_C` or `d_K` over all of `Sym(L)` in lexicographic order.
    pub fn symmetric_group(degree: usize, metric: Metric) -> Result<Self> {
        let elements = enumerate_sym(degree)?;
        let labels = elements.iter().map(|p| p.compact()).collect();
        Self::from_fn(labels, metric.name(), |i, j| {
            metric.distance(&elements[i], &elements[j]).unwrap()
        })
    }

    pub fn with_variant(mut self, variant: Option<String>) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_generators(mut self, generators: Option<Vec<String>>) -> Self {
        self.generators = generators;
        self
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn metric(&self) -> &str {
        &self.metric
    }

    pub fn variant(&self) -> Option<&str> {
        self.variant.as_deref()
    }

    pub fn generators(&self) -> Option<&[String]> {
        self.generators.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.values[i][j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.values[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.values
    }

    /// Sorted distinct entries.
    pub fn admissible(&self) -> &[usize] {
        &self.admissible
    }

    /// Values in `0..=max` that never occur.
    pub fn forbidden(&self, max: usize) -> Vec<usize> {
        (0..=max).filter(|v| self.admissible.binary_search(v).is_err()).collect()
    }

    /// CSV with a leading `#` metadata line and a header row and column of labels.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# metric={}", self.metric);
        if let Some(v) = &self.variant {
            write!(out, " variant={v}").unwrap();
        }
        if let Some(g) = &self.generators {
            write!(out, " generators={}", g.join(",")).unwrap();
        }
        out.push('\n');
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header).unwrap();
        for (label, row) in self.labels.iter().zip(&self.values) {
            let mut record = vec![label.clone()];
            record.extend(row.iter().map(usize::to_string));
            w.write_record(&record).unwrap();
        }
        out.push_str(&String::from_utf8(w.into_inner().unwrap()).unwrap());
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut metric = String::from("unknown");
        let mut variant = None;
        let mut generators = None;
        if let Some(meta) = text.lines().next().and_then(|l| l.strip_prefix('#')) {
            for field in meta.split_whitespace() {
                match field.split_once('=') {
                    Some(("metric", v)) => metric = v.to_string(),
                    Some(("variant", v)) => variant = Some(v.to_string()),
                    Some(("generators", v)) => generators = Some(v.split(',').map(String::from).collect()),
                    _ => {}
                }
            }
        }
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let labels: Vec<String> = reader.headers()?.iter().skip(1).map(String::from).collect();
        let mut values = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record?;
            let line = i + 2;
            if record.get(0) != labels.get(i).map(String::as_str) {
                return Err(Error::format(line, "row label does not match the header"));
            }
            let row = record
                .iter()
                .skip(1)
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse(t, "expected a natural number")))
                .collect::<Result<Vec<_>>>()?;
            values.push(row);
        }
        Ok(Self::new(labels, values, metric)?
            .with_variant(variant)
            .with_generators(generators))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
