//! `.gtab` text format.
//!
//! ```text
//! # Klein four-group
//! 4
//! e a b c
//! 1 2 3 4
//! 2 1 4 3
//! 3 4 1 2
//! 4 3 2 1
//! ```
//!
//! Line 1 is the order, line 2 the labels, then one row per element with
//! 1-based indices. `#` starts a comment; blank lines are ignored.

use std::fmt::Write;

use super::FiniteGroup;
use crate::error::{Error, Result};

impl FiniteGroup {
    pub fn from_gtab(text: &str) -> Result<FiniteGroup> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line_no, first) = lines.next().ok_or_else(|| Error::format(1, "missing order"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::format(line_no, format!("expected the group order, found `{first}`")))?;
        if n == 0 {
            return Err(Error::format(line_no, "group order must be positive"));
        }

        let (line_no, label_line) = lines
            .next()
            .ok_or_else(|| Error::format(line_no + 1, "missing labels"))?;
        let labels: Vec<String> = label_line.split_whitespace().map(String::from).collect();
        if labels.len() != n {
            return Err(Error::format(
                line_no,
                format!("expected {n} labels, found {}", labels.len()),
            ));
        }

        let mut rows = Vec::with_capacity(n);
        let mut last = line_no;
        for _ in 0..n {
            let (line_no, row) = lines
                .next()
                .ok_or_else(|| Error::format(last + 1, format!("expected {n} table rows")))?;
            last = line_no;
            let values = row
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(Error::format(line_no, format!("`{t}` is not an index in 1..={n}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != n {
                return Err(Error::format(
                    line_no,
                    format!("expected {n} entries, found {}", values.len()),
                ));
            }
            rows.push(values);
        }
        if let Some((line_no, extra)) = lines.next() {
            return Err(Error::format(line_no, format!("trailing content `{extra}`")));
        }
        FiniteGroup::from_table(labels, rows)
    }

    pub fn to_gtab(&self) -> String {
        let mut out = format!("{}\n{}\n", self.order(), self.labels().join(" "));
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }
}
