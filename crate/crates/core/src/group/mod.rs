//! Finite groups given by validated multiplication tables.
//!
//! Elements are addressed by their position `0..n` in the table's
//! enumeration; labels are opaque names used only for I/O.

mod builders;
mod gtab;

use crate::error::{Error, Result};

pub use builders::{build_cyclic, build_klein, build_symmetric, SymmetricGroup};

/// A finite group `(G, ∗)`. Immutable once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// Row-major `n × n`, `table[i * n + j]` is the index of `a_i ∗ a_j`.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table and locates the identity and inverses.
    ///
    /// Checks run in order: shape and labels, Latin-square closure, identity,
    /// two-sided inverses, then exhaustive associativity.
    pub fn from_table(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || rows.len() != n || rows.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::BadShape { expected: n });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty()
                || label.contains(|c: char| c.is_whitespace() || c == '#')
                || labels[..i].contains(label)
            {
                return Err(Error::InvalidLabel(label.clone()));
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();

        let mut seen = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] == i + 1 {
                    return Err(Error::NotClosed { line: "row", index: i });
                }
                seen[v] = i + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for j in 0..n {
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] == j + 1 {
                    return Err(Error::NotClosed { line: "column", index: j });
                }
                seen[v] = j + 1;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or(Error::NoIdentity)?;

        let mut inverse = vec![0; n];
        for a in 0..n {
            // Rows are permutations, so exactly one right inverse exists.
            let x = (0..n).find(|&x| table[a * n + x] == identity).unwrap();
            if table[x * n + a] != identity {
                return Err(Error::NoInverse {
                    element: labels[a].clone(),
                });
            }
            inverse[a] = x;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative {
                            a: labels[a].clone(),
                            b: labels[b].clone(),
                            c: labels[c].clone(),
                        });
                    }
                }
            }
        }

        Ok(Self {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn check_index(&self, a: usize) -> Result<usize> {
        if a < self.order() {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order(),
            })
        }
    }

    /// `a ∗ b`.
    pub fn op(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    /// `a⁻¹`.
    pub fn inv(&self, a: usize) -> Result<usize> {
        Ok(self.inverse[self.check_index(a)?])
    }

    /// Table lookup without range checks; callers guarantee valid indices.
    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub(crate) fn inverse_of(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Row `a` of the table: `(a ∗ a_1, …, a ∗ a_n)`.
    pub fn row(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.table[a * n..(a + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order())
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of the element `a`: smallest `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    /// The same group with its elements re-enumerated: old element `i`
    /// becomes new element `relabel[i]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Result<Self> {
        let n = self.order();
        let pi = crate::perm::Permutation::from_zero_based(relabel.to_vec())?;
        if pi.degree() != n {
            return Err(Error::DegreeMismatch {
                left: pi.degree(),
                right: n,
            });
        }
        let mut labels = vec![String::new(); n];
        let mut rows = vec![vec![0; n]; n];
        for i in 0..n {
            labels[relabel[i]] = self.labels[i].clone();
            for j in 0..n {
                rows[relabel[i]][relabel[j]] = relabel[self.mul(i, j)];
            }
        }
        Self::from_table(labels, rows)
    }
}
