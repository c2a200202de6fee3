//! Distances between two aligned group-valued series.
//!
//! A [`GroupSeries`] is a sequence of element indices over a [`Domain`]:
//! either `Sym(L)` with elements numbered by lexicographic rank (the natural
//! home of ordinal patterns) or an explicit [`FiniteGroup`]. Any
//! [`DistanceProvider`] on the same domain turns a pair of series into a
//! [`DistanceSeries`], element by element or over sliding windows.

mod distances;
mod histogram;
mod provider;

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ordinal::OrdinalSeries;
use crate::perm::{Permutation, MAX_ENUMERATED_DEGREE};

pub use distances::{elementwise_distances, windowed_distances, DistanceSeries, Exponent};
pub use histogram::{histogram, Binning, DistanceHistogram};
pub use provider::{DistanceProvider, EmbeddedMetric, PermutationMetric, WordMetric};

/// The group a series takes values in.
#[derive(Clone, Debug)]
pub enum Domain {
    /// `Sym(L)`, element `i` being the `i`-th permutation in lexicographic order.
    Symmetric(usize),
    Group(Arc<FiniteGroup>),
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Domain::Symmetric(a), Domain::Symmetric(b)) => a == b,
            (Domain::Group(a), Domain::Group(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Domain {
    pub fn symmetric(degree: usize) -> Result<Self> {
        if !(1..=MAX_ENUMERATED_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                min: 1,
                max: MAX_ENUMERATED_DEGREE,
            });
        }
        Ok(Domain::Symmetric(degree))
    }

    pub fn order(&self) -> usize {
        match self {
            Domain::Symmetric(l) => (1..=*l).product(),
            Domain::Group(g) => g.order(),
        }
    }

    pub fn identity(&self) -> usize {
        match self {
            Domain::Symmetric(_) => 0,
            Domain::Group(g) => g.identity(),
        }
    }

    fn permutation(l: usize, a: usize) -> Permutation {
        Permutation::from_lex_rank(l, a).expect("index checked against the domain order")
    }

    /// `a ∗ b`; for `Sym(L)` this is `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Domain::Symmetric(l) => Self::permutation(*l, a)
                .compose(&Self::permutation(*l, b))
                .unwrap()
                .lex_rank(),
            Domain::Group(g) => g.mul(a, b),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        match self {
            Domain::Symmetric(l) => Self::permutation(*l, a).inverse().lex_rank(),
            Domain::Group(g) => g.inverse_of(a),
        }
    }

    /// Display name: the compact one-line form or the group label.
    pub fn label(&self, a: usize) -> String {
        match self {
            Domain::Symmetric(l) => Self::permutation(*l, a).to_string(),
            Domain::Group(g) => g.label(a).to_string(),
        }
    }

    /// Parses one element: a one-line form for `Sym(L)`, a label otherwise.
    pub fn parse_element(&self, token: &str) -> Result<usize> {
        match self {
            Domain::Symmetric(l) => {
                let p: Permutation = token.parse()?;
                if p.degree() != *l {
                    return Err(Error::DegreeMismatch {
                        left: p.degree(),
                        right: *l,
                    });
                }
                Ok(p.lex_rank())
            }
            Domain::Group(g) => g.index_of(token.trim()),
        }
    }

    fn check(&self, a: usize) -> Result<usize> {
        let order = self.order();
        if a < order {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange { index: a, order })
        }
    }
}

/// A finite sequence of elements of one group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSeries {
    domain: Domain,
    elements: Vec<usize>,
}

impl GroupSeries {
    pub fn new(domain: Domain, elements: Vec<usize>) -> Result<Self> {
        for &a in &elements {
            domain.check(a)?;
        }
        Ok(Self { domain, elements })
    }

    /// Ordinal patterns as elements of `Sym(L)`.
    pub fn from_ordinal(o: &OrdinalSeries) -> Result<Self> {
        let domain = Domain::symmetric(o.degree())?;
        let elements = o.patterns().iter().map(Permutation::lex_rank).collect();
        Ok(Self { domain, elements })
    }

    pub fn from_labels<S: AsRef<str>>(group: Arc<FiniteGroup>, labels: &[S]) -> Result<Self> {
        let elements = labels
            .iter()
            .map(|l| group.index_of(l.as_ref()))
            .collect::<Result<_>>()?;
        Ok(Self {
            domain: Domain::Group(group),
            elements,
        })
    }

    /// One element per line; `#` starts a comment.
    pub fn parse(domain: Domain, text: &str) -> Result<Self> {
        let mut elements = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let a = domain
                .parse_element(line)
                .map_err(|e| Error::format(i + 1, e.to_string()))?;
            elements.push(a);
        }
        Ok(Self { domain, elements })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &a in &self.elements {
            writeln!(out, "{}", self.domain.label(a)).unwrap();
        }
        out
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub(crate) fn check_aligned(alpha: &GroupSeries, beta: &GroupSeries) -> Result<()> {
    if alpha.domain != beta.domain {
        return Err(Error::GroupMismatch);
    }
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch {
            left: alpha.len(),
            right: beta.len(),
        });
    }
    Ok(())
}

/// Which side the transcript multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `τ_t = b_t ∗ a_t⁻¹`, so that `τ_t ∗ a_t = b_t`.
    Right,
    /// `τ_t = a_t⁻¹ ∗ b_t`, so that `a_t ∗ τ_t = b_t`.
    Left,
}

/// Element-wise transcript of `α` into `β`.
pub fn transcript_series(alpha: &GroupSeries, beta: &GroupSeries, side: Side) -> Result<GroupSeries> {
    check_aligned(alpha, beta)?;
    let d = &alpha.domain;
    let elements = alpha
        .elements
        .iter()
        .zip(&beta.elements)
        .map(|(&a, &b)| match side {
            Side::Right => d.mul(b, d.inv(a)),
            Side::Left => d.mul(d.inv(a), b),
        })
        .collect();
    Ok(GroupSeries {
        domain: d.clone(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_klein;
    use crate::perm::Metric;

    fn sym_series(l: usize, forms: &[&str]) -> GroupSeries {
        GroupSeries::parse(Domain::Symmetric(l), &forms.join("\n")).unwrap()
    }

    #[test]
    fn symmetric_domain_matches_composition() {
        let d = Domain::Symmetric(3);
        let sym = crate::group::build_symmetric(3).unwrap();
        for a in 0..6 {
            assert_eq!(d.inv(a), sym.inv(a).unwrap());
            for b in 0..6 {
                assert_eq!(d.mul(a, b), sym.op(a, b).unwrap());
            }
        }
        assert_eq!(d.label(3), "2 3 1");
        assert_eq!(d.order(), 6);
    }

    #[test]
    fn transcripts() {
        let a = sym_series(6, &["462531"]);
        let b = sym_series(6, &["236514"]);
        let tau = transcript_series(&a, &b, Side::Left).unwrap();
        let p = Permutation::from_lex_rank(6, tau.elements()[0]).unwrap();
        assert_eq!(p, "462531".parse::<Permutation>().unwrap().relative_to(&"236514".parse().unwrap()).unwrap());
        assert_eq!(Metric::Kendall.norm(&p), 8);

        let same = transcript_series(&a, &a, Side::Right).unwrap();
        assert_eq!(same.elements(), [0]);

        let k = Arc::new(build_klein());
        let x = GroupSeries::from_labels(k.clone(), &["a"]).unwrap();
        let y = GroupSeries::from_labels(k.clone(), &["c"]).unwrap();
        let tau = transcript_series(&x, &y, Side::Right).unwrap();
        assert_eq!(tau.to_text(), "b\n");
    }

    #[test]
    fn alignment_errors() {
        let a = sym_series(3, &["123", "213"]);
        let b = sym_series(3, &["123"]);
        assert!(matches!(transcript_series(&a, &b, Side::Left), Err(Error::LengthMismatch { .. })));
        let k = GroupSeries::from_labels(Arc::new(build_klein()), &["a", "b"]).unwrap();
        assert!(matches!(transcript_series(&a, &k, Side::Left), Err(Error::GroupMismatch)));
        assert!(GroupSeries::new(Domain::Symmetric(3), vec![6]).is_err());
        assert!(GroupSeries::parse(Domain::Symmetric(3), "1234\n").is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = sym_series(4, &["2314", "1234"]);
        assert_eq!(GroupSeries::parse(Domain::Symmetric(4), &a.to_text()).unwrap(), a);
    }
}
