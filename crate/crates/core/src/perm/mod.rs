//! Permutations of `{1, …, L}` and the Cayley and Kendall metrics on `Sym(L)`.
//!
//! Permutations are stored 0-based. Parsing and display use the usual 1-based
//! one-line form, so `"2 3 1"`, `"2,3,1"` and the compact `"231"` all denote
//! the map `1 ↦ 2, 2 ↦ 3, 3 ↦ 1`.

mod adjacency;
mod cycles;
mod inversions;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use adjacency::AdjacencyGraph;
pub use cycles::CycleFactorization;
pub use inversions::count_inversions_in;

/// Largest degree for which `enumerate_sym` materializes all of `Sym(L)`.
pub const MAX_ENUMERATED_DEGREE: usize = 8;

/// A bijection of `{0, …, L-1}` in one-line form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            image: (0..degree).collect(),
        }
    }

    /// The order-reversing permutation `L, L-1, …, 1`.
    pub fn reversal(degree: usize) -> Self {
        Self {
            image: (0..degree).rev().collect(),
        }
    }

    /// Transposition of the 0-based points `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        if i >= degree || j >= degree || i == j {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({i} {j}) in degree {degree}"
            )));
        }
        let mut image: Vec<usize> = (0..degree).collect();
        image.swap(i, j);
        Ok(Self { image })
    }

    pub fn from_zero_based(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line form".into()));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "value {} repeated or outside 1..={n}",
                    v + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn from_one_based(one_line: &[usize]) -> Result<Self> {
        if let Some(&bad) = one_line.iter().find(|&&v| v == 0) {
            return Err(Error::InvalidPermutation(format!(
                "value {bad} outside 1..={}",
                one_line.len()
            )));
        }
        Self::from_zero_based(one_line.iter().map(|v| v - 1).collect())
    }

    /// Builds a permutation without checking bijectivity.
    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::from_zero_based(image.clone()).is_ok());
        Self { image }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// 0-based images.
    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    /// Juxtaposed one-line form such as `462531`; only meaningful for degree ≤ 9.
    pub fn compact(&self) -> String {
        if self.degree() <= 9 {
            self.image.iter().map(|v| (v + 1).to_string()).collect()
        } else {
            self.to_string()
        }
    }

    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `other` acts first: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        Ok(Self {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Self { image: inv }
    }

    /// `self⁻¹ ∘ other`, computed without materializing the inverse twice.
    pub fn relative_to(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        Ok(Self {
            image: relative(&self.image, &other.image),
        })
    }

    pub fn cycles(&self) -> CycleFactorization {
        CycleFactorization::of(self)
    }

    /// Number of cycles including fixed points. Linear in the degree.
    pub fn count_cycles(&self) -> usize {
        cycles::count_cycles_in(&self.image)
    }

    /// Number of pairs `i < j` with `r_i > r_j`, by merge counting.
    pub fn count_inversions(&self) -> usize {
        count_inversions_in(&self.image)
    }

    /// Position of this permutation in the lexicographic order of `Sym(L)`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = self.image[i + 1..]
                .iter()
                .filter(|&&v| v < self.image[i])
                .count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }
}

impl Permutation {
    /// Inverse of [`Permutation::lex_rank`]: the `rank`-th permutation of
    /// `Sym(degree)` in lexicographic order.
    pub fn from_lex_rank(degree: usize, rank: usize) -> Result<Self> {
        let total = (1..=degree).try_fold(1usize, |acc, k| acc.checked_mul(k));
        if degree == 0 || total.is_none_or(|t| rank >= t) {
            return Err(Error::IndexOutOfRange {
                index: rank,
                order: total.unwrap_or(usize::MAX),
            });
        }
        let mut pool: Vec<usize> = (0..degree).collect();
        let mut radix = total.unwrap() / degree;
        let mut rest = rank;
        let mut image = Vec::with_capacity(degree);
        for k in (1..degree).rev() {
            image.push(pool.remove(rest / radix));
            rest %= radix;
            radix /= k;
        }
        image.push(pool[0]);
        Ok(Self { image })
    }
}

pub(crate) fn check_degrees(r: &Permutation, s: &Permutation) -> Result<()> {
    if r.degree() != s.degree() {
        return Err(Error::DegreeMismatch {
            left: r.degree(),
            right: s.degree(),
        });
    }
    Ok(())
}

/// One-line form of `r⁻¹ ∘ s` for equal-length 0-based images.
pub(crate) fn relative(r: &[usize], s: &[usize]) -> Vec<usize> {
    let mut r_inv = vec![0; r.len()];
    for (i, &v) in r.iter().enumerate() {
        r_inv[v] = i;
    }
    s.iter().map(|&v| r_inv[v]).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line().iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::parse(s, "empty permutation"));
        }
        let values: Vec<usize> = if tokens.len() == 1
            && tokens[0].len() > 1
            && tokens[0].chars().all(|c| ('1'..='9').contains(&c))
        {
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(*t, "expected a positive integer"))
                })
                .collect::<Result<_>>()?
        };
        Self::from_one_based(&values).map_err(|e| Error::parse(s.trim(), e.to_string()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// The two edit distances on `Sym(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Cayley,
    Kendall,
}

impl Metric {
    pub fn distance(self, r: &Permutation, s: &Permutation) -> Result<usize> {
        match self {
            Metric::Cayley => cayley_distance(r, s),
            Metric::Kendall => kendall_distance(r, s),
        }
    }

    /// Distance from the identity.
    pub fn norm(self, r: &Permutation) -> usize {
        self.norm_of_slice(r.as_slice())
    }

    pub(crate) fn norm_of_slice(self, image: &[usize]) -> usize {
        match self {
            Metric::Cayley => image.len() - cycles::count_cycles_in(image),
            Metric::Kendall => count_inversions_in(image),
        }
    }

    /// Largest value the metric takes on `Sym(degree)`.
    pub fn max_distance(self, degree: usize) -> usize {
        match self {
            Metric::Cayley => degree.saturating_sub(1),
            Metric::Kendall => degree * degree.saturating_sub(1) / 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Cayley => "cayley",
            Metric::Kendall => "kendall",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cayley" | "c" => Ok(Metric::Cayley),
            "kendall" | "k" => Ok(Metric::Kendall),
            _ => Err(Error::parse(s, "expected `cayley` or `kendall`")),
        }
    }
}

/// `d_C(r, s) = L − C(r⁻¹ ∘ s)`: the fewest transpositions turning `r` into `s`.
pub fn cayley_distance(r: &Permutation, s: &Permutation) -> Result<usize> {
    check_degrees(r, s)?;
    Ok(Metric::Cayley.norm_of_slice(&relative(&r.image, &s.image)))
}

/// `d_K(r, s) = I(r⁻¹ ∘ s)`: the fewest adjacent transpositions turning `r` into `s`.
pub fn kendall_distance(r: &Permutation, s: &Permutation) -> Result<usize> {
    check_degrees(r, s)?;
    Ok(count_inversions_in(&relative(&r.image, &s.image)))
}

pub fn norm(r: &Permutation, metric: Metric) -> usize {
    metric.norm(r)
}

/// All of `Sym(L)` in lexicographic order of one-line forms.
pub fn enumerate_sym(degree: usize) -> Result<Vec<Permutation>> {
    if !(1..=MAX_ENUMERATED_DEGREE).contains(&degree) {
        return Err(Error::DegreeOutOfRange {
            degree,
            min: 1,
            max: MAX_ENUMERATED_DEGREE,
        });
    }
    Ok((0..degree)
        .permutations(degree)
        .map(|image| Permutation { image })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lex_rank_round_trip() {
        for degree in 1..=6 {
            for (rank, perm) in enumerate_sym(degree).unwrap().iter().enumerate() {
                assert_eq!(perm.lex_rank(), rank);
                assert_eq!(&Permutation::from_lex_rank(degree, rank).unwrap(), perm);
            }
        }
        assert!(Permutation::from_lex_rank(3, 6).is_err());
        assert!(Permutation::from_lex_rank(0, 0).is_err());
    }

    #[test]
    fn compose_worked_example() {
        assert_eq!(p("512643").compose(&p("462531")).unwrap(), p("631425"));
        assert_eq!(p("231").compose(&p("312")).unwrap(), p("123"));
        let r = p("462531");
        assert_eq!(Permutation::identity(6).compose(&r).unwrap(), r);
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = p("123").compose(&p("1234")).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { left: 3, right: 4 }));
        assert!(matches!(
            cayley_distance(&p("12"), &p("123")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("236514").inverse(), p("512643"));
        assert_eq!(p("231").inverse(), p("312"));
        assert!(Permutation::identity(5).inverse().is_identity());
    }

    #[test]
    fn counts_on_worked_example() {
        let u = p("631425");
        assert_eq!(u.count_cycles(), 2);
        assert_eq!(u.count_inversions(), 8);
        assert_eq!(Permutation::identity(7).count_cycles(), 7);
        assert_eq!(Permutation::identity(7).count_inversions(), 0);
    }

    #[test]
    fn reversal_counts() {
        for l in 1..=8 {
            let rev = Permutation::reversal(l);
            assert_eq!(rev.count_cycles(), l / 2 + l % 2);
            assert_eq!(rev.count_inversions(), l * (l - 1) / 2);
        }
    }

    #[test]
    fn distances_on_worked_example() {
        let (r, s) = (p("462531"), p("236514"));
        assert_eq!(cayley_distance(&r, &s).unwrap(), 4);
        assert_eq!(kendall_distance(&r, &s).unwrap(), 8);
        assert_eq!(cayley_distance(&r, &r).unwrap(), 0);
        assert_eq!(cayley_distance(&p("231"), &p("312")).unwrap(), 2);
        assert_eq!(kendall_distance(&p("123"), &p("321")).unwrap(), 3);
        assert_eq!(kendall_distance(&p("2143"), &p("3412")).unwrap(), 6);
    }

    #[test]
    fn norms() {
        assert_eq!(norm(&Permutation::identity(4), Metric::Cayley), 0);
        assert_eq!(norm(&p("321"), Metric::Kendall), 3);
        let rel = p("462531").inverse().compose(&p("236514")).unwrap();
        assert_eq!(norm(&rel, Metric::Kendall), 8);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("2 3 1 4"), p("2314"));
        assert_eq!(p("2,3,1,4"), p("2314"));
        assert_eq!(p("1"), Permutation::identity(1));
        assert_eq!(p("10 9 8 7 6 5 4 3 2 1"), Permutation::reversal(10));
        assert!(matches!("1 1 2".parse::<Permutation>(), Err(Error::Parse { .. })));
        let err = "1 x 3".parse::<Permutation>().unwrap_err();
        assert!(err.to_string().contains("`x`"));
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(p("2314").to_string(), "2 3 1 4");
        assert_eq!(p("2314").compact(), "2314");
    }

    #[test]
    fn enumeration_order() {
        let sym3: Vec<String> = enumerate_sym(3).unwrap().iter().map(|p| p.compact()).collect();
        assert_eq!(sym3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(enumerate_sym(1).unwrap(), vec![Permutation::identity(1)]);
        let sym4 = enumerate_sym(4).unwrap();
        assert_eq!(sym4.len(), 24);
        assert_eq!(sym4[..3].iter().map(|p| p.compact()).collect::<Vec<_>>(), ["1234", "1243", "1324"]);
        assert_eq!(sym4[23], Permutation::reversal(4));
        assert!(matches!(enumerate_sym(9), Err(Error::DegreeOutOfRange { .. })));
        assert!(enumerate_sym(0).is_err());
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for l in 1..=6 {
            for (i, p) in enumerate_sym(l).unwrap().iter().enumerate() {
                assert_eq!(p.lex_rank(), i);
            }
        }
    }

    #[test]
    fn transposition_builder() {
        assert_eq!(Permutation::transposition(3, 0, 1).unwrap(), p("213"));
        assert!(Permutation::transposition(3, 1, 1).is_err());
        assert!(Permutation::transposition(3, 0, 3).is_err());
    }
}
