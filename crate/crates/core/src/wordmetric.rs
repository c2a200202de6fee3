//! Word metric `d_S` of a generating set: the fewest generators (or inverses)
//! in a chain `b = a ∗ s₁ ∗ … ∗ s_k`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::DistanceMatrix;

/// A generating set together with its word lengths from the identity.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    group: FiniteGroup,
    generators: Vec<usize>,
    alphabet: Vec<usize>,
    lengths: Vec<usize>,
}

impl GeneratingSet {
    /// Validates that `generators` generate `group`. The identity and
    /// duplicates are dropped; inverses are added to the search alphabet.
    pub fn new(group: FiniteGroup, generators: &[usize]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidParameter("generating set must not be empty".into()));
        }
        let mut gens = Vec::new();
        for &s in generators {
            group.check_index(s)?;
            if s != group.identity() && !gens.contains(&s) {
                gens.push(s);
            }
        }
        let mut alphabet = gens.clone();
        for &s in &gens {
            let s_inv = group.inverse_of(s);
            if !alphabet.contains(&s_inv) {
                alphabet.push(s_inv);
            }
        }

        let n = group.order();
        let mut dist = vec![usize::MAX; n];
        dist[group.identity()] = 0;
        let mut queue = VecDeque::from([group.identity()]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &s in &alphabet {
                let y = group.mul(x, s);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        if reached < n {
            return Err(Error::DoesNotGenerate { reachable: reached, order: n });
        }
        Ok(Self {
            group,
            generators: gens,
            alphabet,
            lengths: dist,
        })
    }

    pub fn from_labels<S: AsRef<str>>(group: FiniteGroup, labels: &[S]) -> Result<Self> {
        let gens = labels
            .iter()
            .map(|l| group.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, &gens)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Generators as supplied, minus the identity and repeats.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Generators and their inverses.
    pub fn alphabet(&self) -> &[usize] {
        &self.alphabet
    }

    pub fn generator_labels(&self) -> Vec<String> {
        self.generators.iter().map(|&s| self.group.label(s).to_string()).collect()
    }

    /// Word length of `a`, i.e. `d_S(e, a)`.
    pub fn word_length(&self, a: usize) -> Result<usize> {
        Ok(self.lengths[self.group.check_index(a)?])
    }

    /// `d_S(a, b) = |a⁻¹ ∗ b|_S`.
    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        self.group.check_index(a)?;
        self.group.check_index(b)?;
        Ok(self.lengths[self.group.mul(self.group.inverse_of(a), b)])
    }

    /// Largest word length (the diameter of the Cayley graph).
    pub fn diameter(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    pub fn distance_table(&self) -> Result<DistanceMatrix> {
        let g = &self.group;
        Ok(
            DistanceMatrix::from_fn(g.labels().to_vec(), "word", |a, b| {
                self.lengths[g.mul(g.inverse_of(a), b)]
            })?
            .with_generators(Some(self.generator_labels())),
        )
    }
}

pub fn validate_generates(group: &FiniteGroup, generators: &[usize]) -> Result<GeneratingSet> {
    GeneratingSet::new(group.clone(), generators)
}

pub fn word_distance(gs: &GeneratingSet, a: usize, b: usize) -> Result<usize> {
    gs.distance(a, b)
}

pub fn word_distance_table(gs: &GeneratingSet) -> Result<DistanceMatrix> {
    gs.distance_table()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_klein, SymmetricGroup};

    #[test]
    fn cyclic_table() {
        // With θ1 and its inverse θ3 in the alphabet, d_S(θi, θj) is the
        // circular distance min(|i − j|, n − |i − j|).
        for n in [4, 5, 6] {
            let gs = GeneratingSet::from_labels(build_cyclic(n).unwrap(), &["θ1"]).unwrap();
            let table = gs.distance_table().unwrap();
            for i in 0..n {
                for j in 0..n {
                    let d = i.abs_diff(j);
                    assert_eq!(table.get(i, j), d.min(n - d));
                }
            }
        }
        let gs = GeneratingSet::from_labels(build_cyclic(4).unwrap(), &["θ1"]).unwrap();
        assert_eq!(gs.alphabet(), [1, 3]);
        assert_eq!(gs.distance(0, 3).unwrap(), 1);
        assert_eq!(gs.distance(0, 2).unwrap(), 2);
    }

    #[test]
    fn chain_side_is_right_multiplication() {
        // b = a ∗ s is always one step; s ∗ a can be a non-adjacent
        // transposition away, e.g. three adjacent swaps.
        let sym = SymmetricGroup::new(3).unwrap();
        let g = sym.group().clone();
        let gs = GeneratingSet::new(g.clone(), &sym.adjacent_transpositions()).unwrap();
        let s = g.index_of("213").unwrap();
        assert!((0..6).all(|a| gs.distance(a, g.op(a, s).unwrap()).unwrap() == 1));
        assert!((0..6).any(|a| gs.distance(a, g.op(s, a).unwrap()).unwrap() == 3));
    }

    #[test]
    fn proper_subgroup_does_not_generate() {
        let err = GeneratingSet::from_labels(build_klein(), &["a"]).unwrap_err();
        assert!(matches!(err, Error::DoesNotGenerate { reachable: 2, order: 4 }));
        assert!(GeneratingSet::from_labels(build_klein(), &["a", "b"]).is_ok());
        assert!(GeneratingSet::new(build_klein(), &[]).is_err());
        assert!(GeneratingSet::new(build_klein(), &[7]).is_err());
    }

    #[test]
    fn trivial_group() {
        let gs = GeneratingSet::new(build_cyclic(1).unwrap(), &[0]).unwrap();
        assert!(gs.generators().is_empty());
        assert_eq!(gs.distance_table().unwrap().rows(), [vec![0]]);
    }

    #[test]
    fn transpositions_of_sym3() {
        let sym = SymmetricGroup::new(3).unwrap();
        let all = GeneratingSet::new(sym.group().clone(), &sym.transpositions()).unwrap();
        let g = sym.group();
        assert_eq!(all.distance(g.index_of("123").unwrap(), g.index_of("321").unwrap()).unwrap(), 1);
        let adjacent = GeneratingSet::new(g.clone(), &sym.adjacent_transpositions()).unwrap();
        assert_eq!(adjacent.diameter(), 3);
        let table = adjacent.distance_table().unwrap();
        assert_eq!(table.metric(), "word");
        assert_eq!(table.generators().unwrap(), ["213", "132"]);
    }
}
