use std::sync::Arc;

use super::Domain;
use crate::embed::{CayleyEmbedding, Variant};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SymmetricGroup};
use crate::perm::{enumerate_sym, Metric, Permutation};
use crate::wordmetric::GeneratingSet;

/// A distance on the elements of one [`Domain`].
///
/// Callers guarantee that indices are below `domain().order()`.
pub trait DistanceProvider: Sync {
    fn domain(&self) -> &Domain;

    fn distance(&self, a: usize, b: usize) -> usize;

    /// Upper bound on any single distance.
    fn bound(&self) -> usize;

    /// Sorted set of values the distance can take.
    fn admissible(&self) -> Vec<usize>;

    /// Short name written into output metadata.
    fn descriptor(&self) -> String;
}

/// `d_C` or `d_K` on `Sym(L)`.
#[derive(Clone, Debug)]
pub struct PermutationMetric {
    metric: Metric,
    domain: Domain,
    elements: Vec<Permutation>,
}

impl PermutationMetric {
    pub fn new(degree: usize, metric: Metric) -> Result<Self> {
        Ok(Self {
            metric,
            domain: Domain::symmetric(degree)?,
            elements: enumerate_sym(degree)?,
        })
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }
}

impl DistanceProvider for PermutationMetric {
    fn domain(&self) -> &Domain {
        &self.domain
    }

    fn distance(&self, a: usize, b: usize) -> usize {
        self.metric
            .distance(&self.elements[a], &self.elements[b])
            .expect("elements share one degree")
    }

    fn bound(&self) -> usize {
        self.metric.max_distance(self.elements[0].degree())
    }

    fn admissible(&self) -> Vec<usize> {
        (0..=self.bound()).collect()
    }

    fn descriptor(&self) -> String {
        self.metric.name().to_string()
    }
}

/// `D^(Φ)` of a Cayley embedding, looked up through `D(a, b) = ‖Φ(a⁻¹ ∗ b)‖`.
#[derive(Clone, Debug)]
pub struct EmbeddedMetric {
    embedding: CayleyEmbedding,
    metric: Metric,
    domain: Domain,
    norms: Vec<usize>,
}

impl EmbeddedMetric {
    pub fn new(group: Arc<FiniteGroup>, variant: Variant, metric: Metric) -> Result<Self> {
        let embedding = CayleyEmbedding::new((*group).clone(), variant)?;
        Ok(Self::from_parts(embedding, metric, Domain::Group(group)))
    }

    /// The embedding of `Sym(L)` acting on ordinal-pattern series.
    pub fn on_symmetric(degree: usize, variant: Variant, metric: Metric) -> Result<Self> {
        let embedding = CayleyEmbedding::new(SymmetricGroup::new(degree)?.into_group(), variant)?;
        Ok(Self::from_parts(embedding, metric, Domain::Symmetric(degree)))
    }

    fn from_parts(embedding: CayleyEmbedding, metric: Metric, domain: Domain) -> Self {
        let norms = embedding.identity_row(metric);
        Self {
            embedding,
            metric,
            domain,
            norms,
        }
    }

    pub fn embedding(&self) -> &CayleyEmbedding {
        &self.embedding
    }

    /// Largest value actually taken, which may be below [`DistanceProvider::bound`].
    pub fn realized_max(&self) -> usize {
        self.norms.iter().copied().max().unwrap_or(0)
    }
}

impl DistanceProvider for EmbeddedMetric {
    fn domain(&self) -> &Domain {
        &self.domain
    }

    fn distance(&self, a: usize, b: usize) -> usize {
        let g = self.embedding.group();
        self.norms[g.mul(g.inverse_of(a), b)]
    }

    fn bound(&self) -> usize {
        self.embedding.bound(self.metric)
    }

    fn admissible(&self) -> Vec<usize> {
        self.embedding.admissible_distances(self.metric)
    }

    fn descriptor(&self) -> String {
        format!("embedded-{}-{}", self.metric, self.embedding.variant())
    }
}

/// Word metric of a generating set.
#[derive(Clone, Debug)]
pub struct WordMetric {
    set: GeneratingSet,
    domain: Domain,
}

impl WordMetric {
    pub fn new<S: AsRef<str>>(group: Arc<FiniteGroup>, generators: &[S]) -> Result<Self> {
        let set = GeneratingSet::from_labels((*group).clone(), generators)?;
        Ok(Self {
            set,
            domain: Domain::Group(group),
        })
    }

    /// Word metric on `Sym(L)` with generators given as one-line forms.
    pub fn on_symmetric<S: AsRef<str>>(degree: usize, generators: &[S]) -> Result<Self> {
        let group = SymmetricGroup::new(degree)?.into_group();
        let mut gens = Vec::new();
        for s in generators {
            let p: Permutation = s.as_ref().parse()?;
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: degree,
                });
            }
            gens.push(p.lex_rank());
        }
        Ok(Self {
            set: GeneratingSet::new(group, &gens)?,
            domain: Domain::Symmetric(degree),
        })
    }

    pub fn generating_set(&self) -> &GeneratingSet {
        &self.set
    }
}

impl DistanceProvider for WordMetric {
    fn domain(&self) -> &Domain {
        &self.domain
    }

    fn distance(&self, a: usize, b: usize) -> usize {
        self.set.distance(a, b).expect("index checked against the domain order")
    }

    fn bound(&self) -> usize {
        self.set.diameter()
    }

    fn admissible(&self) -> Vec<usize> {
        (0..=self.set.diameter()).collect()
    }

    fn descriptor(&self) -> String {
        format!("word[{}]", self.set.generator_labels().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_klein;

    #[test]
    fn embedded_on_symmetric_agrees_with_embedding() {
        let m = EmbeddedMetric::on_symmetric(3, Variant::Left, Metric::Kendall).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(
                    m.distance(a, b),
                    m.embedding().distance(Metric::Kendall, a, b).unwrap()
                );
            }
        }
        assert_eq!(m.admissible(), [0, 5, 10, 15]);
        assert_eq!(m.bound(), 15);
        assert_eq!(m.descriptor(), "embedded-kendall-left");
    }

    #[test]
    fn klein_embedded_maximum_is_forbidden() {
        let m = EmbeddedMetric::new(Arc::new(build_klein()), Variant::Left, Metric::Cayley).unwrap();
        assert_eq!(m.bound(), 3);
        assert_eq!(m.realized_max(), 2);
    }

    #[test]
    fn word_metric_on_sym3() {
        let w = WordMetric::on_symmetric(3, &["213", "132"]).unwrap();
        let base = PermutationMetric::new(3, Metric::Kendall).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(w.distance(a, b), base.distance(a, b));
            }
        }
        assert_eq!(w.descriptor(), "word[213,132]");
        assert!(WordMetric::on_symmetric(3, &["2134"]).is_err());
    }
}
