//! Cayley embeddings `Φ: G → Sym(|G|)` and the distances they induce on `G`.
//!
//! With elements numbered `0..n` by their position in the table, each element
//! `a` is sent to a permutation of those positions:
//!
//! * left translation `Λ_a(b) = a ∗ b` (row `a` of the table),
//! * right translation `R_a(b) = b ∗ a⁻¹`,
//! * adjoint action `Ad_a(b) = a ∗ b ∗ a⁻¹`.
//!
//! `D^(Φ)(a, b) = d(Φ(a), Φ(b))` for `d` the Cayley or Kendall metric.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SymmetricGroup};
use crate::matrix::{DistanceMatrix, MAX_MATRIX_ORDER};
use crate::perm::{relative, Metric, Permutation};

/// Orders up to this size get an exhaustive homomorphism check.
const EXHAUSTIVE_CHECK_ORDER: usize = 64;
const SPOT_CHECK_PAIRS: usize = 1000;
const SPOT_CHECK_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Left,
    Right,
    Adjoint,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Left => "left",
            Variant::Right => "right",
            Variant::Adjoint => "adjoint",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" => Ok(Variant::Left),
            "right" => Ok(Variant::Right),
            "adjoint" | "ad" => Ok(Variant::Adjoint),
            _ => Err(Error::parse(s, "expected `left`, `right` or `adjoint`")),
        }
    }
}

/// Images of every element under the chosen action, without any injectivity
/// requirement. For the adjoint action the elements with identity image form
/// the center of the group.
pub fn action_images(group: &FiniteGroup, variant: Variant) -> Vec<Permutation> {
    let n = group.order();
    (0..n)
        .map(|a| {
            let a_inv = group.inverse_of(a);
            let image = (0..n)
                .map(|b| match variant {
                    Variant::Left => group.mul(a, b),
                    Variant::Right => group.mul(b, a_inv),
                    Variant::Adjoint => group.mul(group.mul(a, b), a_inv),
                })
                .collect();
            Permutation::from_vec_unchecked(image)
        })
        .collect()
}

/// An injective homomorphism of a finite group into `Sym(|G|)`.
#[derive(Clone, Debug)]
pub struct CayleyEmbedding {
    group: FiniteGroup,
    variant: Variant,
    images: Vec<Permutation>,
}

impl CayleyEmbedding {
    pub fn new(group: FiniteGroup, variant: Variant) -> Result<Self> {
        let images = action_images(&group, variant);
        let n = group.order();

        let mut seen = std::collections::HashMap::with_capacity(n);
        for (a, image) in images.iter().enumerate() {
            if let Some(b) = seen.insert(image.as_slice(), a) {
                return match variant {
                    Variant::Adjoint => Err(Error::AdjointNotInjective {
                        a: group.label(b).to_string(),
                        b: group.label(a).to_string(),
                    }),
                    _ => Err(Error::InvalidEmbedding(format!(
                        "elements {} and {} share an image",
                        group.label(b),
                        group.label(a)
                    ))),
                };
            }
        }

        let check = |a: usize, b: usize| -> Result<()> {
            let composed = images[a].compose(&images[b])?;
            if composed != images[group.mul(a, b)] {
                return Err(Error::InvalidEmbedding(format!(
                    "image of {}∗{} is not the composition of the images",
                    group.label(a),
                    group.label(b)
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_CHECK_ORDER {
            for a in 0..n {
                for b in 0..n {
                    check(a, b)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
            for _ in 0..SPOT_CHECK_PAIRS {
                check(rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        if !images[group.identity()].is_identity() {
            return Err(Error::InvalidEmbedding("identity is not mapped to the identity".into()));
        }

        Ok(Self {
            group,
            variant,
            images,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn image(&self, a: usize) -> Result<&Permutation> {
        Ok(&self.images[self.group.check_index(a)?])
    }

    /// `D^(Φ)(a, b) = d(Φ(a), Φ(b))`, evaluated on the degree-`|G|` images.
    pub fn distance(&self, metric: Metric, a: usize, b: usize) -> Result<usize> {
        self.group.check_index(a)?;
        self.group.check_index(b)?;
        Ok(metric.norm_of_slice(&relative(
            self.images[a].as_slice(),
            self.images[b].as_slice(),
        )))
    }

    /// `D^(Φ)(e, c)` for every element `c`, i.e. the norms `‖Φ(c)‖`.
    pub fn identity_row(&self, metric: Metric) -> Vec<usize> {
        use rayon::prelude::*;
        self.images
            .par_iter()
            .map(|img| metric.norm_of_slice(img.as_slice()))
            .collect()
    }

    /// Full `|G| × |G|` matrix, using `D(a, b) = D(e, a⁻¹ ∗ b)`.
    pub fn distance_matrix(&self, metric: Metric) -> Result<DistanceMatrix> {
        if self.order() > MAX_MATRIX_ORDER {
            return Err(Error::Unsupported(format!(
                "distance matrices are limited to order {MAX_MATRIX_ORDER}"
            )));
        }
        let norms = self.identity_row(metric);
        let g = &self.group;
        Ok(
            DistanceMatrix::from_fn(g.labels().to_vec(), metric.name(), |a, b| {
                norms[g.mul(g.inverse_of(a), b)]
            })?
            .with_variant(Some(self.variant.name().to_string())),
        )
    }

    /// Sorted set of realized values `{D(e, c) : c ∈ G}`.
    pub fn admissible_distances(&self, metric: Metric) -> Vec<usize> {
        let mut row = self.identity_row(metric);
        row.sort_unstable();
        row.dedup();
        row
    }

    /// Upper bound for `D^(Φ)`: the maximum of the metric on `Sym(|G|)`.
    pub fn bound(&self, metric: Metric) -> usize {
        metric.max_distance(self.order())
    }
}

pub fn embed(group: &FiniteGroup, variant: Variant) -> Result<CayleyEmbedding> {
    CayleyEmbedding::new(group.clone(), variant)
}

pub fn group_distance(emb: &CayleyEmbedding, metric: Metric, a: usize, b: usize) -> Result<usize> {
    emb.distance(metric, a, b)
}

pub fn distance_matrix(emb: &CayleyEmbedding, metric: Metric) -> Result<DistanceMatrix> {
    emb.distance_matrix(metric)
}

pub fn admissible_distances(emb: &CayleyEmbedding, metric: Metric) -> Vec<usize> {
    emb.admissible_distances(metric)
}

/// Outcome of comparing `D_K^(Λ)` with `d_K` on every pair of `Sym(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingCheck {
    pub degree: usize,
    pub pairs_checked: usize,
    /// `Some(k)` when `D_K^(Λ) = k · d_K` on all pairs.
    pub factor: Option<usize>,
    /// First pair that breaks proportionality, as `(r, s, D_K^(Λ), d_K)`.
    pub witness: Option<(Permutation, Permutation, usize, usize)>,
}

pub const SCALING_DEGREES: std::ops::RangeInclusive<usize> = 3..=5;

/// Checks proportionality of the left-embedded Kendall distance to the
/// Kendall distance on `Sym(L)` over all ordered pairs, for `3 ≤ L ≤ 5`.
pub fn scaling_factor(degree: usize) -> Result<ScalingCheck> {
    if !SCALING_DEGREES.contains(&degree) {
        return Err(Error::Unsupported(format!(
            "scaling factors are only checked for L in 3..=5, got {degree}"
        )));
    }
    let sym = SymmetricGroup::new(degree)?;
    let emb = embed(sym.group(), Variant::Left)?;
    let n = sym.group().order();
    let mut factor: Option<usize> = None;
    let mut pairs_checked = 0;
    for a in 0..n {
        for b in 0..n {
            let embedded = emb.distance(Metric::Kendall, a, b)?;
            let base = Metric::Kendall.distance(sym.element(a), sym.element(b))?;
            pairs_checked += 1;
            let consistent = match factor {
                _ if base == 0 => embedded == 0,
                Some(k) => embedded == k * base,
                None if embedded > 0 && embedded % base == 0 => {
                    factor = Some(embedded / base);
                    true
                }
                None => false,
            };
            if !consistent {
                return Ok(ScalingCheck {
                    degree,
                    pairs_checked,
                    factor: None,
                    witness: Some((sym.element(a).clone(), sym.element(b).clone(), embedded, base)),
                });
            }
        }
    }
    Ok(ScalingCheck {
        degree,
        pairs_checked,
        factor,
        witness: None,
    })
}
