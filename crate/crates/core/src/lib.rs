//! Permutation metrics on `Sym(L)`, their transport to finite groups through
//! Cayley embeddings, word metrics, and distances between group-valued time
//! series such as ordinal-pattern encodings of real data.
//!
//! ```
//! use groupdist::{kendall_distance, cayley_distance, Permutation};
//!
//! let r: Permutation = "462531".parse().unwrap();
//! let s: Permutation = "236514".parse().unwrap();
//! assert_eq!(cayley_distance(&r, &s).unwrap(), 4);
//! assert_eq!(kendall_distance(&r, &s).unwrap(), 8);
//! ```

pub mod cli;
pub mod embed;
pub mod error;
pub mod group;
pub mod matrix;
pub mod ordinal;
pub mod perm;
pub mod seriesmetrics;
pub mod simulate;
pub mod wordmetric;

pub use embed::{embed, scaling_factor, CayleyEmbedding, ScalingCheck, Variant};
pub use error::{Error, Result};
pub use group::{build_cyclic, build_klein, build_symmetric, FiniteGroup, SymmetricGroup};
pub use matrix::DistanceMatrix;
pub use ordinal::{ordinal_encode, pattern_histogram, OrdinalSeries, RealSeries, TiePolicy};
pub use perm::{
    cayley_distance, enumerate_sym, kendall_distance, norm, AdjacencyGraph, CycleFactorization, Metric,
    Permutation,
};
pub use wordmetric::GeneratingSet;
