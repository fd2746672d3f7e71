//! Constructions, on-line games and exact functions for 3-uniform
//! hypergraph Ramsey numbers.
//!
//! * [`graph`], [`tournament`], [`coloring`], [`oracle`], [`search`]: ground
//!   types and the bitset search kernels.
//! * [`game`]: the vertex on-line Ramsey game, the string-labelling builder
//!   and a library of painters.
//! * [`extraction`]: threshold extraction of monochromatic sets from a
//!   triple coloring, plus the upper-bound calculators.
//! * [`constructions`]: stepping-up, lift and tournament colorings and the
//!   small hypergraph families.
//! * [`exact`]: `T`, `g`, `F1`, `F2`, `d` with closed forms, recursions and
//!   brute-force oracles.
//!
//! Threshold arithmetic is generic over [`Scalar`]; the aliases below fix
//! the common instantiations.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod extraction;
pub mod game;
pub mod graph;
pub mod hash;
pub mod oracle;
pub mod oracle_spec;
pub mod scalar;
pub mod search;
pub mod tournament;
pub mod vertices;

pub use coloring::{ColorId, EdgeColoring};
pub use error::{Error, Result};
pub use graph::BitGraph;
pub use oracle::TripleColoring;
pub use scalar::Scalar;
pub use search::{SearchLimits, SearchMode, SearchOutcome};
pub use tournament::Tournament;
pub use vertices::VertexSet;

/// Floating scalar used by default throughout the CLI.
pub type Real = f64;

/// Exact scalar for threshold decisions and survivor-bound checks.
pub type Rational = num_rational::BigRational;

pub type ExtractionConfigF64<'a> = extraction::ExtractionConfig<'a, f64>;
pub type ExtractionConfigF32<'a> = extraction::ExtractionConfig<'a, f32>;
pub type ExactExtractionConfig<'a> = extraction::ExtractionConfig<'a, Rational>;
