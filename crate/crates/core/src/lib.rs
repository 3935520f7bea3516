//! Valuated matroids on finite ground sets and the uniform semimodular
//! lattices of integer points in their tropical linear spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`set`] and [`matroid`]: ground sets, bitset subsets and matroids given by
//!   explicit base families (rank, closure, loops, parallel classes, flats).
//! - [`valuation`]: the valuated matroid itself, exchange validation,
//!   translation by integer vectors, maximizer matroids, local-search
//!   maximization, simplification and projective equivalence.
//! - [`tropical`]: membership in the tropical linear space under both the
//!   loop-free and the twice-attained definitions, floors and flat-chain
//!   decompositions of rational points, tight-span normalisation.
//! - [`lattice`]: the lattice of integer points, realised implicitly
//!   (height, covers, co-covers, meet, join, intervals, segments).
//! - [`ends`]: rays, the ultrametrics they induce, coordinates relative to a
//!   basepoint, and the matroids at a point and at infinity.
//! - [`reconstruct`]: skeleton projections and the valuation read back off the
//!   lattice.
//! - [`generators`]: tree metrics, determinant degrees of polynomial matrices
//!   and seeded random instances.
//! - [`oracle`]: slow brute-force references used to cross-check the above.
//!
//! Everything is exact integer or rational arithmetic. The crate is `no_std`
//! and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod caps;
pub mod ends;
pub mod error;
pub mod generators;
pub mod lattice;
pub mod matroid;
pub mod oracle;
pub mod point;
pub mod reconstruct;
pub mod set;
pub mod tropical;
pub mod valuation;

pub use caps::Caps;
pub use error::{Error, ErrorKind, Result};
pub use lattice::LatticePoint;
pub use matroid::BaseFamily;
pub use point::{Point, Rational, RationalPoint};
pub use set::{ElementSet, GroundSet};
pub use valuation::Valuation;
