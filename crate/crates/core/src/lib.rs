//! Geometric and cyclic descents on involutions, matchings and standard
//! Young tableaux.
//!
//! The crate provides the Robinson–Schensted correspondence, jeu de taquin,
//! Sundaram's bijection between fixed-point-free involutions and oscillating
//! tableaux, the Chen–Deng–Du–Stanley–Yan involution swapping crossings and
//! nestings, and the composite bijection `ι̂` on `I_{n,k}` that carries
//! geometric descents of a matching to standard descents of an involution.
//! On top of these sit cyclic descent extensions on `I_{n,k,j}` and
//! `SYT_{n,k,j}` and an exhaustive verification harness for the
//! equidistribution and Schur-positivity identities they satisfy.
//!
//! Everything is exact and deterministic; enumerations come out in a fixed
//! canonical order.

pub mod bijection;
pub mod cli;
pub mod cyclic;
pub mod descent;
pub mod error;
pub mod matching;
pub mod oscillating;
pub mod perm;
pub mod report;
pub mod symfun;
pub mod tableau;

pub use descent::DescentSet;
pub use error::{Error, Result};
pub use matching::Matching;
pub use oscillating::OscillatingTableau;
pub use perm::Permutation;
pub use tableau::{Shape, StandardTableau};

/// Largest ambient size supported by the bitmask descent sets.
pub const MAX_N: usize = 127;
