//! Exact solver and enumerator for the finite-difference triangles of the
//! tangent and secant numbers.
//!
//! The library solves delta^2 f_n(k) + 4 f_{n-1}(k) = 0 under the four
//! boundary regimes by two independent exact methods, enumerates
//! alternating permutations with the grn statistic and increasing binary
//! trees with the pom/eoc statistics, builds the bivariate generating
//! function Z(x,y) with its closed forms, and cross-checks everything
//! against embedded OEIS snapshots.
//!
//! All arithmetic is exact (arbitrary-precision rationals); nothing ever
//! rounds. Every value is immutable after construction and all operations
//! are pure functions, safe to call from concurrent threads.

pub mod alternating;
pub mod exact;
pub mod genfun;
pub mod oeis;
pub mod report;
pub mod trees;
pub mod triangle;
pub mod verify;

pub use exact::Rational;
pub use triangle::{Kind, Regime, Triangle};
