//! Schur partitions, Alladi partitions, and the bijection between them.
//!
//! A Schur partition has consecutive parts differing by at least 3 and never
//! contains two consecutive multiples of 3. An Alladi partition has only odd
//! parts, each repeated at most twice. Both carry the statistic
//! `m = #parts + #even parts`, and for every `(m, n)` the two classes have the
//! same size. This crate builds the explicit bijection [`maps::f`] together
//! with everything it is assembled from:
//!
//! - [`partition`]: the [`Partition`] value type, class predicates and statistics
//! - [`enumeration`]: brute-force generators used as ground truth
//! - [`factorization`]: generic and refined factorizations, minimal segments,
//!   codewords and quadruples
//! - [`maps`]: grouping maps, reduction maps, `phi`, `f` and their inverses
//! - [`poly`]: exact bivariate polynomials and the Alladi-Schur polynomials
//! - [`trace`]: the 2-modular graph picture of `f`
//! - [`verify`]: exhaustive verification suites

pub mod enumeration;
pub mod error;
pub mod factorization;
pub mod maps;
pub mod partition;
pub mod poly;
pub mod trace;
pub mod verify;

pub use error::{Error, Result};
pub use factorization::{Factor, Orientation, Quadruple, RefinedFactorization};
pub use maps::DomainIndex;
pub use partition::{ClassKind, ClassTag, Classification, Partition};
pub use poly::BivariatePoly;
pub use trace::TwoModularGraph;
