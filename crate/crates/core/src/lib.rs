//! Skew Schur polynomials, their lattice-path models and the bicoloured
//! overlay calculus used to prove and check quadratic identities between
//! them.

pub mod error;
pub mod identities;
pub mod overlay;
pub mod partition;
pub mod par;
pub mod paths;
pub mod poly;
pub mod render;
pub mod schur;
pub mod selftest;
pub mod tableau;

pub use error::{Error, Result};
pub use num_bigint;
pub use partition::{Partition, PointSet, SkewShape, StripSpec};
pub use paths::{LatticePath, PathFamily, Point};
pub use poly::{Monomial, Polynomial};
pub use tableau::Tableau;
