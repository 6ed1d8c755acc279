//! Exact linear algebra for entwining structures, factorization structures and
//! Yang–Baxter type operators on finite-dimensional spaces.

pub mod checks;
pub mod constructions;
pub mod entwine;
pub mod error;
#[cfg(test)]
mod fixtures;
pub mod format;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod suite;
pub mod tambara;
pub mod tensorlin;
pub mod yangbaxter;

pub use error::{Error, Result};
pub use report::{Report, Verdict, Witness};
pub use scalar::{Field, Scalar};
pub use tensorlin::{LinearMap, Space};
