//! Finite-dimensional spaces with labeled bases and exact linear maps between
//! their tensor products.
//!
//! Every axiom in this crate is a multilinear identity, so it is enough to
//! compare both sides on basis tuples. Identities are compiled to compositions
//! of structure matrices and compared column by column; the first differing
//! column is the lexicographically first failing basis tuple.

mod map;
mod space;

pub use map::LinearMap;
pub use space::Space;
