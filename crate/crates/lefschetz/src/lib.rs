//! Combinatorial Lefschetz numbers of cell sets in finite simplicial complexes.
//!
//! Cell sets are arbitrary unions of open simplices. For a simplicial self-map the number
//! `lambda_comb` is the chain trace restricted to those cells; it is additive, agrees with the
//! Lefschetz number on invariant subcomplexes, and certifies fixed points when nonzero.

pub mod chain;
pub mod complex;
pub mod corpus;
pub mod engine;
pub mod io;
pub mod linalg;
pub mod properties;
pub mod random;
pub mod torus;
pub mod unbounded;
