//! Exact homomorphism counting for uniform hypergraphs and the toolkit built
//! on top of it: link profiles, tensor constructions, Sidorenko exponent
//! witnesses and upper-bound certificates, domination and weak-norming tests
//! on step kernels, and small extremal-number searches.
//!
//! The crate is `no_std` and only needs `alloc`. All densities and
//! inequalities are decided on exact rationals; floating point appears only in
//! advisory ratio reports and in the heuristic search objective.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod domination;
pub mod embed;
mod error;
pub mod exact;
pub mod extremal;
pub mod hom;
pub mod hypergraph;

pub use error::{Error, Result};
pub use hom::{Density, HomConfig, Homomorphism};
pub use hypergraph::{DegreeStats, Hypergraph, Link, LinkProfile, PartiteHypergraph, Vertex};

/// Exact rational used for every density and bound.
pub type Rational = num_rational::BigRational;
