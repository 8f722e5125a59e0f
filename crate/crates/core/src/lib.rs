//! Rotation-system machinery for crossing-minimal drawings of `K_{5,n}`.
//!
//! A drawing of `K_{5,n}` is modelled combinatorially: the five black
//! vertices are labelled `0..5`, each white vertex `a_i` carries its rotation
//! (a cyclic permutation of the black labels) and every pair of white vertices
//! carries the number of crossings between their stars. Everything the crate
//! computes is a function of that data.
//!
//! Modules, bottom-up:
//!
//! - [`cyclic`]: cyclic permutations, adjacent transpositions, routes,
//!   antiroutes, antidistance and relabellings.
//! - [`drawing`]: abstract drawings, Zarankiewicz numbers, validation,
//!   cleanliness, cleaning and isomorphism.
//! - [`graph`]: small simple graphs (bitset adjacency) with the structural
//!   predicates used on cores.
//! - [`keycore`]: keys and cores of clean drawings.
//! - [`linsys`]: the linear system of a key and its positive integral
//!   solutions, in exact arithmetic.
//! - [`realize`]: the coupling engine relating white-pair antiroutes to
//!   black-pair antiroutes, with replayable refutation certificates.
//! - [`construct`]: the `D_{r,s}` family, Zarankiewicz drawings,
//!   superimposition of antipodal pairs and decomposition.
//! - [`classify`]: the bounded classification pipeline for antipodal-free
//!   optimal drawings.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod construct;
pub mod cyclic;
pub mod drawing;
mod error;
pub mod graph;
pub mod keycore;
pub mod linsys;
pub mod realize;

pub use error::Error;

/// Number of black vertices, i.e. the symbols a white rotation permutes.
pub const BLACK_VERTICES: usize = 5;

pub type Result<T, E = Error> = core::result::Result<T, E>;
