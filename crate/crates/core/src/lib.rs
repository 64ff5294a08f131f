//! Exact ground-state analysis of the λ-model on the Cayley tree of order two.
//!
//! The tree's vertices are the reduced words of `G_2`, the free product of
//! three order-2 cyclic groups ([`group_words`]). Spins live in Φ = {1,2,3}
//! and interact along edges through the coupling table λ with energies
//! (a, b, c) ([`model`]). Periodic and weakly periodic configurations are
//! finite tables over the cosets of an index-two subgroup `H_A`
//! ([`configurations`]). The [`analysis`] module computes, for every such
//! configuration, the exact parameter region on which it is a ground state —
//! symbolically, via the realizable local coset patterns of [`tree`] — and
//! cross-checks every region against a brute-force oracle on finite trees.
//!
//! All arithmetic on energies is exact rational arithmetic; there are no
//! tolerances anywhere.

pub mod analysis;
pub mod configurations;
pub mod group_words;
pub mod model;
pub mod report;
pub mod tree;
