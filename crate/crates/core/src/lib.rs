//! Executable order theory around subfitness.
//!
//! * [`poset`], [`lattice`], [`iso`], [`enumerate`]: finite posets and
//!   (semi)lattices on 64-bit bitset rows, isomorphism, and enumeration up
//!   to isomorphism.
//! * [`subfit`]: join/meet subfitness, subfit elements, and the witness
//!   construction showing subfit elements of a distributive lattice are
//!   closed under joins.
//! * [`envelope`]: admissible subsets and the distributive lattice generated
//!   by a join-semilattice inside its lattice of admissible-closed upsets.
//! * [`duality`]: finite T0 spaces, compact opens, patch topology and
//!   Birkhoff duality.
//! * [`symbolic`]: exact finite/cofinite arithmetic over the naturals and
//!   the infinite counterexample semilattice and space.
//! * [`harness`]: exhaustive and sampled verification sweeps.

pub mod bitset;
pub mod catalog;
pub mod duality;
pub mod enumerate;
pub mod envelope;
pub mod error;
pub mod harness;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod subfit;
pub mod symbolic;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use iso::is_isomorphic;
pub use lattice::{
    is_distributive_join_semilattice, is_distributive_lattice, FiniteJoinSemilattice, FiniteLattice,
};
pub use poset::FinitePoset;
