//! Exact arithmetic on finite and cofinite subsets of ℕ, the infinite
//! distributive semilattice whose subfit elements are not closed under
//! joins, and the compactly based space dual to it.

pub mod counterexample;
pub mod finset;
pub mod space;

pub use counterexample::{classify, in_a, in_b, meet_a, TraceClass};
pub use finset::{FinOrCofin, Kind};
pub use space::{antiiso, in_qcop_x, qcop_x_inter, SymbolicOpen};
