//! Brauer configuration algebras and their combinatorial satellites.
//!
//! The crate is organised around a single data model, the
//! [`config::BrauerConfiguration`] (vertices, ordered polygon multisets and a
//! multiplicity map), and the machinery that grows out of it:
//!
//! * [`field`] — exact arithmetic in `Z2[x]/<p(x)>` for an irreducible `p`,
//!   the substrate of all mutations.
//! * [`config`] — the configuration model itself: valencies, successor
//!   sequences, words and messages.
//! * [`algebra`] — the induced Brauer quiver, special cycles, admissible-ideal
//!   generators, dimension formulas and basis enumeration.
//! * [`mutation`] — seeds and mutations over `GF(2^n)`, Brauer clusters,
//!   orbit periodicity, and the AES-128 key-schedule specialisation.
//! * [`dioph`] — numerical semigroups, Frobenius numbers, denumerants, and
//!   the paired linear systems extracted from configuration messages.
//! * [`gt`] — Gelfand-Tsetlin pattern enumeration, monotone triangles,
//!   hearts and their posets, and the `gt(n)` equations.
//! * [`automata`] — the nondeterministic automaton attached to a Brauer
//!   configuration algebra, with acceptance filtered by the ideal.
//!
//! Everything is exact integer arithmetic; the crate is `no_std` (with
//! `alloc`) and has no platform dependencies, so results are bit-identical
//! across targets.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod automata;
pub mod config;
pub mod dioph;
pub mod field;
pub mod gt;
pub mod mutation;
pub mod rng;

pub use config::BrauerConfiguration;
pub use field::{FieldElement, FieldSpec};
