//! Finite-dimensional 3-Lie-Rinehart algebras over the rationals.
//!
//! Everything is given by exact structure constants on chosen bases. The
//! [`axioms`] module checks identities exhaustively on basis tuples,
//! [`constructions`] and [`derivations`] build new structures and certify
//! them, and [`format`] reads and writes the plain-text description used by
//! the command-line tool.

pub mod scalar;
pub mod linalg;
pub mod structure;
pub mod model;
pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod derivations;
pub mod sample;
pub mod format;
