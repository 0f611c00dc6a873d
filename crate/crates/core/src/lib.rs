//! Finite residuated lattices, fuzzy relations between finite index sets,
//! and the operator calculus they induce.
//!
//! The crate works at "desk scale": carriers, index sets and operator tables
//! are small enough that every law is checked *exhaustively* rather than
//! proved. The modules layer as follows:
//!
//! - [`lattice`] — carriers: bounded lattices with a residuated product,
//!   classification into BL/MV, derived MV operations.
//! - [`relation`] — fuzzy relations `I×J → A` with reflexivity/symmetry/
//!   transitivity reports.
//! - [`vector`] — fuzzy subsets `A^I` with pointwise operations and a
//!   canonical enumeration order.
//! - [`operator`] — the four operators a relation induces, adjoint pairs and
//!   their verification, mapping classification, relation recovery, and
//!   closure/interior decomposition.
//! - [`fca`] — formal concept analysis over a fuzzy incidence relation.
//! - [`temporal`] — tense operator pairs on time frames, axiom suites,
//!   frame correspondences, and monadic operators from fuzzy equivalences.
//! - [`files`] — the JSON/CSV file formats shared with the CLI.
//!
//! Everything is immutable after construction; all functions are pure and
//! safe to call from multiple threads. Exhaustive sweeps run in canonical
//! order, so reported witnesses are deterministic (lexicographically first).

pub mod error;
pub mod fca;
pub mod files;
pub mod lattice;
pub mod operator;
pub mod relation;
pub mod temporal;
pub mod vector;

pub use error::{Error, Result};
pub use lattice::{Elem, LatticeKind, LatticeReport, LatticeSpec, LawWitness, Rational};
pub use operator::{InducedKind, OperatorTable, DEFAULT_BUDGET};
pub use relation::{FuzzyRelation, IndexSet};
pub use vector::FuzzyVector;
