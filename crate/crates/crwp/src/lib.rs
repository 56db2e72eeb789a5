//! Executable word problems for finitely generated completely regular semigroups.
//!
//! A completely regular semigroup presented here is a finite meet-semilattice of
//! Rees matrix semigroups over finite or free groups, glued by structure maps
//! into translational hulls.  From such a presentation the [`pipeline`] module
//! constructs a pushdown automaton recognizing the unfolded word problem
//! `{ u#v^rev : u, v nonempty words over the generators, u = v in S }`,
//! one Green's H-class at a time: a finite-state filter for H-class membership,
//! a transducer rewriting mixed words into single-component words, the component
//! word-problem automaton, and a regular shape filter, combined with the closure
//! operations from [`automata`].
//!
//! Everything is cross-validated against brute-force evaluation: see
//! [`crossval`] and the `acceptance` integration test suite.

pub mod alphabet;
pub mod automata;
pub mod cli;
pub mod clifford;
pub mod config;
pub mod crossval;
pub mod error;
pub mod examples;
pub mod groups;
pub mod hull;
pub mod pipeline;
pub mod rees;

pub use alphabet::{Alphabet, Letter};
pub use clifford::{CrElement, CrSemigroup, Semilattice, StructureReport};
pub use error::{Error, Result};
pub use groups::{GroupElement, GroupOracle, Recognizer};
pub use hull::HullTriple;
pub use rees::{ReesComponent, ReesElement, ReesGenerator};
