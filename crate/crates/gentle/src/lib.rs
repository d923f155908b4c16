//! Geometric models for gentle algebras.
//!
//! Given a gentle algebra presented by a quiver with quadratic monomial
//! relations, this crate builds its marked ribbon surface, classifies objects of
//! the perfect derived category by graded curves, enumerates the standard
//! morphism basis, computes mapping cones and inverse Auslander-Reiten
//! translates combinatorially, and evaluates the Avella-Alaminos-Geiss invariant
//! in two independent ways. An exact linear-algebra oracle over explicit
//! complexes of projectives checks the combinatorial predictions.

#![allow(
    clippy::len_without_is_empty,
    clippy::needless_range_loop,
    clippy::wrong_self_convention
)]

pub mod ag;
pub mod algebra;
pub mod ar;
pub mod complex;
pub mod cones;
pub mod corpus;
pub mod curves;
pub mod error;
pub mod field;
pub mod morphisms;
pub mod ribbon;
pub mod strings;

pub use algebra::{Algebra, Path, Presentation, Violation};
pub use error::{Error, Result};
