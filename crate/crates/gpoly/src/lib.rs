#![forbid(unsafe_code)]
//! Exact-arithmetic computation of graph polynomial invariants.
//!
//! The crate computes flow and chromatic polynomials of abstract multigraphs
//! and Yamada polynomials of spatial ribbon-graph diagrams, entirely over
//! exact rings: arbitrary-precision integers and rationals, the golden ring
//! `Z[phi]` (`phi^2 = phi + 1`), the cyclotomic ring `Z[zeta]` with
//! `zeta = e^{i*pi/5}`, and the field `Z/5`.
//!
//! On top of the two polynomial engines sit verifiers for a family of exact
//! identities relating them: the golden identity for planar cubic graphs and
//! its spatial-diagram extension, mod-5 congruences, residue classes of
//! `F(0) mod 5`, snark divisibilities, Penrose-number properties, the
//! one-crossing expansion of near-planar graphs in the 4-point disk space,
//! and the free matrix semigroup certifying exponential growth of distinct
//! flow values. Every check is an exact ring equality or an exact sign
//! computation; floating point is never consulted.

pub mod diagram;
pub mod disk;
pub mod error;
pub mod flow;
pub mod graph;
pub mod identities;
pub mod nearplanar;
pub mod report;
pub mod rings;
pub mod semigroup;
pub mod yamada;

pub use error::{CheckError, DiagramError, GraphError, RingError};
