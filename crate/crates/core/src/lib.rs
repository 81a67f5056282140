//! Exact computations with finite-dimensional Lie algebras given by
//! structure constants: contractions, symmetric pairs and their duals, and
//! polynomial families of brackets.
//!
//! All arithmetic is exact over Q(i). Reports that answer a question (a
//! Jacobi residue, a failed limit) are values; precondition failures are
//! [`Error`]s.

pub mod contraction;
mod error;
pub mod family;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod symmetric;
pub mod scalars;
pub mod so_catalog;
pub mod verify;

pub use error::Error;
pub use lie::{
    check_homomorphism, check_isomorphism, describe_vector, direct_sum, fingerprint, Field,
    Fingerprint, IsomorphismCheck, LieAlgebra, StructureConstants, ValidationReport,
};
pub use linalg::{LinearMap, Matrix, Subspace, Vector};
pub use so_catalog::{build_reference, build_so, build_theta, SOParams, SoPair};
pub use symmetric::{Involution, SymmetricPair};
pub use scalars::{GaussianRational, Polynomial, Rational};
