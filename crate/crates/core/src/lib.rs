//! Finite-dimensional n-Lie algebras, their (generalized) representations,
//! and exact cochain-complex computations over the rationals.

pub mod algebra;
pub mod basis;
pub mod cli;
pub mod cochain;
pub mod cocycle;
pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod random;
pub mod rep;
pub mod scalar;

pub use algebra::{bracket_eval, check_fundamental_identity, FIViolation, NLieAlgebra, Space, Vector};
pub use basis::{CochainKey, CochainSpace, WedgeWord};
pub use cochain::{compose, delta_rho, graded_bracket, Cochain, RestrictedCochain};
pub use error::{Error, Result};
pub use rep::{DirectSumSpace, GeneralizedRepresentation, Matrix, MuElement, Representation};
pub use scalar::Scalar;
