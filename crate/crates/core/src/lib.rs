//! Symmetric-function and random-matrix toolkit for reflection-eigenvalue
//! statistics of Andreev quantum dots coupled through non-ideal leads.
//!
//! The layers, bottom up:
//!
//! - [`partitions`]: the index set of every series.
//! - [`symfunc`]: Pochhammer symbols, hook products, Jack and Schur polynomials.
//! - [`hypergeom`]: hypergeometric functions of matrix argument, Selberg-type
//!   closed forms and the Jacobi integral representation.
//! - [`ensembles`]: joint densities of reflection eigenvalues and their normalization.
//! - [`sampling`]: Haar measure on `O(n)`, `SO(n)`, `Sp(n)` and a Metropolis chain
//!   for the Poisson kernel.
//! - [`pfaffian`]: Pfaffians, skew-orthogonal polynomials and the Pfaffian form of
//!   the quaternion density.
//! - [`verify`] and [`cli`]: the named check suite and experiment driver.

pub mod cli;
pub mod ensembles;
pub mod error;
pub mod hypergeom;
pub mod partitions;
pub mod pfaffian;
pub mod quadrature;
pub mod sampling;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Cell, Partition};
pub use scalar::{JackIndex, Scalar};
