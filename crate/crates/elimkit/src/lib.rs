//! Exact elimination toolkit: Sylvester and Macaulay resultants,
//! discriminants, divided differences, and a seeded verifier for a catalog
//! of iterated resultant/discriminant factorization identities.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod harness;
pub mod identities;
pub mod macaulay;
pub mod multipoly;
pub mod sylvester;

pub use error::{ElimError, Result};
