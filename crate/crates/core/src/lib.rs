//! Exact computer algebra for translation-invariant Pauli subalgebras on
//! `Z^D`: invertibility, decomposition projectors, commutants, lifted
//! Clifford QCA, a finite-lattice brute-force oracle, and an anyon lab for
//! commuting Pauli Hamiltonians.

pub mod anyon;
pub mod cli;
pub mod error;
pub mod field;
pub mod finite;
pub mod laurent;
pub mod pauli;
pub mod qca;

pub use error::{Error, Result};
