//! Phase-tracked qudit Pauli Hamiltonians: commuting terms, syndromes,
//! string operators, topological spin and the Gauss-sum phase.

pub mod gauss;
pub mod hamiltonian;
pub mod spin;

pub use gauss::{gauss_sum_phase, GaussPhase, Spin};
pub use hamiltonian::{build_hamiltonian, HamiltonianInstance, Syndrome, SyndromeEntry};
pub use spin::{
    solve_hopping, spin_with_checks, staircase, topological_spin, Hopping, Junction, SpinReport, SpinResult,
};
