//! Finite-lattice ground truth: symbolic data evaluated on tori and open
//! patches as `F_p` symplectic linear algebra.

pub mod dist;
pub mod instantiate;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod weyl;

pub use dist::{dist_bounded, pauli_distance, Chord, DistReport};
pub use instantiate::{
    generator_translates, instantiate_qca, instantiate_spec, instantiate_spec_on_sheet, omega, symbol_vector,
    FiniteSymplecticAutomorphism,
};
pub use lattice::FiniteLattice;
pub use linalg::FpSubspace;
pub use oracle::{
    boundary_algebra_finite, center, center_near_boundary, check_invertible_finite, check_vs, symplectic_complement,
    verify_blend, BlendReport, BoundaryReport, CenterReport, FiniteInvertibilityReport, VsReport,
};
pub use weyl::{PhasedAutomorphism, PhasedPauli};
