//! Translation-invariant Pauli subalgebras as modules over the Laurent ring.

pub mod algebra;
pub mod spec;
pub mod zoo;

pub use algebra::{
    brauer_tensor, build_projector, check_invertible, commutant_generators, commutation_matrix, decompose_local,
    from_antihermitian, pairing, same_span, span_contains, tensor_permutation, DecompositionProjector,
    InvertibilityCertificate,
};
pub use spec::{symplectic_form, GeneratorJson, SpecJson, SubalgebraSpec};
pub use zoo::{builtin_model, builtin_spec, HamiltonianModel};
