//! Exact arithmetic in `F_p[x_1^±, ..., x_D^±]`.

pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod poly;

pub use ideal::{
    determinantal_profile, divides, ideal_contains, ideal_is_unit, nonzero_minors, DeterminantalProfile,
    IdealDescription, IdealSummary,
};
pub use matrix::LaurentMatrix;
pub use poly::{Exponent, LaurentPoly};
