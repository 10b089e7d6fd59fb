//! Matrices over a pair: doubled determinants, adjoints, Laplace and
//! Cayley-Hamilton checks, quasi-inverses, Krasner determinants and the
//! text file format.

mod adjoint;
mod cayley_hamilton;
mod det;
mod io;
mod krasner;
mod laplace;
mod matrix;
mod quasi;

pub use adjoint::{adjoint, adjoint_projected};
pub use cayley_hamilton::{cayley_hamilton_check, char_poly_coefficients};
pub use det::{det_doubled, for_each_track, is_singular, permanent, signed_det, DoubledDet, Track};
pub use io::{format_matrix, parse_matrix};
pub use krasner::krasner_det_contains_zero;
pub use laplace::laplace_expand;
pub use matrix::{combinations, Caps, Matrix};
pub use quasi::{quasi_identity_check, quasi_inverse, QuasiInverse};
