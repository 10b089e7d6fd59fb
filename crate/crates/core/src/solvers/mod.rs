//! Cramer's rule with balance verification, and the Jacobi iteration over
//! pairs with a modulus.

mod cramer;
mod dominant;
mod jacobi;

pub use cramer::{cramer_solve, CramerResult};
pub use dominant::{dominant_structure, DominantStructure, DominantTrack};
pub use jacobi::{jacobi_solve, JacobiState};
