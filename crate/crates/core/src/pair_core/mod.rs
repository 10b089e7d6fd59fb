//! The abstract pair interface and the notions derived from it.
//!
//! A pair is a carrier with a distinguished tangible set T and a null
//! layer A0 playing the role of zero. Concrete carriers implement
//! [`PairOps`]; [`PairAlgebra`] wraps them with cached enumerations and
//! kind detection.

mod algebra;
mod audit;
mod element;
mod relations;
mod structure;

pub use algebra::{split_top_level, Alg, Kind, PairAlgebra, PairOps};
pub use audit::{axiom_audit, AuditCheck, AuditReport};
pub use element::{Element, Layer, ModulusValue, Q};
pub use relations::{balances, balances_vec, circ, e_elements, surpasses0, tangibly_balances};
pub use structure::{
    characteristic, characteristic_with_cap, height, is_metatangible, multiple, reconstruct,
    uniform_presentation, CharacteristicProfile, PresentationForm, UniformPresentation,
    CHARACTERISTIC_CAP,
};
