//! Linear algebra over semiring pairs.
//!
//! A pair is a semiring-like carrier with a tangible set and a null layer
//! standing in for zero. This crate provides concrete pairs, doubled
//! determinants and adjoints, dependence and rank analysis, and Cramer and
//! Jacobi solvers, together with a command-line front end.

pub mod cli;
pub mod error;
pub mod matrix_ops;
pub mod pair_core;
pub mod pair_instances;
pub mod rank_analysis;
pub mod solvers;

pub use error::{Error, Result};
