//! Root systems of simple and reductive Lie algebras, built exactly from Cartan data.
//!
//! Roots are generated by root-string closure; all forms and basis changes use
//! arbitrary-precision rationals. See [`form`] for the node numbering.

pub mod alias;
pub mod form;
mod linalg;
mod system;
mod types;

pub use alias::AlgebraName;
pub use system::{
    coefficient_sum, is_nonnegative, Basis, FactorSystem, RootLength, RootSystem, WeightVector,
};
pub use types::{Family, ReductiveType, SimpleType};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("rank {rank} is not admissible for family {family:?}")]
    InvalidRank { family: Family, rank: usize },
    #[error("{0} is simply laced and has no short roots")]
    NoShortRoots(SimpleType),
    #[error("weights live on different factors ({left} vs {right})")]
    FactorMismatch { left: usize, right: usize },
    #[error("no simple factor with index {0}")]
    FactorIndex(usize),
    #[error("expected {expected} coordinates, found {found}")]
    Length { expected: usize, found: usize },
    #[error("weight must be in simple-root coordinates")]
    WrongBasis,
    #[error("alias: {0}")]
    Alias(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Builds the root system of `ty`.
pub fn build_root_system(ty: &ReductiveType) -> RootSystem {
    RootSystem::new(ty)
}

/// Rationals from a slice of integers.
pub fn rationals(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
}
