//! Diagram foldings as explicit node maps.
//!
//! A folding sends each simple root `β_i` of the source algebra to a simple root
//! of the target subalgebra (its restriction to the target's Cartan subalgebra).
//! Restricting a root adds up its coefficients over each fiber of the node map.

use std::fmt;
use std::str::FromStr;

use rootcore::{Basis, Family, RootError, RootSystem, SimpleType, WeightVector};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldError {
    #[error("no built-in folding `{0}`")]
    UnknownFolding(String),
    #[error("expected {expected} coordinates, got {found}")]
    Length { expected: usize, found: usize },
    #[error("{0:?} is not a root of the source")]
    NotARoot(Vec<i64>),
    #[error("weight must be given in simple-root coordinates")]
    WrongBasis,
    #[error(transparent)]
    Root(#[from] RootError),
}

/// The five foldings needed for the symmetric exceptions and `G2 ⊂ B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FoldingName {
    /// `A_{2l−1} → C_l`: `β_i, β_{2l−i} ↦ α_i` for `i < l`, `β_l ↦ α_l`.
    A2lm1ToCl(usize),
    /// `D_{p+1} → B_p`: `β_p, β_{p+1} ↦ α_p`, others fixed.
    Dpp1ToBp(usize),
    /// `E6 → F4`: `{1,5} ↦ 1`, `{2,4} ↦ 2`, `3 ↦ 3`, `6 ↦ 4`.
    E6ToF4,
    /// `D4 → G2` by triality: outer nodes `{1,3,4} ↦ 1`, centre `2 ↦ 2`.
    D4ToG2,
    /// `B3 → G2` from the restrictions through `D4`: `β_1, β_3 ↦ α_1`, `β_2 ↦ α_2`.
    B3ToG2,
}

impl FoldingName {
    pub fn all_small(max: usize) -> Vec<FoldingName> {
        let mut out: Vec<FoldingName> = (2..=max).map(FoldingName::A2lm1ToCl).collect();
        out.extend((2..=max).map(FoldingName::Dpp1ToBp));
        out.extend([FoldingName::E6ToF4, FoldingName::D4ToG2, FoldingName::B3ToG2]);
        out
    }
}

impl fmt::Display for FoldingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = builtin_folding(*self).map_err(|_| fmt::Error)?;
        write!(f, "{}->{}", m.source, m.target)
    }
}

impl FromStr for FoldingName {
    type Err = FoldError;

    /// `A5->C3`, `D4->B3`, `E6->F4`, `D4->G2`, `B3->G2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FoldError::UnknownFolding(s.to_string());
        let (a, b) = s.split_once("->").ok_or_else(bad)?;
        let a: SimpleType = a.trim().parse().map_err(|_| bad())?;
        let b: SimpleType = b.trim().parse().map_err(|_| bad())?;
        let name = match (a.family(), b.family()) {
            (Family::A, Family::C) if a.rank() == 2 * b.rank() - 1 => FoldingName::A2lm1ToCl(b.rank()),
            (Family::D, Family::B) if a.rank() == b.rank() + 1 => FoldingName::Dpp1ToBp(b.rank()),
            (Family::E6, Family::F4) => FoldingName::E6ToF4,
            (Family::D, Family::G2) if a.rank() == 4 => FoldingName::D4ToG2,
            (Family::B, Family::G2) if a.rank() == 3 => FoldingName::B3ToG2,
            _ => return Err(bad()),
        };
        Ok(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingMap {
    pub source: SimpleType,
    pub target: SimpleType,
    /// `node_map[i]` is the 0-based target node of source node `i`.
    pub node_map: Vec<usize>,
}

impl FoldingMap {
    /// Source nodes (0-based) over target node `k`.
    pub fn fiber_nodes(&self, k: usize) -> Vec<usize> {
        (0..self.node_map.len()).filter(|&i| self.node_map[i] == k).collect()
    }
}

pub fn builtin_folding(name: FoldingName) -> Result<FoldingMap, FoldError> {
    let bad = || FoldError::UnknownFolding(format!("{name:?}"));
    let (source, target, node_map) = match name {
        FoldingName::A2lm1ToCl(l) => {
            let s = SimpleType::a(2 * l - 1).map_err(|_| bad())?;
            let t = SimpleType::c(l).map_err(|_| bad())?;
            let map = (1..2 * l).map(|i| i.min(2 * l - i) - 1).collect();
            (s, t, map)
        }
        FoldingName::Dpp1ToBp(p) => {
            let s = SimpleType::d(p + 1).map_err(|_| bad())?;
            let t = SimpleType::b(p).map_err(|_| bad())?;
            let map = (0..=p).map(|i| i.min(p - 1)).collect();
            (s, t, map)
        }
        FoldingName::E6ToF4 => (
            SimpleType::exceptional(Family::E6)?,
            SimpleType::exceptional(Family::F4)?,
            vec![0, 1, 2, 1, 0, 3],
        ),
        FoldingName::D4ToG2 => (
            SimpleType::d(4)?,
            SimpleType::exceptional(Family::G2)?,
            vec![0, 1, 0, 0],
        ),
        FoldingName::B3ToG2 => (
            SimpleType::b(3)?,
            SimpleType::exceptional(Family::G2)?,
            vec![0, 1, 0],
        ),
    };
    Ok(FoldingMap { source, target, node_map })
}

/// Restriction of a source root (simple-root coordinates) to the target: target
/// coordinate `k` is the sum of the source coefficients over the fiber of `k`.
pub fn restrict_root(f: &FoldingMap, beta: &[i64]) -> Result<WeightVector, FoldError> {
    if beta.len() != f.node_map.len() {
        return Err(FoldError::Length { expected: f.node_map.len(), found: beta.len() });
    }
    let rs = RootSystem::simple(f.source);
    let as_i32: Vec<i32> = beta.iter().map(|&x| x as i32).collect();
    if !rs.factors()[0].is_root_coords(&as_i32) {
        return Err(FoldError::NotARoot(beta.to_vec()));
    }
    Ok(restrict_coords(f, beta))
}

fn restrict_coords(f: &FoldingMap, beta: &[i64]) -> WeightVector {
    let mut out = vec![0i64; f.target.rank()];
    for (&k, &c) in f.node_map.iter().zip(beta) {
        out[k] += c;
    }
    WeightVector::simple(0, &out)
}

/// All source roots (positive and negative) restricting to `w`, in ascending
/// lexicographic order of their simple-root coordinates.
pub fn fiber_over(f: &FoldingMap, w: &WeightVector) -> Result<Vec<Vec<i64>>, FoldError> {
    if w.basis != Basis::SimpleRoot {
        return Err(FoldError::WrongBasis);
    }
    if w.coords.len() != f.target.rank() {
        return Err(FoldError::Length { expected: f.target.rank(), found: w.coords.len() });
    }
    let rs = RootSystem::simple(f.source);
    let mut out: Vec<Vec<i64>> = rs.factors()[0]
        .positive_roots()
        .iter()
        .flat_map(|b| {
            let p: Vec<i64> = b.iter().map(|&x| x as i64).collect();
            let n: Vec<i64> = p.iter().map(|x| -x).collect();
            [p, n]
        })
        .filter(|b| restrict_coords(f, b).coords == w.coords)
        .collect();
    out.sort();
    Ok(out)
}

/// Restrictions of every positive source root, in the source's root order.
pub fn restricted_positive_roots(f: &FoldingMap) -> Vec<WeightVector> {
    let rs = RootSystem::simple(f.source);
    rs.factors()[0]
        .positive_roots()
        .iter()
        .map(|b| restrict_coords(f, &b.iter().map(|&x| x as i64).collect::<Vec<_>>()))
        .collect()
}
