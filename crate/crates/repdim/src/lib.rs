//! Dimensions attached to highest weights: the Weyl dimension formula, the
//! dimension of the closed orbit in `P(V_λ)`, marked-diagram flag varieties, and
//! root membership.
//!
//! Weights of a reductive algebra are slices of [`WeightVector`], one per simple
//! factor. Torus factors carry no roots and contribute nothing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rootcore::{Basis, RootError, RootLength, RootSystem, SimpleType, WeightVector};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("weight is not dominant integral on factor {0}")]
    NonDominantWeight(usize),
    #[error("weight is zero on every factor")]
    ZeroWeight,
    #[error("no node is marked")]
    EmptyMarking,
    #[error("node {node} is out of range on factor {factor}")]
    BadNode { factor: usize, node: usize },
    #[error("expected one weight per simple factor ({expected}), got {found}")]
    WeightShape { expected: usize, found: usize },
    #[error("Weyl product is not integral: {0}")]
    NonIntegral(BigRational),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Half-sum of positive roots in fundamental coordinates: all ones.
pub fn weyl_vector(rs: &RootSystem, factor: usize) -> Result<WeightVector, RepError> {
    let f = rs.factor(factor)?;
    Ok(WeightVector::fundamental(factor, &vec![1; f.rank()]))
}

/// Half-sum of positive roots computed directly, in simple-root coordinates.
pub fn half_sum_positive_roots(rs: &RootSystem, factor: usize) -> Result<WeightVector, RepError> {
    let f = rs.factor(factor)?;
    let mut sum = vec![0i64; f.rank()];
    for b in f.positive_roots() {
        for (s, &c) in sum.iter_mut().zip(b) {
            *s += c as i64;
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    let coords = sum.into_iter().map(|s| BigRational::from_integer(s.into()) * &half).collect();
    Ok(WeightVector::new(factor, Basis::SimpleRoot, coords))
}

/// Fundamental coordinates of each factor's weight, checked for shape and dominance.
fn dominant_coords(rs: &RootSystem, lambda: &[WeightVector]) -> Result<Vec<Vec<BigRational>>, RepError> {
    let n = rs.factors().len();
    if lambda.len() != n {
        return Err(RepError::WeightShape { expected: n, found: lambda.len() });
    }
    let mut out = vec![Vec::new(); n];
    for w in lambda {
        let f = rs.convert_basis(w, Basis::FundamentalWeight)?;
        if f.coords.iter().any(|c| c.is_negative() || !c.is_integer()) {
            return Err(RepError::NonDominantWeight(w.factor));
        }
        if !out[w.factor].is_empty() {
            return Err(RepError::WeightShape { expected: n, found: lambda.len() });
        }
        out[w.factor] = f.coords;
    }
    Ok(out)
}

/// Weyl dimension formula `Π_{α>0} (λ+ϖ, α)/(ϖ, α)`, multiplied over factors.
pub fn weyl_dim(rs: &RootSystem, lambda: &[WeightVector]) -> Result<BigInt, RepError> {
    let coords = dominant_coords(rs, lambda)?;
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for (f, a) in rs.factors().iter().zip(&coords) {
        let shifted: Vec<BigRational> = a.iter().map(|x| x + BigRational::one()).collect();
        let rho = vec![BigRational::one(); f.rank()];
        for b in f.positive_roots() {
            num *= f.pair_fundamental_root(&shifted, b);
            den *= f.pair_fundamental_root(&rho, b);
        }
    }
    let d = num / den;
    if !d.is_integer() {
        return Err(RepError::NonIntegral(d));
    }
    Ok(d.to_integer())
}

/// Dimension of the closed orbit of `[v_λ]` in `P(V_λ)`: `#{α > 0 : (λ, α) ≠ 0}`.
pub fn orbit_dim(rs: &RootSystem, lambda: &[WeightVector]) -> Result<usize, RepError> {
    let coords = dominant_coords(rs, lambda)?;
    if coords.iter().all(|a| a.iter().all(|x| x.is_zero())) {
        return Err(RepError::ZeroWeight);
    }
    Ok(rs
        .factors()
        .iter()
        .zip(&coords)
        .map(|(f, a)| {
            f.positive_roots()
                .iter()
                .filter(|b| !f.pair_fundamental_root(a, b).is_zero())
                .count()
        })
        .sum())
}

/// Dimension of `G/P` for the parabolic given by marked nodes (1-based, per factor):
/// the number of positive roots with a nonzero coefficient on some marked node.
pub fn flag_dim_marked(rs: &RootSystem, marked: &[Vec<usize>]) -> Result<usize, RepError> {
    let n = rs.factors().len();
    if marked.len() != n {
        return Err(RepError::WeightShape { expected: n, found: marked.len() });
    }
    if marked.iter().all(|m| m.is_empty()) {
        return Err(RepError::EmptyMarking);
    }
    let mut total = 0;
    for (i, (f, m)) in rs.factors().iter().zip(marked).enumerate() {
        if let Some(&node) = m.iter().find(|&&k| k == 0 || k > f.rank()) {
            return Err(RepError::BadNode { factor: i, node });
        }
        total += f
            .positive_roots()
            .iter()
            .filter(|b| m.iter().any(|&k| b[k - 1] != 0))
            .count();
    }
    Ok(total)
}

/// Outcome of a root-membership test on a reductive algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootHit {
    pub factor: usize,
    pub length: RootLength,
}

/// `Some` iff the weight is supported on exactly one factor and is a root there.
pub fn is_root(rs: &RootSystem, v: &[WeightVector]) -> Result<Option<RootHit>, RepError> {
    let nonzero: Vec<&WeightVector> = v.iter().filter(|w| !w.is_zero()).collect();
    let [w] = nonzero.as_slice() else { return Ok(None) };
    Ok(rs.root_class(w)?.map(|length| RootHit { factor: w.factor, length }))
}

/// All assignments of `1..=bound` to the marked nodes (zeros elsewhere) whose
/// Weyl dimension equals `target`.
pub fn search_mark_coefficients(
    rs: &RootSystem,
    marked: &[Vec<usize>],
    target: &BigInt,
    bound: i64,
) -> Result<Vec<Vec<WeightVector>>, RepError> {
    flag_dim_marked(rs, marked)?;
    let slots: Vec<(usize, usize)> = marked
        .iter()
        .enumerate()
        .flat_map(|(f, m)| m.iter().map(move |&k| (f, k - 1)))
        .collect();
    let mut found = Vec::new();
    let mut values = vec![1i64; slots.len()];
    loop {
        let mut coords: Vec<Vec<i64>> = rs.factors().iter().map(|f| vec![0; f.rank()]).collect();
        for (&(f, k), &v) in slots.iter().zip(&values) {
            coords[f][k] = v;
        }
        let w: Vec<WeightVector> =
            coords.iter().enumerate().map(|(i, c)| WeightVector::fundamental(i, c)).collect();
        if &weyl_dim(rs, &w)? == target {
            found.push(w);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == values.len() {
                return Ok(found);
            }
            values[i] += 1;
            if values[i] <= bound {
                break;
            }
            values[i] = 1;
            i += 1;
        }
    }
}

/// Weight as a multiset of `(factor type, fundamental coordinates)`: two weights
/// with equal keys differ only by permuting isomorphic simple factors.
pub fn factor_multiset(
    rs: &RootSystem,
    v: &[WeightVector],
) -> Result<Vec<(SimpleType, Vec<BigRational>)>, RepError> {
    let mut out = Vec::new();
    for w in v {
        let f = rs.convert_basis(w, Basis::FundamentalWeight)?;
        out.push((rs.factor(w.factor)?.simple_type(), f.coords));
    }
    out.sort();
    Ok(out)
}
