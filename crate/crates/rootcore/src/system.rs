//! Root-string closure, distinguished roots, the invariant form and basis changes.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::form::{cartan_matrix, gram_matrix};
use crate::linalg::invert;
use crate::types::{ReductiveType, SimpleType};
use crate::RootError;

/// Coordinate basis of a weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    SimpleRoot,
    FundamentalWeight,
}

/// Length class of a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootLength {
    Long,
    Short,
}

/// A weight of one simple factor, in simple-root or fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub factor: usize,
    pub basis: Basis,
    pub coords: Vec<BigRational>,
}

impl WeightVector {
    pub fn new(factor: usize, basis: Basis, coords: Vec<BigRational>) -> Self {
        WeightVector { factor, basis, coords }
    }

    pub fn from_ints(factor: usize, basis: Basis, coords: &[i64]) -> Self {
        let coords = coords.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        WeightVector { factor, basis, coords }
    }

    pub fn fundamental(factor: usize, coords: &[i64]) -> Self {
        Self::from_ints(factor, Basis::FundamentalWeight, coords)
    }

    pub fn simple(factor: usize, coords: &[i64]) -> Self {
        Self::from_ints(factor, Basis::SimpleRoot, coords)
    }

    pub fn zero(factor: usize, rank: usize, basis: Basis) -> Self {
        WeightVector { factor, basis, coords: vec![BigRational::zero(); rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Support: 0-based indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }
}

/// Roots of one simple factor.
#[derive(Debug)]
pub struct FactorSystem {
    ty: SimpleType,
    gram: Vec<Vec<BigRational>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    inv_cartan: OnceLock<Vec<Vec<BigRational>>>,
}

impl FactorSystem {
    pub fn new(ty: SimpleType) -> Self {
        let cartan = cartan_matrix(ty);
        let positive = close_positive_roots(&cartan);
        let index = positive.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        FactorSystem { ty, gram: gram_matrix(ty), cartan, positive, index, inv_cartan: OnceLock::new() }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    /// Index of a positive root, if `coords` is one.
    pub fn positive_index(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root_coords(&self, coords: &[i32]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i32> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// `(α_i, α_i)/2` for each simple root.
    pub fn half_norm(&self, i: usize) -> BigRational {
        &self.gram[i][i] / BigRational::from_integer(2.into())
    }

    /// `(u, v)` for integer simple-root coordinates.
    pub fn form_int(&self, u: &[i32], v: &[i32]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj == 0 || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += &self.gram[i][j] * BigRational::from_integer(BigInt::from(ui * vj));
            }
        }
        acc
    }

    pub fn root_length(&self, coords: &[i32]) -> RootLength {
        let n = self.form_int(coords, coords);
        if n == BigRational::from_integer(2.into()) {
            RootLength::Long
        } else {
            RootLength::Short
        }
    }

    fn inverse_cartan(&self) -> &Vec<Vec<BigRational>> {
        self.inv_cartan.get_or_init(|| {
            // a = Aᵀ c, so c = (Aᵀ)⁻¹ a.
            let r = self.rank();
            let at: Vec<Vec<BigRational>> = (0..r)
                .map(|i| (0..r).map(|j| BigRational::from_integer(self.cartan[j][i].into())).collect())
                .collect();
            invert(&at).expect("Cartan matrix is nonsingular")
        })
    }

    /// Fundamental-weight coordinates `⟨v, α_j^∨⟩` of simple-root coordinates.
    pub fn simple_to_fundamental(&self, c: &[BigRational]) -> Vec<BigRational> {
        let r = self.rank();
        (0..r)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (i, ci) in c.iter().enumerate() {
                    if self.cartan[i][j] != 0 && !ci.is_zero() {
                        acc += ci * BigRational::from_integer(self.cartan[i][j].into());
                    }
                }
                acc
            })
            .collect()
    }

    pub fn fundamental_to_simple(&self, a: &[BigRational]) -> Vec<BigRational> {
        let inv = self.inverse_cartan();
        inv.iter()
            .map(|row| {
                let mut acc = BigRational::zero();
                for (x, y) in row.iter().zip(a) {
                    if !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc
            })
            .collect()
    }

    /// `(λ, β)` with `λ` in fundamental coordinates and `β` a root: `Σ a_i c_i (α_i,α_i)/2`.
    pub fn pair_fundamental_root(&self, a: &[BigRational], beta: &[i32]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, (ai, &ci)) in a.iter().zip(beta).enumerate() {
            if ci != 0 && !ai.is_zero() {
                acc += ai * self.half_norm(i) * BigRational::from_integer(ci.into());
            }
        }
        acc
    }
}

/// Iterated root-string closure: `β + α_j` is a root iff `q = p − ⟨β, α_j^∨⟩ > 0`,
/// where `p` is the largest `k` with `β − kα_j` a root.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i32>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i32>> = Vec::new();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    while !layer.is_empty() {
        layer.sort();
        for b in &layer {
            seen.insert(b.clone());
        }
        let mut next: Vec<Vec<i32>> = Vec::new();
        let mut next_seen: HashSet<Vec<i32>> = HashSet::new();
        for beta in &layer {
            for j in 0..r {
                let pairing: i64 = (0..r)
                    .filter(|&i| beta[i] != 0)
                    .map(|i| beta[i] as i64 * cartan[i][j])
                    .sum();
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[j] -= 1;
                    if probe[j] < 0 || !seen.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if next_seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}

/// Root system of a reductive algebra: one [`FactorSystem`] per simple factor.
#[derive(Debug)]
pub struct RootSystem {
    ty: ReductiveType,
    factors: Vec<FactorSystem>,
}

impl RootSystem {
    pub fn new(ty: &ReductiveType) -> Self {
        let factors = ty.simple_factors.iter().map(|&t| FactorSystem::new(t)).collect();
        RootSystem { ty: ty.clone(), factors }
    }

    pub fn simple(t: SimpleType) -> Self {
        Self::new(&ReductiveType::simple(t))
    }

    pub fn reductive_type(&self) -> &ReductiveType {
        &self.ty
    }

    pub fn factors(&self) -> &[FactorSystem] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> Result<&FactorSystem, RootError> {
        self.factors.get(i).ok_or(RootError::FactorIndex(i))
    }

    pub fn positive_root_count(&self) -> usize {
        self.factors.iter().map(|f| f.positive.len()).sum()
    }

    /// The unique positive root of maximal height.
    pub fn highest_root(&self, factor: usize) -> Result<WeightVector, RootError> {
        let f = self.factor(factor)?;
        let top = max_height(f.positive.iter());
        Ok(int_weight(factor, Basis::SimpleRoot, top))
    }

    /// The unique dominant short root (highest short root).
    pub fn dominant_short_root(&self, factor: usize) -> Result<WeightVector, RootError> {
        let f = self.factor(factor)?;
        if f.ty.is_simply_laced() {
            return Err(RootError::NoShortRoots(f.ty));
        }
        let top = max_height(f.positive.iter().filter(|b| f.root_length(b) == RootLength::Short));
        Ok(int_weight(factor, Basis::SimpleRoot, top))
    }

    pub fn convert_basis(&self, v: &WeightVector, target: Basis) -> Result<WeightVector, RootError> {
        let f = self.factor(v.factor)?;
        check_len(f, v)?;
        let coords = match (v.basis, target) {
            (a, b) if a == b => v.coords.clone(),
            (Basis::SimpleRoot, Basis::FundamentalWeight) => f.simple_to_fundamental(&v.coords),
            (Basis::FundamentalWeight, Basis::SimpleRoot) => f.fundamental_to_simple(&v.coords),
            _ => unreachable!(),
        };
        Ok(WeightVector { factor: v.factor, basis: target, coords })
    }

    /// Invariant form, long roots of squared length 2 in every factor.
    pub fn inner_product(&self, u: &WeightVector, v: &WeightVector) -> Result<BigRational, RootError> {
        if u.factor != v.factor {
            return Err(RootError::FactorMismatch { left: u.factor, right: v.factor });
        }
        let f = self.factor(u.factor)?;
        check_len(f, u)?;
        check_len(f, v)?;
        let (fund, simple) = match (u.basis, v.basis) {
            (Basis::FundamentalWeight, Basis::SimpleRoot) => (u.coords.clone(), v.coords.clone()),
            (Basis::SimpleRoot, Basis::FundamentalWeight) => (v.coords.clone(), u.coords.clone()),
            (Basis::SimpleRoot, Basis::SimpleRoot) => {
                (f.simple_to_fundamental(&u.coords), v.coords.clone())
            }
            (Basis::FundamentalWeight, Basis::FundamentalWeight) => {
                (u.coords.clone(), f.fundamental_to_simple(&v.coords))
            }
        };
        let mut acc = BigRational::zero();
        for (i, (a, c)) in fund.iter().zip(&simple).enumerate() {
            if !a.is_zero() && !c.is_zero() {
                acc += a * c * f.half_norm(i);
            }
        }
        Ok(acc)
    }

    /// Root membership with length class; `None` if `v` is not a root.
    pub fn root_class(&self, v: &WeightVector) -> Result<Option<RootLength>, RootError> {
        let f = self.factor(v.factor)?;
        let s = self.convert_basis(v, Basis::SimpleRoot)?;
        let Some(ints) = s.integer_coords() else { return Ok(None) };
        let Ok(ints) = ints.iter().map(|&c| i32::try_from(c)).collect::<Result<Vec<i32>, _>>() else {
            return Ok(None);
        };
        if ints.iter().all(|&c| c == 0) || !f.is_root_coords(&ints) {
            return Ok(None);
        }
        Ok(Some(f.root_length(&ints)))
    }
}

fn check_len(f: &FactorSystem, v: &WeightVector) -> Result<(), RootError> {
    if v.coords.len() != f.rank() {
        return Err(RootError::Length { expected: f.rank(), found: v.coords.len() });
    }
    Ok(())
}

fn max_height<'a>(it: impl Iterator<Item = &'a Vec<i32>>) -> &'a Vec<i32> {
    let mut best: Option<&Vec<i32>> = None;
    for r in it {
        let h: i32 = r.iter().sum();
        if best.is_none_or(|b| h > b.iter().sum::<i32>()) {
            best = Some(r);
        }
    }
    best.expect("nonempty root system")
}

fn int_weight(factor: usize, basis: Basis, c: &[i32]) -> WeightVector {
    WeightVector {
        factor,
        basis,
        coords: c.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
    }
}

/// Sum of simple-root coefficients.
pub fn coefficient_sum(v: &WeightVector) -> Result<BigRational, RootError> {
    if v.basis != Basis::SimpleRoot {
        return Err(RootError::WrongBasis);
    }
    Ok(v.coords.iter().fold(BigRational::zero(), |a, c| a + c))
}

/// True iff every coordinate is ≥ 0.
pub fn is_nonnegative(v: &WeightVector) -> bool {
    v.coords.iter().all(|c| !c.is_negative())
}
