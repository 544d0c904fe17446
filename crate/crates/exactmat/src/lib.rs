//! Exact linear algebra over `ℚ(i)`: ranks, matrix powers, Jordan types of
//! nilpotent matrices, classical-algebra membership, and the explicit nilpotent
//! witnesses used to identify the orbits `Z_m`.

mod matrix;
mod scalar;

use std::fmt;
use std::str::FromStr;

use niporb::{ClassicalFamily, Partition};
use num_traits::Zero;
use thiserror::Error;

pub use matrix::ExactMatrix;
pub use scalar::{format_gaussian, gr, gr_i, gr_one, gr_zero, parse_gaussian, GaussianRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is {rows}×{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is singular")]
    Singular,
    #[error("sp needs even size, got {0}")]
    SizeParity(usize),
    #[error("bad entry `{0}`")]
    Entry(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad witness `{0}`")]
    Witness(String),
}

/// Jordan type of a nilpotent matrix: `#{parts ≥ k} = rank(m^{k−1}) − rank(m^k)`.
pub fn jordan_type(m: &ExactMatrix) -> Result<Partition, MatError> {
    m.require_square()?;
    let n = m.rows();
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(MatError::NotNilpotent);
        }
        power = power.mul(m)?;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(MatError::NotNilpotent);
        }
        ranks.push(r);
    }
    // at_least[k-1] = number of blocks of size ≥ k.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, c - next));
    }
    Ok(Partition::from_unsorted(parts))
}

/// The standard symplectic form `[[0, I], [−I, 0]]` of size `n`.
pub fn symplectic_form(n: usize) -> Result<ExactMatrix, MatError> {
    if n % 2 == 1 {
        return Err(MatError::SizeParity(n));
    }
    let h = n / 2;
    let mut j = ExactMatrix::zeros(n, n);
    for k in 0..h {
        j[(k, h + k)] = gr_one();
        j[(h + k, k)] = -gr_one();
    }
    Ok(j)
}

/// Whether `m` lies in `sl(n)`, `so(n)` (skew-symmetric) or `sp(n)` (`mᵀJ + Jm = 0`).
pub fn membership_check(m: &ExactMatrix, family: ClassicalFamily) -> Result<bool, MatError> {
    m.require_square()?;
    Ok(match family {
        ClassicalFamily::Sl => m.trace()?.is_zero(),
        ClassicalFamily::So => m.transpose() == m.neg(),
        ClassicalFamily::Sp => {
            let j = symplectic_form(m.rows())?;
            m.transpose().mul(&j)?.add(&j.mul(m)?)?.is_zero()
        }
    })
}

/// The explicit nilpotent matrices. Generic nonzero coefficients are set to 1:
/// the Jordan type does not depend on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `e_{1,2l−1} + e_{2,2l}` in `sl(2l)`: the sum of the two root vectors over
    /// the dominant short root of `C_l ⊂ A_{2l−1}`.
    SlFold(usize),
    /// Isotropic vector `(1, i, 0, …, 0)` placed in the last column of a skew
    /// matrix of size `n+1`: a point of the quadric `O_m` for `so(n) ⊂ so(n+1)`.
    SoStandard(usize),
    /// `E_{ε1} + E_{ε2+ε3}` in `so(7)`, the sum over the two roots of `B3`
    /// restricting to `ρ` of `G2`.
    B3G2,
}

impl Witness {
    /// Ambient classical algebra and matrix size.
    pub fn family(self) -> (ClassicalFamily, usize) {
        match self {
            Witness::SlFold(l) => (ClassicalFamily::Sl, 2 * l),
            Witness::SoStandard(n) => (ClassicalFamily::So, n + 1),
            Witness::B3G2 => (ClassicalFamily::So, 7),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SlFold(l) => write!(f, "sl-fold({l})"),
            Witness::SoStandard(n) => write!(f, "so-standard({n})"),
            Witness::B3G2 => f.write_str("b3-g2"),
        }
    }
}

impl FromStr for Witness {
    type Err = MatError;

    /// `sl-fold(3)`, `so-standard(5)`, `b3-g2` (underscores and case ignored).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MatError::Witness(s.to_string());
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        if t == "b3-g2" {
            return Ok(Witness::B3G2);
        }
        let (name, arg) = t.strip_suffix(')').and_then(|x| x.split_once('(')).ok_or_else(bad)?;
        let k: usize = arg.trim().parse().map_err(|_| bad())?;
        match name {
            "sl-fold" => Ok(Witness::SlFold(k)),
            "so-standard" => Ok(Witness::SoStandard(k)),
            _ => Err(bad()),
        }
    }
}

pub fn build_witness(w: Witness) -> Result<ExactMatrix, MatError> {
    match w {
        Witness::SlFold(l) => {
            if l < 2 {
                return Err(MatError::Witness(w.to_string()));
            }
            let mut m = ExactMatrix::zeros(2 * l, 2 * l);
            m[(0, 2 * l - 2)] = gr_one();
            m[(1, 2 * l - 1)] = gr_one();
            Ok(m)
        }
        Witness::SoStandard(n) => {
            if n < 2 {
                return Err(MatError::Witness(w.to_string()));
            }
            let mut m = ExactMatrix::zeros(n + 1, n + 1);
            m[(0, n)] = gr_one();
            m[(1, n)] = gr_i();
            m[(n, 0)] = -gr_one();
            m[(n, 1)] = -gr_i();
            Ok(m)
        }
        Witness::B3G2 => {
            let (o, i) = (gr(1, 0), gr(0, 1));
            let mut m = ExactMatrix::zeros(7, 7);
            // E_{ε1}
            m[(0, 6)] = o.clone();
            m[(1, 6)] = -i.clone();
            m[(6, 0)] = -o.clone();
            m[(6, 1)] = i.clone();
            // E_{ε2+ε3}
            m[(2, 4)] = o.clone();
            m[(2, 5)] = -i.clone();
            m[(3, 4)] = -i.clone();
            m[(3, 5)] = -o.clone();
            m[(4, 2)] = -o.clone();
            m[(4, 3)] = i.clone();
            m[(5, 2)] = i;
            m[(5, 3)] = o;
            Ok(m)
        }
    }
}
