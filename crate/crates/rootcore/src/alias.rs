//! Classical matrix-algebra names and their explicit normalisation to Cartan types.
//!
//! `so(n)` becomes `B_{(n−1)/2}` or `D_{n/2}`; the degenerate cases are
//! `so(1) = 0`, `so(2) = D1` (a one-dimensional torus), `so(3) = A1` and
//! `so(4) = D2 = A1 ⊕ A1`. `sp(2) = C1 = A1` and `sl(1) = 0`. Nothing here is
//! applied implicitly: callers go through [`AlgebraName::normalize`] and the
//! `lift_*` helpers, which also translate weights and marked nodes written
//! against the standard-representation node of the classical name.

use std::fmt;
use std::str::FromStr;

use crate::types::{ReductiveType, SimpleType};
use crate::RootError;

/// An algebra named either by Cartan type or as a classical matrix algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    Cartan(SimpleType),
    /// `so(n)`, `n` the matrix size.
    So(usize),
    /// `sp(n)`, `n` the (even) matrix size.
    Sp(usize),
    /// `sl(n)`.
    Sl(usize),
    /// A torus of the given rank.
    Torus(usize),
}

impl AlgebraName {
    pub fn normalize(&self) -> Result<ReductiveType, RootError> {
        let simple = |t: SimpleType| Ok(ReductiveType::simple(t));
        match *self {
            AlgebraName::Cartan(t) => simple(t),
            AlgebraName::Torus(r) => Ok(ReductiveType::new(vec![], r)),
            AlgebraName::So(n) => match n {
                0 => Err(RootError::Parse("so(0)".into())),
                1 => Ok(ReductiveType::default()),
                2 => Ok(ReductiveType::new(vec![], 1)),
                3 => simple(SimpleType::a(1)?),
                4 => Ok(ReductiveType::new(vec![SimpleType::a(1)?, SimpleType::a(1)?], 0)),
                n if n % 2 == 1 => simple(SimpleType::b((n - 1) / 2)?),
                n => simple(SimpleType::d(n / 2)?),
            },
            AlgebraName::Sp(n) => match n {
                n if n % 2 == 1 || n == 0 => Err(RootError::Parse(format!("sp({n}) needs even positive size"))),
                2 => simple(SimpleType::a(1)?),
                n => simple(SimpleType::c(n / 2)?),
            },
            AlgebraName::Sl(n) => match n {
                0 => Err(RootError::Parse("sl(0)".into())),
                1 => Ok(ReductiveType::default()),
                n => simple(SimpleType::a(n - 1)?),
            },
        }
    }

    /// Translates fundamental coordinates written against this name into
    /// coordinates on each normalised simple factor.
    ///
    /// For `so(3)` and `so(4)` a single coordinate `k` means `k` times the
    /// standard-representation weight: `kπ_1 ↦ 2kπ_1` on `A1`, and
    /// `kπ_1 ↦ kπ_1' + kπ_1''` on `A1 ⊕ A1`.
    pub fn lift_weight(&self, coords: &[i64]) -> Result<Vec<Vec<i64>>, RootError> {
        let norm = self.normalize()?;
        match *self {
            AlgebraName::So(3) => Ok(vec![vec![2 * single(self, coords)?]]),
            AlgebraName::So(4) => {
                let k = single(self, coords)?;
                Ok(vec![vec![k], vec![k]])
            }
            _ if norm.simple_factors.is_empty() => {
                if coords.iter().all(|&c| c == 0) {
                    Ok(vec![])
                } else {
                    Err(RootError::Alias(format!("nonzero weight on {self}")))
                }
            }
            _ => {
                let r = norm.simple_factors[0].rank();
                if coords.len() != r {
                    return Err(RootError::Length { expected: r, found: coords.len() });
                }
                Ok(vec![coords.to_vec()])
            }
        }
    }

    /// Translates 1-based marked nodes written against this name into marks on
    /// each normalised simple factor. For `so(3)`/`so(4)` only the standard node 1
    /// may be marked; it lifts to node 1 of every factor.
    pub fn lift_marks(&self, marks: &[usize]) -> Result<Vec<Vec<usize>>, RootError> {
        let norm = self.normalize()?;
        match *self {
            AlgebraName::So(3) | AlgebraName::So(4) => {
                if marks != [1] {
                    return Err(RootError::Alias(format!("only node 1 may be marked on {self}")));
                }
                Ok(vec![vec![1]; norm.simple_factors.len()])
            }
            _ if norm.simple_factors.is_empty() => {
                if marks.is_empty() {
                    Ok(vec![])
                } else {
                    Err(RootError::Alias(format!("marks on {self}, which has no simple factor")))
                }
            }
            _ => {
                let r = norm.simple_factors[0].rank();
                if let Some(&bad) = marks.iter().find(|&&m| m == 0 || m > r) {
                    return Err(RootError::Alias(format!("node {bad} out of range on {self}")));
                }
                Ok(vec![marks.to_vec()])
            }
        }
    }
}

fn single(name: &AlgebraName, coords: &[i64]) -> Result<i64, RootError> {
    match coords {
        [k] => Ok(*k),
        _ => Err(RootError::Alias(format!(
            "{name} takes one standard-representation coefficient, got {}",
            coords.len()
        ))),
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraName::Cartan(t) => write!(f, "{t}"),
            AlgebraName::So(n) => write!(f, "so({n})"),
            AlgebraName::Sp(n) => write!(f, "sp({n})"),
            AlgebraName::Sl(n) => write!(f, "sl({n})"),
            AlgebraName::Torus(r) => write!(f, "T{r}"),
        }
    }
}

impl FromStr for AlgebraName {
    type Err = RootError;

    /// Accepts `B3`, `so(7)`, `so7`, `sp(6)`, `sl(4)`, `T1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        for (prefix, ctor) in [
            ("so", AlgebraName::So as fn(usize) -> AlgebraName),
            ("sp", AlgebraName::Sp),
            ("sl", AlgebraName::Sl),
        ] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                let n = rest.trim_start_matches('(').trim_end_matches(')');
                let n = n
                    .parse::<usize>()
                    .map_err(|_| RootError::Parse(format!("bad size in `{s}`")))?;
                return Ok(ctor(n));
            }
        }
        if let Some(r) = s.strip_prefix('T') {
            let r = r.parse().map_err(|_| RootError::Parse(format!("bad torus `{s}`")))?;
            return Ok(AlgebraName::Torus(r));
        }
        Ok(AlgebraName::Cartan(s.parse()?))
    }
}
