//! Partitions and the classical nilpotent-orbit dimension formulas.

use std::fmt;
use std::str::FromStr;

use crate::NilError;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Rejects zero parts and increasing steps.
    pub fn new(parts: Vec<usize>) -> Result<Self, NilError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(NilError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `[(part, multiplicity)]` expanded, e.g. `[(2, 2), (1, 4)]` is `[2,2,1,1,1,1]`.
    pub fn from_powers(powers: &[(usize, usize)]) -> Result<Self, NilError> {
        let parts = powers
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m))
            .collect();
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `dᵗ_i = #{j : d_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Exponential notation: `[3,2^2,1^4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            items.push(if m == 1 { p.to_string() } else { format!("{p}^{m}") });
            i += m;
        }
        write!(f, "[{}]", items.join(","))
    }
}

impl FromStr for Partition {
    type Err = NilError;

    /// Accepts `3,2,2`, `[3,2^2]`, `2^2,1^4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let bad = || NilError::Parse(format!("bad partition `{s}`"));
        let mut powers = Vec::new();
        for item in body.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (p, m) = match item.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (item, "1"),
            };
            powers.push((p.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?));
        }
        Partition::from_powers(&powers)
    }
}

/// Classical matrix family of the ambient algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    Sl,
    So,
    Sp,
}

impl FromStr for ClassicalFamily {
    type Err = NilError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(ClassicalFamily::Sl),
            "so" => Ok(ClassicalFamily::So),
            "sp" => Ok(ClassicalFamily::Sp),
            other => Err(NilError::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// Whether `d` labels a nilpotent orbit of the `n × n` classical algebra:
/// in `so`, even parts have even multiplicity; in `sp`, odd parts do.
pub fn validate_partition(family: ClassicalFamily, n: usize, d: &Partition) -> bool {
    if d.total() != n {
        return false;
    }
    let bad_parity = |odd: bool| {
        d.parts
            .iter()
            .filter(|&&p| (p % 2 == 1) == odd)
            .any(|&p| d.multiplicity(p) % 2 == 1)
    };
    match family {
        ClassicalFamily::Sl => true,
        ClassicalFamily::So => !bad_parity(false),
        ClassicalFamily::Sp => n.is_multiple_of(2) && !bad_parity(true),
    }
}

/// Dimension of the nilpotent orbit (in the cone, not projectivised).
pub fn classical_orbit_dim(family: ClassicalFamily, n: usize, d: &Partition) -> Result<u64, NilError> {
    if !validate_partition(family, n, d) {
        return Err(NilError::InvalidPartition { family, n, partition: d.clone() });
    }
    let n = n as u64;
    let sq: u64 = d.transpose().parts.iter().map(|&x| (x * x) as u64).sum();
    let odd = d.parts.iter().filter(|&&p| p % 2 == 1).count() as u64;
    Ok(match family {
        ClassicalFamily::Sl => n * n - sq,
        ClassicalFamily::So => n * (n - 1) / 2 - (sq - odd) / 2,
        ClassicalFamily::Sp => n * (n + 1) / 2 - (sq + odd) / 2,
    })
}

/// Dimension of the projectivised orbit in `P(g)`: cone dimension − 1.
pub fn classical_z_dim(family: ClassicalFamily, n: usize, d: &Partition) -> Result<u64, NilError> {
    let dim = classical_orbit_dim(family, n, d)?;
    dim.checked_sub(1).ok_or(NilError::ZeroOrbit)
}
