//! Cartan types of simple and reductive Lie algebras.

use std::fmt;
use std::str::FromStr;

use crate::RootError;

/// Cartan family of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    /// Minimum admissible rank (or the fixed rank for exceptional families).
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::G2 => 2,
        }
    }

    pub fn is_exceptional(self) -> bool {
        !matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple type `X_r` with the rank constraints A≥1, B≥2, C≥2, D≥3.
///
/// `D3` is accepted as its own type; it is never silently identified with `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = if family.is_exceptional() {
            rank == family.min_rank()
        } else {
            rank >= family.min_rank()
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootError::InvalidRank { family, rank })
        }
    }

    pub fn a(rank: usize) -> Result<Self, RootError> {
        Self::new(Family::A, rank)
    }
    pub fn b(rank: usize) -> Result<Self, RootError> {
        Self::new(Family::B, rank)
    }
    pub fn c(rank: usize) -> Result<Self, RootError> {
        Self::new(Family::C, rank)
    }
    pub fn d(rank: usize) -> Result<Self, RootError> {
        Self::new(Family::D, rank)
    }
    pub fn exceptional(family: Family) -> Result<Self, RootError> {
        Self::new(family, family.min_rank())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r * r + 2 * r,
            Family::B | Family::C => 2 * r * r + r,
            Family::D => 2 * r * r - r,
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * r - r,
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self.family,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
        )
    }

    /// Every rank in `1..=max_rank` for the classical families plus the five exceptional types.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in family.min_rank()..=max_rank {
                out.push(SimpleType { family, rank });
            }
        }
        for family in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            out.push(SimpleType { family, rank: family.min_rank() });
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
            Family::F4 => f.write_str("F4"),
            Family::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = RootError;

    /// Parses `A15`, `B3`, `E6`, `G2`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootError::Parse(format!("unknown simple type `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (head, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            ('F', 4) => Family::F4,
            ('G', 2) => Family::G2,
            _ => return Err(bad()),
        };
        SimpleType::new(family, rank)
    }
}

/// A reductive Lie algebra: semisimple part as an ordered list of simple factors, plus a centre.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ReductiveType {
    pub simple_factors: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl ReductiveType {
    pub fn new(simple_factors: Vec<SimpleType>, torus_rank: usize) -> Self {
        ReductiveType { simple_factors, torus_rank }
    }

    pub fn simple(t: SimpleType) -> Self {
        ReductiveType { simple_factors: vec![t], torus_rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.simple_factors.iter().map(|t| t.rank()).sum::<usize>() + self.torus_rank
    }

    pub fn dim(&self) -> u64 {
        self.simple_factors.iter().map(|t| t.dim()).sum::<u64>() + self.torus_rank as u64
    }

    /// True iff the algebra is a single simple factor with trivial centre.
    pub fn is_simple(&self) -> bool {
        self.simple_factors.len() == 1 && self.torus_rank == 0
    }

    pub fn as_simple(&self) -> Option<SimpleType> {
        if self.is_simple() {
            Some(self.simple_factors[0])
        } else {
            None
        }
    }

    /// Multiset comparison ignoring factor order.
    pub fn same_factors(&self, other: &ReductiveType) -> bool {
        let mut a = self.simple_factors.clone();
        let mut b = other.simple_factors.clone();
        a.sort();
        b.sort();
        a == b && self.torus_rank == other.torus_rank
    }

    pub fn extend(&mut self, other: ReductiveType) {
        self.simple_factors.extend(other.simple_factors);
        self.torus_rank += other.torus_rank;
    }
}

impl fmt::Display for ReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple_factors.iter().map(|t| t.to_string()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl FromStr for ReductiveType {
    type Err = RootError;

    /// Parses `A1+G2`, `E7`, `A2+T1`, or `0` for the zero algebra.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = ReductiveType::default();
        if s == "0" {
            return Ok(out);
        }
        for part in s.split(['+', ',']) {
            let part = part.trim();
            if let Some(t) = part.strip_prefix('T') {
                out.torus_rank += t
                    .parse::<usize>()
                    .map_err(|_| RootError::Parse(format!("bad torus `{part}`")))?;
            } else {
                out.simple_factors.push(part.parse()?);
            }
        }
        Ok(out)
    }
}
