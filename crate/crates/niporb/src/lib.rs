//! Nilpotent orbits: partition formulas for the classical algebras, the adjoint
//! variety via the highest root, and the handful of labelled orbits used by the
//! classification tables.
//!
//! "z dim" always means the projectivised dimension (cone dimension − 1).

mod partition;

use std::fmt;
use std::str::FromStr;

use repdim::{orbit_dim, RepError};
use rootcore::{Family, ReductiveType, RootSystem, SimpleType};
use thiserror::Error;

pub use partition::{
    classical_orbit_dim, classical_z_dim, validate_partition, ClassicalFamily, Partition,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NilError {
    #[error("{0:?} is not a weakly decreasing list of positive integers")]
    NotAPartition(Vec<usize>),
    #[error("{partition} is not a nilpotent orbit of {family:?}({n})")]
    InvalidPartition { family: ClassicalFamily, n: usize, partition: Partition },
    #[error("the zero orbit has no projectivisation")]
    ZeroOrbit,
    #[error("no stored orbit `{label}` in {ambient}")]
    UnknownLabel { ambient: String, label: String },
    #[error("label {label} needs {needs}, got {ambient}")]
    WrongAmbient { label: String, needs: &'static str, ambient: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// How an orbit in `P(g)` is named.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitLabel {
    /// The adjoint variety (orbit of a long root vector).
    Long,
    /// Orbit of a short root vector (non-simply-laced `g`).
    Short,
    /// Jordan type in the standard representation.
    ClassicalPartition(Partition),
    /// Bala–Carter name in an exceptional algebra.
    BalaCarter(String),
    /// `P(O_min ⊕ O_min)` in `l' ⊕ l'`.
    MinPlusMin,
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Long => f.write_str("long"),
            OrbitLabel::Short => f.write_str("short"),
            OrbitLabel::ClassicalPartition(p) => write!(f, "partition:{p}"),
            OrbitLabel::BalaCarter(s) => write!(f, "bala-carter:{s}"),
            OrbitLabel::MinPlusMin => f.write_str("min+min"),
        }
    }
}

impl FromStr for OrbitLabel {
    type Err = NilError;

    /// `long`, `short`, `min+min`, `partition:3,2^2`, `bala-carter:2A1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "long" => return Ok(OrbitLabel::Long),
            "short" => return Ok(OrbitLabel::Short),
            "min+min" => return Ok(OrbitLabel::MinPlusMin),
            _ => {}
        }
        if let Some(p) = s.strip_prefix("partition:") {
            return Ok(OrbitLabel::ClassicalPartition(p.parse()?));
        }
        if let Some(b) = s.strip_prefix("bala-carter:").or_else(|| s.strip_prefix("bc:")) {
            return Ok(OrbitLabel::BalaCarter(b.trim().to_string()));
        }
        Err(NilError::Parse(format!("unknown orbit label `{s}`")))
    }
}

/// Dimension of the adjoint variety: the closed orbit in `P(g)`, i.e. `orbit_dim(δ)`.
pub fn z_long_dim(t: SimpleType) -> Result<u64, NilError> {
    let rs = RootSystem::simple(t);
    let delta = rs.highest_root(0).map_err(RepError::from)?;
    Ok(orbit_dim(&rs, &[delta])? as u64)
}

/// Standard representation of a classical simple type: `(family, matrix size)`.
pub fn standard_representation(t: SimpleType) -> Option<(ClassicalFamily, usize)> {
    let r = t.rank();
    match t.family() {
        Family::A => Some((ClassicalFamily::Sl, r + 1)),
        Family::B => Some((ClassicalFamily::So, 2 * r + 1)),
        Family::C => Some((ClassicalFamily::Sp, 2 * r)),
        Family::D => Some((ClassicalFamily::So, 2 * r)),
        _ => None,
    }
}

/// The minimal-orbit partition of a classical type: `[2,1^{n−2}]` in `sl`/`sp`,
/// `[2^2,1^{n−4}]` in `so`.
pub fn minimal_orbit_partition(t: SimpleType) -> Option<Partition> {
    let (fam, n) = standard_representation(t)?;
    let p = match fam {
        ClassicalFamily::Sl | ClassicalFamily::Sp => Partition::from_powers(&[(2, 1), (1, n - 2)]),
        ClassicalFamily::So => Partition::from_powers(&[(2, 2), (1, n - 4)]),
    };
    p.ok()
}

/// Short-root orbit partition: `[2^2,1^{2r−4}]` in `C_r`, `[3,1^{2r−2}]` in `B_r`.
pub fn short_orbit_partition(t: SimpleType) -> Option<Partition> {
    let r = t.rank();
    match t.family() {
        Family::C => Partition::from_powers(&[(2, 2), (1, 2 * r - 4)]).ok(),
        Family::B => Partition::from_powers(&[(3, 1), (1, 2 * r - 2)]).ok(),
        _ => None,
    }
}

/// A stored exceptional orbit: projectivised dimension and the dataset row it
/// was read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalOrbit {
    pub family: Family,
    pub bala_carter: &'static str,
    pub z_dim: u64,
    pub source: &'static str,
}

/// The only exceptional orbits the tables need. Anything else fails with
/// [`NilError::UnknownLabel`] rather than being guessed.
pub const EXCEPTIONAL_ORBITS: &[ExceptionalOrbit] = &[
    // Short-root orbit of F4.
    ExceptionalOrbit { family: Family::F4, bala_carter: "Ã1", z_dim: 21, source: "table2:F4/B4" },
    ExceptionalOrbit { family: Family::E6, bala_carter: "2A1", z_dim: 31, source: "table3:E6/F4" },
];

fn lookup_exceptional(t: SimpleType, name: &str) -> Option<u64> {
    let name = if name == "A~1" { "Ã1" } else { name };
    EXCEPTIONAL_ORBITS
        .iter()
        .find(|o| o.family == t.family() && o.bala_carter == name)
        .map(|o| o.z_dim)
}

fn simple_ambient(g: &ReductiveType, label: &OrbitLabel) -> Result<SimpleType, NilError> {
    g.as_simple().ok_or_else(|| NilError::WrongAmbient {
        label: label.to_string(),
        needs: "a simple algebra",
        ambient: g.to_string(),
    })
}

/// Projectivised dimension of the orbit named by `label` in `P(g)`.
pub fn z_dim_from_label(g: &ReductiveType, label: &OrbitLabel) -> Result<u64, NilError> {
    let unknown = || NilError::UnknownLabel { ambient: g.to_string(), label: label.to_string() };
    match label {
        OrbitLabel::Long => z_long_dim(simple_ambient(g, label)?),
        OrbitLabel::Short => {
            let t = simple_ambient(g, label)?;
            if let Some(p) = short_orbit_partition(t) {
                let (fam, n) = standard_representation(t).expect("classical");
                classical_z_dim(fam, n, &p)
            } else if t.family() == Family::F4 {
                lookup_exceptional(t, "Ã1").ok_or_else(unknown)
            } else {
                Err(unknown())
            }
        }
        OrbitLabel::ClassicalPartition(p) => {
            let t = simple_ambient(g, label)?;
            let (fam, n) = standard_representation(t).ok_or_else(unknown)?;
            classical_z_dim(fam, n, p)
        }
        OrbitLabel::BalaCarter(name) => {
            let t = simple_ambient(g, label)?;
            lookup_exceptional(t, name).ok_or_else(unknown)
        }
        OrbitLabel::MinPlusMin => match g.simple_factors.as_slice() {
            [a, b] if a == b && g.torus_rank == 0 => Ok(2 * (z_long_dim(*a)? + 1) - 1),
            _ => Err(NilError::WrongAmbient {
                label: label.to_string(),
                needs: "l' + l' for a simple l'",
                ambient: g.to_string(),
            }),
        },
    }
}
