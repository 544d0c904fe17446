//! Dimension bookkeeping for the `(G2, A1)` curve.
//!
//! For this row `O_m` is the rational normal curve `P^1 → P(V_{10π1})`, so
//! the contact line bundle restricts to `O(10)`. The normal part `S` of the
//! Legendrian–orthogonal complement is an extension of `O(6)` by `O(4)`, and
//! a maximal integral deformation family would have dimension `h^0(O(10)) +
//! h^0(O(4)) + h^0(O(6))`, to be compared with `dim G2 − dim A1`. Only the
//! arithmetic is checked: `h^0(P^1, O(d)) = d + 1` is computed as the Weyl
//! dimension of `dπ1` for `A1`.

use repdim::weyl_dim;
use rootcore::{ReductiveType, RootSystem, SimpleType, WeightVector};
use serde::Serialize;

use crate::dataset::{load_dataset_str, ExpandOptions, PairRecord};

/// Degrees of the line bundles in the extension `0 → O(4) → S → O(6) → 0`.
pub const S_DEGREES: [u64; 2] = [4, 6];
/// Dimension of the maximal family, were the extension as stated.
pub const EXPECTED_FAMILY_DIM: u64 = 23;
/// `dim G2 − dim A1`.
pub const EXPECTED_DIM_M: u64 = 11;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub degree: u64,
    pub h0_contact: u64,
    pub h0_s: [u64; 2],
    pub family_dim: u64,
    pub dim_m: u64,
    pub passed: bool,
}

/// `h^0(P^1, O(d))`, as the dimension of the irreducible `A1`-module `V_{dπ1}`.
pub fn h0_p1(d: u64) -> u64 {
    let rs = RootSystem::simple(SimpleType::a(1).expect("A1"));
    let n = weyl_dim(&rs, &[WeightVector::fundamental(0, &[d as i64])]).expect("A1 weight");
    u64::try_from(n).expect("small dimension")
}

fn g2_row() -> Option<PairRecord> {
    let records = load_dataset_str(crate::bundled_table(1)?, &ExpandOptions::default()).ok()?;
    let g2: ReductiveType = "G2".parse().ok()?;
    let a1: ReductiveType = "A1".parse().ok()?;
    records.into_iter().find(|r| r.g == g2 && r.h == a1)
}

/// Checks `h^0(O(10)) + h^0(O(4)) + h^0(O(6)) = 23` and `dim G2 − dim A1 = 11`,
/// with the degree read off the bundled row's `ρ`.
pub fn verify_g2_curve() -> CurveReport {
    let row = g2_row();
    let degree = row
        .as_ref()
        .and_then(|r| r.rho.as_ref())
        .and_then(|rho| rho.first())
        .and_then(|w| w.first())
        .map_or(0, |&d| d.max(0) as u64);
    let dim_m = row.map_or(0, |r| r.g.dim().saturating_sub(r.h.dim()));
    let h0_contact = h0_p1(degree);
    let h0_s = S_DEGREES.map(h0_p1);
    let family_dim = h0_contact + h0_s.iter().sum::<u64>();
    CurveReport {
        degree,
        h0_contact,
        h0_s,
        family_dim,
        dim_m,
        passed: family_dim == EXPECTED_FAMILY_DIM && dim_m == EXPECTED_DIM_M,
    }
}
