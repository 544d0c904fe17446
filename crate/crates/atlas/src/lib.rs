//! Catalogue of Legendrian-type isotropy pairs and their verifier.
//!
//! Each row of the bundled tables names a pair `(g, h)`, the isotropy
//! representation `m` (by highest weight `ρ` or by marked nodes), the projective
//! orbit `O_m` of the highest weight line, and a nilpotent orbit `Z_m` of `g`.
//! [`verify`] recomputes every stated quantity; [`theorems`] checks that the
//! classification lists are exactly covered by the tables.

pub mod curve;
pub mod dataset;
pub mod expr;
pub mod theorems;
pub mod verify;

pub use dataset::{
    load_dataset, load_dataset_str, load_dataset_with, DatasetError, ExpandOptions, PairKind, PairRecord,
    PairTemplate,
};
pub use verify::{
    verify_all, verify_pair, verify_pair_with, CheckName, CheckResult, CheckStatus, VerificationReport,
    VerifyContext,
};

const TABLES: [&str; 4] = [
    include_str!("../data/table1.jsonl"),
    include_str!("../data/table2.jsonl"),
    include_str!("../data/table3.jsonl"),
    include_str!("../data/table4.jsonl"),
];
const DIAG: &str = include_str!("../data/diag.jsonl");

/// Source text of bundled table `n` (1–4).
pub fn bundled_table(n: usize) -> Option<&'static str> {
    TABLES.get(n.checked_sub(1)?).copied()
}

/// Source text of the diagonal pairs `(g ⊕ g, g)`.
pub fn bundled_diag() -> &'static str {
    DIAG
}

/// Every bundled row, tables 1–4 then the diagonal pairs.
pub fn bundled_dataset(opts: &ExpandOptions) -> Result<Vec<PairRecord>, DatasetError> {
    let mut out = Vec::new();
    for text in TABLES.iter().chain([&DIAG]) {
        out.extend(load_dataset_str(text, opts)?);
    }
    Ok(out)
}
