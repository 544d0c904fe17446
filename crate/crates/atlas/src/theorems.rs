//! Cross-check of the classification item lists against the tables.
//!
//! Three lists are checked. `adjoint` holds the non-symmetric Legendrian pairs
//! whose `Z` is the adjoint variety (twelve items); `non_adjoint` holds the
//! Legendrian pairs whose `Z` is another nilpotent orbit (seven items);
//! `excluded_symmetric` holds the symmetric pairs left out of the adjoint
//! classification because their `Z` is not the adjoint variety (five items).
//! A list passes when every item is matched by at least one row and every
//! candidate row matches some item.

use std::fmt;

use niporb::{standard_representation, ClassicalFamily, OrbitLabel, Partition};
use rootcore::{AlgebraName, Basis, Family, ReductiveType, RootSystem, SimpleType};
use serde::Serialize;

use crate::dataset::{PairKind, PairRecord};
use crate::verify::{verify_all, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemList {
    Adjoint,
    NonAdjoint,
    ExcludedSymmetric,
}

impl ItemList {
    pub const ALL: [ItemList; 3] = [ItemList::Adjoint, ItemList::NonAdjoint, ItemList::ExcludedSymmetric];

    pub fn as_str(self) -> &'static str {
        match self {
            ItemList::Adjoint => "adjoint",
            ItemList::NonAdjoint => "non_adjoint",
            ItemList::ExcludedSymmetric => "excluded_symmetric",
        }
    }

    /// Whether a row belongs to the population this list must cover exactly.
    pub fn is_candidate(self, r: &PairRecord) -> bool {
        let long = r.z_label == OrbitLabel::Long;
        match self {
            ItemList::Adjoint => r.legendrian && long && !r.symmetric && r.kind == PairKind::Isotropy,
            ItemList::NonAdjoint => r.legendrian && !long,
            ItemList::ExcludedSymmetric => !long && r.symmetric && r.kind == PairKind::Isotropy,
        }
    }
}

impl fmt::Display for ItemList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A row together with its `ρ` in fundamental coordinates (one vector per
/// simple factor of `h`, in the order of `h`'s factors).
pub struct Candidate<'a> {
    pub record: &'a PairRecord,
    pub rho: Option<&'a [Vec<i64>]>,
}

impl Candidate<'_> {
    fn weights(&self) -> Option<Vec<(SimpleType, Vec<i64>)>> {
        let rho = self.rho?;
        let mut w: Vec<_> = self.record.h.simple_factors.iter().copied().zip(rho.iter().cloned()).collect();
        w.sort();
        Some(w)
    }

    fn has_weights(&self, want: &[(SimpleType, Vec<i64>)]) -> bool {
        let mut want = want.to_vec();
        want.sort();
        self.weights() == Some(want)
    }
}

type Matcher = Box<dyn Fn(&Candidate) -> bool + Send + Sync>;

pub struct Item {
    pub list: ItemList,
    pub letter: char,
    pub description: String,
    matches: Matcher,
}

impl Item {
    pub fn id(&self) -> String {
        format!("{}.{}", self.list, self.letter)
    }

    pub fn matches(&self, c: &Candidate) -> bool {
        (self.matches)(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItemOutcome {
    pub id: String,
    pub description: String,
    pub matched_rows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListOutcome {
    pub list: ItemList,
    pub expected_items: usize,
    pub items: Vec<ItemOutcome>,
    /// Candidate rows that match no item.
    pub unmatched_rows: Vec<String>,
    pub passed: bool,
}

impl ListOutcome {
    pub fn unmatched_items(&self) -> Vec<&ItemOutcome> {
        self.items.iter().filter(|i| i.matched_rows.is_empty()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub lists: Vec<ListOutcome>,
    pub passed: bool,
}

impl TheoremReport {
    pub fn list(&self, l: ItemList) -> &ListOutcome {
        self.lists.iter().find(|o| o.list == l).expect("every list is reported")
    }

    /// One line per unmatched item or unmatched row.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for l in &self.lists {
            for i in l.unmatched_items() {
                out.push(format!("{}: no row matches ({})", i.id, i.description));
            }
            for r in &l.unmatched_rows {
                out.push(format!("{}: row {r} matches no item", l.list));
            }
            if l.items.len() != l.expected_items {
                out.push(format!("{}: {} items, expected {}", l.list, l.items.len(), l.expected_items));
            }
        }
        out
    }
}

/// Number of items on each list.
pub fn expected_len(l: ItemList) -> usize {
    match l {
        ItemList::Adjoint => 12,
        ItemList::NonAdjoint => 7,
        ItemList::ExcludedSymmetric => 5,
    }
}

pub fn verify_theorems(records: &[PairRecord]) -> TheoremReport {
    verify_theorems_with(records, &verify_all(records))
}

/// As [`verify_theorems`], reusing `ρ` from existing reports (matched by id).
pub fn verify_theorems_with(records: &[PairRecord], reports: &[VerificationReport]) -> TheoremReport {
    let items = items();
    let candidates: Vec<Candidate> = records
        .iter()
        .map(|r| Candidate {
            record: r,
            rho: reports.iter().find(|p| p.id == r.id).and_then(|p| p.rho.as_deref()),
        })
        .collect();
    let lists: Vec<ListOutcome> = ItemList::ALL
        .iter()
        .map(|&list| {
            let mine: Vec<&Item> = items.iter().filter(|i| i.list == list).collect();
            let pool: Vec<&Candidate> = candidates.iter().filter(|c| list.is_candidate(c.record)).collect();
            let outcomes: Vec<ItemOutcome> = mine
                .iter()
                .map(|i| ItemOutcome {
                    id: i.id(),
                    description: i.description.clone(),
                    matched_rows: pool.iter().filter(|c| i.matches(c)).map(|c| c.record.id.clone()).collect(),
                })
                .collect();
            let unmatched_rows: Vec<String> = pool
                .iter()
                .filter(|c| !mine.iter().any(|i| i.matches(c)))
                .map(|c| c.record.id.clone())
                .collect();
            let expected_items = expected_len(list);
            let passed = outcomes.len() == expected_items
                && outcomes.iter().all(|o| !o.matched_rows.is_empty())
                && unmatched_rows.is_empty();
            ListOutcome { list, expected_items, items: outcomes, unmatched_rows, passed }
        })
        .collect();
    let passed = lists.iter().all(|l| l.passed);
    TheoremReport { lists, passed }
}

fn simple(s: &str) -> SimpleType {
    s.parse().expect("built-in type name")
}

fn ty(s: &str) -> ReductiveType {
    s.parse().expect("built-in type name")
}

fn node(t: SimpleType, k: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; t.rank()];
    v[k - 1] = c;
    v
}

fn is_pair(c: &Candidate, g: &ReductiveType, h: &ReductiveType) -> bool {
    c.record.g.same_factors(g) && c.record.h.same_factors(h)
}

/// A fixed pair with a single-factor `h` and `ρ = coeff · π_k`.
fn fixed(g: &str, h: &str, k: usize, coeff: i64) -> Matcher {
    let (g, h) = (ty(g), ty(h));
    Box::new(move |c| {
        let t = h.simple_factors[0];
        is_pair(c, &g, &h) && c.has_weights(&[(t, node(t, k, coeff))])
    })
}

fn fixed_weights(g: &str, h: &str, w: Vec<(&str, Vec<i64>)>) -> Matcher {
    let (g, h) = (ty(g), ty(h));
    let w: Vec<(SimpleType, Vec<i64>)> = w.into_iter().map(|(t, v)| (simple(t), v)).collect();
    Box::new(move |c| is_pair(c, &g, &h) && c.has_weights(&w))
}

fn g_simple(c: &Candidate) -> Option<SimpleType> {
    c.record.g.as_simple()
}

fn so(n: usize) -> Option<ReductiveType> {
    AlgebraName::So(n).normalize().ok()
}

/// `l` with `g ≅ so(l+1)` and `h ≅ so(l)`, if the row has that shape.
fn so_step(c: &Candidate) -> Option<usize> {
    let (ClassicalFamily::So, n) = standard_representation(g_simple(c)?)? else { return None };
    let l = n.checked_sub(1)?;
    (l >= 2 && so(l)?.same_factors(&c.record.h)).then_some(l)
}

/// `(l, p)` with `g = C_l` and `h ≅ C_p ⊕ C_{l−p}`.
fn symplectic_split(c: &Candidate) -> Option<(usize, usize)> {
    let g = g_simple(c)?;
    if g.family() != Family::C {
        return None;
    }
    let l = g.rank();
    (1..l)
        .find(|&p| {
            let f = |r: usize| SimpleType::c(r).or_else(|_| SimpleType::a(r)).ok();
            match (f(p), f(l - p)) {
                (Some(a), Some(b)) => c.record.h.same_factors(&ReductiveType::new(vec![a, b], 0)),
                _ => false,
            }
        })
        .map(|p| (l, p))
}

/// `l` with `g = A_{2l−1}` and `h = C_l`.
fn sl_to_sp(c: &Candidate) -> Option<usize> {
    let (g, h) = (g_simple(c)?, c.record.h.as_simple()?);
    (g.family() == Family::A && h.family() == Family::C && g.rank() == 2 * h.rank() - 1).then_some(h.rank())
}

fn label_is_partition(c: &Candidate, powers: &[(usize, usize)]) -> bool {
    match (&c.record.z_label, Partition::from_powers(powers)) {
        (OrbitLabel::ClassicalPartition(d), Ok(want)) => *d == want,
        _ => false,
    }
}

fn item(list: ItemList, letter: char, description: &str, matches: Matcher) -> Item {
    Item { list, letter, description: description.to_string(), matches }
}

pub fn items() -> Vec<Item> {
    use ItemList::*;
    vec![
        item(Adjoint, 'a', "C2 ⊃ A1, ρ = 6π1", fixed("C2", "A1", 1, 6)),
        item(Adjoint, 'b', "C7 ⊃ C3, ρ = 2π3", fixed("C7", "C3", 3, 2)),
        item(Adjoint, 'c', "C10 ⊃ A5, ρ = 2π3", fixed("C10", "A5", 3, 2)),
        item(Adjoint, 'd', "C16 ⊃ D6, ρ = 2π5", fixed("C16", "D6", 5, 2)),
        item(Adjoint, 'e', "C28 ⊃ E7, ρ = 2π1", fixed("C28", "E7", 1, 2)),
        item(
            Adjoint,
            'f',
            "C_l ⊃ A1 ⊕ so(l) (l ≥ 3)",
            Box::new(|c| {
                let Some(g) = g_simple(c).filter(|g| g.family() == Family::C && g.rank() >= 3) else {
                    return false;
                };
                let Some(mut h) = so(g.rank()) else { return false };
                h.extend(ty("A1"));
                c.record.h.same_factors(&h)
            }),
        ),
        item(
            Adjoint,
            'g',
            "A_{2l−1} ⊃ A_{l−1} ⊕ A1 (l ≥ 3), ρ = (π1 + π_{l−1}) ⊗ 2π1",
            Box::new(|c| {
                let Some(g) = g_simple(c).filter(|g| g.family() == Family::A && g.rank() % 2 == 1) else {
                    return false;
                };
                let l = g.rank().div_ceil(2);
                let (Ok(al), Ok(a1)) = (SimpleType::a(l - 1), SimpleType::a(1)) else { return false };
                let mut w = node(al, 1, 1);
                w[l - 2] += 1;
                l >= 3
                    && c.record.h.same_factors(&ReductiveType::new(vec![al, a1], 0))
                    && c.has_weights(&[(al, w), (a1, vec![2])])
            }),
        ),
        item(Adjoint, 'h', "A15 ⊃ D5, ρ = π4 + π5", fixed_weights("A15", "D5", vec![("D5", vec![0, 0, 0, 1, 1])])),
        item(Adjoint, 'i', "A9 ⊃ A4, ρ = π2 + π3", fixed_weights("A9", "A4", vec![("A4", vec![0, 1, 1, 0])])),
        item(Adjoint, 'j', "D8 ⊃ B4, ρ = π3", fixed("D8", "B4", 3, 1)),
        item(
            Adjoint,
            'k',
            "D_{2l} ⊃ C_l ⊕ A1 (l ≥ 3), ρ = π2 ⊗ 2π1",
            Box::new(|c| {
                let Some(g) = g_simple(c).filter(|g| g.family() == Family::D && g.rank() % 2 == 0) else {
                    return false;
                };
                let l = g.rank() / 2;
                let (Ok(cl), Ok(a1)) = (SimpleType::c(l), SimpleType::a(1)) else { return false };
                l >= 3
                    && c.record.h.same_factors(&ReductiveType::new(vec![cl, a1], 0))
                    && c.has_weights(&[(cl, node(cl, 2, 1)), (a1, vec![2])])
            }),
        ),
        item(
            Adjoint,
            'l',
            "E7 ⊃ F4 ⊕ A1, ρ = π1 ⊗ 2π1 (π1 of F4 is the 26-dimensional representation)",
            fixed_weights("E7", "F4+A1", vec![("F4", vec![1, 0, 0, 0]), ("A1", vec![2])]),
        ),
        item(
            NonAdjoint,
            'a',
            "l' ⊕ l' ⊃ diag(l'), ρ = highest root, Z = P(O_min ⊕ O_min)",
            Box::new(|c| {
                let r = c.record;
                let Some(t) = r.h.as_simple() else { return false };
                let rs = RootSystem::simple(t);
                let delta = rs
                    .highest_root(0)
                    .and_then(|d| rs.convert_basis(&d, Basis::FundamentalWeight))
                    .ok()
                    .and_then(|d| d.integer_coords());
                r.kind == PairKind::Diagonal
                    && r.g.same_factors(&ReductiveType::new(vec![t, t], 0))
                    && r.z_label == OrbitLabel::MinPlusMin
                    && delta.is_some_and(|d| c.has_weights(&[(t, d)]))
            }),
        ),
        item(
            NonAdjoint,
            'b',
            "C_l ⊃ C_p ⊕ C_{l−p}, ρ = π1 ⊗ π1, Z = Z_short",
            Box::new(|c| {
                symplectic_split(c).is_some()
                    && c.record.z_label == OrbitLabel::Short
                    && c.weights().is_some_and(|w| w.iter().all(|(t, v)| *v == node(*t, 1, 1)))
            }),
        ),
        item(
            NonAdjoint,
            'c',
            "A_{2l−1} ⊃ C_l (l ≥ 2), ρ = π2, Z = Z_[2^2, 1^(2l−4)]",
            Box::new(|c| {
                sl_to_sp(c).is_some_and(|l| {
                    let cl = SimpleType::c(l).expect("l ≥ 2");
                    label_is_partition(c, &[(2, 2), (1, 2 * l - 4)]) && c.has_weights(&[(cl, node(cl, 2, 1))])
                })
            }),
        ),
        item(
            NonAdjoint,
            'd',
            "so(l+1) ⊃ so(l) (l ≥ 2), ρ = standard, Z = Z_[3, 1^(l−2)] (= Z_short for even l)",
            Box::new(|c| {
                let Some(l) = so_step(c) else { return false };
                let standard: Vec<(SimpleType, Vec<i64>)> =
                    c.record.h.simple_factors.iter().map(|&t| (t, node(t, 1, 1))).collect();
                let label_ok = label_is_partition(c, &[(3, 1), (1, l - 2)])
                    || (l % 2 == 0 && c.record.z_label == OrbitLabel::Short);
                label_ok && c.has_weights(&standard)
            }),
        ),
        item(
            NonAdjoint,
            'e',
            "F4 ⊃ B4, ρ = π4, Z = Z_short",
            Box::new(|c| fixed("F4", "B4", 4, 1)(c) && c.record.z_label == OrbitLabel::Short),
        ),
        item(
            NonAdjoint,
            'f',
            "E6 ⊃ F4, ρ = π1, Z = Z_2A1",
            Box::new(|c| {
                fixed("E6", "F4", 1, 1)(c) && c.record.z_label == OrbitLabel::BalaCarter("2A1".to_string())
            }),
        ),
        item(
            NonAdjoint,
            'g',
            "B3 ⊃ G2 (not symmetric), ρ = π1, Z = Z_[3, 2^2]",
            Box::new(|c| fixed("B3", "G2", 1, 1)(c) && label_is_partition(c, &[(3, 1), (2, 2)])),
        ),
        item(ExcludedSymmetric, 'a', "C_l ⊃ C_p ⊕ C_{l−p}", Box::new(|c| symplectic_split(c).is_some())),
        item(ExcludedSymmetric, 'b', "A_{2l−1} ⊃ C_l (l ≥ 2)", Box::new(|c| sl_to_sp(c).is_some())),
        item(ExcludedSymmetric, 'c', "so(l+1) ⊃ so(l) (l ≥ 2)", Box::new(|c| so_step(c).is_some())),
        item(ExcludedSymmetric, 'd', "F4 ⊃ B4", Box::new(|c| is_pair(c, &ty("F4"), &ty("B4")))),
        item(ExcludedSymmetric, 'e', "E6 ⊃ F4", Box::new(|c| is_pair(c, &ty("E6"), &ty("F4")))),
    ]
}
