use std::sync::OnceLock;

use atlas::theorems::{expected_len, items, verify_theorems, verify_theorems_with, ItemList};
use atlas::{bundled_dataset, verify_all, ExpandOptions, PairRecord, VerificationReport};
use niporb::OrbitLabel;

fn bundled() -> &'static (Vec<PairRecord>, Vec<VerificationReport>) {
    static DATA: OnceLock<(Vec<PairRecord>, Vec<VerificationReport>)> = OnceLock::new();
    DATA.get_or_init(|| {
        let records = bundled_dataset(&ExpandOptions::default()).unwrap();
        let reports = verify_all(&records);
        (records, reports)
    })
}

#[test]
fn item_counts() {
    let all = items();
    for (list, n) in [(ItemList::Adjoint, 12), (ItemList::NonAdjoint, 7), (ItemList::ExcludedSymmetric, 5)] {
        assert_eq!(all.iter().filter(|i| i.list == list).count(), n);
        assert_eq!(expected_len(list), n);
    }
    let ids: Vec<String> = all.iter().filter(|i| i.list == ItemList::Adjoint).map(|i| i.id()).collect();
    assert_eq!(ids.first().unwrap(), "adjoint.a");
    assert_eq!(ids.last().unwrap(), "adjoint.l");
}

#[test]
fn bundled_dataset_matches_every_list_exactly() {
    let (records, reports) = bundled();
    let report = verify_theorems_with(records, reports);
    assert!(report.passed, "{:?}", report.mismatches());
    assert!(report.mismatches().is_empty());
    for l in &report.lists {
        assert_eq!(l.items.len(), expected_len(l.list));
        assert!(l.unmatched_rows.is_empty());
    }
    let adjoint = report.list(ItemList::Adjoint);
    let a = &adjoint.items[0];
    assert_eq!((a.id.as_str(), a.matched_rows.clone()), ("adjoint.a", vec!["T1.06".to_string()]));
    let g = &report.list(ItemList::NonAdjoint).items[6];
    assert_eq!((g.id.as_str(), g.matched_rows.clone()), ("non_adjoint.g", vec!["T1.23".to_string()]));
}

#[test]
fn relabelling_b3_g2_as_long_is_reported() {
    let (records, reports) = bundled();
    let mut records = records.clone();
    records.iter_mut().find(|r| r.id == "T1.23").unwrap().z_label = OrbitLabel::Long;
    let report = verify_theorems_with(&records, reports);
    assert!(!report.passed);
    let non_adjoint = report.list(ItemList::NonAdjoint);
    let missing: Vec<&str> = non_adjoint.unmatched_items().iter().map(|i| i.id.as_str()).collect();
    assert_eq!(missing, vec!["non_adjoint.g"]);
    assert!(non_adjoint.items[6].description.contains("Z_[3, 2^2]"));
    assert_eq!(report.list(ItemList::Adjoint).unmatched_rows, vec!["T1.23".to_string()]);
    assert!(report.mismatches().iter().any(|m| m.starts_with("non_adjoint.g")));
}

#[test]
fn dropping_a_row_leaves_its_item_unmatched() {
    let (records, reports) = bundled();
    let records: Vec<PairRecord> = records.iter().filter(|r| r.id != "T1.37").cloned().collect();
    let report = verify_theorems_with(&records, reports);
    let missing: Vec<&str> =
        report.list(ItemList::Adjoint).unmatched_items().iter().map(|i| i.id.as_str()).collect();
    assert_eq!(missing, vec!["adjoint.l"]);
}

#[test]
fn a_legendrian_flag_on_g2_a1_is_an_unmatched_row() {
    let (records, reports) = bundled();
    let mut records = records.clone();
    records.iter_mut().find(|r| r.id == "T1.31").unwrap().legendrian = true;
    let report = verify_theorems_with(&records, reports);
    assert_eq!(report.list(ItemList::Adjoint).unmatched_rows, vec!["T1.31".to_string()]);
}

#[test]
fn small_dataset_runs_its_own_verification() {
    let (records, _) = bundled();
    let subset: Vec<PairRecord> = records.iter().filter(|r| r.id == "T1.06").cloned().collect();
    let report = verify_theorems(&subset);
    assert_eq!(report.list(ItemList::Adjoint).unmatched_items().len(), 11);
}
