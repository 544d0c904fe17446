use std::collections::HashSet;

use atlas::dataset::parse_templates;
use atlas::{
    bundled_dataset, bundled_diag, bundled_table, load_dataset, load_dataset_str, verify_pair, CheckName,
    CheckStatus, DatasetError, ExpandOptions, PairKind,
};
use niporb::OrbitLabel;
use rootcore::ReductiveType;

fn ty(s: &str) -> ReductiveType {
    s.parse().unwrap()
}

fn table(n: usize) -> Vec<atlas::PairRecord> {
    load_dataset_str(bundled_table(n).unwrap(), &ExpandOptions::default()).unwrap()
}

#[test]
fn template_counts() {
    let counts: Vec<usize> = (1..=4).map(|n| parse_templates(bundled_table(n).unwrap()).unwrap().len()).collect();
    assert_eq!(counts, vec![38, 11, 5, 7]);
    assert_eq!(parse_templates(bundled_diag()).unwrap().len(), 9);
    assert!(bundled_table(0).is_none() && bundled_table(5).is_none());
}

#[test]
fn table1_ids_are_rows_1_to_38() {
    let ids: Vec<String> = parse_templates(bundled_table(1).unwrap()).unwrap().into_iter().map(|(_, t)| t.id).collect();
    let want: Vec<String> = (1..=38).map(|k| format!("T1.{k:02}")).collect();
    assert_eq!(ids, want);
}

#[test]
fn record_ids_are_unique_and_tables_parse() {
    let all = bundled_dataset(&ExpandOptions::default()).unwrap();
    let ids: HashSet<&str> = all.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
    for r in &all {
        match r.kind {
            PairKind::Diagonal => assert_eq!(r.table(), None, "{}", r.id),
            _ => assert!(matches!(r.table(), Some(1..=4)), "{}", r.id),
        }
    }
}

#[test]
fn empty_file_gives_no_records() {
    assert!(load_dataset_str("", &ExpandOptions::default()).unwrap().is_empty());
    assert!(load_dataset_str("\n# only a comment\n\n", &ExpandOptions::default()).unwrap().is_empty());
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load_dataset("/nonexistent/rows.jsonl"), Err(DatasetError::Io { .. })));
}

#[test]
fn syntax_errors_report_the_line() {
    let text = format!("{}\n{{\"id\": \"X\", \n", bundled_table(1).unwrap().lines().next().unwrap());
    match load_dataset_str(&text, &ExpandOptions::default()) {
        Err(DatasetError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
}

const GOOD: &str = r#"{"id": "X.1", "source": "test", "g": "C2", "h": "A1", "rho": [[6]], "expected_dim_Om": 1, "z_label": "long", "expected_dim_Zm": 3, "legendrian": true, "symmetric": false}"#;

fn schema_field(text: &str) -> String {
    match load_dataset_str(text, &ExpandOptions::default()) {
        Err(DatasetError::Schema { field, .. }) => field,
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn schema_errors_name_the_field() {
    assert_eq!(load_dataset_str(GOOD, &ExpandOptions::default()).unwrap().len(), 1);
    assert_eq!(schema_field(&GOOD.replace(r#""g": "C2", "#, "")), "g");
    assert_eq!(schema_field(&GOOD.replace(r#""legendrian": true"#, r#""legendrian": "maybe(""#)), "legendrian");
    assert_eq!(schema_field(&GOOD.replace(r#""expected_dim_Om": 1"#, r#""expected_dim_Om": [1]"#)), "expected_dim_Om");
    assert_eq!(schema_field(&GOOD.replace(r#""g": "C2""#, r#""g": "Q7""#)), "g");
    assert_eq!(schema_field(&GOOD.replace(r#""z_label": "long""#, r#""z_label": "medium""#)), "z_label");
    assert_eq!(schema_field(&GOOD.replace(r#""h": "A1""#, r#""h": "A1", "colour": 3"#)), "colour");
    assert_eq!(schema_field(&GOOD.replace(r#""kind""#, "").replace(r#""rho": [[6]], "#, "")), "rho");
}

#[test]
fn inconsistent_legendrian_flag_loads_then_fails() {
    let text = GOOD.replace(r#""expected_dim_Zm": 3"#, r#""expected_dim_Zm": 5"#).replace("long", "short");
    let recs = load_dataset_str(&text, &ExpandOptions::default()).expect("loads");
    let report = verify_pair(&recs[0]);
    assert!(!report.passed);
    assert_eq!(report.check(CheckName::Legendrian).unwrap().status, CheckStatus::Fail);
}

#[test]
fn families_expand_over_min_to_min_plus_k() {
    let t1 = table(1);
    let row11: Vec<i64> = t1.iter().filter(|r| r.template_id == "T1.11").map(|r| r.params["n"]).collect();
    assert_eq!(row11, vec![3, 4, 5, 6, 7, 8]);
    let small = load_dataset_str(bundled_table(1).unwrap(), &ExpandOptions { params_max: 1, ..Default::default() })
        .unwrap();
    assert_eq!(small.iter().filter(|r| r.template_id == "T1.11").count(), 2);
    // p ≥ q and p·q > 4 cut the (p, q) grid of row 1.
    let row1: Vec<(i64, i64)> =
        t1.iter().filter(|r| r.template_id == "T1.01").map(|r| (r.params["p"], r.params["q"])).collect();
    assert!(row1.iter().all(|&(p, q)| p >= q && p * q > 4));
    assert!(row1.contains(&(3, 2)) && !row1.contains(&(2, 2)));
}

#[test]
fn large_family_members_are_capped() {
    let t1 = table(1);
    // so(2n² + n) at n = 7 is so(105); at n = 10 it would be so(210).
    let n: Vec<i64> = t1.iter().filter(|r| r.template_id == "T1.15").map(|r| r.params["n"]).collect();
    assert_eq!(n, vec![2, 3, 4, 5, 6, 7]);
    let tiny = ExpandOptions { max_matrix_size: 20, ..Default::default() };
    let t1_tiny = load_dataset_str(bundled_table(1).unwrap(), &tiny).unwrap();
    assert!(t1_tiny.iter().all(|r| r.template_id != "T1.15" || r.params["n"] == 2));
    // Fixed rows survive the cap: D124 ⊃ E8.
    assert!(t1_tiny.iter().any(|r| r.template_id == "T1.29"));
}

#[test]
fn named_algebras_are_normalized() {
    let t3 = table(3);
    let a2 = t3.iter().find(|r| r.id == "T3.01[l=3]").unwrap();
    assert_eq!((a2.g.clone(), a2.h.clone()), (ty("A2"), ty("A1")));
    // so(3) weights double: 2π1 of so(3) is 4π1 of A1.
    assert_eq!(a2.rho, Some(vec![vec![4]]));
    let d3 = t3.iter().find(|r| r.id == "T3.03[p=2,q=0]").unwrap();
    assert_eq!((d3.g.clone(), d3.h.clone()), (ty("D3"), ty("B2")));
    let t2 = table(2);
    let b3 = t2.iter().find(|r| r.id == "T2.01[l=3,p=2]").unwrap();
    // so(4) ⊕ so(3) = A1 + A1 + A1, one mark per factor.
    assert_eq!(b3.h, ty("A1+A1+A1"));
    assert_eq!(b3.marked_nodes, Some(vec![vec![1], vec![1], vec![1]]));
}

#[test]
fn branches_override_boundary_cases() {
    let t1 = table(1);
    let r15 = t1.iter().find(|r| r.id == "T1.15[n=2]").unwrap();
    assert_eq!((r15.rho.clone(), r15.expected_dim_om), (Some(vec![vec![1, 2]]), 4));
    let t2 = table(2);
    let b = t2.iter().find(|r| r.id == "T2.01[l=4,p=4]").unwrap();
    assert_eq!(b.z_label, OrbitLabel::Short);
    assert_eq!(b.z_label_alt, Some("partition:3,1^6".parse().unwrap()));
    assert_eq!((b.expected_dim_om, b.expected_dim_zm), (6, 13));
    let t4 = table(4);
    let point = t4.iter().find(|r| r.id == "T4.01[l=1,p=1]").unwrap();
    assert_eq!(point.marked_nodes, Some(vec![]));
    assert_eq!(point.h, ty("T1"));
}

#[test]
fn diagonal_rows_use_the_highest_root() {
    let diag = load_dataset_str(bundled_diag(), &ExpandOptions::default()).unwrap();
    assert!(diag.iter().all(|r| r.kind == PairKind::Diagonal && r.z_label == OrbitLabel::MinPlusMin));
    let e8 = diag.iter().find(|r| r.id == "TD.09").unwrap();
    assert_eq!(e8.g, ty("E8+E8"));
    assert_eq!(e8.rho, Some(vec![vec![1, 0, 0, 0, 0, 0, 0, 0]]));
}
