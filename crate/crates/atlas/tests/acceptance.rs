//! Acceptance run: one PASS/FAIL line per criterion, all at exact equality.
//! Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use atlas::theorems::{verify_theorems_with, ItemList};
use atlas::{
    bundled_dataset, bundled_table, load_dataset, load_dataset_str, verify_all, CheckName, ExpandOptions, PairKind,
    PairRecord, VerificationReport,
};
use exactmat::{build_witness, gr, jordan_type, ExactMatrix, Witness};
use folding::{builtin_folding, fiber_over, FoldingName};
use niporb::{
    classical_z_dim, minimal_orbit_partition, standard_representation, validate_partition, z_long_dim,
    ClassicalFamily, Partition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repdim::weyl_dim;
use rootcore::{BigInt, RootSystem, SimpleType};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:.2?}, budget {budget:?}"))?;
    Ok(t)
}

fn load(n: usize) -> Vec<PairRecord> {
    load_dataset_str(bundled_table(n).expect("bundled"), &ExpandOptions::default()).expect("bundled table loads")
}

fn all_pass(reports: &[VerificationReport]) -> Result<(), String> {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{} {:?}", r.id, r.failed_checks()))
        .collect();
    ensure(failed.is_empty(), || format!("failing rows: {}", failed.join("; ")))
}

fn triple(r: &VerificationReport) -> (String, String, String) {
    let c = |n: CheckName| r.check(n).map(|c| c.computed.clone()).unwrap_or_default();
    let z = c(CheckName::DimZm).split_whitespace().next().unwrap_or_default().to_string();
    (c(CheckName::DimM), c(CheckName::DimOm), z)
}

fn find<'a>(reports: &'a [VerificationReport], id: &str) -> Result<&'a VerificationReport, String> {
    reports.iter().find(|r| r.id == id).ok_or_else(|| format!("no row {id}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let records = load(1);
    let templates: BTreeSet<&str> = records.iter().map(|r| r.template_id.as_str()).collect();
    ensure(templates.len() == 38, || format!("{} row templates", templates.len()))?;
    let reports = verify_all(&records);
    all_pass(&reports)?;
    let s = |a: &str, b: &str, c: &str| (a.to_string(), b.to_string(), c.to_string());
    let r6 = triple(find(&reports, "T1.06")?);
    ensure(r6 == s("7", "1", "3"), || format!("row 6 gives {r6:?}"))?;
    let r23 = triple(find(&reports, "T1.23")?);
    ensure(r23 == s("7", "5", "11"), || format!("row 23 gives {r23:?}"))?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} records from 38 rows; row 6 = (7, 1, 3), row 23 = (7, 5, 11); {t:.2?}", reports.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let records = load(2);
    let reports = verify_all(&records);
    all_pass(&reports)?;
    ensure(reports.iter().all(|r| r.rho_derived), || "a Table 2 ρ was not derived from marks".into())?;
    for (rec, rep) in records.iter().zip(&reports) {
        if rec.template_id == "T2.02" {
            let l = rec.g.rank() as i64;
            let z = triple(rep).2;
            ensure(z == (4 * l - 3).to_string(), || format!("{}: dim Z_short = {z}", rec.id))?;
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{} records, marks give a unique ρ in every row; {t:.2?}", reports.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut records = load(3);
    records.extend(load(4));
    let reports = verify_all(&records);
    all_pass(&reports)?;
    let hermitian: Vec<&PairRecord> = records.iter().filter(|r| r.kind == PairKind::Hermitian).collect();
    for r in &hermitian {
        ensure(2 * r.expected_dim_om + 1 == r.expected_dim_zm && r.legendrian, || {
            format!("{}: 2·{}+1 ≠ {}", r.id, r.expected_dim_om, r.expected_dim_zm)
        })?;
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{} records ({} Hermitian, all Legendrian in Z_long); {t:.2?}", reports.len(), hermitian.len()))
}

fn criterion_4() -> Outcome {
    let records = bundled_dataset(&ExpandOptions::default()).map_err(|e| e.to_string())?;
    let report = verify_theorems_with(&records, &verify_all(&records));
    ensure(report.passed, || report.mismatches().join("; "))?;
    let a = report.list(ItemList::Adjoint).items.len();
    let n = report.list(ItemList::NonAdjoint).items.len();
    let e = report.list(ItemList::ExcludedSymmetric).items.len();
    ensure((a, n, e) == (12, 7, 5), || format!("item counts {a}, {n}, {e}"))?;
    Ok(format!("{a} + {n} items matched exactly ({e} excluded symmetric pairs); no stray rows"))
}

fn partition(powers: &[(usize, usize)]) -> Partition {
    Partition::from_powers(powers).expect("valid partition")
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let jt = |w: Witness| -> Result<(ExactMatrix, Partition), String> {
        let m = build_witness(w).map_err(|e| e.to_string())?;
        let d = jordan_type(&m).map_err(|e| e.to_string())?;
        Ok((m, d))
    };
    for l in 2..=6 {
        let (_, d) = jt(Witness::SlFold(l))?;
        ensure(d == partition(&[(2, 2), (1, 2 * l - 4)]), || format!("sl-fold({l}) has type {d}"))?;
    }
    for n in 2..=8 {
        let (_, d) = jt(Witness::SoStandard(n))?;
        ensure(d == partition(&[(3, 1), (1, n - 2)]), || format!("so-standard({n}) has type {d}"))?;
    }
    let (m, d) = jt(Witness::B3G2)?;
    ensure(d == partition(&[(3, 1), (2, 2)]), || format!("B3/G2 witness has type {d}"))?;
    ensure(m.rank() == 4, || format!("B3/G2 witness has rank {}", m.rank()))?;
    let cube = m.pow(3).map_err(|e| e.to_string())?;
    ensure(cube.is_zero(), || "B3/G2 witness cube is non-zero".into())?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("[2^2,1^(2l−4)] for l=2..6, [3,1^(n−2)] for n=2..8, [3,2^2] with rank 4 and x³ = 0; {t:.2?}"))
}

fn criterion_6() -> Outcome {
    let dims: BTreeSet<u64> = Partition::all(7)
        .iter()
        .filter(|d| validate_partition(ClassicalFamily::So, 7, d) && d.parts()[0] > 1)
        .map(|d| classical_z_dim(ClassicalFamily::So, 7, d).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let want = BTreeSet::from([17, 15, 13, 11, 9, 7]);
    ensure(dims == want, || format!("dimensions {dims:?}"))?;
    Ok("nonzero so(7) orbits have projectivized dimensions {7, 9, 11, 13, 15, 17}".into())
}

fn criterion_7() -> Outcome {
    let check = |name: FoldingName, want: BTreeSet<Vec<i64>>| -> Result<(), String> {
        let f = builtin_folding(name).map_err(|e| e.to_string())?;
        let short = RootSystem::simple(f.target).dominant_short_root(0).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<i64>> = fiber_over(&f, &short).map_err(|e| e.to_string())?.into_iter().collect();
        ensure(got == want, || format!("{name}: fiber {got:?}"))
    };
    for l in 2..=5usize {
        let g1: Vec<i64> = (1..2 * l).map(|i| (i <= 2 * l - 2) as i64).collect();
        let g2: Vec<i64> = (1..2 * l).map(|i| (i >= 2) as i64).collect();
        check(FoldingName::A2lm1ToCl(l), BTreeSet::from([g1, g2]))?;
    }
    for p in 2..=5usize {
        let mut g1 = vec![1; p + 1];
        g1[p] = 0;
        let mut g2 = vec![1; p + 1];
        g2[p - 1] = 0;
        check(FoldingName::Dpp1ToBp(p), BTreeSet::from([g1, g2]))?;
    }
    check(FoldingName::E6ToF4, BTreeSet::from([vec![1, 1, 2, 2, 1, 1], vec![1, 2, 2, 1, 1, 1]]))?;
    check(FoldingName::B3ToG2, BTreeSet::from([vec![1, 1, 1], vec![0, 1, 2]]))?;
    Ok("two roots over δ_short for A_{2l−1}→C_l (l=2..5), D_{p+1}→B_p (p=2..5), E6→F4, B3→G2".into())
}

fn random_entry(rng: &mut ChaCha8Rng) -> exactmat::GaussianRational {
    gr(rng.gen_range(-3..=3), rng.gen_range(-2..=2))
}

/// Strictly upper triangular with about half the entries zeroed.
fn random_nilpotent(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            if rng.gen_bool(0.5) {
                m[(r, c)] = random_entry(rng);
            }
        }
    }
    m
}

/// Unit lower times unit upper triangular: always invertible.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut l = ExactMatrix::identity(n);
    let mut u = ExactMatrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            if r > c {
                l[(r, c)] = random_entry(rng);
            } else if r < c {
                u[(r, c)] = random_entry(rng);
            }
        }
    }
    l.mul(&u).expect("square")
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let types = SimpleType::all_up_to_rank(8);
    for &t in &types {
        let rs = RootSystem::simple(t);
        let delta = rs.highest_root(0).map_err(|e| err(&e))?;
        let d = weyl_dim(&rs, &[delta]).map_err(|e| err(&e))?;
        ensure(d == BigInt::from(t.dim()), || format!("{t}: dim V_δ = {d}"))?;
    }
    let mut classical = 0;
    for t in SimpleType::all_up_to_rank(12) {
        let Some(d) = minimal_orbit_partition(t) else { continue };
        let (fam, n) = standard_representation(t).ok_or("classical type without standard representation")?;
        let by_partition = classical_z_dim(fam, n, &d).map_err(|e| err(&e))?;
        let by_roots = z_long_dim(t).map_err(|e| err(&e))?;
        ensure(by_partition == by_roots, || format!("{t}: {by_partition} vs {by_roots}"))?;
        classical += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e9e_d7e5);
    const CASES: usize = 1000;
    for case in 0..CASES {
        let n = rng.gen_range(1..=8);
        let m = random_nilpotent(&mut rng, n);
        let d = jordan_type(&m).map_err(|e| err(&e))?;
        ensure(d.total() == n, || format!("case {case}: type {d} of a {n}×{n} matrix"))?;
        let j = ExactMatrix::jordan(d.parts());
        ensure(jordan_type(&j).map_err(|e| err(&e))? == d, || format!("case {case}: J_{d} does not round-trip"))?;
        for k in 1..=n as u32 {
            let (a, b) = (m.pow(k).map_err(|e| err(&e))?.rank(), j.pow(k).map_err(|e| err(&e))?.rank());
            ensure(a == b, || format!("case {case}: rank of the {k}th power {a} vs {b}"))?;
        }
        let p = random_invertible(&mut rng, n);
        let conj = p.mul(&m).and_then(|x| x.mul(&p.inverse()?)).map_err(|e| err(&e))?;
        ensure(jordan_type(&conj).map_err(|e| err(&e))? == d, || format!("case {case}: conjugate changes type"))?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "dim V_δ = dim g for {} types; minimal orbits agree for {classical} classical types; {CASES} seeded matrices; {t:.2?}",
        types.len()
    ))
}

fn criterion_9() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/faults.jsonl");
    let faults = load_dataset(path).map_err(|e| e.to_string())?;
    ensure(faults.len() == CheckName::ALL.len(), || format!("{} fault rows", faults.len()))?;
    for (rep, check) in verify_all(&faults).iter().zip(CheckName::ALL) {
        let want = format!("FAULT.{}", check.letter());
        ensure(rep.id == want, || format!("expected {want}, found {}", rep.id))?;
        ensure(rep.failed_checks() == vec![check], || format!("{}: failing checks {:?}", rep.id, rep.failed_checks()))?;
    }
    Ok("each of the seven checks has a fault row that fails it and no other check".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Table 1 reproduction", criterion_1),
        ("Table 2 reproduction", criterion_2),
        ("Tables 3 and 4 reproduction", criterion_3),
        ("classification lists", criterion_4),
        ("Jordan witnesses", criterion_5),
        ("so(7) orbit inventory", criterion_6),
        ("folding fibers", criterion_7),
        ("property suites", criterion_8),
        ("injected faults", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} — {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} — {why}", k + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
