use exactmat::*;
use niporb::{ClassicalFamily, Partition};
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn rank_examples() {
    assert_eq!(ExactMatrix::identity(3).rank(), 3);
    assert_eq!(ExactMatrix::zeros(4, 5).rank(), 0);
    let m = ExactMatrix::from_ints(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
    assert_eq!(m.rank(), 2);
    // Rank over ℚ(i): (1, i) and (i, −1) are proportional.
    let m: ExactMatrix = "1 i\ni -1".parse().unwrap();
    assert_eq!(m.rank(), 1);
}

#[test]
fn jordan_block_examples() {
    assert_eq!(jordan_type(&ExactMatrix::jordan(&[3])).unwrap(), part("3"));
    assert_eq!(jordan_type(&ExactMatrix::jordan(&[1, 3, 2])).unwrap(), part("3,2,1"));
    assert_eq!(jordan_type(&ExactMatrix::zeros(4, 4)).unwrap(), part("1^4"));
    assert_eq!(jordan_type(&ExactMatrix::identity(2)), Err(MatError::NotNilpotent));
    let nn = ExactMatrix::from_ints(&[vec![0, 1], vec![0, 1]]).unwrap();
    assert_eq!(jordan_type(&nn), Err(MatError::NotNilpotent));
    assert!(matches!(jordan_type(&ExactMatrix::zeros(2, 3)), Err(MatError::NotSquare { .. })));
}

#[test]
fn sl_fold_witnesses() {
    for l in 2..=6usize {
        let m = build_witness(Witness::SlFold(l)).unwrap();
        assert_eq!(jordan_type(&m).unwrap(), part(&format!("2^2,1^{}", 2 * l - 4)), "l={l}");
        assert!(membership_check(&m, ClassicalFamily::Sl).unwrap());
    }
    let m = build_witness(Witness::SlFold(2)).unwrap();
    let want = ExactMatrix::from_ints(&[
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 0],
    ])
    .unwrap();
    assert_eq!(m, want);
}

#[test]
fn so_standard_witnesses() {
    for n in 2..=8usize {
        let m = build_witness(Witness::SoStandard(n)).unwrap();
        assert_eq!(m.rows(), n + 1);
        let want = Partition::from_powers(&[(3, 1), (1, n - 2)]).unwrap();
        assert_eq!(jordan_type(&m).unwrap(), want, "n={n}");
        assert!(membership_check(&m, ClassicalFamily::So).unwrap());
    }
}

#[test]
fn b3_g2_witness() {
    let m = build_witness(Witness::B3G2).unwrap();
    assert_eq!(m.rank(), 4);
    assert!(!m.pow(2).unwrap().is_zero());
    assert!(m.pow(3).unwrap().is_zero());
    assert_eq!(jordan_type(&m).unwrap(), part("3,2,2"));
    assert!(membership_check(&m, ClassicalFamily::So).unwrap());
    assert!(membership_check(&m, ClassicalFamily::Sl).unwrap());
}

#[test]
fn b3_g2_witness_matches_text_transcription() {
    let text = "\
        0 0 0 0 0 0 1
        0 0 0 0 0 0 -i
        0 0 0 0 1 -i 0
        0 0 0 0 -i -1 0
        0 0 -1 i 0 0 0
        0 0 i 1 0 0 0
        -1 i 0 0 0 0 0";
    let m: ExactMatrix = text.parse().unwrap();
    assert_eq!(m, build_witness(Witness::B3G2).unwrap());
}

#[test]
fn membership_examples() {
    let j2 = ExactMatrix::jordan(&[2]);
    assert!(!membership_check(&j2, ClassicalFamily::So).unwrap());
    assert!(membership_check(&j2, ClassicalFamily::Sl).unwrap());
    assert!(membership_check(&j2, ClassicalFamily::Sp).unwrap());
    assert!(!membership_check(&ExactMatrix::identity(2), ClassicalFamily::Sl).unwrap());
    assert_eq!(
        membership_check(&ExactMatrix::zeros(3, 3), ClassicalFamily::Sp),
        Err(MatError::SizeParity(3))
    );
    // e_{1,2} − e_{4,3} is in sp(4) for J = [[0,I],[−I,0]].
    let m = ExactMatrix::from_ints(&[
        vec![0, 1, 0, 0],
        vec![0, 0, 0, 0],
        vec![0, 0, 0, 0],
        vec![0, 0, -1, 0],
    ])
    .unwrap();
    assert!(membership_check(&m, ClassicalFamily::Sp).unwrap());
}

#[test]
fn entry_grammar() {
    let q = |n: i64, d: i64| num_rational::BigRational::new(n.into(), d.into());
    let z = parse_gaussian("1/2+3/4*i").unwrap();
    assert_eq!((z.re.clone(), z.im.clone()), (q(1, 2), q(3, 4)));
    let z = parse_gaussian("-3/4*i").unwrap();
    assert_eq!((z.re.clone(), z.im.clone()), (q(0, 1), q(-3, 4)));
    assert_eq!(parse_gaussian("-i").unwrap(), -gr_i());
    assert_eq!(parse_gaussian("2-i").unwrap(), gr(2, -1));
    assert_eq!(parse_gaussian("-5").unwrap(), gr(-5, 0));
    assert_eq!(parse_gaussian(".").unwrap(), gr_zero());
    for bad in ["", "x", "1/0", "1//2", "i*i"] {
        assert!(parse_gaussian(bad).is_err(), "{bad}");
    }
    for s in ["0", "3/2", "-i", "1+2*i", "-1/3-i", "i"] {
        assert_eq!(format_gaussian(&parse_gaussian(s).unwrap()), s);
    }
}

#[test]
fn matrix_text_round_trip() {
    let m = build_witness(Witness::B3G2).unwrap();
    let back: ExactMatrix = m.to_string().parse().unwrap();
    assert_eq!(back, m);
    let err = "1 2\n3 x".parse::<ExactMatrix>().unwrap_err();
    assert!(matches!(err, MatError::Parse { line: 2, .. }));
    assert!(matches!("1 2\n3".parse::<ExactMatrix>(), Err(MatError::Shape { .. })));
}

#[test]
fn witness_names() {
    for w in [Witness::SlFold(3), Witness::SoStandard(5), Witness::B3G2] {
        assert_eq!(w.to_string().parse::<Witness>().unwrap(), w);
    }
    assert!(build_witness(Witness::SlFold(1)).is_err());
    assert!("so_standard(x)".parse::<Witness>().is_err());
}

#[test]
fn inverse_round_trip() {
    let m: ExactMatrix = "2 i 0\n1 1 1/2\n0 -i 3".parse().unwrap();
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(3));
    assert_eq!(ExactMatrix::jordan(&[2]).inverse(), Err(MatError::Singular));
}

fn small_entry() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -2i64..=2, 1i64..=3).prop_map(|(a, b, d)| {
        let q = |n: i64| num_rational::BigRational::new(n.into(), d.into());
        GaussianRational::new(q(a), q(b))
    })
}

/// Strictly upper-triangular, with each entry zeroed with probability ~1/2 to
/// spread the Jordan types.
fn nilpotent_upper() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec((small_entry(), any::<bool>()), n * n).prop_map(move |v| {
            let mut m = ExactMatrix::zeros(n, n);
            for r in 0..n {
                for c in r + 1..n {
                    let (x, keep) = &v[r * n + c];
                    if *keep {
                        m[(r, c)] = x.clone();
                    }
                }
            }
            m
        })
    })
}

/// Unit lower times unit upper triangular: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(small_entry(), 2 * n * n).prop_map(move |v| {
        let mut l = ExactMatrix::identity(n);
        let mut u = ExactMatrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                if r > c {
                    l[(r, c)] = v[r * n + c].clone();
                } else if r < c {
                    u[(r, c)] = v[n * n + r * n + c].clone();
                }
            }
        }
        l.mul(&u).unwrap()
    })
}

fn partition_of_at_most(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| prop::sample::select(Partition::all(n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, rng_seed: proptest::test_runner::RngSeed::Fixed(2024), ..ProptestConfig::default() })]

    #[test]
    fn jordan_type_round_trips_through_jordan_matrix(m in nilpotent_upper()) {
        let d = jordan_type(&m).unwrap();
        prop_assert_eq!(d.total(), m.rows());
        let j = ExactMatrix::jordan(d.parts());
        prop_assert_eq!(jordan_type(&j).unwrap(), d.clone());
        // Same rank sequence as the original.
        for k in 1..=m.rows() as u32 {
            prop_assert_eq!(m.pow(k).unwrap().rank(), j.pow(k).unwrap().rank());
        }
    }

    #[test]
    fn jordan_type_is_conjugation_invariant(
        (m, p) in nilpotent_upper()
            .prop_filter("size ≤ 6", |m| m.rows() <= 6)
            .prop_flat_map(|m| { let n = m.rows(); (Just(m), invertible(n)) })
    ) {
        let conj = p.mul(&m).unwrap().mul(&p.inverse().unwrap()).unwrap();
        prop_assert_eq!(jordan_type(&conj).unwrap(), jordan_type(&m).unwrap());
    }

    #[test]
    fn conjugated_jordan_matrix_recovers_partition(
        (d, p) in partition_of_at_most(6).prop_flat_map(|d| { let n = d.total(); (Just(d), invertible(n)) })
    ) {
        let j = ExactMatrix::jordan(d.parts());
        let conj = p.inverse().unwrap().mul(&j).unwrap().mul(&p).unwrap();
        prop_assert_eq!(jordan_type(&conj).unwrap(), d);
    }
}
