use atlas::curve::{h0_p1, verify_g2_curve, EXPECTED_DIM_M, EXPECTED_FAMILY_DIM};
use proptest::prelude::*;

#[test]
fn g2_curve_bookkeeping() {
    let r = verify_g2_curve();
    assert_eq!(r.degree, 10);
    assert_eq!((r.h0_contact, r.h0_s), (11, [5, 7]));
    assert_eq!(r.family_dim, 23);
    assert_eq!(r.family_dim, EXPECTED_FAMILY_DIM);
    assert_eq!(r.dim_m, 14 - 3);
    assert_eq!(r.dim_m, EXPECTED_DIM_M);
    assert!(r.passed);
}

#[test]
fn degree_zero_has_one_section() {
    assert_eq!(h0_p1(0), 1);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(3), ..ProptestConfig::default() })]

    #[test]
    fn sections_of_o_d(d in 0u64..200) {
        prop_assert_eq!(h0_p1(d), d + 1);
    }
}
