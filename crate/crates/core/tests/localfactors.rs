use covcert_core::localfactors::*;
use covcert_core::numberfields::bundled_catalog;
use covcert_core::rigor::{int, rat};
use covcert_core::Rational;
use num_bigint::BigInt;

#[test]
fn t_exact_values() {
    assert_eq!(t_factor(2), rat(5, 2));
    assert_eq!(t_factor(3), int(10));
    assert_eq!(t_factor(4), rat(51, 2));
}

#[test]
fn t_matches_factored_form_and_grows() {
    let mut prev = t_factor(2);
    for q in 3..=1000u64 {
        let t = t_factor(q);
        assert_eq!(t, t_factor_factored(q));
        assert!(t > prev);
        prev = t;
    }
}

#[test]
fn t_exceeds_25_from_four() {
    for q in 4..=1000u64 {
        assert!(t_factor(q) > int(25), "q = {q}");
    }
}

#[test]
fn eprime_exact_values() {
    assert_eq!(eprime_special(3, 2), BigInt::from(35));
    assert_eq!(eprime_special(2, 2), BigInt::from(3));
    // (q^2 - 1)(q^6 - 1) at q = 2
    assert_eq!(eprime_special(4, 2), BigInt::from(3 * 63));
    // (q-1)(q^2+1)(q^3-1) at q = 3
    assert_eq!(eprime_special(3, 3), BigInt::from(2 * 10 * 26));
}

#[test]
fn h_values() {
    // 16/3 * 3/4 * 15/16 * 63/64 and 27/4 * 8/9 * 80/81
    assert_eq!(h_rigidity_exact(2, 3), rat(945, 256));
    assert_eq!(h_rigidity_exact(3, 2), rat(16, 27) * int(10));
    assert!(h_rigidity(2, 3).agrees_with(&rat(369, 100), &rat(2, 100)));
}

#[test]
fn scans_over_small_q_and_n() {
    for n in 2..=8u32 {
        for q in 2..=16u64 {
            assert!(nonspecial_gt_two(q, n).greater(), "q = {q}, n = {n}");
            assert!(eprime_special(n, q) > BigInt::from(2));
            let e = Rational::from_integer(eprime_special(n, q));
            assert!(h_rigidity_exact(q, n) <= e, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn h_increasing_in_both_arguments() {
    for n in 1..=8u32 {
        for q in 2..=16u64 {
            assert!(h_rigidity_exact(q + 1, n) > h_rigidity_exact(q, n));
            assert!(h_rigidity_exact(q, n + 1) > h_rigidity_exact(q, n));
        }
    }
}

#[test]
fn local_factor_rules() {
    assert!(LocalFactor::new(2, 2, LocalFactorKind::SpecialNonhyperspecial).is_err());
    assert!(LocalFactor::new(2, 3, LocalFactorKind::NonspecialRank2Levi).is_err());
    assert!(LocalFactor::new(1, 3, LocalFactorKind::Hyperspecial).is_err());
    assert_eq!(LocalFactor::new(4, 2, LocalFactorKind::NonspecialRank2Levi).unwrap().value, rat(51, 2));
    assert_eq!(LocalFactor::new(2, 3, LocalFactorKind::SpecialNonhyperspecial).unwrap().value, int(35));
}

#[test]
fn exclusion_inequality_over_qsqrt5_residue_fields() {
    let lf = |q| LocalFactor::new(q, 2, LocalFactorKind::NonspecialRank2Levi).unwrap();
    let hs = LocalFactor::new(5, 2, LocalFactorKind::Hyperspecial).unwrap();
    assert!(exclusion_inequality(&[lf(4)]).greater());
    assert!(exclusion_inequality(&[lf(4), lf(9), hs.clone()]).greater());
    assert!(exclusion_inequality(&[lf(5), lf(11), lf(11)]).greater());
    // with q = 2 or 3 allowed it would fail
    assert!(exclusion_inequality(&[lf(2)]).less());
    assert!(!exclusion_inequality(&[lf(3)]).greater());
    // T empty: 1 against 5, left to the quaternion parity argument
    assert!(exclusion_inequality(&[hs]).less());
}

#[test]
fn qsqrt5_exclusion_holds() {
    let ex = qsqrt5_local_exclusion(&bundled_catalog()).unwrap();
    assert!(ex.holds());
    assert!(ex.no_small_residue_field);
    assert!(ex.padic_squares.iter().all(|(_, sq)| !sq));
    assert!(qsqrt5_local_exclusion(&[]).is_err());
}
