use covcert_core::bounds::*;
use covcert_core::numberfields::{bundled_catalog, find};
use covcert_core::rigor::{int, parse_decimal, rat};
use covcert_core::{Interval, Rational};
use num_traits::Signed;
use proptest::prelude::*;

const BITS: u32 = 256;

fn dec(s: &str) -> Rational {
    parse_decimal(s).unwrap()
}

/// Reference values from a 40-digit mpmath evaluation of the same closed
/// forms; the enclosure must contain them to 30 digits.
fn assert_near(x: &Interval, oracle: &str) {
    let o = dec(oracle);
    let tol = o.clone() * rat(1, 1_000_000_000_000_000_000) * rat(1, 1_000_000_000_000);
    assert!(x.agrees_with(&o, &tol.abs()), "{:?} vs {oracle}", x.to_f64());
}

#[test]
fn pi_four_against_oracle() {
    assert_near(&pi_n(4, BITS), "0.0000000003946078002255150610422923796161755");
}

#[test]
fn psi_exact_values() {
    assert_eq!(psi_exact(2), rat(1, 5760));
    assert_eq!(psi_exact(3), rat(1, 2903040));
    for n in 2..=6 {
        assert!(psi_interval(n, BITS).unwrap().contains(&psi_exact(n)), "n = {n}");
    }
}

#[test]
fn zeta_product_below_183() {
    assert!(zeta_product_check(BITS).less());
    // product of zeta(2j) for j <= 60: 1.8210174514...
    assert!(zeta_product_with_tail(20, BITS).agrees_with(&dec("1.82101745149929239"), &rat(1, 10_000_000_000)));
}

#[test]
fn discriminant_bounds_against_oracle() {
    assert_near(&n3_d_bound(2, BITS).unwrap(), "10.62399903420134827158701885366360897673");
    assert_near(&n3_d_bound(3, BITS).unwrap(), "60.02326358594949225383939839418327718865");
    for (d, o) in [
        (2, "25.74366175226131195012407749063772314119"),
        (3, "231.6520052354353769966808490801685568504"),
        (4, "2084.499557444833020095731290526137959259"),
        (5, "18757.18019609457265432570994811498502566"),
    ] {
        assert_near(&n2_d_bound(d, BITS).unwrap(), o);
    }
}

#[test]
fn proto_bounds_against_oracle() {
    let b = |n, d, i| proto_d_bound_with(n, d, 1, i, BITS).unwrap();
    assert_near(&b(3, 2, IndexBound::UnitsModSquares), "5.277315368686776656248154549444447836999");
    assert_near(&b(3, 3, IndexBound::Coarse), "28.08667168665899309736184311125681120619");
    for (d, o) in [
        (5, "3177.287998354326443070949138859586562594"),
        (4, "436.1792397626349193346629046305543875431"),
        (3, "59.87884299391531004323313140150845157119"),
        (2, "8.22018911363398785973683798969159369596"),
    ] {
        assert_near(&b(2, d, IndexBound::NegativeOneExcluded), o);
    }
}

#[test]
fn quotients_against_oracle() {
    let c = bundled_catalog();
    let k = |d, disc| find(&c, d, disc).unwrap();
    assert_eq!(quotient_exact(k(2, 5), 2).unwrap(), int(40));
    assert_eq!(quotient_exact(k(2, 8), 2).unwrap(), rat(32, 11));
    assert_eq!(quotient_exact(k(2, 5), 3).unwrap(), rat(200, 67));
    assert!(quotient(k(2, 5), 2, BITS).unwrap().contains(&int(40)));
    // mpmath with zeta_K = zeta |L(s, chi)|^2 for the cubic character mod 7
    let q49 = quotient(k(3, 49), 2, BITS).unwrap();
    assert!(q49.agrees_with(&dec("19.8481012658227848"), &rat(1, 1000)));
    assert!(q49.width() < rat(1, 1000));
    assert_eq!(quotient_exact(&covcert_core::numberfields::NumberFieldRecord::rationals(), 2).unwrap(), int(2));
}

#[test]
fn adjusted_quotient_rulings() {
    let c = bundled_catalog();
    let adj = |d, disc, n| {
        let f = find(&c, d, disc).unwrap();
        adjusted_quotient(&quotient(f, n, BITS).unwrap(), d, 1)
    };
    assert!(adj(2, 5, 2).certainly_greater(&Interval::one()));
    assert!(adj(2, 8, 2).certainly_less(&Interval::one()));
    assert!(adj(3, 49, 2).certainly_less(&Interval::one()));
    assert!(adj(2, 5, 3).certainly_less(&Interval::one()));
}

#[test]
fn rank_four_conditions() {
    let good = OdlyzkoPair::parse("6.894", "2.2667").unwrap();
    assert!(rank4_conditions(&good, BITS).unwrap().all_hold());
    let small = OdlyzkoPair::parse("5.0", "2.2667").unwrap();
    let c = rank4_conditions(&small, BITS).unwrap();
    assert!(c.cond_b.less());
    assert!(!c.all_hold());
    assert!(claim_c_direct(&good, BITS).unwrap().greater());
    assert!(claim_c_constant(BITS).less());
    assert!(omega_condition(&good, 2, BITS).unwrap().greater());
    assert!(claim_a_direct(&good, 2..=20, BITS).unwrap().iter().all(|(_, c)| c.greater()));
    for n in 3..=14 {
        assert!(claim_b_direct(&rat(566, 100), n, BITS).unwrap().greater(), "n = {n}");
    }
}

#[test]
fn pi_ratio_sign_change() {
    for n in 2..=7 {
        assert!(pi_ratio(n, BITS).certainly_less(&Interval::one()), "n = {n}");
    }
    for n in 8..=20 {
        assert!(pi_ratio(n, BITS).certainly_greater(&Interval::one()), "n = {n}");
    }
}

#[test]
fn rank_three_threshold() {
    let (c1, c2) = n3_threshold_constants(BITS).unwrap();
    assert!(c1.greater() && c2.less());
    let p = OdlyzkoPair::parse("13.047", "3.8667").unwrap();
    assert_near(&n3_degree_threshold(&p, BITS).unwrap(), "3.307241416440265195708916395056734436916");
    let tiny = OdlyzkoPair::parse("5.0", "1.0").unwrap();
    assert!(n3_degree_threshold(&tiny, BITS).is_err());
}

#[test]
fn rank_two_constants() {
    assert!(n2_base_constant_check(BITS).unwrap().greater());
    assert_eq!(n2_prefactor(), (int(66), rat(11, 960)));
}

#[test]
fn odlyzko_table_parsing() {
    let t = load_odlyzko("# c\nA,E\n21.512,6.0001\n".as_bytes()).unwrap();
    assert_eq!(t.len(), 1);
    assert!(load_odlyzko("A,E\n".as_bytes()).is_err());
    assert!(load_odlyzko("A,E\n0.5,1\n".as_bytes()).is_err());
    assert!(load_odlyzko("A,E\nx,1\n".as_bytes()).is_err());
    assert_eq!(bundled_odlyzko().len(), 3);
}

#[test]
fn odlyzko_lower_bound_below_known_fields() {
    let p = OdlyzkoPair::parse("6.894", "2.2667").unwrap();
    for f in bundled_catalog().iter().filter(|f| f.degree >= 2) {
        let lb = odlyzko_disc(&p, f.degree, 128);
        assert!(lb.certainly_less(&Interval::from_int(f.discriminant as i64)), "{}", f.label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn proto_bound_grows_with_h_and_index(n in 2u32..6, d in 2u32..6, h in 1u32..8) {
        let b = |h, i| proto_d_bound_with(n, d, h, i, 96).unwrap();
        prop_assert!(b(h + 1, IndexBound::Coarse).certainly_greater(&b(h, IndexBound::Coarse)));
        prop_assert!(b(h, IndexBound::Coarse).certainly_greater(&b(h, IndexBound::UnitsModSquares)));
        prop_assert!(b(h, IndexBound::UnitsModSquares).certainly_greater(&b(h, IndexBound::NegativeOneExcluded)));
    }

    #[test]
    fn o_bound_increasing_in_degree(n in 3u32..9, d in 2u32..8) {
        let p = OdlyzkoPair::parse("6.894", "2.2667").unwrap();
        let a = o_bound(n, d, &p, 96).unwrap();
        let b = o_bound(n, d + 1, &p, 96).unwrap();
        prop_assert!(b.certainly_greater(&a));
    }

    #[test]
    fn f_bound_increasing_in_disc(d in 2u32..6, n in 2u32..6, disc in 2i64..5000) {
        let a = f_bound(d, &Interval::from_int(disc), n, 96).unwrap();
        let b = f_bound(d, &Interval::from_int(disc + 1), n, 96).unwrap();
        prop_assert!(b.certainly_greater(&a));
    }
}
