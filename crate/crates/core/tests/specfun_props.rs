use covcert_core::rigor::{factorial, int, rat};
use covcert_core::specfun::*;
use covcert_core::{Interval, Rational};
use proptest::prelude::*;

fn x_pos() -> impl Strategy<Value = Rational> {
    (1i64..4000, 1i64..200).prop_map(|(n, d)| rat(n, d))
}

fn x_gt1() -> impl Strategy<Value = Rational> {
    (1i64..2000, 1i64..100).prop_map(|(n, d)| int(1) + rat(n, d))
}

/// Short denominators keep the Hurwitz sums cheap.
fn s_short() -> impl Strategy<Value = Rational> {
    (1i64..60, 1i64..5).prop_map(|(n, d)| int(1) + rat(n, d))
}

fn refines(f: impl Fn(u32) -> Interval) -> bool {
    let a = f(64);
    let b = f(128);
    let c = f(256);
    a.contains_interval(&b) && b.contains_interval(&c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_refines(x in (-4000i64..4000, 1i64..200).prop_map(|(n, d)| rat(n, d))) {
        prop_assert!(refines(|b| exp_enclosure(&Interval::exact(x.clone()), b)));
    }

    #[test]
    fn log_refines(x in x_pos()) {
        prop_assert!(refines(|b| log_enclosure(&Interval::exact(x.clone()), b).unwrap()));
    }

    #[test]
    fn pow_refines(x in x_pos(), y in (-300i64..300, 1i64..50).prop_map(|(n, d)| rat(n, d))) {
        prop_assert!(refines(|b| pow_enclosure(&Interval::exact(x.clone()), &Interval::exact(y.clone()), b).unwrap()));
    }

    #[test]
    fn gamma_refines(x in (1i64..3000, 1i64..100).prop_map(|(n, d)| rat(n, d))) {
        prop_assert!(refines(|b| gamma_enclosure(&Interval::exact(x.clone()), b).unwrap()));
    }

    #[test]
    fn zeta_refines(s in s_short()) {
        prop_assert!(refines(|b| zeta_real_enclosure(&Interval::exact(s.clone()), b).unwrap()));
    }

    #[test]
    fn alpha_refines(s in s_short()) {
        prop_assert!(refines(|b| alpha_enclosure(&Interval::exact(s.clone()), b).unwrap()));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn dirichlet_refines(k in 0usize..L_MODULI.len(), s in s_short()) {
        let d = L_MODULI[k];
        prop_assert!(refines(|b| dirichlet_l_enclosure(d, &Interval::exact(s.clone()), b).unwrap()));
    }

    #[test]
    fn wider_argument_gives_wider_result(s in x_gt1(), w in 1i64..1000) {
        let point = Interval::exact(s.clone());
        let around = Interval::new(s.clone(), &s + rat(w, 100000)).unwrap();
        let z0 = zeta_real_enclosure(&point, 128).unwrap();
        let z1 = zeta_real_enclosure(&around, 128).unwrap();
        prop_assert!(z1.contains_interval(&z0) || z1.intersect(&z0).is_some());
        prop_assert!(z1.lo() <= z0.hi());
    }
}

#[test]
fn pi_refines() {
    assert!(refines(pi_enclosure));
}

#[test]
fn stirling_brackets_factorials() {
    for n in 1..=100u64 {
        let (lo, hi) = stirling_bounds(n, 128).unwrap();
        let f = Rational::from_integer(factorial(n).into());
        assert!(lo.hi() < &f, "n = {n}");
        assert!(hi.lo() > &f, "n = {n}");
    }
}

/// zeta(2j) from Bernoulli numbers against two numerical routes.
#[test]
fn zeta_even_cross_consistency() {
    for j in 1..=10u32 {
        let c = zeta_even_exact(j).unwrap();
        let closed = pi_enclosure(200).pow_int(2 * j as i64).unwrap().scale(&c);
        let s = Interval::from_int(2 * j as i64);
        let em = zeta_real_enclosure(&s, 160).unwrap();
        let bracket = zeta_partial_sum_bracket(&s, 2000, 96).unwrap();
        assert!(em.intersect(&closed).is_some(), "j = {j}");
        assert!(bracket.contains_interval(&em) || bracket.intersect(&em).is_some(), "j = {j}");
        assert!(em.width() < rat(1, 1_000_000_000_000_000_000));
    }
}

#[test]
fn known_constants() {
    // zeta(2) = pi^2/6, zeta(4) = pi^4/90
    assert_eq!(zeta_even_exact(1).unwrap(), rat(1, 6));
    assert_eq!(zeta_even_exact(2).unwrap(), rat(1, 90));
    assert_eq!(bernoulli(12), rat(-691, 2730));
    // Gamma(1/2)^2 = pi
    let g = gamma_enclosure(&Interval::exact(rat(1, 2)), 128).unwrap();
    let pi = pi_enclosure(128);
    assert!((&g * &g).intersect(&pi).is_some());
    // Gamma(6) = 120
    assert!(gamma_enclosure(&Interval::from_int(6), 128).unwrap().contains(&int(120)));
}

#[test]
fn alpha_at_599() {
    let a = alpha_enclosure(&Interval::exact(rat(599, 100)), 256).unwrap();
    assert!(a.agrees_with(&rat(152199, 10000), &rat(1, 10000)));
    assert!(a.width() < rat(1, 1000));
}

#[test]
fn l_values_against_partial_sums() {
    for &d in &L_MODULI {
        let s = Interval::from_int(2);
        let l = dirichlet_l_enclosure(d, &s, 128).unwrap();
        let p = dirichlet_l_partial_sum(d, &s, 20000, 96).unwrap();
        assert!(p.contains_interval(&l) || p.intersect(&l).is_some(), "D = {d}");
        let exact = dirichlet_l_even_exact(d, 2).unwrap();
        // L(2, chi_D) = c pi^2 sqrt(D)
        let closed = pi_enclosure(160).pow_int(2).unwrap().scale(&exact) * Interval::from_int(d).sqrt(160).unwrap();
        assert!(closed.intersect(&l).is_some(), "D = {d}");
    }
}

#[test]
fn kronecker_against_quadratic_residues() {
    for &d in &L_MODULI {
        for p in [3i64, 7, 11, 19, 23, 29, 31] {
            if d % p == 0 {
                continue;
            }
            let is_res = (1..p).any(|x| (x * x - d).rem_euclid(p) == 0);
            assert_eq!(kronecker(d, p), if is_res { 1 } else { -1 }, "D = {d}, p = {p}");
        }
    }
}

#[test]
fn log_of_nonpositive_errors() {
    assert!(log_enclosure(&Interval::zero(), 64).is_err());
    assert!(zeta_real_enclosure(&Interval::one(), 64).is_err());
}
