use covcert_core::numberfields::*;
use covcert_core::poly;
use covcert_core::rigor::rat;
use covcert_core::Interval;

fn catalog() -> Vec<NumberFieldRecord> {
    bundled_catalog()
}

#[test]
fn catalog_counts_by_degree() {
    let c = catalog();
    let count = |d| c.iter().filter(|f| f.degree == d).count();
    assert_eq!((count(2), count(3), count(4), count(5)), (7, 5, 6, 1));
    assert_eq!(count(1), 1);
    assert!(c.iter().all(|f| f.is_totally_real));
}

#[test]
fn catalog_polynomials_match_discriminants() {
    for f in catalog().iter().filter(|f| f.degree > 1) {
        assert_eq!(poly::real_root_count(&f.polynomial), f.degree as usize, "{}", f.label);
        assert!(polynomial_index(f) >= 1, "{}", f.label);
    }
}

#[test]
fn malformed_catalog_is_rejected() {
    let bad = "2.2.5.1|2|5|1|-1,-1\n";
    assert!(load_catalog(bad.as_bytes()).is_err());
    let wrong_disc = "2.2.5.1|2|7|1|-1,-1,1\n";
    assert!(load_catalog(wrong_disc.as_bytes()).is_err());
}

#[test]
fn tampered_catalog_fails_manifest() {
    let mut bytes = BUNDLED_CATALOG.as_bytes().to_vec();
    bytes.push(b'\n');
    assert!(verify_manifest(&bytes, BUNDLED_MANIFEST, "fields.txt").is_err());
    assert!(verify_manifest(BUNDLED_CATALOG.as_bytes(), BUNDLED_MANIFEST, "fields.txt").is_ok());
}

/// No smaller b solves a^2 - D b^2 = +-4.
#[test]
fn pell_solutions_are_minimal() {
    for f in catalog().iter().filter(|f| f.degree == 2) {
        let d = f.discriminant as i128;
        let p = pell_fundamental_unit(f.discriminant);
        let (a, b) = (p.a as i128, p.b as i128);
        assert_eq!(a * a - d * b * b, p.norm4 as i128);
        for bb in 1..b {
            for aa in 0..=a + 1 {
                let v = aa * aa - d * bb * bb;
                assert!(v != 4 && v != -4, "D = {d}: smaller solution ({aa}, {bb})");
            }
        }
    }
}

/// Units +-eps^k, k = 0..3, as (x + y sqrt D)/2; counts the totally positive
/// classes modulo squares by exact sign tests.
fn brute_force_index(d: u64) -> u32 {
    let p = pell_fundamental_unit(d);
    let d = d as i128;
    let mul = |(x1, y1): (i128, i128), (x2, y2): (i128, i128)| ((x1 * x2 + d * y1 * y2) / 2, (x1 * y2 + x2 * y1) / 2);
    // sign of x + y sqrt D
    let sign = |x: i128, y: i128| -> i32 {
        match (x >= 0, y >= 0) {
            (true, true) => 1,
            (false, false) => -1,
            _ => {
                let s = (x * x - d * y * y).signum() as i32;
                if x > 0 { s } else { -s }
            }
        }
    };
    let eps = (p.a as i128, p.b as i128);
    let mut pos_classes = std::collections::BTreeSet::new();
    let mut u = (2i128, 0i128);
    for k in 0..4u32 {
        for s in [1i128, -1] {
            let (x, y) = (s * u.0, s * u.1);
            if sign(x, y) > 0 && sign(x, -y) > 0 {
                // class modulo squares: sign and parity of k
                pos_classes.insert((s, k % 2));
            }
        }
        u = mul(u, eps);
    }
    pos_classes.len() as u32
}

#[test]
fn quadratic_unit_index_matches_brute_force() {
    for f in catalog().iter().filter(|f| f.degree == 2) {
        assert_eq!(totally_positive_index(f).unwrap(), brute_force_index(f.discriminant), "{}", f.label);
    }
}

#[test]
fn unit_indices_for_the_pipeline_fields() {
    let c = catalog();
    for (d, disc) in [(2, 5), (2, 8), (3, 49)] {
        assert_eq!(totally_positive_index(find(&c, d, disc).unwrap()).unwrap(), 1);
    }
    assert_eq!(totally_positive_index(find(&c, 2, 12).unwrap()).unwrap(), 2);
}

#[test]
fn cubic_units_have_unit_norm_and_signs() {
    let c = catalog();
    let k = find(&c, 3, 49).unwrap();
    let u = unit_data(k).unwrap();
    let signs = unit_sign_matrix(&k.polynomial, &u.unit_expressions).unwrap();
    // f64 oracle: roots 2 cos(2 pi k / 7)
    let roots: Vec<f64> = (1..=3).map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos()).collect();
    let mut roots_sorted = roots.clone();
    roots_sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for (i, e) in u.unit_expressions.iter().enumerate() {
        let vals: Vec<f64> = roots_sorted
            .iter()
            .map(|r| e.iter().enumerate().map(|(k, c)| *c as f64 * r.powi(k as i32)).sum())
            .collect();
        let norm: f64 = vals.iter().product();
        assert!((norm.abs() - 1.0).abs() < 1e-9);
        let s: Vec<i8> = vals.iter().map(|v| if *v > 0.0 { 1 } else { -1 }).collect();
        assert_eq!(signs[i], s);
    }
}

#[test]
fn splitting_agrees_with_padic_squares() {
    for f in catalog().iter().filter(|f| f.degree == 2) {
        let d = f.discriminant;
        for p in poly::primes_up_to(60) {
            let s = splitting_type(f, p).unwrap();
            if d % p == 0 {
                assert_eq!(s.kind, SplitKind::Ramified);
                continue;
            }
            let square = padic_square_test(d as i64, p);
            assert_eq!(s.kind == SplitKind::Split, square, "D = {d}, p = {p}");
            let qs: u64 = s.residue_cardinalities.iter().product();
            assert_eq!(qs, p * p);
        }
    }
}

#[test]
fn qsqrt5_small_primes_are_inert() {
    let c = catalog();
    let k = find(&c, 2, 5).unwrap();
    assert_eq!(splitting_type(k, 2).unwrap().residue_cardinalities, vec![4]);
    assert_eq!(splitting_type(k, 3).unwrap().residue_cardinalities, vec![9]);
    assert_eq!(splitting_type(k, 11).unwrap().kind, SplitKind::Split);
}

#[test]
fn cubic_splitting_counts_roots() {
    let c = catalog();
    let k = find(&c, 3, 49).unwrap();
    for p in poly::primes_up_to(100) {
        let s = splitting_type(k, p).unwrap();
        // Q(zeta_7)^+: p splits iff p = +-1 mod 7
        let expect = if p == 7 {
            SplitKind::Ramified
        } else if p % 7 == 1 || p % 7 == 6 {
            SplitKind::Split
        } else {
            SplitKind::Inert
        };
        assert_eq!(s.kind, expect, "p = {p}");
    }
}

fn f64_zeta(s: f64) -> f64 {
    (1..2_000_000).map(|k| (k as f64).powf(-s)).sum::<f64>()
}

#[test]
fn quadratic_zeta_against_f64_series() {
    let c = catalog();
    for disc in [5u64, 8, 13] {
        let k = find(&c, 2, disc).unwrap();
        let z = dedekind_zeta_enclosure(k, 2, 128).unwrap();
        let l: f64 = (1..2_000_000i64)
            .map(|n| covcert_core::specfun::kronecker(disc as i64, n) as f64 / (n as f64).powi(2))
            .sum();
        let oracle = f64_zeta(2.0) * l;
        assert!((z.to_f64() - oracle).abs() < 1e-5, "D = {disc}");
        let exact = quadratic_zeta_exact(disc, 1).unwrap();
        assert!(exact > rat(0, 1));
    }
}

/// Euler product over rational primes in f64, with roots of f mod p counted
/// by brute force.
#[test]
fn cubic_zeta_against_f64_euler_product() {
    let c = catalog();
    let k = find(&c, 3, 49).unwrap();
    let s = 2.0f64;
    let mut prod = 1.0f64;
    for p in poly::primes_up_to(20000) {
        let roots = (0..p as i64)
            .filter(|x| {
                let v = k.polynomial.iter().rev().fold(0i128, |acc, &c| (acc * *x as i128 + c as i128).rem_euclid(p as i128));
                v == 0
            })
            .count();
        let pf = p as f64;
        let local = if p == 7 {
            1.0 / (1.0 - pf.powf(-s))
        } else if roots == 3 {
            (1.0 / (1.0 - pf.powf(-s))).powi(3)
        } else {
            1.0 / (1.0 - pf.powf(-3.0 * s))
        };
        prod *= local;
    }
    let z = dedekind_zeta_enclosure(k, 2, 64).unwrap();
    assert!((z.to_f64() - prod).abs() < 1e-4, "{} vs {prod}", z.to_f64());
    assert!(z.width() < rat(1, 1000));
}

#[test]
fn zimmert_and_brauer_siegel() {
    let z = zimmert_lower(2, 64);
    // 0.04 e^0.92 = 0.100372
    assert!(z.agrees_with(&rat(100372, 1_000_000), &rat(1, 1_000_000)));
    // h R = log((1 + sqrt 5)/2) = 0.4812 for Q(sqrt 5) lies below the bound
    let h = brauer_siegel_h(2, &Interval::from_int(5), &rat(1, 1), 64).unwrap();
    assert!(h.certainly_greater(&Interval::exact(rat(4813, 10000))));
}

#[test]
fn unsupported_field_errors() {
    let c = catalog();
    let quartic = c.iter().find(|f| f.degree == 4).unwrap();
    assert!(unit_data(quartic).is_err());
    assert!(dedekind_zeta_enclosure(quartic, 2, 64).is_err());
}
