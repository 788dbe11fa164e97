use covcert_core::rigor::{iv_arith, parse_decimal, rat, ArithOp};
use covcert_core::{Interval, Rational};
use proptest::prelude::*;

fn r() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
}

/// An interval together with a sub-interval and a point of the sub-interval.
fn nested() -> impl Strategy<Value = (Interval, Interval, Rational)> {
    (r(), r(), r(), r(), 0u32..=16).prop_map(|(a, b, c, d, k)| {
        let mut v = [a, b, c, d];
        v.sort();
        let [a, b, c, d] = v;
        let t = rat(k as i64, 16);
        let x = &b + (&c - &b) * t;
        (Interval::new(a, d).unwrap(), Interval::new(b, c).unwrap(), x)
    })
}

const OPS: [ArithOp; 4] = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2500))]

    // 2500 cases times four operations
    #[test]
    fn inclusion_monotone((a, a2, x) in nested(), (b, b2, y) in nested()) {
        for op in OPS {
            let (Ok(big), Ok(small)) = (iv_arith(op, &a, &b), iv_arith(op, &a2, &b2)) else {
                prop_assert!(b.contains_zero() || b2.contains_zero());
                continue;
            };
            prop_assert!(big.contains_interval(&small), "{op:?}");
            let exact = match op {
                ArithOp::Add => &x + &y,
                ArithOp::Sub => &x - &y,
                ArithOp::Mul => &x * &y,
                ArithOp::Div => {
                    if y == Rational::from_integer(0.into()) { continue; }
                    &x / &y
                }
            };
            prop_assert!(small.contains(&exact), "{op:?}");
        }
    }

    #[test]
    fn rounding_is_outward((a, _, x) in nested(), bits in 2u32..80) {
        prop_assert!(a.finish(bits).contains_interval(&a));
        prop_assert!(a.coarsen(bits).contains(&x));
        prop_assert!(a.dyadic(bits).contains_interval(&a));
    }

    #[test]
    fn powers_contain_points((a, _, x) in nested(), k in 0i64..6) {
        let p = a.pow_int(k).unwrap();
        let mut e = Rational::from_integer(1.into());
        for _ in 0..k { e *= &x; }
        prop_assert!(p.contains(&e));
    }

    #[test]
    fn strings_round_trip((a, _, _) in nested()) {
        let (lo, hi) = a.to_strings();
        prop_assert_eq!(Interval::from_strings(&lo, &hi).unwrap(), a);
    }
}

#[test]
fn division_by_zero_interval_errors() {
    let z = Interval::new(rat(-1, 2), rat(1, 3)).unwrap();
    assert!(Interval::one().div(&z).is_err());
}

#[test]
fn inverted_interval_rejected() {
    assert!(Interval::new(rat(1, 1), rat(0, 1)).is_err());
}

#[test]
fn decimal_parsing() {
    assert_eq!(parse_decimal("21.512").unwrap(), rat(21512, 1000));
    assert_eq!(parse_decimal("-1.5e-3").unwrap(), rat(-15, 10000));
}
