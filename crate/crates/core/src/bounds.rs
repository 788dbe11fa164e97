//! Global covolume bounds: Pi(n), Psi(n), S(Lambda), the lower bounds F and
//! O, the discriminant bounds and the parameter conditions used to rule out
//! every field but Q in rank at least four.
//!
//! Decimal constants are exact rationals. Every function takes a target
//! precision in bits.

use std::io::Read;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numberfields::{self, NumberFieldRecord};
use crate::rigor::{decimal_string, factorial, int, parse_decimal, pow2, rat, Cmp, Comparison, Interval, Rational};
use crate::specfun::{self, GUARD};

pub const BUNDLED_ODLYZKO: &str = include_str!("../data/odlyzko.csv");

/// 1.83, the bound for the infinite product of zeta(2j).
pub fn c183() -> Rational {
    rat(183, 100)
}

fn c750() -> Rational {
    int(750)
}

fn c76() -> Rational {
    rat(38, 5)
}

fn c046() -> Rational {
    rat(23, 50)
}

fn iv(r: Rational) -> Interval {
    Interval::exact(r)
}

// ---------------------------------------------------------------- Odlyzko

/// A row (A, E) of an Odlyzko table: D_K > A^d e^(-E) for every totally
/// real field of degree d.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OdlyzkoPair {
    pub a: Rational,
    pub e: Rational,
}

impl OdlyzkoPair {
    pub fn new(a: Rational, e: Rational) -> Result<Self> {
        if a <= int(1) || !e.is_positive() {
            return Err(Error::UnsupportedArgument(format!(
                "Odlyzko pair needs A > 1 and E > 0, got ({}, {})",
                decimal_string(&a),
                decimal_string(&e)
            )));
        }
        Ok(OdlyzkoPair { a, e })
    }

    /// From decimal strings such as `"21.512"`.
    pub fn parse(a: &str, e: &str) -> Result<Self> {
        let p = |s: &str| parse_decimal(s).ok_or_else(|| Error::UnsupportedArgument(format!("not a decimal: {s}")));
        OdlyzkoPair::new(p(a)?, p(e)?)
    }

    pub fn label(&self) -> String {
        format!("({}, {})", decimal_string(&self.a), decimal_string(&self.e))
    }
}

/// Reads `A,E` rows. Lines starting with `#` and a header row are skipped.
pub fn load_odlyzko<R: Read>(mut source: R) -> Result<Vec<OdlyzkoPair>> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(|e| Error::MalformedTable {
        line: 0,
        reason: format!("unreadable: {e}"),
    })?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| Error::MalformedTable {
            line: i + 1,
            reason: reason.into(),
        };
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        if cols.len() != 2 {
            return Err(bad("expected two columns A,E"));
        }
        if cols[0].eq_ignore_ascii_case("A") {
            continue;
        }
        let a = parse_decimal(cols[0]).ok_or_else(|| bad("A is not a decimal"))?;
        let e = parse_decimal(cols[1]).ok_or_else(|| bad("E is not a decimal"))?;
        out.push(OdlyzkoPair::new(a, e).map_err(|_| bad("need A > 1 and E > 0"))?);
    }
    if out.is_empty() {
        return Err(Error::EmptyTable);
    }
    Ok(out)
}

pub fn bundled_odlyzko() -> Vec<OdlyzkoPair> {
    load_odlyzko(BUNDLED_ODLYZKO.as_bytes()).expect("bundled table is valid")
}

// ---------------------------------------------------------------- rank

/// The rank n together with f(n) = n^2 + n/2 - 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankParams {
    pub n: u32,
    pub f: Rational,
}

impl RankParams {
    pub fn new(n: u32) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        RankParams { n, f: f_of(n) }
    }
}

pub fn f_of(n: u32) -> Rational {
    let n = n as i64;
    rat(2 * n * n + n - 6, 2)
}

// ---------------------------------------------------------------- Pi, Psi

fn check_rank(n: u32) {
    assert!((1..=64).contains(&n), "rank {n} outside 1..=64");
}

/// c with Pi(n) = c pi^(-n(n+1)), i.e. prod (2j-1)!/2^(2j).
pub fn pi_n_coeff(n: u32) -> Rational {
    check_rank(n);
    let mut c = Rational::one();
    for j in 1..=n as u64 {
        c *= Rational::from_integer(BigInt::from(factorial(2 * j - 1)));
        c *= pow2(-2 * j as i64);
    }
    c
}

pub(crate) fn pi_n_wp(n: u32, wp: u32) -> Interval {
    let pi = specfun::pi_enclosure(wp);
    let k = (n * (n + 1)) as i64;
    pi.pow_int(-k).expect("pi is positive").scale(&pi_n_coeff(n)).dyadic(wp)
}

/// Pi(n) = prod_{j<=n} (2j-1)!/(2 pi)^(2j).
pub fn pi_n(n: u32, bits: u32) -> Interval {
    pi_n_wp(n, bits + GUARD).finish(bits)
}

/// Psi(n) = Pi(n) prod zeta(2j) as an exact rational: the powers of pi cancel.
pub fn psi_exact(n: u32) -> Rational {
    check_rank(n);
    let mut c = pi_n_coeff(n);
    for j in 1..=n {
        c *= specfun::zeta_even_exact(j).expect("j is in range");
    }
    c
}

/// Psi(n) from Pi(n) and independent enclosures of zeta(2j).
pub fn psi_interval(n: u32, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    let mut acc = pi_n_wp(n, w);
    for j in 1..=n {
        let z = specfun::zeta_real_enclosure(&Interval::from_int(2 * j as i64), w)?;
        acc = (acc * z).dyadic(w);
    }
    Ok(acc.finish(bits))
}

/// prod_{j<=J} zeta(2j), from the exact Bernoulli values.
pub fn zeta_product_partial(big_j: u32, bits: u32) -> Interval {
    let w = bits + GUARD;
    let pi = specfun::pi_enclosure(w);
    let mut c = Rational::one();
    for j in 1..=big_j {
        c *= specfun::zeta_even_exact(j).expect("j is in range");
    }
    let k = (big_j * (big_j + 1)) as i64;
    pi.pow_int(k).expect("integer power").scale(&c).finish(bits)
}

/// Upper enclosure of prod_{j>=1} zeta(2j): the partial product up to J
/// times exp(sum_{j>J} 2^(1-2j)). The tail uses zeta(s) - 1 <= 2^(1-s) for
/// s >= 3 and log(1 + x) <= x.
pub fn zeta_product_with_tail(big_j: u32, bits: u32) -> Interval {
    assert!(big_j >= 1);
    let w = bits + GUARD;
    let part = zeta_product_partial(big_j, w);
    let tail_sum = rat(2, 3) * pow2(-2 * big_j as i64);
    let tail = specfun::exp_enclosure(&iv(tail_sum), w);
    let upper = part.hi() * tail.hi();
    Interval::new(part.lo().clone(), upper).unwrap().finish(bits)
}

/// The certified constant 1.83 together with the check
/// prod_{j<=20} zeta(2j) * tail < 1.83.
pub fn zeta_product_upper() -> Rational {
    c183()
}

pub fn zeta_product_check(bits: u32) -> Comparison {
    Comparison::new(zeta_product_with_tail(20, bits), iv(c183()))
}

/// Pi(n+1)/Pi(n) = (2n+1)!/(2 pi)^(2n+2).
pub fn pi_ratio(n: u32, bits: u32) -> Interval {
    let w = bits + GUARD;
    let two_pi = specfun::pi_enclosure(w).scale(&int(2));
    let num = Rational::from_integer(BigInt::from(factorial(2 * n as u64 + 1)));
    two_pi
        .pow_int(-(2 * n as i64 + 2))
        .expect("positive")
        .scale(&num)
        .finish(bits)
}

// ---------------------------------------------------------------- S(Lambda)

fn disc_power(disc: u64, n: u32, bits: u32) -> Result<Interval> {
    // D^(n(2n+1)/2)
    let k = (n * (2 * n + 1)) as i64;
    let d = int(disc as i64);
    let whole = iv(num_traits::Pow::pow(&d, (k / 2) as i32));
    if k % 2 == 0 {
        Ok(whole)
    } else {
        Ok(whole * iv(d).sqrt(bits + 8)?)
    }
}

/// S(Lambda) = D^(n(2n+1)/2) Pi(n)^d prod_{j<=n} zeta_K(2j).
pub fn s_lambda(field: &NumberFieldRecord, n: u32, bits: u32) -> Result<Interval> {
    if !(2..=8).contains(&n) {
        return Err(Error::UnsupportedArgument(format!("S(Lambda) needs 2 <= n <= 8, got {n}")));
    }
    let w = bits + GUARD;
    let mut acc = disc_power(field.discriminant, n, w)?;
    acc = (acc * pi_n_wp(n, w).pow_int(field.degree as i64)?).dyadic(w);
    for j in 1..=n {
        let z = numberfields::dedekind_zeta_enclosure(field, 2 * j, w)?;
        acc = (acc * z).dyadic(w);
    }
    Ok(acc.finish(bits))
}

/// S(Lambda) as an exact rational where the powers of pi cancel: the
/// rationals and real quadratic fields with a closed-form L-value.
pub fn s_lambda_exact(field: &NumberFieldRecord, n: u32) -> Option<Rational> {
    match field.degree {
        1 => Some(psi_exact(n)),
        2 => {
            // D^(n(2n+1)/2) * (c_Pi pi^(-n(n+1)))^2 * prod c_j pi^(4j) sqrt(D)
            let c = pi_n_coeff(n);
            let mut s = num_traits::Pow::pow(&int(field.discriminant as i64), (n * n + n) as i32) * &c * &c;
            for j in 1..=n {
                s *= numberfields::quadratic_zeta_exact(field.discriminant, j).ok()?;
            }
            Some(s)
        }
        _ => None,
    }
}

/// Psi(n) h 2^(2d-1) / S(Lambda). Below one means the field is excluded by
/// the weaker index bound.
pub fn quotient(field: &NumberFieldRecord, n: u32, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    let s = s_lambda(field, n, w)?;
    let f = pow2(2 * field.degree as i64 - 1) * int(field.class_number as i64) * psi_exact(n);
    Ok(s.recip()?.scale(&f).finish(bits))
}

pub fn quotient_exact(field: &NumberFieldRecord, n: u32) -> Option<Rational> {
    let s = s_lambda_exact(field, n)?;
    Some(pow2(2 * field.degree as i64 - 1) * int(field.class_number as i64) * psi_exact(n) / s)
}

/// The quotient rescaled by [U+ : U^2] / 2^(2d-1), i.e. Psi(n) h [U+ : U^2] / S.
pub fn adjusted_quotient(q: &Interval, degree: u32, unit_index: u32) -> Interval {
    q.scale(&(int(unit_index as i64) * pow2(1 - 2 * degree as i64)))
}

// ---------------------------------------------------------------- discriminant bounds

/// Upper bounds for [Gamma : Lambda] / h in the covolume estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum IndexBound {
    /// 2^(2d-1), the form that gives the constant 0.915 * 2^(2d).
    Coarse,
    /// 2^d, the order of U / U^2.
    UnitsModSquares,
    /// 2^(d-1): -1 is never totally positive.
    NegativeOneExcluded,
}

impl IndexBound {
    pub fn factor(self, d: u32) -> Rational {
        let d = d as i64;
        match self {
            IndexBound::Coarse => pow2(2 * d - 1),
            IndexBound::UnitsModSquares => pow2(d),
            IndexBound::NegativeOneExcluded => pow2(d - 1),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            IndexBound::Coarse => "[U+ : U^2] <= 2^(2d-1)",
            IndexBound::UnitsModSquares => "[U+ : U^2] <= 2^d",
            IndexBound::NegativeOneExcluded => "[U+ : U^2] <= 2^(d-1)",
        }
    }
}

/// (1.83 h I Pi(n)^(1-d))^(1/(n^2+n/2)) for the chosen index bound I.
pub fn proto_d_bound_with(n: u32, d: u32, h: u32, index: IndexBound, bits: u32) -> Result<Interval> {
    if n < 2 || d < 1 || h < 1 {
        return Err(Error::UnsupportedArgument("proto bound needs n >= 2, d >= 1, h >= 1".into()));
    }
    let w = bits + GUARD;
    let pre = c183() * int(h as i64) * index.factor(d);
    let base = pi_n_wp(n, w).pow_int(1 - d as i64)?.scale(&pre);
    let expo = rat(2, (2 * n * n + n) as i64);
    Ok(specfun::pow_enclosure(&base, &iv(expo), w)?.finish(bits))
}

/// D_K < (0.915 2^(2d) h Pi(n)^(1-d))^(1/(n^2+n/2)).
pub fn proto_d_bound(n: u32, d: u32, h: u32, bits: u32) -> Result<Interval> {
    proto_d_bound_with(n, d, h, IndexBound::Coarse, bits)
}

/// 7.6 e^0.46.
pub(crate) fn zimmert_constant(wp: u32) -> Interval {
    specfun::exp_enclosure(&iv(c046()), wp).scale(&c76())
}

/// F(d, D, n) = (1/750) D^f(n) (7.6 e^0.46 Pi(n))^d.
pub fn f_bound(d: u32, disc: &Interval, n: u32, bits: u32) -> Result<Interval> {
    if disc.lo() < &int(1) {
        return Err(Error::UnsupportedArgument("F needs D >= 1".into()));
    }
    let w = bits + GUARD;
    let dp = specfun::pow_enclosure(disc, &iv(f_of(n)), w)?;
    let base = (zimmert_constant(w) * pi_n_wp(n, w)).pow_int(d as i64)?;
    Ok((dp * base).scale(&c750().recip()).finish(bits))
}

/// O(n, d, A, E) = (1/750) e^(-E f(n)) (7.6 e^0.46 A^f(n) Pi(n))^d.
pub fn o_bound(n: u32, d: u32, pair: &OdlyzkoPair, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    let f = f_of(n);
    let ef = specfun::exp_enclosure(&iv(-(&pair.e * &f)), w);
    let af = specfun::pow_enclosure(&iv(pair.a.clone()), &iv(f), w)?;
    let base = (zimmert_constant(w) * af * pi_n_wp(n, w)).pow_int(d as i64)?;
    Ok((ef * base).scale(&c750().recip()).finish(bits))
}

/// A^d e^(-E), the Odlyzko lower bound for D_K.
pub fn odlyzko_disc(pair: &OdlyzkoPair, d: u32, bits: u32) -> Interval {
    let w = bits + GUARD;
    let ad = iv(num_traits::Pow::pow(&pair.a, d as i32));
    let e = specfun::exp_enclosure(&iv(-pair.e.clone()), w);
    (ad * e).finish(bits)
}

/// D_K < (1372.5 Pi(n)^(1-d) (7.6 e^0.46)^(-d))^(1/f(n)).
pub fn covol_d_bound(n: u32, d: u32, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    let pre = rat(2745, 2);
    let base = (pi_n_wp(n, w).pow_int(1 - d as i64)? * zimmert_constant(w).pow_int(-(d as i64))?).scale(&pre);
    Ok(specfun::pow_enclosure(&base, &iv(f_of(n).recip()), w)?.finish(bits))
}

pub fn n3_d_bound(d: u32, bits: u32) -> Result<Interval> {
    if !(2..=3).contains(&d) {
        return Err(Error::UnsupportedArgument(format!("n3_d_bound needs d in 2..=3, got {d}")));
    }
    covol_d_bound(3, d, bits)
}

/// D_K < (11 * 0.00019^(-d) / 960)^(1/3.9).
pub fn n2_d_bound(d: u32, bits: u32) -> Result<Interval> {
    if !(2..=5).contains(&d) {
        return Err(Error::UnsupportedArgument(format!("n2_d_bound needs d in 2..=5, got {d}")));
    }
    let w = bits + GUARD;
    let base = num_traits::Pow::pow(&rat(19, 100_000), -(d as i32)) * rat(11, 960);
    Ok(specfun::pow_enclosure(&iv(base), &iv(rat(10, 39)), w)?.finish(bits))
}

/// eta = 3 e^0.46 / (64 pi^6), i.e. e^0.46 Pi(2) / 2.
pub fn eta(bits: u32) -> Interval {
    let w = bits + GUARD;
    let e = specfun::exp_enclosure(&iv(c046()), w);
    let pi6 = specfun::pi_enclosure(w).pow_int(6).expect("integer power");
    e.div(&pi6).expect("pi is positive").scale(&rat(3, 64)).finish(bits)
}

/// eta * alpha(2.2) against 0.00019.
pub fn n2_base_constant_check(bits: u32) -> Result<Comparison> {
    let w = bits + GUARD;
    let a = specfun::alpha_enclosure(&iv(rat(11, 5)), w)?;
    Ok(Comparison::new((eta(w) * a).finish(bits), iv(rat(19, 100_000))))
}

/// 25 t (t + 1) at t = 1.2, and that value times Psi(2).
pub fn n2_prefactor() -> (Rational, Rational) {
    let t = rat(6, 5);
    let c = int(25) * &t * (&t + int(1));
    let r = &c * psi_exact(2);
    (c, r)
}

// ---------------------------------------------------------------- rank four conditions

/// The three parameter conditions; each holds when its comparison is
/// CertainlyGreater.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimConditions {
    /// 2 log A - E against log 2 pi + 1 - log 5.
    pub cond_a: Comparison,
    /// A against 5.66.
    pub cond_b: Comparison,
    /// 2 log A - E against (log 9.47 - log Pi(4)) / f(4).
    pub cond_c: Comparison,
}

impl ClaimConditions {
    pub fn verdicts(&self) -> [Cmp; 3] {
        [self.cond_a.verdict(), self.cond_b.verdict(), self.cond_c.verdict()]
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().iter().all(|&v| v == Cmp::CertainlyGreater)
    }
}

fn two_log_a_minus_e(pair: &OdlyzkoPair, w: u32) -> Result<Interval> {
    let la = specfun::log_enclosure(&iv(pair.a.clone()), w)?;
    Ok(la.scale(&int(2)).add_rational(&-pair.e.clone()))
}

pub fn rank4_conditions(pair: &OdlyzkoPair, bits: u32) -> Result<ClaimConditions> {
    let w = bits + GUARD;
    let lhs = two_log_a_minus_e(pair, w)?;
    let two_pi = specfun::pi_enclosure(w).scale(&int(2));
    let rhs_a = specfun::log_enclosure(&two_pi, w)?.add_rational(&int(1))
        - specfun::log_enclosure(&Interval::from_int(5), w)?;
    let rhs_c = (specfun::log_enclosure(&iv(rat(947, 100)), w)? - specfun::log_enclosure(&pi_n_wp(4, w), w)?)
        .scale(&f_of(4).recip());
    Ok(ClaimConditions {
        cond_a: Comparison::new(lhs.finish(bits), rhs_a.finish(bits)),
        cond_b: Comparison::new(iv(pair.a.clone()), iv(rat(566, 100))),
        cond_c: Comparison::new(lhs.finish(bits), rhs_c.finish(bits)),
    })
}

/// Pi(n)^(-1) O(n, 2, A, E).
pub fn normalized_o(n: u32, pair: &OdlyzkoPair, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    Ok(o_bound(n, 2, pair, w)?.div(&pi_n_wp(n, w))?.finish(bits))
}

/// Claim (a) by direct evaluation: Pi(n+1)^(-1) O(n+1, 2) against
/// Pi(n)^(-1) O(n, 2), for n in `range`.
pub fn claim_a_direct(pair: &OdlyzkoPair, range: std::ops::RangeInclusive<u32>, bits: u32) -> Result<Vec<(u32, Comparison)>> {
    let mut out = Vec::new();
    let mut prev = normalized_o(*range.start(), pair, bits)?;
    for n in range {
        let next = normalized_o(n + 1, pair, bits)?;
        out.push((n, Comparison::new(next.clone(), prev)));
        prev = next;
    }
    Ok(out)
}

/// The sufficient condition 4 log A - 2E >= 2 log 2 pi + 2 - 2 log(2n+1)
/// obtained from the Robbins bound. Its right side decreases in n.
pub fn omega_condition(pair: &OdlyzkoPair, n: u32, bits: u32) -> Result<Comparison> {
    let w = bits + GUARD;
    let lhs = two_log_a_minus_e(pair, w)?.scale(&int(2));
    let two_pi = specfun::pi_enclosure(w).scale(&int(2));
    let rhs = specfun::log_enclosure(&two_pi, w)?.scale(&int(2)).add_rational(&int(2))
        - specfun::log_enclosure(&Interval::from_int(2 * n as i64 + 1), w)?.scale(&int(2));
    Ok(Comparison::new(lhs.finish(bits), rhs.finish(bits)))
}

/// Claim (b) by direct evaluation: 7.6 e^0.46 A^f(n) Pi(n) against 1.
pub fn claim_b_direct(a: &Rational, n: u32, bits: u32) -> Result<Comparison> {
    let w = bits + GUARD;
    let af = specfun::pow_enclosure(&iv(a.clone()), &iv(f_of(n)), w)?;
    let v = zimmert_constant(w) * af * pi_n_wp(n, w);
    Ok(Comparison::new(v.finish(bits), Interval::one()))
}

/// Claim (c) by direct evaluation: Pi(4)^(-1) O(4, 2) against 1.83.
pub fn claim_c_direct(pair: &OdlyzkoPair, bits: u32) -> Result<Comparison> {
    Ok(Comparison::new(normalized_o(4, pair, bits)?, iv(c183())))
}

/// 1.83 * 750 / (7.6^2 e^0.92) against 9.47.
pub fn claim_c_constant(bits: u32) -> Comparison {
    let w = bits + GUARD;
    let z = zimmert_constant(w);
    let v = (&z * &z).recip().expect("positive").scale(&(c183() * c750()));
    Comparison::new(v.finish(bits), iv(rat(947, 100)))
}

// ---------------------------------------------------------------- rank three threshold

/// 0.46 + log(342/(256 pi^12)) against -12.99, and
/// log(1.83 * 33750/(256 pi^12)) against -8.25.
pub fn n3_threshold_constants(bits: u32) -> Result<(Comparison, Comparison)> {
    let w = bits + GUARD;
    let pi12 = specfun::pi_enclosure(w).pow_int(12)?;
    let l1 = specfun::log_enclosure(&pi12.recip()?.scale(&rat(342, 256)), w)?.add_rational(&c046());
    let l2 = specfun::log_enclosure(&pi12.recip()?.scale(&(c183() * int(33750) / int(256))), w)?;
    Ok((
        Comparison::new(l1.finish(bits), iv(rat(-1299, 100))),
        Comparison::new(l2.finish(bits), iv(rat(-825, 100))),
    ))
}

/// (7.5 E - 8.25) / (7.5 log A - 12.99). Degrees strictly above it are
/// excluded for n = 3.
pub fn n3_degree_threshold(pair: &OdlyzkoPair, bits: u32) -> Result<Interval> {
    let w = bits + GUARD;
    let den = specfun::log_enclosure(&iv(pair.a.clone()), w)?
        .scale(&rat(15, 2))
        .add_rational(&rat(-1299, 100));
    if !den.is_positive() {
        return Err(Error::DenominatorNotPositive);
    }
    let num = rat(15, 2) * &pair.e - rat(825, 100);
    Ok(den.recip()?.scale(&num).finish(bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_coefficients() {
        assert_eq!(pi_n_coeff(2), rat(3, 32));
        assert_eq!(pi_n_coeff(3), rat(45, 256));
    }

    #[test]
    fn psi_small() {
        assert_eq!(psi_exact(2), rat(1, 5760));
        assert_eq!(psi_exact(3), rat(1, 2903040));
    }

    #[test]
    fn f_of_values() {
        assert_eq!(f_of(2), int(2));
        assert_eq!(f_of(3), rat(15, 2));
        assert_eq!(f_of(4), int(15));
    }

    #[test]
    fn decimal_labels() {
        let p = OdlyzkoPair::parse("21.512", "6.0001").unwrap();
        assert_eq!(p.label(), "(21.512, 6.0001)");
    }
}
