//! Certified enclosures of pi, exp, log, Gamma, zeta, Dirichlet L and the
//! Robbins factorial bounds.
//!
//! Every public function takes a target precision in bits, computes with
//! [`GUARD`] extra bits and rounds the result outward with
//! [`Interval::finish`].

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rigor::{binomial, factorial, int, pow2, rat, rcmp, Interval, Rational};
use std::cmp::Ordering::Less;

pub const GUARD: u32 = 32;

/// Fundamental discriminants with a hard-coded character.
pub const L_MODULI: [i64; 7] = [5, 8, 12, 13, 17, 21, 24];

type Cache = OnceLock<Mutex<HashMap<u32, Interval>>>;

fn cached(cache: &'static Cache, wp: u32, f: impl FnOnce() -> Interval) -> Interval {
    let m = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = m.lock().unwrap().get(&wp) {
        return v.clone();
    }
    let v = f();
    m.lock().unwrap().insert(wp, v.clone());
    v
}

fn eps(wp: u32) -> Rational {
    pow2(-(wp as i64))
}

fn iv(r: Rational) -> Interval {
    Interval::exact(r)
}

// ---------------------------------------------------------------- pi

/// atan(1/x) by its alternating series.
fn atan_inv(x: i64, wp: u32) -> Interval {
    let x2 = BigInt::from(x * x);
    let mut pw = BigInt::from(x);
    let mut sum = Interval::zero();
    let tol = eps(wp + 8);
    for k in 0i64.. {
        let term = Rational::new(BigInt::one(), &pw * (2 * k + 1));
        if term < tol {
            // remainder lies between 0 and the first omitted term, with its sign
            let t = if k % 2 == 0 { Interval::new(Rational::zero(), term).unwrap() } else {
                Interval::new(-term, Rational::zero()).unwrap()
            };
            return (sum + t).dyadic(wp + 8);
        }
        let t = if k % 2 == 0 { term } else { -term };
        sum = sum.add_rational(&t).dyadic(wp + 8);
        pw *= &x2;
    }
    unreachable!()
}

fn pi_wp(wp: u32) -> Interval {
    static C: Cache = OnceLock::new();
    cached(&C, wp, || {
        let a = atan_inv(5, wp + 8).scale(&int(16));
        let b = atan_inv(239, wp + 8).scale(&int(4));
        (a - b).dyadic(wp)
    })
}

pub fn pi_enclosure(bits: u32) -> Interval {
    pi_wp(bits.max(16) + GUARD).finish(bits.max(16))
}

// ---------------------------------------------------------------- exp

/// e^f for 0 <= f <= 1 by Taylor series.
fn exp_taylor(f: &Rational, wp: u32) -> Interval {
    let w = wp + 8;
    let fi = iv(f.clone()).dyadic(w);
    let mut sum = Interval::one();
    let mut term = Interval::one();
    let tol = eps(wp + 4);
    for k in 1i64.. {
        term = (&term * &fi).div_int(k, w);
        sum = (&sum + &term).dyadic(w);
        if rcmp(term.hi(), &tol) == Less {
            // tail <= 2 * next term since f/(k+2) <= 1/2
            let next = (&term * &fi).div_int(k + 1, w);
            let tail = Interval::new(Rational::zero(), next.hi() * int(2)).unwrap();
            return (sum + tail).dyadic(wp);
        }
    }
    unreachable!()
}

fn e_wp(wp: u32) -> Interval {
    static C: Cache = OnceLock::new();
    cached(&C, wp, || exp_taylor(&Rational::one(), wp))
}

fn exp_point(r: &Rational, wp: u32) -> Interval {
    let n = r.floor();
    let f = r - &n;
    let n = n.to_integer();
    let frac = exp_taylor(&f, wp + 4);
    if n.is_zero() {
        return frac;
    }
    let extra = n.bits() as u32 + 8;
    let e = e_wp(wp + extra);
    let k = n.to_i64().expect("exponent out of range");
    let en = e.pow_int(k).expect("e is positive").dyadic(wp + extra);
    (frac * en).dyadic(wp + 4)
}

pub(crate) fn exp_wp(x: &Interval, wp: u32) -> Interval {
    if let Some(p) = x.as_point() {
        if p.is_zero() {
            return Interval::one();
        }
        return exp_point(p, wp);
    }
    let lo = exp_point(x.lo(), wp);
    let hi = exp_point(x.hi(), wp);
    Interval::new(lo.lo().clone(), hi.hi().clone()).unwrap()
}

pub fn exp_enclosure(x: &Interval, bits: u32) -> Interval {
    exp_wp(x, bits + GUARD).finish(bits)
}

// ---------------------------------------------------------------- log

/// atanh(z) = z + z^3/3 + ... for |z| <= 1/3.
fn atanh_series(z: &Rational, wp: u32) -> Interval {
    let w = wp + 8;
    let za = iv(z.abs()).dyadic(w);
    let z2 = (&za * &za).dyadic(w);
    let mut pw = za;
    let mut sum = Interval::zero();
    let tol = eps(w);
    for i in 0i64.. {
        if rcmp(&pw.mag(), &tol) == Less {
            // |tail| <= |z|^(2i+1) / ((2i+1)(1 - z^2)) <= 2 |z|^(2i+1) / (2i+1)
            let r = pw.scale(&int(2)).div_int(2 * i + 1, w);
            let out = sum.pm(r.hi()).dyadic(wp);
            return if z.is_negative() { -out } else { out };
        }
        sum = (&sum + &pw.div_int(2 * i + 1, w)).dyadic(w);
        pw = (&pw * &z2).dyadic(w);
    }
    unreachable!()
}

fn ln2_wp(wp: u32) -> Interval {
    static C: Cache = OnceLock::new();
    cached(&C, wp, || atanh_series(&rat(1, 3), wp + 4).scale(&int(2)).dyadic(wp))
}

fn log_point(r: &Rational, wp: u32) -> Interval {
    debug_assert!(r.is_positive());
    if r.is_one() {
        return Interval::zero();
    }
    let mut k = r.numer().bits() as i64 - r.denom().bits() as i64;
    let mut m = r * pow2(-k);
    while m > rat(4, 3) {
        m /= int(2);
        k += 1;
    }
    while m < rat(2, 3) {
        m *= int(2);
        k -= 1;
    }
    let z = (&m - int(1)) / (&m + int(1));
    let lm = atanh_series(&z, wp + 4).scale(&int(2));
    if k == 0 {
        return lm.dyadic(wp);
    }
    let extra = 64 - k.unsigned_abs().leading_zeros() + 4;
    let l2 = ln2_wp(wp + extra).scale(&int(k));
    (lm + l2).dyadic(wp)
}

pub(crate) fn log_wp(x: &Interval, wp: u32) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::LogOfNonPositive);
    }
    if let Some(p) = x.as_point() {
        return Ok(log_point(p, wp));
    }
    let lo = log_point(x.lo(), wp);
    let hi = log_point(x.hi(), wp);
    Ok(Interval::new(lo.lo().clone(), hi.hi().clone()).unwrap())
}

pub fn log_enclosure(x: &Interval, bits: u32) -> Result<Interval> {
    Ok(log_wp(x, bits + GUARD)?.finish(bits))
}

/// x^y for x > 0. Integer point exponents are computed exactly.
pub(crate) fn pow_wp(x: &Interval, y: &Interval, wp: u32) -> Result<Interval> {
    if let Some(p) = y.as_point() {
        if p.is_integer() {
            if let Some(k) = p.to_integer().to_i64() {
                return Ok(x.pow_int(k)?.dyadic(wp));
            }
        }
    }
    let l = log_wp(x, wp + 8)?;
    Ok(exp_wp(&(l * y).dyadic(wp + 8), wp))
}

pub fn pow_enclosure(x: &Interval, y: &Interval, bits: u32) -> Result<Interval> {
    Ok(pow_wp(x, y, bits + GUARD)?.finish(bits))
}

// ---------------------------------------------------------------- Bernoulli

/// B_n with B_1 = -1/2, by the exact recurrence sum_{k<=m} C(m+1,k) B_k = 0.
pub fn bernoulli(n: usize) -> Rational {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let t = TABLE.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut t = t.lock().unwrap();
    while t.len() <= n {
        let m = t.len() as u64;
        if m > 1 && m % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        let mut s = Rational::zero();
        for (k, b) in t.iter().enumerate() {
            if !b.is_zero() {
                s += b * Rational::from_integer(binomial(m + 1, k as u64));
            }
        }
        t.push(-s / int(m as i64 + 1));
    }
    t[n].clone()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Coeff {
    /// B_2k / (2k (2k-1))
    Stirling,
    /// B_2k / (2k)!
    EulerMaclaurin,
}

/// Dyadic enclosure of a series coefficient, cached per precision.
fn coeff(kind: Coeff, k: usize, w: u32) -> Interval {
    static C: OnceLock<Mutex<HashMap<(Coeff, u32), Vec<Interval>>>> = OnceLock::new();
    let m = C.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = m.lock().unwrap().get(&(kind, w)).and_then(|v| v.get(k)) {
        return v.clone();
    }
    let make = |k: usize| {
        let b = bernoulli(2 * k);
        let c = match kind {
            Coeff::Stirling => b / int((2 * k * (2 * k - 1)) as i64),
            Coeff::EulerMaclaurin => b / Rational::from_integer(BigInt::from(factorial(2 * k as u64))),
        };
        iv(c).dyadic(w)
    };
    let mut g = m.lock().unwrap();
    let e = g.entry((kind, w)).or_insert_with(|| vec![Interval::zero()]);
    while e.len() <= k {
        let j = e.len();
        e.push(make(j));
    }
    e[k].clone()
}

/// Bernoulli polynomial B_k(x).
pub fn bernoulli_poly(k: usize, x: &Rational) -> Rational {
    let mut s = Rational::zero();
    let mut xp = Rational::one();
    // sum_j C(k,j) B_j x^(k-j), accumulated from the top power down
    let mut terms = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        terms.push(xp.clone());
        xp *= x;
    }
    for j in 0..=k {
        s += bernoulli(j) * Rational::from_integer(binomial(k as u64, j as u64)) * &terms[k - j];
    }
    s
}

/// c with zeta(2j) = c * pi^(2j).
pub fn zeta_even_exact(j: u32) -> Result<Rational> {
    if !(1..=64).contains(&j) {
        return Err(Error::UnsupportedArgument(format!("zeta_even_exact needs 1 <= j <= 64, got {j}")));
    }
    let k = 2 * j as usize;
    let b = bernoulli(k);
    let f = Rational::from_integer(BigInt::from(factorial(k as u64)));
    let sign = if j % 2 == 1 { int(1) } else { int(-1) };
    Ok(sign * b * pow2(k as i64 - 1) / f)
}

// ---------------------------------------------------------------- Gamma

fn stirling_shift(wp: u32) -> i64 {
    // the smallest Stirling term is about e^(-2 pi y)
    8.max((wp as f64 * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI)).ceil() as i64 + 6)
}

/// ln Gamma(y) for y >= 8 by the Stirling series. The remainder is bounded
/// by the first omitted term.
fn lngamma_stirling(y: &Interval, wp: u32) -> Result<Interval> {
    let w = wp + 16;
    let ly = log_wp(y, w)?;
    let two_pi = pi_wp(w).scale(&int(2));
    let l2pi = log_wp(&two_pi, w)?;
    let mut s = (&(y.add_rational(&rat(-1, 2)) * &ly) - y + l2pi.scale(&rat(1, 2))).dyadic(w);
    let yi = y.recip()?.dyadic(w);
    let yi2 = (&yi * &yi).dyadic(w);
    let mut p = yi.clone();
    let tol = eps(w);
    let ylo_inv = y.lo().recip();
    for k in 1usize..600 {
        let c = coeff(Coeff::Stirling, k, w);
        if rcmp(&(c.mag() * p.mag()), &tol) == Less {
            let yk = iv(num_traits::Pow::pow(&ylo_inv, (2 * k - 1) as i32)).dyadic(w);
            let bound = c.mag() * yk.hi();
            return Ok(s.pm(&bound).dyadic(wp));
        }
        s = (&s + &(&p * &c)).dyadic(w);
        p = (&p * &yi2).dyadic(w);
    }
    Err(Error::Uncertified("Stirling series did not converge".into()))
}

pub(crate) fn gamma_wp(x: &Interval, wp: u32) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::NonPositiveArgument);
    }
    let target = stirling_shift(wp);
    let lo_floor = x.lo().floor().to_integer().to_i64().unwrap_or(i64::MAX);
    let m = (target - lo_floor).max(0);
    let w = wp + 16;
    let y = x.add_rational(&int(m));
    let lg = lngamma_stirling(&y, w)?;
    let g = exp_wp(&lg, w);
    let mut prod = Interval::one();
    for i in 0..m {
        prod = (prod * x.add_rational(&int(i))).dyadic(w);
    }
    Ok(g.div(&prod)?.dyadic(wp))
}

pub fn gamma_enclosure(x: &Interval, bits: u32) -> Result<Interval> {
    Ok(gamma_wp(x, bits + GUARD)?.finish(bits))
}

// ---------------------------------------------------------------- zeta

fn point_integer(s: &Interval) -> Option<i64> {
    s.as_point().filter(|p| p.is_integer()).and_then(|p| p.to_integer().to_i64())
}

/// x^(-s) for rational x > 0.
fn neg_pow(x: &Rational, s: &Interval, wp: u32) -> Interval {
    match point_integer(s) {
        Some(k) => iv(num_traits::Pow::pow(x, -(k as i32))).dyadic(wp),
        None => {
            let l = log_point(x, wp + 8);
            exp_wp(&(-(l * s)).dyadic(wp + 8), wp)
        }
    }
}

/// Hurwitz zeta(s, a) for s > 1 and a > 0 by Euler-Maclaurin summation.
/// All even derivatives of (x+a)^(-s) are positive, so the remainder is at
/// most the first omitted correction term; twice that is used.
pub(crate) fn hurwitz_wp(s: &Interval, a: &Rational, wp: u32) -> Result<Interval> {
    if s.lo() <= &int(1) {
        return Err(Error::ArgumentNotGreaterThanOne);
    }
    if !a.is_positive() {
        return Err(Error::NonPositiveArgument);
    }
    let w = wp + 16;
    let s_hi = s.hi().ceil().to_integer().to_i64().unwrap_or(1 << 20);
    let n = (0.12 * w as f64).ceil() as i64 + s_hi + 8;
    let mut sum = Interval::zero();
    for k in 0..n {
        let x = a + int(k);
        sum = (&sum + &neg_pow(&x, s, w)).dyadic(w);
    }
    let big_x = a + int(n);
    let wx = neg_pow(&big_x, s, w);
    let sm1 = s.add_rational(&int(-1));
    sum = (&sum + &wx.scale(&big_x).div(&sm1)?).dyadic(w);
    sum = (&sum + &wx.scale(&rat(1, 2))).dyadic(w);

    let tol = sum.lo() * eps(w);
    let x_inv = iv(big_x.recip()).dyadic(w);
    let x_inv2 = (&x_inv * &x_inv).dyadic(w);
    let mut xp = x_inv; // X^-(2j-1)
    let mut poch = s.clone(); // (s)_(2j-1)
    let mut pw = (&(&poch * &xp) * &wx).dyadic(w); // (s)_(2j-1) X^-(s+2j-1)
    for j in 1usize..2000 {
        let c = coeff(Coeff::EulerMaclaurin, j, w);
        let t = (&pw * &c).dyadic(w);
        if rcmp(&t.mag(), &tol) == Less {
            return Ok(sum.pm(&(t.mag() * int(2))).dyadic(wp));
        }
        sum = (&sum + &t).dyadic(w);
        let a1 = s.add_rational(&int(2 * j as i64 - 1));
        let a2 = s.add_rational(&int(2 * j as i64));
        poch = (poch * a1 * a2).dyadic(w);
        xp = (&xp * &x_inv2).dyadic(w);
        pw = (&(&poch * &xp) * &wx).dyadic(w);
    }
    Err(Error::Uncertified("Euler-Maclaurin did not converge".into()))
}

pub(crate) fn zeta_wp(s: &Interval, wp: u32) -> Result<Interval> {
    hurwitz_wp(s, &Rational::one(), wp)
}

pub fn zeta_real_enclosure(s: &Interval, bits: u32) -> Result<Interval> {
    Ok(zeta_wp(s, bits + GUARD)?.finish(bits))
}

/// Partial sum of k^-s for k <= n plus the integral tail bracket
/// [int_{n+1}^inf x^-s dx, int_n^inf x^-s dx].
pub fn zeta_partial_sum_bracket(s: &Interval, n: u64, bits: u32) -> Result<Interval> {
    if s.lo() <= &int(1) {
        return Err(Error::ArgumentNotGreaterThanOne);
    }
    let w = bits + GUARD;
    let mut sum = Interval::zero();
    for k in 1..=n {
        sum = (&sum + &neg_pow(&int(k as i64), s, w)).dyadic(w);
    }
    let sm1 = s.add_rational(&int(-1));
    let lower = neg_pow(&int(n as i64 + 1), &sm1, w).div(&sm1)?;
    let upper = neg_pow(&int(n as i64), &sm1, w).div(&sm1)?;
    let tail = Interval::new(lower.lo().clone(), upper.hi().clone())?;
    Ok((sum + tail).finish(bits))
}

pub fn alpha_enclosure(s: &Interval, bits: u32) -> Result<Interval> {
    Ok(alpha_wp(s, bits + GUARD)?.finish(bits))
}

/// pi^(s/2) / (Gamma(s/2) zeta(s)).
pub(crate) fn alpha_wp(s: &Interval, wp: u32) -> Result<Interval> {
    if s.lo() <= &int(1) {
        return Err(Error::ArgumentNotGreaterThanOne);
    }
    let w = wp + 8;
    let half = s.scale(&rat(1, 2));
    let pp = pow_wp(&pi_wp(w), &half, w)?;
    let g = gamma_wp(&half, w)?;
    let z = zeta_wp(s, w)?;
    Ok(pp.div(&(g * z))?.dyadic(wp))
}

// ---------------------------------------------------------------- Robbins

/// Enclosures of sqrt(2 pi n)(n/e)^n e^(1/(12n+1)) and the same with
/// e^(1/(12n)).
pub fn stirling_bounds(n: u64, bits: u32) -> Result<(Interval, Interval)> {
    if n == 0 {
        return Err(Error::UnsupportedArgument("stirling_bounds needs n >= 1".into()));
    }
    let w = bits + GUARD;
    let nn = iv(int(n as i64));
    let two_pi_n = pi_wp(w).scale(&int(2 * n as i64));
    let base = (log_wp(&two_pi_n, w)?.scale(&rat(1, 2)) + log_wp(&nn, w)?.scale(&int(n as i64)))
        .add_rational(&-int(n as i64));
    let lower = exp_wp(&base.add_rational(&rat(1, 12 * n as i64 + 1)), w);
    let upper = exp_wp(&base.add_rational(&rat(1, 12 * n as i64)), w);
    Ok((lower.finish(bits), upper.finish(bits)))
}

// ---------------------------------------------------------------- characters

/// Jacobi symbol (a/n) for odd n > 0.
pub fn jacobi(a: i64, n: i64) -> i32 {
    assert!(n > 0 && n % 2 == 1);
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut r = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                r = -r;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            r = -r;
        }
        a %= n;
    }
    if n == 1 {
        r
    } else {
        0
    }
}

/// Kronecker symbol (d/n) for n >= 1.
pub fn kronecker(d: i64, n: i64) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut r = 1;
    while n % 2 == 0 {
        n /= 2;
        r *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    if r == 0 {
        return 0;
    }
    r * jacobi(d, n)
}

fn check_modulus(d: i64) -> Result<()> {
    if L_MODULI.contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedModulus(d))
    }
}

pub(crate) fn dirichlet_l_wp(d: i64, s: &Interval, wp: u32) -> Result<Interval> {
    check_modulus(d)?;
    if s.lo() <= &int(1) {
        return Err(Error::ArgumentNotGreaterThanOne);
    }
    // the sum over residues cancels down by about D^s
    let s_hi = s.hi().ceil().to_integer().to_u32().unwrap_or(64);
    let w = wp + 8 + s_hi * (64 - (d as u64).leading_zeros());
    let mut sum = Interval::zero();
    for a in 1..d {
        let c = kronecker(d, a);
        if c == 0 {
            continue;
        }
        let h = hurwitz_wp(s, &rat(a, d), w)?;
        sum = if c > 0 { &sum + &h } else { &sum - &h }.dyadic(w);
    }
    let scale = neg_pow(&int(d), s, w);
    Ok((sum * scale).dyadic(wp))
}

/// L(s, chi_D) for the Kronecker character of a catalog discriminant.
pub fn dirichlet_l_enclosure(d: i64, s: &Interval, bits: u32) -> Result<Interval> {
    Ok(dirichlet_l_wp(d, s, bits + GUARD)?.finish(bits))
}

/// Largest |chi(a) + ... + chi(b)| over all windows.
pub fn character_window_bound(d: i64) -> i64 {
    let mut c = 0i64;
    let (mut lo, mut hi) = (0i64, 0i64);
    for k in 1..=d {
        c += kronecker(d, k) as i64;
        lo = lo.min(c);
        hi = hi.max(c);
    }
    hi - lo
}

/// Partial sum of chi(k) k^-s for k <= n with the Abel-summation tail bound
/// H (n+1)^-s, where H bounds all window sums of chi.
pub fn dirichlet_l_partial_sum(d: i64, s: &Interval, n: u64, bits: u32) -> Result<Interval> {
    check_modulus(d)?;
    if s.lo() <= &int(1) {
        return Err(Error::ArgumentNotGreaterThanOne);
    }
    let w = bits + GUARD;
    let mut sum = Interval::zero();
    for k in 1..=n as i64 {
        let c = kronecker(d, k);
        if c == 0 {
            continue;
        }
        let t = neg_pow(&int(k), s, w);
        sum = if c > 0 { &sum + &t } else { &sum - &t }.dyadic(w);
    }
    let lo_s = Interval::exact(s.lo().clone());
    let tail = neg_pow(&int(n as i64 + 1), &lo_s, w).mag() * int(character_window_bound(d));
    Ok(sum.pm(&tail).finish(bits))
}

/// Generalized Bernoulli number B_{k,chi_D} = D^(k-1) sum_a chi(a) B_k(a/D).
pub fn generalized_bernoulli(d: i64, k: usize) -> Rational {
    let mut s = Rational::zero();
    for a in 1..=d {
        let c = kronecker(d, a);
        if c != 0 {
            s += bernoulli_poly(k, &rat(a, d)) * int(c as i64);
        }
    }
    s * num_traits::Pow::pow(&int(d), (k - 1) as i32)
}

/// c with L(k, chi_D) = c * pi^k * sqrt(D), for even k >= 2.
pub fn dirichlet_l_even_exact(d: i64, k: u32) -> Result<Rational> {
    check_modulus(d)?;
    if k == 0 || k % 2 == 1 {
        return Err(Error::UnsupportedArgument(format!("closed form needs even k, got {k}")));
    }
    let b = generalized_bernoulli(d, k as usize);
    let sign = if (k / 2) % 2 == 1 { int(1) } else { int(-1) };
    let f = Rational::from_integer(BigInt::from(factorial(k as u64)));
    Ok(sign * b * pow2(k as i64 - 1) / (num_traits::Pow::pow(&int(d), k as i32) * f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(bernoulli(7), int(0));
    }

    #[test]
    fn kronecker_table() {
        let chi5: Vec<i32> = (1..=5).map(|k| kronecker(5, k)).collect();
        assert_eq!(chi5, vec![1, -1, -1, 1, 0]);
        let chi8: Vec<i32> = (1..=8).map(|k| kronecker(8, k)).collect();
        assert_eq!(chi8, vec![1, 0, -1, 0, -1, 0, 1, 0]);
    }

    #[test]
    fn l_closed_form_d5() {
        // L(2, chi_5) = 4 pi^2 / (25 sqrt 5) = (4/125) pi^2 sqrt 5
        assert_eq!(dirichlet_l_even_exact(5, 2).unwrap(), rat(4, 125));
    }

    #[test]
    fn exp_small() {
        let e = exp_enclosure(&Interval::one(), 64);
        assert!(e.contains(&rat(2718281828459045, 1_000_000_000_000_000)) || e.width() < pow2(-50));
        assert!(e.lo() > &rat(27182818284, 10_000_000_000));
        assert!(e.hi() < &rat(27182818285, 10_000_000_000));
    }
}
