//! Exact rationals and closed intervals with rational endpoints.
//!
//! Field operations on intervals are exact. The only rounding anywhere is
//! [`Interval::coarsen`], which moves endpoints outward.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << (e as usize))
    } else {
        Rational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// Parses a decimal literal such as `-6.0001`, `13.047` or `1.5e-3` exactly.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = match mant.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mant, ""),
    };
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{ip}{fp}").parse().ok()?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

/// Number of bits of |x| rounded down, as a signed exponent estimate:
/// 2^(e-1) < |x| < 2^(e+1).
fn log2_estimate(x: &Rational) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

/// k when x = n / 2^k exactly.
fn dyadic_exp(x: &Rational) -> Option<u64> {
    let d = x.denom();
    let tz = d.trailing_zeros().unwrap_or(0);
    (d.bits() == tz + 1).then_some(tz)
}

fn make_dyadic(n: BigInt, k: u64) -> Rational {
    if n.is_zero() {
        return Rational::zero();
    }
    let tz = n.trailing_zeros().unwrap_or(0).min(k);
    Rational::new_raw(n >> tz, BigInt::one() << (k - tz))
}

// Dyadic fast paths skip the gcd that general rational arithmetic needs.
fn rmul(a: &Rational, b: &Rational) -> Rational {
    match (dyadic_exp(a), dyadic_exp(b)) {
        (Some(x), Some(y)) => make_dyadic(a.numer() * b.numer(), x + y),
        _ => a * b,
    }
}

fn radd(a: &Rational, b: &Rational) -> Rational {
    match (dyadic_exp(a), dyadic_exp(b)) {
        (Some(x), Some(y)) => {
            let k = x.max(y);
            make_dyadic((a.numer() << (k - x)) + (b.numer() << (k - y)), k)
        }
        _ => a + b,
    }
}

fn rsub(a: &Rational, b: &Rational) -> Rational {
    match (dyadic_exp(a), dyadic_exp(b)) {
        (Some(x), Some(y)) => {
            let k = x.max(y);
            make_dyadic((a.numer() << (k - x)) - (b.numer() << (k - y)), k)
        }
        _ => a - b,
    }
}

/// Ordering of two rationals by cross-multiplication.
pub fn rcmp(a: &Rational, b: &Rational) -> std::cmp::Ordering {
    if let (Some(x), Some(y)) = (dyadic_exp(a), dyadic_exp(b)) {
        let k = x.max(y);
        return (a.numer() << (k - x)).cmp(&(b.numer() << (k - y)));
    }
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

fn rle(a: &Rational, b: &Rational) -> bool {
    rcmp(a, b) != std::cmp::Ordering::Greater
}

fn rlt(a: &Rational, b: &Rational) -> bool {
    rcmp(a, b) == std::cmp::Ordering::Less
}

fn rmin<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if rle(a, b) {
        a
    } else {
        b
    }
}

fn rmax<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if rle(a, b) {
        b
    } else {
        a
    }
}

fn floor_scaled(x: &Rational, shift: i64) -> BigInt {
    // floor(x * 2^shift)
    if let Some(k) = dyadic_exp(x) {
        let e = shift - k as i64;
        return if e >= 0 {
            x.numer() << (e as usize)
        } else {
            x.numer() >> ((-e) as usize)
        };
    }
    if shift >= 0 {
        (x.numer() << (shift as usize)).div_floor(x.denom())
    } else {
        x.numer().div_floor(&(x.denom() << ((-shift) as usize)))
    }
}

fn from_scaled(m: BigInt, shift: i64) -> Rational {
    if shift >= 0 {
        make_dyadic(m, shift as u64)
    } else {
        Rational::from_integer(m << ((-shift) as usize))
    }
}

/// Largest dyadic with `bits` significant bits that is <= x.
pub fn round_down(x: &Rational, bits: u32) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let shift = bits as i64 - log2_estimate(x);
    from_scaled(floor_scaled(x, shift), shift)
}

/// Smallest dyadic with `bits` significant bits that is >= x.
pub fn round_up(x: &Rational, bits: u32) -> Rational {
    -round_down(&-x, bits)
}

fn ulp(x: &Rational, bits: u32) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    pow2(log2_estimate(x) - bits as i64)
}

fn is_small(x: &Rational, bits: u32) -> bool {
    x.numer().bits() <= bits as u64 + 8 && x.denom().bits() <= bits as u64 + 8
}

/// floor(sqrt(x) * 2^shift).
fn sqrt_floor_scaled(x: &Rational, shift: i64) -> BigInt {
    let m = floor_scaled(x, 2 * shift);
    match m.to_biguint() {
        Some(u) => BigInt::from_biguint(Sign::Plus, u.sqrt()),
        None => BigInt::zero(),
    }
}

/// Three-way certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cmp {
    CertainlyLess,
    CertainlyGreater,
    Overlap,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

pub fn iv_exact(r: Rational) -> Interval {
    Interval::exact(r)
}

pub fn iv_compare(a: &Interval, b: &Interval) -> Cmp {
    a.compare(b)
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if rlt(&hi, &lo) {
            return Err(Error::InvalidInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn exact(r: Rational) -> Self {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::exact(rat(n, d))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_point(&self) -> Option<&Rational> {
        self.is_point().then_some(&self.lo)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        rle(&self.lo, x) && rle(x, &self.hi)
    }

    /// True when `other` lies inside `self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        rle(&self.lo, &other.lo) && rle(&other.hi, &self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn compare(&self, other: &Interval) -> Cmp {
        if rlt(&self.hi, &other.lo) {
            Cmp::CertainlyLess
        } else if rlt(&other.hi, &self.lo) {
            Cmp::CertainlyGreater
        } else {
            Cmp::Overlap
        }
    }

    pub fn certainly_less(&self, other: &Interval) -> bool {
        self.compare(other) == Cmp::CertainlyLess
    }

    pub fn certainly_greater(&self, other: &Interval) -> bool {
        self.compare(other) == Cmp::CertainlyGreater
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = rmax(&self.lo, &other.lo).clone();
        let hi = rmin(&self.hi, &other.hi).clone();
        rle(&lo, &hi).then_some(Interval { lo, hi })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: rmin(&self.lo, &other.lo).clone(),
            hi: rmax(&self.hi, &other.hi).clone(),
        }
    }

    /// Widens by `r >= 0` on both sides.
    pub fn widen(&self, r: &Rational) -> Interval {
        Interval {
            lo: rsub(&self.lo, r),
            hi: radd(&self.hi, r),
        }
    }

    /// Adds an error term known to lie in [-r, r].
    pub fn pm(&self, r: &Rational) -> Interval {
        self.widen(&r.abs())
    }

    /// True when the printed value is within `tol` of the enclosure.
    pub fn agrees_with(&self, printed: &Rational, tol: &Rational) -> bool {
        self.widen(tol).contains(printed)
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::DivisionByIntervalContainingZero);
        }
        Ok(Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        Ok(self * &other.recip()?)
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Interval {
                lo: Rational::zero(),
                hi: rmax(&self.hi, &-&self.lo).clone(),
            }
        }
    }

    /// Largest absolute value of any point.
    pub fn mag(&self) -> Rational {
        let (a, b) = (self.lo.abs(), self.hi.abs());
        rmax(&a, &b).clone()
    }

    pub fn pow_int(&self, k: i64) -> Result<Interval> {
        if k < 0 {
            return self.recip()?.pow_int(-k);
        }
        if k == 0 {
            return Ok(Interval::one());
        }
        let e = k as i32;
        let plo = num_traits::Pow::pow(&self.lo, e);
        let phi = num_traits::Pow::pow(&self.hi, e);
        Ok(if k % 2 == 1 || !self.lo.is_negative() {
            Interval { lo: plo, hi: phi }
        } else if !self.hi.is_positive() {
            Interval { lo: phi, hi: plo }
        } else {
            Interval {
                lo: Rational::zero(),
                hi: rmax(&plo, &phi).clone(),
            }
        })
    }

    pub fn add_rational(&self, r: &Rational) -> Interval {
        Interval {
            lo: radd(&self.lo, r),
            hi: radd(&self.hi, r),
        }
    }

    pub fn scale(&self, r: &Rational) -> Interval {
        if r.is_negative() {
            Interval {
                lo: rmul(&self.hi, r),
                hi: rmul(&self.lo, r),
            }
        } else {
            Interval {
                lo: rmul(&self.lo, r),
                hi: rmul(&self.hi, r),
            }
        }
    }

    /// Division by a positive integer, rounded outward to `bits` bits.
    pub fn div_int(&self, k: i64, bits: u32) -> Interval {
        assert!(k > 0);
        let kb = BigInt::from(k);
        let q = |x: &Rational, up: bool| -> Rational {
            if x.is_zero() {
                return Rational::zero();
            }
            let shift = bits as i64 - log2_estimate(x) + 64 - k.leading_zeros() as i64;
            let den = x.denom() * &kb;
            let num = if shift >= 0 {
                x.numer() << (shift as usize)
            } else {
                x.numer().clone()
            };
            let den = if shift >= 0 { den } else { den << ((-shift) as usize) };
            let m = if up { -((-num).div_floor(&den)) } else { num.div_floor(&den) };
            from_scaled(m, shift)
        };
        Interval {
            lo: q(&self.lo, false),
            hi: q(&self.hi, true),
        }
    }

    /// Rounds endpoints outward to `bits` significant bits. Endpoints that
    /// are already short are left untouched.
    pub fn coarsen(&self, bits: u32) -> Interval {
        let lo = if is_small(&self.lo, bits) {
            self.lo.clone()
        } else {
            round_down(&self.lo, bits)
        };
        let hi = if is_small(&self.hi, bits) {
            self.hi.clone()
        } else {
            round_up(&self.hi, bits)
        };
        Interval { lo, hi }
    }

    /// Like [`coarsen`](Self::coarsen) but always leaves dyadic endpoints,
    /// which keeps later products free of gcd work.
    pub fn dyadic(&self, bits: u32) -> Interval {
        let keep = |x: &Rational| dyadic_exp(x).is_some() && x.numer().bits() <= bits as u64 + 8;
        let lo = if keep(&self.lo) { self.lo.clone() } else { round_down(&self.lo, bits) };
        let hi = if keep(&self.hi) { self.hi.clone() } else { round_up(&self.hi, bits) };
        Interval { lo, hi }
    }

    /// Final rounding for a result computed with guard bits: outward to
    /// `bits` significant bits plus one unit in the last place on each side,
    /// so that a result at higher precision lands inside this one.
    pub fn finish(&self, bits: u32) -> Interval {
        if self.is_point() && is_small(&self.lo, bits) {
            return self.clone();
        }
        let lo = round_down(&self.lo, bits);
        let hi = round_up(&self.hi, bits);
        Interval {
            lo: rsub(&lo, &ulp(&lo, bits)),
            hi: radd(&hi, &ulp(&hi, bits)),
        }
    }

    /// Square root, outward to about `bits` significant bits.
    pub fn sqrt(&self, bits: u32) -> Result<Interval> {
        if self.lo.is_negative() {
            return Err(Error::NonPositiveArgument);
        }
        let shift_for = |x: &Rational| bits as i64 - log2_estimate(x) / 2;
        let lo = if self.lo.is_zero() {
            Rational::zero()
        } else {
            let s = shift_for(&self.lo);
            from_scaled(sqrt_floor_scaled(&self.lo, s), s)
        };
        let hi = if self.hi.is_zero() {
            Rational::zero()
        } else {
            let s = shift_for(&self.hi);
            let mut f = sqrt_floor_scaled(&self.hi, s);
            let c = from_scaled(f.clone(), s);
            if &c * &c != self.hi {
                f += 1;
            }
            from_scaled(f, s)
        };
        Ok(Interval { lo, hi })
    }

    pub fn max_with(&self, other: &Interval) -> Interval {
        Interval {
            lo: rmax(&self.lo, &other.lo).clone(),
            hi: rmax(&self.hi, &other.hi).clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    /// Rational endpoints as `"p/q"` strings.
    pub fn to_strings(&self) -> (String, String) {
        (self.lo.to_string(), self.hi.to_string())
    }

    pub fn from_strings(lo: &str, hi: &str) -> Option<Interval> {
        let lo: Rational = lo.parse().ok()?;
        let hi: Rational = hi.parse().ok()?;
        Interval::new(lo, hi).ok()
    }
}

impl From<Rational> for Interval {
    fn from(r: Rational) -> Self {
        Interval::exact(r)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_sig(&self.lo, 16), format_sig(&self.hi, 16))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", format_sig(&self.lo, 12))
        } else {
            write!(f, "[{}, {}]", format_sig(&self.lo, 12), format_sig(&self.hi, 12))
        }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval {
            lo: radd(&self.lo, &o.lo),
            hi: radd(&self.hi, &o.hi),
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval {
            lo: rsub(&self.lo, &o.hi),
            hi: rsub(&self.hi, &o.lo),
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        if !self.lo.is_negative() && !o.lo.is_negative() {
            return Interval {
                lo: rmul(&self.lo, &o.lo),
                hi: rmul(&self.hi, &o.hi),
            };
        }
        let c = [
            rmul(&self.lo, &o.lo),
            rmul(&self.lo, &o.hi),
            rmul(&self.hi, &o.lo),
            rmul(&self.hi, &o.hi),
        ];
        let lo = c.iter().reduce(|a, b| rmin(a, b)).unwrap().clone();
        let hi = c.iter().reduce(|a, b| rmax(a, b)).unwrap().clone();
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, o: Interval) -> Interval {
                (&self).$m(&o)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, o: &Interval) -> Interval {
                (&self).$m(o)
            }
        }
        impl $tr<Interval> for &Interval {
            type Output = Interval;
            fn $m(self, o: Interval) -> Interval {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

/// Arithmetic operations accepted by [`iv_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn iv_arith(op: ArithOp, a: &Interval, b: &Interval) -> Result<Interval> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.div(b)?,
    })
}

/// Scientific notation with `digits` significant digits, rounded to nearest.
pub fn format_sig(x: &Rational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let ten = BigInt::from(10);
    // 10^e <= a < 10^(e+1)
    let mut e = ((a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2)
        .floor() as i64;
    let p10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while p10(e) > a {
        e -= 1;
    }
    while p10(e + 1) <= a {
        e += 1;
    }
    let scaled = &a * p10(digits as i64 - 1 - e);
    let mut m = (scaled + rat(1, 2)).floor().to_integer();
    if m == num_traits::pow(ten.clone(), digits) {
        m /= &ten;
        e += 1;
    }
    let s = m.to_string();
    let (head, tail) = s.split_at(1);
    let tail = tail.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if e != 0 {
        out.push_str(&format!("e{e}"));
    }
    out
}

/// Exact decimal form when the denominator is 2^a 5^b, otherwise `p/q`.
pub fn decimal_string(x: &Rational) -> String {
    let mut d = x.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut k = 0usize;
    for f in [&two, &five] {
        let mut c = 0usize;
        while (&d % f).is_zero() {
            d /= f;
            c += 1;
        }
        k = k.max(c);
    }
    if !d.is_one() {
        return x.to_string();
    }
    let scaled = (x * Rational::from_integer(num_traits::pow(BigInt::from(10), k))).to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{:0>width$}", digits, width = k + 1);
    let (ip, fp) = digits.split_at(digits.len() - k);
    let sign = if neg { "-" } else { "" };
    if fp.is_empty() {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp}")
    }
}

/// A certified comparison between two enclosures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: Interval,
    pub rhs: Interval,
}

impl Comparison {
    pub fn new(lhs: Interval, rhs: Interval) -> Self {
        Comparison { lhs, rhs }
    }

    pub fn verdict(&self) -> Cmp {
        self.lhs.compare(&self.rhs)
    }

    pub fn less(&self) -> bool {
        self.verdict() == Cmp::CertainlyLess
    }

    pub fn greater(&self) -> bool {
        self.verdict() == Cmp::CertainlyGreater
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}
