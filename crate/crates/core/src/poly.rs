//! Integer polynomials: discriminants, Sturm sequences, certified real root
//! isolation and arithmetic over F_p.
//!
//! Coefficient vectors are in ascending order of powers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rigor::{int, pow2, Interval, Rational};

pub type QPoly = Vec<Rational>;

pub fn to_q(p: &[i64]) -> QPoly {
    p.iter().map(|&c| int(c)).collect()
}

fn trim(mut p: QPoly) -> QPoly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rational]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

pub fn derivative(p: &[Rational]) -> QPoly {
    if p.len() <= 1 {
        return vec![Rational::zero()];
    }
    p.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect()
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn eval_interval(p: &[Rational], x: &Interval) -> Interval {
    p.iter()
        .rev()
        .fold(Interval::zero(), |acc, c| (acc * x).add_rational(c))
}

/// Remainder of a divided by b.
fn rem(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut r = trim(a.to_vec());
    let db = degree(b);
    let lb = b[db].clone();
    while degree(&r) >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = degree(&r);
        let q = &r[dr] / &lb;
        for i in 0..=db {
            let v = &q * &b[i];
            r[dr - db + i] -= v;
        }
        r = trim(r);
        if dr == 0 {
            break;
        }
    }
    r
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero_poly(&b) {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

pub fn is_squarefree(p: &[Rational]) -> bool {
    degree(&gcd(p, &derivative(p))) == 0
}

/// Determinant by Gaussian elimination over Q.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if piv != c {
            m.swap(piv, c);
            d = -d;
        }
        let pv = m[c][c].clone();
        d *= &pv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pv;
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    d
}

pub fn resultant(a: &[Rational], b: &[Rational]) -> Rational {
    let (da, db) = (degree(a), degree(b));
    let n = da + db;
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..db {
        for j in 0..=da {
            m[i][i + j] = a[da - j].clone();
        }
    }
    for i in 0..da {
        for j in 0..=db {
            m[db + i][i + j] = b[db - j].clone();
        }
    }
    det(m)
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant(p: &[i64]) -> BigInt {
    let q = to_q(p);
    let d = degree(&q);
    let r = resultant(&q, &derivative(&q));
    let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
    (r * int(sign) / &q[d]).to_integer()
}

pub fn sturm_sequence(p: &[Rational]) -> Vec<QPoly> {
    let mut seq = vec![trim(p.to_vec()), trim(derivative(p))];
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if is_zero_poly(&r) {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(seq: &[QPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for p in seq {
        let v = eval(p, x);
        let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// Number of distinct real roots in (a, b].
pub fn count_roots(seq: &[QPoly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Strict bound on the absolute value of every complex root.
pub fn cauchy_bound(p: &[Rational]) -> Rational {
    let d = degree(p);
    let lead = p[d].abs();
    let m = p[..d].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    m + int(1)
}

pub fn real_root_count(p: &[i64]) -> usize {
    let q = to_q(p);
    let seq = sturm_sequence(&q);
    let b = cauchy_bound(&q);
    count_roots(&seq, &-&b, &b)
}

/// Disjoint enclosures of all real roots of a squarefree polynomial, each of
/// width at most 2^-width_bits, in increasing order.
pub fn isolate_real_roots(p: &[i64], width_bits: u32) -> Vec<Interval> {
    let q = to_q(p);
    let seq = sturm_sequence(&q);
    let b = cauchy_bound(&q);
    let mut out = Vec::new();
    let mut stack = vec![(-&b, b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine_root(&q, lo, hi, width_bits));
            continue;
        }
        let mid = (&lo + &hi) / int(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    out
}

/// Bisects (lo, hi], known to hold exactly one simple root.
fn refine_root(q: &[Rational], mut lo: Rational, mut hi: Rational, width_bits: u32) -> Interval {
    let target = pow2(-(width_bits as i64));
    let fhi = eval(q, &hi);
    if fhi.is_zero() {
        return Interval::exact(hi);
    }
    let shi = fhi.is_positive();
    while &hi - &lo > target {
        let mid = (&lo + &hi) / int(2);
        let fm = eval(q, &mid);
        if fm.is_zero() {
            return Interval::exact(mid);
        }
        if fm.is_positive() == shi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Interval::new(lo, hi).expect("ordered")
}

// ---------------------------------------------------------------- F_p

pub fn fp_reduce(p: &[i64], m: u64) -> Vec<u64> {
    let mut r: Vec<u64> = p.iter().map(|&c| c.rem_euclid(m as i64) as u64).collect();
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

fn fp_trim(mut r: Vec<u64>) -> Vec<u64> {
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

fn inv(a: u64, m: u64) -> u64 {
    powmod(a, m - 2, m)
}

fn fp_rem(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = fp_trim(a.to_vec());
    let db = b.len() - 1;
    let il = inv(b[db], m);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let q = mulmod(r[dr], il, m);
        for i in 0..=db {
            let v = mulmod(q, b[i], m);
            r[dr - db + i] = (r[dr - db + i] + m - v) % m;
        }
        r = fp_trim(r);
        if dr == 0 {
            break;
        }
    }
    r
}

fn fp_mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + mulmod(*x, *y, m)) % m;
        }
    }
    fp_trim(r)
}

fn fp_gcd(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let (mut a, mut b) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !(b.len() == 1 && b[0] == 0) {
        let r = fp_rem(&a, &b, m);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct roots in F_p of f (f squarefree mod p, monic).
pub fn fp_root_count(f: &[i64], p: u64) -> usize {
    let fm = fp_reduce(f, p);
    // x^p mod f by square and multiply
    let mut result = vec![1u64];
    let mut base = fp_rem(&[0, 1], &fm, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_rem(&fp_mul(&result, &base, p), &fm, p);
        }
        base = fp_rem(&fp_mul(&base, &base, p), &fm, p);
        e >>= 1;
    }
    let mut g = result;
    g.resize(g.len().max(2), 0);
    g[1] = (g[1] + p - 1) % p;
    let g = fp_trim(g);
    fp_gcd(&fm, &g, p).len() - 1
}

/// Roots of f in F_p with multiplicities, by direct search (small p only),
/// and the degree of the remaining factor without roots.
pub fn fp_roots_with_multiplicity(f: &[i64], p: u64) -> (Vec<(u64, usize)>, usize) {
    let mut g = fp_reduce(f, p);
    let mut roots = Vec::new();
    for r in 0..p {
        let mut k = 0;
        loop {
            if g.len() <= 1 {
                break;
            }
            // synthetic division by (x - r)
            let d = g.len() - 1;
            let mut q = vec![0u64; d];
            let mut acc = 0u64;
            for i in (0..=d).rev() {
                acc = (mulmod(acc, r, p) + g[i]) % p;
                if i > 0 {
                    q[i - 1] = acc;
                }
            }
            if acc != 0 {
                break;
            }
            g = fp_trim(q);
            k += 1;
        }
        if k > 0 {
            roots.push((r, k));
        }
    }
    (roots, g.len() - 1)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: usize) -> Vec<u64> {
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&[-1, -1, 1]), BigInt::from(5));
        assert_eq!(discriminant(&[-1, -2, 1, 1]), BigInt::from(49));
        assert_eq!(discriminant(&[4, 0, -6, 0, 1]), BigInt::from(25600));
    }

    #[test]
    fn roots_of_x2_minus_2() {
        let r = isolate_real_roots(&[-2, 0, 1], 40);
        assert_eq!(r.len(), 2);
        assert!(r[1].contains(&Rational::new(BigInt::from(14142135623i64), BigInt::from(10000000000i64))) || r[1].width() < pow2(-39));
        assert!(r[0].is_negative() && r[1].is_positive());
    }

    #[test]
    fn fp_roots() {
        // x^3 + x^2 - 2x - 1 splits mod 13, is irreducible mod 2, triple root mod 7
        assert_eq!(fp_root_count(&[-1, -2, 1, 1], 13), 3);
        assert_eq!(fp_root_count(&[-1, -2, 1, 1], 2), 0);
        let (r, rest) = fp_roots_with_multiplicity(&[-1, -2, 1, 1], 7);
        assert_eq!(r, vec![(2, 3)]);
        assert_eq!(rest, 0);
    }
}
