//! Totally real number fields: catalog, units, zeta values and splitting.

use std::collections::HashMap;
use std::io::Read;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly;
use crate::rigor::{int, rat, Interval, Rational};
use crate::specfun::{self, GUARD, L_MODULI};

pub const BUNDLED_CATALOG: &str = include_str!("../data/fields.txt");
pub const BUNDLED_MANIFEST: &str = include_str!("../data/SHA256SUMS");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberFieldRecord {
    pub label: String,
    pub degree: u32,
    pub discriminant: u64,
    pub class_number: u32,
    /// Monic defining polynomial, ascending powers.
    pub polynomial: Vec<i64>,
    pub is_totally_real: bool,
}

impl NumberFieldRecord {
    pub fn rationals() -> Self {
        NumberFieldRecord {
            label: "1.1.1.1".into(),
            degree: 1,
            discriminant: 1,
            class_number: 1,
            polynomial: vec![0, 1],
            is_totally_real: true,
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Short human name such as `Q(sqrt 5)` or `cubic D=49`.
    pub fn display_name(&self) -> String {
        match self.degree {
            1 => "Q".into(),
            2 => {
                let d = self.discriminant;
                let m = if d % 4 == 0 { d / 4 } else { d };
                format!("Q(sqrt {m})")
            }
            3 => format!("cubic D={}", self.discriminant),
            4 => format!("quartic D={}", self.discriminant),
            5 => format!("quintic D={}", self.discriminant),
            k => format!("degree {k} D={}", self.discriminant),
        }
    }
}

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedCatalog {
        line,
        reason: reason.into(),
    }
}

fn violation(label: &str, reason: impl Into<String>) -> Error {
    Error::InvariantViolation {
        label: label.into(),
        reason: reason.into(),
    }
}

fn validate(r: &NumberFieldRecord) -> Result<()> {
    let p = &r.polynomial;
    if p.len() < 2 || *p.last().unwrap() != 1 {
        return Err(violation(&r.label, "defining polynomial is not monic"));
    }
    if p.len() - 1 != r.degree as usize {
        return Err(violation(&r.label, "degree does not match the polynomial"));
    }
    if r.degree == 1 && (r.discriminant != 1 || r.class_number != 1) {
        return Err(violation(&r.label, "degree one requires D = 1 and h = 1"));
    }
    if r.degree > 1 {
        let disc = poly::discriminant(p);
        if disc.is_zero() {
            return Err(violation(&r.label, "polynomial is not squarefree"));
        }
        let d = BigInt::from(r.discriminant);
        if !(&disc % &d).is_zero() || !poly::is_perfect_square(&(&disc / &d)) {
            return Err(violation(
                &r.label,
                format!("polynomial discriminant {disc} is not D_K times a square"),
            ));
        }
    }
    if !r.is_totally_real {
        return Err(violation(&r.label, "not totally real"));
    }
    Ok(())
}

/// Parses `label|d_K|D_K|h_K|c0,c1,...` lines; `#` starts a comment.
pub fn load_catalog<R: Read>(mut source: R) -> Result<Vec<NumberFieldRecord>> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(|e| bad(0, format!("unreadable: {e}")))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let n = i + 1;
        let f: Vec<&str> = line.split('|').map(str::trim).collect();
        if f.len() != 5 {
            return Err(bad(n, format!("expected 5 fields, found {}", f.len())));
        }
        let degree: u32 = f[1].parse().map_err(|_| bad(n, "bad degree"))?;
        let discriminant: u64 = f[2].parse().map_err(|_| bad(n, "bad discriminant"))?;
        let class_number: u32 = f[3].parse().map_err(|_| bad(n, "bad class number"))?;
        let polynomial = f[4]
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad(n, "bad polynomial coefficient"))?;
        if degree == 0 || class_number == 0 || discriminant == 0 {
            return Err(bad(n, "degree, discriminant and class number must be positive"));
        }
        let is_totally_real = polynomial.len() >= 2
            && poly::real_root_count(&polynomial) == polynomial.len() - 1;
        let rec = NumberFieldRecord {
            label: f[0].to_string(),
            degree,
            discriminant,
            class_number,
            polynomial,
            is_totally_real,
        };
        validate(&rec)?;
        out.push(rec);
    }
    out.sort_by_key(|r| (r.degree, r.discriminant));
    Ok(out)
}

/// Checks `bytes` against the `sha256  name` line of a manifest.
pub fn verify_manifest(bytes: &[u8], manifest: &str, name: &str) -> Result<()> {
    let want = manifest
        .lines()
        .filter_map(|l| l.split_once(char::is_whitespace))
        .find(|(_, n)| n.trim() == name)
        .map(|(h, _)| h.trim().to_ascii_lowercase())
        .ok_or_else(|| Error::ChecksumMismatch(format!("{name} not listed in manifest")))?;
    let got = hex::encode(Sha256::digest(bytes));
    if got != want {
        return Err(Error::ChecksumMismatch(name.into()));
    }
    Ok(())
}

pub fn bundled_catalog() -> Vec<NumberFieldRecord> {
    load_catalog(BUNDLED_CATALOG.as_bytes()).expect("bundled catalog is valid")
}

/// Fields of degree `d` not certainly excluded by `D_K < bound`.
pub fn query<'a>(
    catalog: &'a [NumberFieldRecord],
    d: u32,
    bound: &Interval,
) -> Vec<&'a NumberFieldRecord> {
    catalog
        .iter()
        .filter(|r| r.degree == d && Interval::exact(int(r.discriminant as i64)).certainly_less(bound))
        .collect()
}

pub fn find<'a>(catalog: &'a [NumberFieldRecord], d: u32, disc: u64) -> Option<&'a NumberFieldRecord> {
    catalog.iter().find(|r| r.degree == d && r.discriminant == disc)
}

// ---------------------------------------------------------------- units

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolution {
    pub a: u64,
    pub b: u64,
    /// a^2 - D b^2, either 4 or -4.
    pub norm4: i64,
}

/// Minimal positive (a, b) with a^2 - D b^2 = +-4, scanning b upwards.
pub fn pell_fundamental_unit(d: u64) -> PellSolution {
    let d = d as u128;
    let isqrt = |n: u128| -> Option<u64> {
        let r = (n as f64).sqrt() as u128;
        (r.saturating_sub(2)..=r + 2).find(|x| x * x == n).map(|x| x as u64)
    };
    for b in 1u128.. {
        let db2 = d * b * b;
        if db2 >= 4 {
            if let Some(a) = isqrt(db2 - 4) {
                return PellSolution { a, b: b as u64, norm4: -4 };
            }
        }
        if let Some(a) = isqrt(db2 + 4) {
            return PellSolution { a, b: b as u64, norm4: 4 };
        }
    }
    unreachable!()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitData {
    pub pell: Option<PellSolution>,
    /// Fundamental units as polynomials in the root of the defining
    /// polynomial, ascending powers.
    pub unit_expressions: Vec<Vec<i64>>,
    pub totally_positive_index: u32,
}

/// Fundamental units known for the cubic field x^3 + x^2 - 2x - 1.
fn cubic49_units() -> Vec<Vec<i64>> {
    vec![vec![0, 1], vec![-1, 0, 1]]
}

/// Signs of each unit at each real embedding, certified by interval
/// evaluation at isolated roots.
pub fn unit_sign_matrix(polynomial: &[i64], units: &[Vec<i64>]) -> Result<Vec<Vec<i8>>> {
    let mut width = 64;
    'retry: loop {
        let roots = poly::isolate_real_roots(polynomial, width);
        let mut out = Vec::new();
        for u in units {
            let q = poly::to_q(u);
            let mut row = Vec::new();
            for r in &roots {
                let v = poly::eval_interval(&q, r);
                if v.is_positive() {
                    row.push(1);
                } else if v.is_negative() {
                    row.push(-1);
                } else if width < 1024 {
                    width *= 2;
                    continue 'retry;
                } else {
                    return Err(Error::Uncertified("unit sign at an embedding".into()));
                }
            }
            out.push(row);
        }
        return Ok(out);
    }
}

/// Number of totally positive elements among +-prod eps_i^(a_i), a_i in {0,1}.
pub fn count_totally_positive(signs: &[Vec<i8>], embeddings: usize) -> u32 {
    let r = signs.len();
    let mut count = 0;
    for mask in 0u32..(1 << (r + 1)) {
        let mut v = vec![if mask & 1 == 1 { -1i8 } else { 1 }; embeddings];
        for (i, row) in signs.iter().enumerate() {
            if mask >> (i + 1) & 1 == 1 {
                for (x, s) in v.iter_mut().zip(row) {
                    *x *= s;
                }
            }
        }
        if v.iter().all(|&s| s > 0) {
            count += 1;
        }
    }
    count
}

pub fn unit_data(field: &NumberFieldRecord) -> Result<UnitData> {
    match (field.degree, field.discriminant) {
        (1, _) => Ok(UnitData {
            pell: None,
            unit_expressions: vec![],
            totally_positive_index: 1,
        }),
        (2, d) => {
            let pell = pell_fundamental_unit(d);
            // the conjugate of a positive unit is negative exactly when its norm is -1
            let idx = if pell.norm4 == -4 { 1 } else { 2 };
            Ok(UnitData {
                pell: Some(pell),
                unit_expressions: vec![],
                totally_positive_index: idx,
            })
        }
        (3, 49) if field.polynomial == vec![-1, -2, 1, 1] => {
            let units = cubic49_units();
            let signs = unit_sign_matrix(&field.polynomial, &units)?;
            let idx = count_totally_positive(&signs, 3);
            Ok(UnitData {
                pell: None,
                unit_expressions: units,
                totally_positive_index: idx,
            })
        }
        _ => Err(Error::UnsupportedField(field.label.clone())),
    }
}

pub fn totally_positive_index(field: &NumberFieldRecord) -> Result<u32> {
    Ok(unit_data(field)?.totally_positive_index)
}

// ---------------------------------------------------------------- analytic

/// 0.04 e^(0.46 d).
pub fn zimmert_lower(d: u32, bits: u32) -> Interval {
    let e = specfun::exp_enclosure(&Interval::exact(rat(46 * d as i64, 100)), bits + GUARD);
    e.scale(&rat(1, 25)).finish(bits)
}

/// 2t(t+1) (Gamma((t+1)/2) / (2 pi^((1+t)/2)))^d D^((t+1)/2) zeta(t+1)^d.
pub fn brauer_siegel_h(d: u32, disc: &Interval, t: &Rational, bits: u32) -> Result<Interval> {
    if !t.is_positive() {
        return Err(Error::NonPositiveT);
    }
    if disc.lo() < &int(1) {
        return Err(Error::UnsupportedArgument("discriminant below one".into()));
    }
    let w = bits + GUARD;
    let t1 = Interval::exact(t + int(1));
    let half = t1.scale(&rat(1, 2));
    let g = specfun::gamma_wp(&half, w)?;
    let pp = specfun::pow_wp(&specfun::pi_enclosure(w), &half, w)?;
    let z = specfun::zeta_wp(&t1, w)?;
    let inner = g.div(&pp.scale(&int(2)))?;
    let base = (inner * z).pow_int(d as i64)?;
    let dpow = specfun::pow_wp(disc, &half, w)?;
    let pre = t * (t + int(1)) * int(2);
    Ok((base * dpow).scale(&pre).finish(bits))
}

/// c with zeta_K(2j) = c pi^(4j) sqrt(D) for a real quadratic field.
pub fn quadratic_zeta_exact(d: u64, j: u32) -> Result<Rational> {
    let z = specfun::zeta_even_exact(j)?;
    let l = specfun::dirichlet_l_even_exact(d as i64, 2 * j)?;
    Ok(z * l)
}

fn parse_even(s: u32) -> Result<u32> {
    if s < 2 || s % 2 == 1 || s > 16 {
        return Err(Error::UnsupportedArgument(format!("s = {s} is not an even integer in 2..=16")));
    }
    Ok(s / 2)
}

pub const EULER_PRODUCT_CUTOFF: usize = 100_000;

/// Dedekind zeta of a cubic field by its Euler product over p <= P and the
/// tail bracket [1, exp(3 P^(1-s) / ((s-1)(1-P^-s)))].
pub fn cubic_zeta_euler(field: &NumberFieldRecord, s: u32, cutoff: usize, bits: u32) -> Result<Interval> {
    if field.degree != 3 {
        return Err(Error::UnsupportedField(field.label.clone()));
    }
    if poly::discriminant(&field.polynomial) != BigInt::from(field.discriminant) {
        return Err(Error::UnsupportedField(format!("{} is not monogenic by its polynomial", field.label)));
    }
    let w = bits + GUARD + 16;
    let mut prod = Interval::one();
    for p in poly::primes_up_to(cutoff) {
        let st = splitting_type(field, p)?;
        let x = Rational::new(BigInt::one(), BigInt::from(p).pow(s));
        for (_, f) in &st.primes {
            let xf = num_traits::Pow::pow(&x, *f as i32);
            let factor = (int(1) - xf).recip();
            prod = prod.scale(&factor).dyadic(w);
        }
    }
    let pc = int(cutoff as i64);
    let p_s = num_traits::Pow::pow(&pc, -(s as i32));
    let p_1s = num_traits::Pow::pow(&pc, 1 - s as i32);
    let expo = int(3) * p_1s / (int(s as i64 - 1) * (int(1) - p_s));
    let up = specfun::exp_enclosure(&Interval::exact(expo), w);
    let tail = Interval::new(int(1), up.hi().clone())?;
    Ok((prod * tail).finish(bits))
}

/// Dedekind zeta value zeta_K(s) at an even integer s.
pub fn dedekind_zeta_enclosure(field: &NumberFieldRecord, s: u32, bits: u32) -> Result<Interval> {
    let j = parse_even(s)?;
    let w = bits + GUARD;
    match field.degree {
        1 => {
            let c = specfun::zeta_even_exact(j)?;
            let pi = specfun::pi_enclosure(w);
            Ok(pi.pow_int(s as i64)?.scale(&c).finish(bits))
        }
        2 if L_MODULI.contains(&(field.discriminant as i64)) => {
            let si = Interval::from_int(s as i64);
            let z = specfun::zeta_real_enclosure(&si, w)?;
            let l = specfun::dirichlet_l_enclosure(field.discriminant as i64, &si, w)?;
            Ok((z * l).finish(bits))
        }
        3 if field.discriminant == 49 => {
            // the tail is about P^(1-s); for s >= 4 a shorter product already
            // beats the s = 2 width by far
            let cutoff = match s {
                2 => EULER_PRODUCT_CUTOFF,
                4 => EULER_PRODUCT_CUTOFF / 10,
                _ => EULER_PRODUCT_CUTOFF / 50,
            };
            static CACHE: OnceLock<Mutex<HashMap<(Vec<i64>, u32, u32), Interval>>> = OnceLock::new();
            let key = (field.polynomial.clone(), s, bits);
            let m = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
            if let Some(v) = m.lock().unwrap().get(&key) {
                return Ok(v.clone());
            }
            let v = cubic_zeta_euler(field, s, cutoff, bits)?;
            m.lock().unwrap().insert(key, v.clone());
            Ok(v)
        }
        _ => Err(Error::UnsupportedField(field.label.clone())),
    }
}

// ---------------------------------------------------------------- local

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitKind {
    Split,
    Inert,
    /// Some but not all primes above p have residue degree one.
    Partial,
    Ramified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub p: u64,
    pub kind: SplitKind,
    /// (e, f) for each prime above p.
    pub primes: Vec<(u32, u32)>,
    /// q_v = p^f for each prime above p.
    pub residue_cardinalities: Vec<u64>,
}

fn splitting(p: u64, kind: SplitKind, primes: Vec<(u32, u32)>) -> Splitting {
    let residue_cardinalities = primes.iter().map(|&(_, f)| p.pow(f)).collect();
    Splitting {
        p,
        kind,
        primes,
        residue_cardinalities,
    }
}

pub fn splitting_type(field: &NumberFieldRecord, p: u64) -> Result<Splitting> {
    if !poly::is_prime(p) {
        return Err(Error::UnsupportedArgument(format!("{p} is not prime")));
    }
    match field.degree {
        2 => {
            let d = field.discriminant as i64;
            Ok(match specfun::kronecker(d, p as i64) {
                1 => splitting(p, SplitKind::Split, vec![(1, 1), (1, 1)]),
                -1 => splitting(p, SplitKind::Inert, vec![(1, 2)]),
                _ => splitting(p, SplitKind::Ramified, vec![(2, 1)]),
            })
        }
        3 => {
            let disc = poly::discriminant(&field.polynomial);
            let bp = BigInt::from(p);
            if (&disc % &bp).is_zero() {
                let index2 = &disc / BigInt::from(field.discriminant);
                if (&index2 % &bp).is_zero() {
                    return Err(Error::UnsupportedArgument(format!(
                        "{p} divides the index of the defining polynomial of {}",
                        field.label
                    )));
                }
                let (roots, rest) = poly::fp_roots_with_multiplicity(&field.polynomial, p);
                let mut primes: Vec<(u32, u32)> = roots.iter().map(|&(_, k)| (k as u32, 1)).collect();
                if rest > 0 {
                    primes.push((1, rest as u32));
                }
                return Ok(splitting(p, SplitKind::Ramified, primes));
            }
            Ok(match poly::fp_root_count(&field.polynomial, p) {
                3 => splitting(p, SplitKind::Split, vec![(1, 1); 3]),
                1 => splitting(p, SplitKind::Partial, vec![(1, 1), (1, 2)]),
                _ => splitting(p, SplitKind::Inert, vec![(1, 3)]),
            })
        }
        _ => Err(Error::UnsupportedField(field.label.clone())),
    }
}

/// Whether the nonzero integer x is a square in Q_p.
pub fn padic_square_test(x: i64, p: u64) -> bool {
    assert!(x != 0, "zero is excluded");
    let p = p as i64;
    let mut u = x;
    let mut v = 0;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return false;
    }
    if p == 2 {
        u.rem_euclid(8) == 1
    } else {
        specfun::jacobi(u, p) == 1
    }
}

/// Index of the defining polynomial's order, sqrt(disc(f) / D_K).
pub fn polynomial_index(field: &NumberFieldRecord) -> u64 {
    if field.degree == 1 {
        return 1;
    }
    let q = poly::discriminant(&field.polynomial) / BigInt::from(field.discriminant);
    q.sqrt().to_u64().unwrap_or(0)
}
