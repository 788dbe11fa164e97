//! Local factors e'(P_v) of parahoric subgroups at finite places.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numberfields::{self, NumberFieldRecord, Splitting};
use crate::rigor::{int, rat, Comparison, Interval, Rational};

/// T(q) = (q^4 - 1) / (2 (q + 1)).
pub fn t_factor(q: u64) -> Rational {
    assert!(q >= 2, "residue cardinality must be at least 2");
    let q = int(q as i64);
    (Pow::pow(&q, 4u32) - int(1)) / (int(2) * (q + int(1)))
}

/// e'(P_v) for a special, non-hyperspecial parahoric of a Q-form of
/// rank n: prod_{j<=n} (q^j + (-1)^j) for odd n and prod_{j<=m} (q^(4j-2) - 1)
/// for n = 2m.
pub fn eprime_special(n: u32, q: u64) -> BigInt {
    assert!(n >= 2 && q >= 2);
    let qb = BigInt::from(q);
    if n % 2 == 1 {
        (1..=n)
            .map(|j| Pow::pow(&qb, j) + if j % 2 == 0 { 1 } else { -1 })
            .product()
    } else {
        (1..=n / 2).map(|j| Pow::pow(&qb, 4 * j - 2) - 1).product()
    }
}

/// h(q, n) = q^(n+1)/(q+1) prod_{j<=n} (1 - q^(-2j)), exactly.
pub fn h_rigidity_exact(q: u64, n: u32) -> Rational {
    assert!(q >= 2 && n >= 1);
    let qr = int(q as i64);
    let mut v = Pow::pow(&qr, n + 1) / (&qr + int(1));
    for j in 1..=n as i32 {
        v *= int(1) - Pow::pow(&qr, -2 * j);
    }
    v
}

pub fn h_rigidity(q: u64, n: u32) -> Interval {
    Interval::exact(h_rigidity_exact(q, n))
}

/// Lower bound for e'(P_v) at a non-special parahoric, against
/// #Xi <= 2. At (q, n) = (2, 2) the bound is T(2) = 15/6; elsewhere h(q, n).
pub fn nonspecial_gt_two(q: u64, n: u32) -> Comparison {
    assert!(q >= 2 && n >= 2);
    let lower = if (q, n) == (2, 2) {
        t_factor(2)
    } else {
        h_rigidity_exact(q, n)
    };
    Comparison::new(Interval::exact(lower), Interval::from_int(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalFactorKind {
    Hyperspecial,
    SpecialNonhyperspecial,
    /// Rank two, Levi component SL_2 x 2O_2.
    NonspecialRank2Levi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactor {
    pub q: u64,
    pub n: u32,
    pub kind: LocalFactorKind,
    pub value: Rational,
}

impl LocalFactor {
    /// In rank two the factor is 1 or T(q); in higher rank a special
    /// factor takes its closed form.
    pub fn new(q: u64, n: u32, kind: LocalFactorKind) -> Result<Self> {
        if q < 2 || n < 2 {
            return Err(Error::UnsupportedArgument(format!("local factor needs q >= 2 and n >= 2, got ({q}, {n})")));
        }
        let value = match (n, kind) {
            (_, LocalFactorKind::Hyperspecial) => Rational::one(),
            (2, LocalFactorKind::NonspecialRank2Levi) => t_factor(q),
            (2, LocalFactorKind::SpecialNonhyperspecial) => {
                return Err(Error::UnsupportedArgument(
                    "in rank two a non-hyperspecial factor is T(q)".into(),
                ))
            }
            (_, LocalFactorKind::SpecialNonhyperspecial) => Rational::from_integer(eprime_special(n, q)),
            (_, LocalFactorKind::NonspecialRank2Levi) => {
                return Err(Error::UnsupportedArgument("the SL_2 x 2O_2 Levi only occurs in rank two".into()))
            }
        };
        Ok(LocalFactor { q, n, kind, value })
    }

    pub fn is_hyperspecial(&self) -> bool {
        self.kind == LocalFactorKind::Hyperspecial
    }
}

/// prod e'(P_v) against 5 * 2^#T, with T the non-hyperspecial places.
pub fn exclusion_inequality(factors: &[LocalFactor]) -> Comparison {
    let prod: Rational = factors.iter().map(|f| f.value.clone()).product();
    let t = factors.iter().filter(|f| !f.is_hyperspecial()).count();
    let rhs = int(5) * Pow::pow(&int(2), t as u32);
    Comparison::new(Interval::exact(prod), Interval::exact(rhs))
}

/// The local argument for Q(sqrt 5) in rank two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qsqrt5Exclusion {
    /// Splitting of 2 and 3.
    pub splittings: Vec<Splitting>,
    /// Whether 5 is a square in Q_2 and Q_3 (both false).
    pub padic_squares: Vec<(u64, bool)>,
    /// T(4) against 10: one factor with q >= 4 beats 5 * 2.
    pub t4_vs_ten: Comparison,
    /// No place has residue cardinality 2 or 3.
    pub no_small_residue_field: bool,
}

impl Qsqrt5Exclusion {
    /// Every non-hyperspecial factor is then T(q) with q >= 4, which makes
    /// the exclusion inequality hold whenever T is nonempty. The empty case
    /// is left to the quaternion parity argument.
    pub fn holds(&self) -> bool {
        self.no_small_residue_field && self.t4_vs_ten.greater()
    }
}

pub fn qsqrt5_local_exclusion(catalog: &[NumberFieldRecord]) -> Result<Qsqrt5Exclusion> {
    let k = numberfields::find(catalog, 2, 5).ok_or_else(|| Error::DataMissing("the field of discriminant 5".into()))?;
    let mut splittings = Vec::new();
    let mut padic_squares = Vec::new();
    for p in [2u64, 3] {
        splittings.push(numberfields::splitting_type(k, p)?);
        padic_squares.push((p, numberfields::padic_square_test(5, p)));
    }
    let no_small = splittings
        .iter()
        .all(|s| s.residue_cardinalities.iter().all(|&q| q != 2 && q != 3));
    Ok(Qsqrt5Exclusion {
        splittings,
        padic_squares,
        t4_vs_ten: Comparison::new(Interval::exact(t_factor(4)), Interval::exact(int(10))),
        no_small_residue_field: no_small,
    })
}

/// T(q) is increasing: T(q) = (q^2 + 1)(q - 1)/2.
pub fn t_factor_factored(q: u64) -> Rational {
    let q = int(q as i64);
    (&q * &q + int(1)) * (q - int(1)) * rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_values() {
        assert_eq!(t_factor(2), rat(5, 2));
        assert_eq!(t_factor(3), int(10));
        assert_eq!(t_factor(4), rat(51, 2));
    }

    #[test]
    fn eprime_values() {
        assert_eq!(eprime_special(3, 2), BigInt::from(35));
        assert_eq!(eprime_special(2, 2), BigInt::from(3));
        assert_eq!(eprime_special(2, 3), BigInt::from(8));
    }

    #[test]
    fn rank_two_rule() {
        assert!(LocalFactor::new(2, 2, LocalFactorKind::SpecialNonhyperspecial).is_err());
        assert_eq!(LocalFactor::new(3, 2, LocalFactorKind::NonspecialRank2Levi).unwrap().value, int(10));
    }
}
