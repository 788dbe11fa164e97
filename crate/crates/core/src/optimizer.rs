//! Parameter searches over an Odlyzko table: the (A, E, t) grid for rank
//! two, the (A, E) minimization for rank three and the feasibility search
//! for the rank-four conditions.
//!
//! Grid points are evaluated in parallel and merged by a deterministic
//! reduction, so results do not depend on the thread count.

use num_traits::Signed;
use rayon::prelude::*;

use crate::bounds::{self, OdlyzkoPair};
use crate::error::{Error, Result};
use crate::rigor::{int, rat, rcmp, Interval, Rational};
use crate::specfun::{self, GUARD};

/// Precision used to screen grid points before the full evaluation.
const SCREEN_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub pair: OdlyzkoPair,
    pub t: Option<Rational>,
    pub value: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best_value: Interval,
    pub best_pair: OdlyzkoPair,
    pub best_t: Option<Rational>,
    pub rows_scanned: usize,
    pub points_evaluated: usize,
    pub feasible_points: usize,
    /// Other points whose enclosure still overlaps the best one after
    /// refinement to four times the precision.
    pub ties: Vec<Candidate>,
    /// Precision at which the best value was finally computed.
    pub precision: u32,
}

/// The t grid: t = step * k for k = 1..=count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TGrid {
    pub step: Rational,
    pub count: u32,
}

impl Default for TGrid {
    /// t = 0.1 k for k = 1..249.
    fn default() -> Self {
        TGrid {
            step: rat(1, 10),
            count: 249,
        }
    }
}

impl TGrid {
    pub fn points(&self) -> Vec<Rational> {
        (1..=self.count as i64).map(|k| &self.step * int(k)).collect()
    }
}

fn alpha_at(t: &Rational, wp: u32) -> Result<Interval> {
    specfun::alpha_enclosure(&Interval::exact(t + int(1)), wp)
}

enum Screen {
    Value(Interval),
    /// base <= 1 certified
    Infeasible,
    /// base overlaps 1 at this precision
    Unsure,
}

fn n2_screen(pair: &OdlyzkoPair, t: &Rational, alpha: &Interval, bits: u32) -> Result<Screen> {
    let w = bits + GUARD;
    let ap = specfun::pow_enclosure(&Interval::exact(pair.a.clone()), &Interval::exact(rat(9, 2) - t / int(2)), w)?;
    let base = bounds::eta(w) * ap * alpha.clone();
    if base.hi() <= &int(1) {
        return Ok(Screen::Infeasible);
    }
    if !base.certainly_greater(&Interval::one()) {
        return Ok(Screen::Unsure);
    }
    let t1 = t + int(1);
    let prefactor = int(25) * t * &t1;
    let log_x = Interval::exact(&pair.e * &t1 / int(2) - &pair.e * int(5))
        - specfun::log_enclosure(&Interval::exact(prefactor), w)?;
    let log_psi = specfun::log_enclosure(&Interval::exact(bounds::psi_exact(2)), w)?;
    let num = log_psi - log_x;
    let den = specfun::log_enclosure(&base, w)?;
    Ok(Screen::Value(num.div(&den)?.finish(bits)))
}

fn n2_rhs_with_alpha(pair: &OdlyzkoPair, t: &Rational, alpha: &Interval, bits: u32) -> Result<Interval> {
    match n2_screen(pair, t, alpha, bits)? {
        Screen::Value(v) => Ok(v),
        _ => Err(Error::InfeasibleBase),
    }
}

fn check_t(t: &Rational) -> Result<()> {
    if !t.is_positive() {
        return Err(Error::NonPositiveT);
    }
    // the substitution D^((9-t)/2) >= (A^d e^-E)^((9-t)/2) needs t < 9
    if t >= &int(9) {
        return Err(Error::InfeasibleBase);
    }
    Ok(())
}

/// Degree threshold for rank two: when d_K exceeds it, the covolume bound
/// e^(E(t+1)/2 - 5E)/(25 t (t+1)) (eta A^(4.5-t/2) alpha(t+1))^d exceeds
/// Psi(2).
pub fn n2_rhs(pair: &OdlyzkoPair, t: &Rational, bits: u32) -> Result<Interval> {
    check_t(t)?;
    let alpha = alpha_at(t, bits + GUARD)?;
    n2_rhs_with_alpha(pair, t, &alpha, bits)
}

struct Point {
    row: usize,
    t: Option<Rational>,
}

fn key_cmp(a: &Candidate, b: &Candidate) -> std::cmp::Ordering {
    rcmp(a.value.hi(), b.value.hi())
        .then_with(|| a.pair.cmp(&b.pair))
        .then_with(|| a.t.cmp(&b.t))
}

/// Keeps the points not certainly above the smallest upper endpoint,
/// re-evaluating them at 2x and 4x precision while more than one remains.
fn reduce<F>(
    table: &[OdlyzkoPair],
    mut values: Vec<(Point, Interval)>,
    eval: F,
    bits: u32,
) -> Result<(Candidate, Vec<Candidate>, u32)>
where
    F: Fn(&Point, u32) -> Result<Interval> + Sync,
{
    let shortlist = |vals: Vec<(Point, Interval)>| -> Vec<(Point, Interval)> {
        let min_hi = vals
            .iter()
            .map(|(_, v)| v.hi().clone())
            .min_by(|a, b| rcmp(a, b))
            .expect("nonempty");
        vals.into_iter().filter(|(_, v)| rcmp(v.lo(), &min_hi).is_le()).collect()
    };
    values = shortlist(values);
    let mut prec = bits;
    for factor in [1u32, 2, 4] {
        prec = bits * factor;
        let next: Vec<Result<Interval>> = values.par_iter().map(|(p, _)| eval(p, prec)).collect();
        values = values
            .into_iter()
            .zip(next)
            .map(|((p, _), v)| v.map(|v| (p, v)))
            .collect::<Result<Vec<_>>>()?;
        values = shortlist(values);
        if values.len() == 1 {
            break;
        }
    }
    let mut cands: Vec<Candidate> = values
        .into_iter()
        .map(|(p, v)| Candidate {
            pair: table[p.row].clone(),
            t: p.t,
            value: v,
        })
        .collect();
    cands.sort_by(key_cmp);
    let best = cands.remove(0);
    Ok((best, cands, prec))
}

/// Scans every (row, t) with t on the grid and returns the smallest
/// certified threshold.
pub fn optimize_n2(table: &[OdlyzkoPair], grid: &TGrid, bits: u32) -> Result<SearchResult> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let ts: Vec<Rational> = grid.points();
    let usable: Vec<&Rational> = ts.iter().filter(|t| check_t(t).is_ok()).collect();
    let alphas: Vec<Interval> = usable
        .par_iter()
        .map(|t| alpha_at(t, SCREEN_BITS + GUARD))
        .collect::<Result<_>>()?;
    let points: Vec<(usize, usize)> = (0..table.len())
        .flat_map(|r| (0..usable.len()).map(move |k| (r, k)))
        .collect();
    let screened: Vec<Result<Screen>> = points
        .par_iter()
        .map(|&(r, k)| n2_screen(&table[r], usable[k], &alphas[k], SCREEN_BITS))
        .collect();
    let mut values = Vec::new();
    for (&(r, k), s) in points.iter().zip(screened) {
        let v = match s? {
            Screen::Value(v) => Some(v),
            Screen::Infeasible => None,
            // retry at full precision before giving up on the point
            Screen::Unsure => n2_rhs(&table[r], usable[k], bits).ok(),
        };
        if let Some(v) = v {
            values.push((
                Point {
                    row: r,
                    t: Some(usable[k].clone()),
                },
                v,
            ));
        }
    }
    let feasible = values.len();
    if values.is_empty() {
        return Err(Error::NoFeasiblePoint);
    }
    let eval = |p: &Point, prec: u32| n2_rhs(&table[p.row], p.t.as_ref().unwrap(), prec);
    let (best, ties, prec) = reduce(table, values, eval, bits)?;
    Ok(SearchResult {
        best_value: best.value,
        best_pair: best.pair,
        best_t: best.t,
        rows_scanned: table.len(),
        points_evaluated: table.len() * ts.len(),
        feasible_points: feasible,
        ties,
        precision: prec,
    })
}

/// Minimizes (7.5 E - 8.25)/(7.5 log A - 12.99) over the rows where the
/// denominator is certified positive.
pub fn optimize_n3(table: &[OdlyzkoPair], bits: u32) -> Result<SearchResult> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let vals: Vec<Result<Interval>> = table
        .par_iter()
        .map(|p| bounds::n3_degree_threshold(p, bits))
        .collect();
    let mut values = Vec::new();
    for (row, v) in vals.into_iter().enumerate() {
        match v {
            Ok(v) => values.push((Point { row, t: None }, v)),
            Err(Error::DenominatorNotPositive) => {}
            Err(e) => return Err(e),
        }
    }
    let feasible = values.len();
    if values.is_empty() {
        return Err(Error::NoFeasiblePoint);
    }
    let eval = |p: &Point, prec: u32| bounds::n3_degree_threshold(&table[p.row], prec);
    let (best, ties, prec) = reduce(table, values, eval, bits)?;
    Ok(SearchResult {
        best_value: best.value,
        best_pair: best.pair,
        best_t: None,
        rows_scanned: table.len(),
        points_evaluated: table.len(),
        feasible_points: feasible,
        ties,
        precision: prec,
    })
}

/// All rows passing the three rank-four conditions, in table order.
pub fn rank4_passing_rows(table: &[OdlyzkoPair], bits: u32) -> Result<Vec<OdlyzkoPair>> {
    let verdicts: Vec<Result<bool>> = table
        .par_iter()
        .map(|p| bounds::rank4_conditions(p, bits).map(|c| c.all_hold()))
        .collect();
    let mut out = Vec::new();
    for (p, v) in table.iter().zip(verdicts) {
        if v? {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// The first row passing the rank-four conditions.
pub fn find_rank4_pair(table: &[OdlyzkoPair], bits: u32) -> Result<OdlyzkoPair> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    rank4_passing_rows(table, bits)?
        .into_iter()
        .next()
        .ok_or(Error::NoFeasiblePoint)
}
