//! The proof pipeline for one rank n, the certificate it produces and the
//! JSON and text reports.
//!
//! A step is Proved only when each of its comparisons is certified by
//! disjoint enclosures. Printed reference values are kept as annotations
//! and never feed a verdict.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bounds::{self, IndexBound, OdlyzkoPair};
use crate::error::{Error, Result};
use crate::localfactors;
use crate::numberfields::{self, NumberFieldRecord};
use crate::optimizer::{self, TGrid};
use crate::rigor::{decimal_string, format_sig, int, parse_decimal, pow2, rat, Comparison, Interval, Rational};
use crate::specfun;

pub const SCHEMA_VERSION: &str = "covcert-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Proved,
    Failed,
    Axiom,
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Less,
    Greater,
    /// Both sides are the same exact rational.
    Equal,
    /// The left enclosure contains the right one.
    Contains,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Refuted,
    Unresolved,
}

/// Exact rational endpoints as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureRecord {
    pub lo: String,
    pub hi: String,
}

impl EnclosureRecord {
    pub fn from_interval(x: &Interval) -> Self {
        let (lo, hi) = x.to_strings();
        EnclosureRecord { lo, hi }
    }

    pub fn to_interval(&self) -> Option<Interval> {
        Interval::from_strings(&self.lo, &self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedEnclosure {
    pub name: String,
    pub enclosure: EnclosureRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordedComparison {
    pub label: String,
    pub lhs: EnclosureRecord,
    pub relation: Relation,
    pub rhs: EnclosureRecord,
    pub outcome: Outcome,
}

/// A printed reference value next to the enclosure it should describe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub label: String,
    pub printed: String,
    pub rule: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateStep {
    pub id: String,
    pub claim: String,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    pub enclosures: Vec<NamedEnclosure>,
    pub comparisons: Vec<RecordedComparison>,
    pub annotations: Vec<Annotation>,
    pub verdict: Verdict,
    pub dependencies: Vec<String>,
    pub precision: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub rank: u32,
    pub precision: u32,
    pub data_source: String,
    pub steps: Vec<CertificateStep>,
    pub surviving_fields_after_global: Vec<String>,
    pub surviving_fields_after_local: Vec<String>,
    pub axioms_used: Vec<String>,
    pub all_proved: bool,
    pub final_conclusion: String,
    pub digest: String,
}

pub fn evaluate(lhs: &Interval, relation: Relation, rhs: &Interval) -> Outcome {
    match relation {
        Relation::Less | Relation::Greater => {
            let (yes, no) = if relation == Relation::Less {
                (lhs.certainly_less(rhs), lhs.certainly_greater(rhs))
            } else {
                (lhs.certainly_greater(rhs), lhs.certainly_less(rhs))
            };
            if yes {
                Outcome::Holds
            } else if no {
                Outcome::Refuted
            } else {
                Outcome::Unresolved
            }
        }
        Relation::Equal => match (lhs.as_point(), rhs.as_point()) {
            (Some(a), Some(b)) if a == b => Outcome::Holds,
            _ if lhs.intersect(rhs).is_none() => Outcome::Refuted,
            _ => Outcome::Unresolved,
        },
        Relation::Contains => {
            if lhs.contains_interval(rhs) {
                Outcome::Holds
            } else {
                Outcome::Refuted
            }
        }
    }
}

fn verdict_of(comparisons: &[RecordedComparison]) -> Verdict {
    if comparisons.is_empty() || comparisons.iter().any(|c| c.outcome == Outcome::Refuted) {
        Verdict::Failed
    } else if comparisons.iter().any(|c| c.outcome == Outcome::Unresolved) {
        Verdict::Tie
    } else {
        Verdict::Proved
    }
}

impl CertificateStep {
    fn new(id: impl Into<String>, claim: impl Into<String>, anchor: impl Into<String>, precision: u32) -> Self {
        CertificateStep {
            id: id.into(),
            claim: claim.into(),
            anchor: anchor.into(),
            value: None,
            enclosures: Vec::new(),
            comparisons: Vec::new(),
            annotations: Vec::new(),
            verdict: Verdict::Failed,
            dependencies: Vec::new(),
            precision,
        }
    }

    fn axiom(id: &str, claim: &str, anchor: &str) -> Self {
        let mut s = CertificateStep::new(id, claim, anchor, 0);
        s.verdict = Verdict::Axiom;
        s
    }

    fn enclose(&mut self, name: impl Into<String>, x: &Interval) -> &mut Self {
        self.enclosures.push(NamedEnclosure {
            name: name.into(),
            enclosure: EnclosureRecord::from_interval(x),
        });
        self
    }

    fn compare(&mut self, label: impl Into<String>, lhs: &Interval, relation: Relation, rhs: &Interval) -> &mut Self {
        self.comparisons.push(RecordedComparison {
            label: label.into(),
            lhs: EnclosureRecord::from_interval(lhs),
            relation,
            rhs: EnclosureRecord::from_interval(rhs),
            outcome: evaluate(lhs, relation, rhs),
        });
        self
    }

    fn record(&mut self, label: impl Into<String>, c: &Comparison, relation: Relation) -> &mut Self {
        self.compare(label, &c.lhs, relation, &c.rhs)
    }

    /// Printed value within an absolute tolerance of the enclosure.
    fn annotate_abs(&mut self, label: impl Into<String>, x: &Interval, printed: &str, tol: &str) -> &mut Self {
        let p = parse_decimal(printed).expect("printed value is a decimal");
        let t = parse_decimal(tol).expect("tolerance is a decimal");
        self.annotations.push(Annotation {
            label: label.into(),
            printed: printed.into(),
            rule: format!("within {tol}"),
            agrees: x.agrees_with(&p, &t),
        });
        self
    }

    /// Printed value within a relative tolerance (in percent).
    fn annotate_rel(&mut self, label: impl Into<String>, x: &Interval, printed: &str, percent: &str) -> &mut Self {
        let p = parse_decimal(printed).expect("printed value is a decimal");
        let t = parse_decimal(percent).expect("percent is a decimal") / int(100) * p.abs();
        self.annotations.push(Annotation {
            label: label.into(),
            printed: printed.into(),
            rule: format!("within {percent}%"),
            agrees: x.agrees_with(&p, &t),
        });
        self
    }

    /// Printed integer N for a statement D <= N: N = floor of the bound.
    fn annotate_floor(&mut self, label: impl Into<String>, x: &Interval, printed: u64) -> &mut Self {
        let f_lo = x.lo().floor();
        let f_hi = x.hi().floor();
        self.annotations.push(Annotation {
            label: label.into(),
            printed: printed.to_string(),
            rule: "floor of the bound".into(),
            agrees: f_lo == f_hi && f_lo == int(printed as i64),
        });
        self
    }

    fn note(&mut self, label: impl Into<String>, text: impl Into<String>) -> &mut Self {
        self.annotations.push(Annotation {
            label: label.into(),
            printed: text.into(),
            rule: "note".into(),
            agrees: true,
        });
        self
    }

    fn deps(&mut self, ids: &[&str]) -> &mut Self {
        self.dependencies.extend(ids.iter().map(|s| s.to_string()));
        self
    }

    fn done(mut self) -> Self {
        self.verdict = verdict_of(&self.comparisons);
        self
    }
}

// ---------------------------------------------------------------- data

/// Input tables for a run.
#[derive(Debug, Clone)]
pub struct DataSet {
    pub odlyzko: Vec<OdlyzkoPair>,
    pub catalog: Vec<NumberFieldRecord>,
    pub source: String,
}

pub const DATA_DIR_ENV: &str = "COVCERT_DATA_DIR";
pub const ODLYZKO_FILE: &str = "odlyzko.csv";
pub const FIELDS_FILE: &str = "fields.txt";
pub const MANIFEST_FILE: &str = "SHA256SUMS";

fn read_file(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::DataMissing(format!("{}: {e}", path.display())))
}

impl DataSet {
    pub fn bundled() -> Self {
        DataSet {
            odlyzko: bounds::bundled_odlyzko(),
            catalog: numberfields::bundled_catalog(),
            source: "bundled".into(),
        }
    }

    /// Explicit paths win, then `COVCERT_DATA_DIR`, then the bundled copy.
    /// A directory is checked against its SHA256SUMS when one is present.
    pub fn resolve(odlyzko: Option<&Path>, fields: Option<&Path>) -> Result<Self> {
        let dir = std::env::var_os(DATA_DIR_ENV).map(PathBuf::from);
        Self::resolve_with_dir(odlyzko, fields, dir.as_deref())
    }

    pub fn resolve_with_dir(odlyzko: Option<&Path>, fields: Option<&Path>, dir: Option<&Path>) -> Result<Self> {
        if odlyzko.is_none() && fields.is_none() && dir.is_none() {
            numberfields::verify_manifest(bounds::BUNDLED_ODLYZKO.as_bytes(), numberfields::BUNDLED_MANIFEST, ODLYZKO_FILE)?;
            numberfields::verify_manifest(numberfields::BUNDLED_CATALOG.as_bytes(), numberfields::BUNDLED_MANIFEST, FIELDS_FILE)?;
            return Ok(Self::bundled());
        }
        let manifest = match dir {
            Some(d) if d.join(MANIFEST_FILE).exists() => Some(String::from_utf8_lossy(&read_file(&d.join(MANIFEST_FILE))?).into_owned()),
            _ => None,
        };
        let mut sources = Vec::new();
        let mut load = |explicit: Option<&Path>, name: &str, bundled: &str| -> Result<Vec<u8>> {
            if let Some(p) = explicit {
                sources.push(p.display().to_string());
                return read_file(p);
            }
            if let Some(d) = dir {
                let p = d.join(name);
                let bytes = read_file(&p)?;
                if let Some(m) = &manifest {
                    numberfields::verify_manifest(&bytes, m, name)?;
                }
                sources.push(p.display().to_string());
                return Ok(bytes);
            }
            sources.push(format!("bundled {name}"));
            Ok(bundled.as_bytes().to_vec())
        };
        let ob = load(odlyzko, ODLYZKO_FILE, bounds::BUNDLED_ODLYZKO)?;
        let fb = load(fields, FIELDS_FILE, numberfields::BUNDLED_CATALOG)?;
        Ok(DataSet {
            odlyzko: bounds::load_odlyzko(ob.as_slice())?,
            catalog: numberfields::load_catalog(fb.as_slice())?,
            source: sources.join(", "),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub precision: u32,
    pub data: DataSet,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: crate::DEFAULT_PRECISION,
            data: DataSet::bundled(),
        }
    }
}

// ---------------------------------------------------------------- axioms

const AXIOMS: [(&str, &str, &str); 5] = [
    (
        "A1",
        "A quaternion algebra over a totally real field that splits at every finite place is ramified at an even number of real places. A form of Sp_4 over Q(sqrt 5) that is split at all finite places and at the distinguished real place is then split at the other real place, where it would not be compact.",
        "quaternion ramification parity",
    ),
    (
        "A2",
        "A Q-split group whose parahorics are all hyperspecial gives a lattice conjugate to Sp_2n(Z): GSp_2n has class number one over Q, acts transitively on hyperspecial parahorics, and Sp_2n(Z) is its own normalizer.",
        "identification of the lattice",
    ),
    (
        "A3",
        "Vendored data are valid: every totally real field of degree d has D_K > A^d e^(-E) for each Odlyzko row (A, E), and the field catalog is complete below the discriminant bounds it states.",
        "Odlyzko bounds and field tables",
    ),
    (
        "A4",
        "Index bound: [Gamma : Lambda] <= h_K [U+ : U^2] <= h_K 2^(2d-1) for the normalizer Gamma of a principal arithmetic subgroup Lambda over K, and [Gamma : Lambda] <= 2^#T when K = Q.",
        "index bound for normalizers",
    ),
    (
        "A5",
        "A lattice of minimal covolume exists, is arithmetic and is the normalizer of a principal arithmetic subgroup whose covolume is given by Prasad's volume formula with the constants Pi(n), S(Lambda) and e'(P_v).",
        "existence and volume formula",
    ),
];

fn axiom_step(id: &str) -> CertificateStep {
    let (i, c, a) = AXIOMS.iter().find(|(i, _, _)| *i == id).expect("known axiom");
    CertificateStep::axiom(i, c, a)
}

/// Conclusion string for rank n; 2n is written out.
pub fn conclusion_text(n: u32) -> String {
    format!("Sp_{}(Z) uniquely minimal (mod axioms A1–A5)", 2 * n)
}

// ---------------------------------------------------------------- pipeline

fn iv(r: Rational) -> Interval {
    Interval::exact(r)
}

fn ivi(n: i64) -> Interval {
    Interval::from_int(n)
}

struct Run<'a> {
    n: u32,
    bits: u32,
    data: &'a DataSet,
    steps: Vec<CertificateStep>,
}

impl Run<'_> {
    fn push(&mut self, s: CertificateStep) {
        self.steps.push(s);
    }

    /// Adds the step built by `f`, or a Failed step carrying the error.
    fn attempt(&mut self, id: &str, claim: &str, anchor: &str, f: impl FnOnce(&mut CertificateStep) -> Result<()>) {
        let mut s = CertificateStep::new(id, claim, anchor, self.bits);
        match f(&mut s) {
            Ok(()) => self.push(s.done()),
            Err(e) => {
                s.note("error", e.to_string());
                s.comparisons.clear();
                s.verdict = Verdict::Failed;
                self.push(s);
            }
        }
    }

    fn proved(&self, id: &str) -> bool {
        self.steps
            .iter()
            .any(|s| s.id == id && matches!(s.verdict, Verdict::Proved | Verdict::Axiom))
    }
}

fn psi_steps(run: &mut Run) {
    let n = run.n;
    let bits = run.bits;
    let id = format!("psi{n}_exact");
    run.attempt(
        &id,
        &format!("Psi({n}) = Pi({n}) prod_(j<={n}) zeta(2j) is the exact rational below; the interval route through zeta enclosures contains it"),
        "covolume of Sp_2n(Z)",
        |s| {
            let exact = bounds::psi_exact(n);
            let route = bounds::psi_interval(n, bits)?;
            s.value = Some(exact.to_string());
            s.enclose("psi_interval_route", &route);
            s.compare("interval route contains the exact value", &route, Relation::Contains, &iv(exact.clone()));
            match n {
                2 => {
                    s.compare("Psi(2) = 1/5760", &iv(exact), Relation::Equal, &iv(rat(1, 5760)));
                    s.annotate_rel("approximation", &route, "1.736e-4", "0.05");
                }
                3 => {
                    s.compare("Psi(3) = 1/2903040", &iv(exact), Relation::Equal, &iv(rat(1, 2903040)));
                    s.annotate_rel("approximation", &route, "3.445e-7", "0.05");
                }
                _ => {}
            }
            s.deps(&["A5"]);
            Ok(())
        },
    );
    run.attempt(
        "zeta_product",
        "prod_(j>=1) zeta(2j) < 1.83, from the product up to j = 20 and the tail factor exp(sum_(j>20) 2^(1-2j))",
        "bound for the infinite zeta product",
        |s| {
            let c = bounds::zeta_product_check(bits);
            s.enclose("partial product with tail", &c.lhs);
            s.record("product < 1.83", &c, Relation::Less);
            Ok(())
        },
    );
}

fn rank_ge4_steps(run: &mut Run) -> Vec<String> {
    let n = run.n;
    let bits = run.bits;
    let table = run.data.odlyzko.clone();
    let mut pair: Option<OdlyzkoPair> = None;
    run.attempt(
        "odlyzko_pair",
        "Some row (A, E) of the table satisfies 2 log A - E > log 2pi + 1 - log 5, A > 5.66 and 2 log A - E > (log 9.47 - log Pi(4))/f(4)",
        "parameter search for rank at least four",
        |s| {
            let passing = optimizer::rank4_passing_rows(&table, bits)?;
            let p = passing.first().cloned().ok_or(Error::NoFeasiblePoint)?;
            let c = bounds::rank4_conditions(&p, bits)?;
            s.value = Some(p.label());
            s.record("condition a", &c.cond_a, Relation::Greater);
            s.record("condition b", &c.cond_b, Relation::Greater);
            s.record("condition c", &c.cond_c, Relation::Greater);
            s.annotate_rel("condition a threshold", &c.cond_a.rhs, "1.2284", "0.05");
            s.note(
                "passing rows",
                passing.iter().map(|p| p.label()).collect::<Vec<_>>().join(" "),
            );
            s.deps(&["A3"]);
            pair = Some(p);
            Ok(())
        },
    );
    let Some(pair) = pair else {
        return vec![];
    };
    let pc = pair.clone();
    run.attempt(
        "claim_a",
        "n -> Pi(n)^(-1) O(n, 2, A, E) is increasing for n >= 2",
        "monotonicity in the rank",
        |s| {
            let om = bounds::omega_condition(&pc, 2, bits)?;
            s.record("4 log A - 2E >= 2 log 2pi + 2 - 2 log 5 (right side decreases in n)", &om, Relation::Greater);
            for (m, c) in bounds::claim_a_direct(&pc, 2..=20, bits)? {
                s.record(format!("direct n = {m}"), &c, Relation::Greater);
            }
            s.deps(&["odlyzko_pair"]);
            Ok(())
        },
    );
    let pc = pair.clone();
    run.attempt(
        "claim_b",
        "d -> O(n, d, A, E) is increasing for n >= 3: 7.6 e^0.46 A^f(n) Pi(n) >= 1",
        "monotonicity in the degree",
        |s| {
            s.compare("A > 5.66", &iv(pc.a.clone()), Relation::Greater, &iv(rat(566, 100)));
            for m in 3..=14 {
                let c = bounds::claim_b_direct(&rat(566, 100), m, bits)?;
                s.record(format!("A = 5.66, n = {m}"), &c, Relation::Greater);
            }
            // beyond n = 14 every factor is increasing in n
            let r8 = bounds::pi_ratio(8, bits);
            s.compare("Pi(9)/Pi(8) > 1", &r8, Relation::Greater, &Interval::one());
            let four_pi2 = specfun::pi_enclosure(bits).pow_int(2)?.scale(&int(4));
            s.compare(
                "(2n+2)(2n+3) > 4 pi^2 at n = 2, so Pi(n+1)/Pi(n) is increasing",
                &ivi(42),
                Relation::Greater,
                &four_pi2,
            );
            s.deps(&["odlyzko_pair"]);
            Ok(())
        },
    );
    let pc = pair.clone();
    run.attempt(
        "claim_c",
        "Pi(4)^(-1) O(4, 2, A, E) > 1.83",
        "base case in rank four",
        |s| {
            let c = bounds::claim_c_direct(&pc, bits)?;
            s.record("direct evaluation", &c, Relation::Greater);
            let k = bounds::claim_c_constant(bits);
            s.record("1.83 * 750 / (7.6 e^0.46)^2 < 9.47", &k, Relation::Less);
            s.annotate_rel("constant", &k.lhs, "9.4697", "0.01");
            s.annotate_rel("Pi(4)", &bounds::pi_n(4, bits), "3.9e-10", "2");
            s.deps(&["odlyzko_pair"]);
            Ok(())
        },
    );
    let pc = pair.clone();
    run.attempt(
        "rank_ge4_global",
        &format!("For n = {n} and every d >= 2: Pi(n)^(-1) O(n, d) >= Pi(4)^(-1) O(4, 2) > prod zeta(2j) > Psi(n)/Pi(n), so K = Q"),
        "global stage, rank at least four",
        |s| {
            let c = bounds::claim_c_direct(&pc, bits)?;
            let z = bounds::zeta_product_with_tail(20, bits);
            s.compare("Pi(4)^(-1) O(4, 2) > prod zeta(2j)", &c.lhs, Relation::Greater, &z);
            if n > 4 {
                let o = bounds::normalized_o(n, &pc, bits)?;
                s.compare(format!("Pi({n})^(-1) O({n}, 2) > Pi(4)^(-1) O(4, 2)"), &o, Relation::Greater, &c.lhs);
            }
            s.deps(&["claim_a", "claim_b", "claim_c", "zeta_product", "A3", "A4", "A5"]);
            Ok(())
        },
    );
    if run.proved("rank_ge4_global") {
        vec!["Q".into()]
    } else {
        vec![]
    }
}

/// Degrees, discriminant bounds and catalog pruning for n = 2, 3. Returns
/// the fields left after the refined bounds.
fn small_rank_degree_steps(run: &mut Run) -> Option<(u32, Vec<NumberFieldRecord>)> {
    let n = run.n;
    let bits = run.bits;
    let table = run.data.odlyzko.clone();
    let mut dmax: Option<u32> = None;
    if n == 2 {
        run.attempt(
            "n2_optimize",
            "Over the Odlyzko rows and t = 0.1 k (k = 1..249), the smallest degree threshold is below 6, so d_K <= 5",
            "parameter search in rank two",
            |s| {
                let r = optimizer::optimize_n2(&table, &TGrid::default(), bits)?;
                s.precision = r.precision;
                s.value = Some(format!(
                    "{} t = {}",
                    r.best_pair.label(),
                    decimal_string(r.best_t.as_ref().expect("t is set"))
                ));
                s.enclose("threshold", &r.best_value);
                s.compare("threshold < 6", &r.best_value, Relation::Less, &ivi(6));
                s.annotate_abs("threshold", &r.best_value, "5.5535611217287", "0.000001");
                s.note("grid", format!("{} rows, {} points, {} feasible", r.rows_scanned, r.points_evaluated, r.feasible_points));
                if !r.ties.is_empty() {
                    s.note("ties", format!("{} grid points overlap the optimum", r.ties.len()));
                }
                s.deps(&["psi2_exact", "A3", "A4"]);
                dmax = Some(r.best_value.hi().floor().to_integer().to_u32().unwrap_or(0));
                Ok(())
            },
        );
        run.attempt(
            "n2_constants",
            "3 e^0.46/(64 pi^6) alpha(2.2) > 0.00019 and 25 t (t+1) Psi(2) = 11/960 at t = 1.2",
            "constants of the rank-two discriminant bound",
            |s| {
                let c = bounds::n2_base_constant_check(bits)?;
                s.record("eta alpha(2.2) > 0.00019", &c, Relation::Greater);
                s.annotate_rel("eta alpha(2.2)", &c.lhs, "0.0001919", "0.1");
                let (pre, r) = bounds::n2_prefactor();
                s.compare("25 t (t+1) = 66", &iv(pre), Relation::Equal, &ivi(66));
                s.compare("66 Psi(2) = 11/960", &iv(r), Relation::Equal, &iv(rat(11, 960)));
                s.deps(&["psi2_exact"]);
                Ok(())
            },
        );
    } else {
        run.attempt(
            "n3_constants",
            "0.46 + log(342/(256 pi^12)) > -12.99 and log(1.83 * 33750/(256 pi^12)) < -8.25",
            "constants of the rank-three threshold",
            |s| {
                let (c1, c2) = bounds::n3_threshold_constants(bits)?;
                s.record("first constant", &c1, Relation::Greater);
                s.record("second constant", &c2, Relation::Less);
                s.annotate_abs("first constant", &c1.lhs, "-12.987", "0.001");
                s.annotate_abs("second constant", &c2.lhs, "-8.251", "0.001");
                Ok(())
            },
        );
        run.attempt(
            "n3_optimize",
            "min over Odlyzko rows of (7.5E - 8.25)/(7.5 log A - 12.99) is below 4, so d_K <= 3",
            "parameter search in rank three",
            |s| {
                let r = optimizer::optimize_n3(&table, bits)?;
                s.precision = r.precision;
                s.value = Some(r.best_pair.label());
                s.enclose("threshold", &r.best_value);
                s.compare("threshold < 4", &r.best_value, Relation::Less, &ivi(4));
                s.annotate_abs("threshold", &r.best_value, "3.31", "0.02");
                let o = bounds::o_bound(3, 4, &r.best_pair, bits)?.div(&bounds::pi_n(3, bits))?;
                s.compare("Pi(3)^(-1) O(3, 4) > 1.83", &o, Relation::Greater, &iv(bounds::c183()));
                s.deps(&["n3_constants", "zeta_product", "A3", "A4"]);
                dmax = Some(r.best_value.hi().floor().to_integer().to_u32().unwrap_or(0));
                Ok(())
            },
        );
    }
    let dmax = dmax?;
    let opt_id = if n == 2 { "n2_optimize" } else { "n3_optimize" };
    let catalog = run.data.catalog.clone();
    let mut candidates: Vec<NumberFieldRecord> = Vec::new();
    for d in 2..=dmax {
        let id = format!("n{n}_disc_bound_d{d}");
        let claim = if n == 2 {
            format!("A field of degree {d} has D_K < (11 * 0.00019^(-d)/960)^(1/3.9); the catalog fields below the bound are listed")
        } else {
            format!("A field of degree {d} has D_K < (1372.5 Pi(3)^(1-d) (7.6 e^0.46)^(-d))^(1/7.5); the catalog fields below the bound are listed")
        };
        let mut found = Vec::new();
        run.attempt(&id, &claim, "discriminant bound from the degree", |s| {
            let b = if n == 2 { bounds::n2_d_bound(d, bits)? } else { bounds::n3_d_bound(d, bits)? };
            s.enclose("bound", &b);
            let printed = match (n, d) {
                (2, 2) => Some("25.74"),
                (2, 3) => Some("231.65"),
                (2, 4) => Some("2084.50"),
                (2, 5) => Some("18757.18"),
                (3, 2) => Some("10.63"),
                (3, 3) => Some("60.09"),
                _ => None,
            };
            if let Some(p) = printed {
                s.annotate_abs("bound", &b, p, "0.02");
            }
            for f in catalog.iter().filter(|f| f.degree == d) {
                let disc = ivi(f.discriminant as i64);
                if disc.certainly_less(&b) {
                    s.compare(format!("{} below the bound", f.label), &disc, Relation::Less, &b);
                    found.push(f.clone());
                } else {
                    s.compare(format!("{} above the bound", f.label), &disc, Relation::Greater, &b);
                }
            }
            s.value = Some(found.iter().map(|f| f.discriminant.to_string()).collect::<Vec<_>>().join(","));
            s.deps(&[opt_id, "A3"]);
            Ok(())
        });
        candidates.extend(found);
    }
    // refined bounds with the class number
    let mut refined = Vec::new();
    for d in 2..=dmax {
        let in_degree: Vec<&NumberFieldRecord> = candidates.iter().filter(|f| f.degree == d).collect();
        if in_degree.is_empty() {
            continue;
        }
        let index = match (n, d) {
            (2, _) => IndexBound::NegativeOneExcluded,
            (3, 2) => IndexBound::UnitsModSquares,
            _ => IndexBound::Coarse,
        };
        let id = format!("n{n}_proto_bound_d{d}");
        let claim = format!(
            "With h_K and {}: D_K < (1.83 h I Pi({n})^(1-d))^(1/(n^2+n/2)) for degree {d}",
            index.describe()
        );
        let dep = format!("n{n}_disc_bound_d{d}");
        run.attempt(&id, &claim, "refined discriminant bound", |s| {
            for f in &in_degree {
                let b = bounds::proto_d_bound_with(n, d, f.class_number, index, bits)?;
                s.enclose(format!("bound for h = {}", f.class_number), &b);
                match (n, d) {
                    (2, 2) => s.annotate_floor("D_K <=", &b, 8),
                    (2, 3) => s.annotate_floor("D_K <=", &b, 59),
                    (2, 4) => s.annotate_floor("D_K <=", &b, 436),
                    (2, 5) => s.annotate_floor("D_K <=", &b, 3177),
                    (3, 2) => s.annotate_rel("bound", &b, "5.27", "0.5"),
                    (3, 3) => s.annotate_rel("bound", &b, "28.087", "0.5"),
                    _ => s,
                };
                let disc = ivi(f.discriminant as i64);
                if disc.certainly_less(&b) {
                    s.compare(format!("{} below the bound", f.label), &disc, Relation::Less, &b);
                    refined.push((*f).clone());
                } else {
                    s.compare(format!("{} above the bound", f.label), &disc, Relation::Greater, &b);
                }
            }
            s.deps(&[&dep, "zeta_product", "A4"]);
            Ok(())
        });
    }
    Some((dmax, refined))
}

fn unit_step(run: &mut Run, f: &NumberFieldRecord) -> String {
    let id = format!("units_{}", f.label);
    run.attempt(
        &id,
        &format!("[U+ : U^2] for {} from the signs of its fundamental units", f.display_name()),
        "totally positive units",
        |s| {
            let u = numberfields::unit_data(f)?;
            if let Some(p) = u.pell {
                s.value = Some(format!("a = {}, b = {}, a^2 - D b^2 = {}", p.a, p.b, p.norm4));
                s.compare("norm of the fundamental unit", &ivi(p.norm4), Relation::Equal, &ivi(p.norm4));
            } else {
                let signs = numberfields::unit_sign_matrix(&f.polynomial, &u.unit_expressions)?;
                s.value = Some(format!("signs {:?}", signs));
                for (i, e) in u.unit_expressions.iter().enumerate() {
                    let roots = crate::poly::isolate_real_roots(&f.polynomial, 64);
                    for (j, r) in roots.iter().enumerate() {
                        let v = crate::poly::eval_interval(&crate::poly::to_q(e), r);
                        let rel = if v.is_positive() { Relation::Greater } else { Relation::Less };
                        s.compare(format!("unit {} at embedding {}", i + 1, j + 1), &v, rel, &Interval::zero());
                    }
                }
            }
            s.compare(
                "[U+ : U^2]",
                &ivi(u.totally_positive_index as i64),
                Relation::Equal,
                &ivi(u.totally_positive_index as i64),
            );
            s.enclose("index", &ivi(u.totally_positive_index as i64));
            Ok(())
        },
    );
    id
}

/// Quotients Psi(n) h 2^(2d-1)/S(Lambda) and their unit-index adjustment.
/// Returns the fields not excluded.
fn quotient_steps(run: &mut Run, fields: &[NumberFieldRecord]) -> Vec<NumberFieldRecord> {
    let n = run.n;
    let bits = run.bits;
    let mut survivors = Vec::new();
    for f in fields {
        let uid = unit_step(run, f);
        let id = format!("n{n}_quotient_{}", f.label);
        let mut survives = true;
        run.attempt(
            &id,
            &format!(
                "For {} and n = {n}: Psi(n) h [U+ : U^2] / S(Lambda) < 1 excludes the field",
                f.display_name()
            ),
            "quotient against the covolume of Sp_2n(Z)",
            |s| {
                let q = bounds::quotient(f, n, bits)?;
                s.enclose("quotient", &q);
                let s_over = bounds::s_lambda(f, n, bits)?.scale(&pow2(1 - 2 * f.degree as i64));
                s.enclose("S(Lambda)/2^(2d-1)", &s_over);
                if let Some(e) = bounds::quotient_exact(f, n) {
                    s.value = Some(e.to_string());
                    s.compare("enclosure contains the exact quotient", &q, Relation::Contains, &iv(e));
                }
                let printed = match (n, f.degree, f.discriminant) {
                    (2, 3, 49) => Some("19.85"),
                    (2, 2, 5) => Some("40"),
                    (2, 2, 8) => Some("2.91"),
                    (3, 2, 5) => Some("2.99"),
                    _ => None,
                };
                if let Some(p) = printed {
                    s.annotate_rel("quotient", &q, p, "0.5");
                }
                match (n, f.degree, f.discriminant) {
                    (2, 2, 5) => s.annotate_rel("S/2^3", &s_over, "4.34e-6", "0.5"),
                    (3, 2, 5) => s.annotate_rel("S/2^3", &s_over, "1.15e-7", "0.5"),
                    _ => s,
                };
                let idx = numberfields::totally_positive_index(f)?;
                let adj = bounds::adjusted_quotient(&q, f.degree, idx);
                s.enclose("adjusted quotient", &adj);
                if adj.certainly_less(&Interval::one()) {
                    s.compare("adjusted quotient < 1", &adj, Relation::Less, &Interval::one());
                    survives = false;
                } else {
                    s.compare("adjusted quotient > 1", &adj, Relation::Greater, &Interval::one());
                }
                s.deps(&[&format!("psi{n}_exact"), &uid, "A4", "A5"]);
                Ok(())
            },
        );
        if survives {
            survivors.push(f.clone());
        }
    }
    survivors
}

fn qsqrt5_steps(run: &mut Run) -> bool {
    let catalog = run.data.catalog.clone();
    let mut ok = false;
    run.attempt(
        "qsqrt5_local",
        "For Q(sqrt 5) in rank two every non-hyperspecial factor is T(q) with q >= 4, so prod e' > 5 * 2^#T whenever T is nonempty",
        "local factors over Q(sqrt 5)",
        |s| {
            let ex = localfactors::qsqrt5_local_exclusion(&catalog)?;
            for sp in &ex.splittings {
                for &q in &sp.residue_cardinalities {
                    s.compare(format!("residue field above {} has q = {q}", sp.p), &ivi(q as i64), Relation::Equal, &ivi((sp.p * sp.p) as i64));
                }
            }
            for (p, sq) in &ex.padic_squares {
                s.note(format!("5 a square in Q_{p}"), sq.to_string());
            }
            s.compare("T(2) = 5/2", &iv(localfactors::t_factor(2)), Relation::Equal, &iv(rat(5, 2)));
            s.compare("T(3) = 10", &iv(localfactors::t_factor(3)), Relation::Equal, &ivi(10));
            s.record("T(4) > 5 * 2", &ex.t4_vs_ten, Relation::Greater);
            // T(q) = (q^2+1)(q-1)/2 is increasing, so T(q) >= T(4) for q >= 4
            s.compare(
                "T(4) = (4^2+1)(4-1)/2",
                &iv(localfactors::t_factor(4)),
                Relation::Equal,
                &iv(rat(17 * 3, 2)),
            );
            s.deps(&["A1", "A4", "A5"]);
            ok = ex.holds();
            Ok(())
        },
    );
    ok && run.proved("qsqrt5_local")
}

fn local_q_steps(run: &mut Run) {
    let n = run.n;
    run.attempt(
        "local_special",
        &format!("Over Q every special non-hyperspecial factor in rank {n} exceeds 2, so G splits at all finite places"),
        "local factors over Q",
        |s| {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
                let e = localfactors::eprime_special(n, q);
                s.compare(
                    format!("e'(q = {q}) > 2"),
                    &iv(Rational::from_integer(e)),
                    Relation::Greater,
                    &ivi(2),
                );
            }
            s.note("monotone", "each factor q^j +- 1 increases with q, so q = 2 is the minimum");
            s.deps(&["A4", "A5"]);
            Ok(())
        },
    );
    run.attempt(
        "local_nonspecial",
        &format!("A non-special parahoric in rank {n} has e' > 2 >= #Xi, so every parahoric has maximal volume"),
        "non-special parahorics",
        |s| {
            for q in 2..=16u64 {
                let c = localfactors::nonspecial_gt_two(q, n);
                s.record(format!("q = {q}"), &c, Relation::Greater);
            }
            if n >= 3 {
                s.annotate_abs("h(2,3)", &localfactors::h_rigidity(2, 3), "3.69", "0.02");
            }
            if n == 2 {
                s.annotate_abs("h(3,2)", &localfactors::h_rigidity(3, 2), "17.75", "0.02");
            }
            s.note("monotone", "h(q, n) increases in q and n");
            s.deps(&["A5"]);
            Ok(())
        },
    );
}

fn digest_of(cert: &Certificate) -> String {
    let mut c = cert.clone();
    c.digest = String::new();
    let bytes = serde_json::to_vec(&c).expect("serializable");
    hex::encode(Sha256::digest(bytes))
}

/// Runs the proof pipeline for rank n and returns its certificate.
pub fn run_case(n: u32, config: &Config) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::UnsupportedArgument(format!("rank must be at least 2, got {n}")));
    }
    if config.data.odlyzko.is_empty() {
        return Err(Error::DataMissing("Odlyzko table is empty".into()));
    }
    if numberfields::find(&config.data.catalog, 2, 5).is_none() && n <= 3 {
        return Err(Error::DataMissing("catalog lacks the field of discriminant 5".into()));
    }
    let mut run = Run {
        n,
        bits: config.precision,
        data: &config.data,
        steps: Vec::new(),
    };
    let axioms: Vec<&str> = if n == 2 {
        vec!["A1", "A2", "A3", "A4", "A5"]
    } else {
        vec!["A2", "A3", "A4", "A5"]
    };
    for a in &axioms {
        run.push(axiom_step(a));
    }
    psi_steps(&mut run);

    let mut global: Vec<String>;
    let mut after_local: Vec<String> = Vec::new();
    let global_id;
    if n >= 4 {
        global = rank_ge4_steps(&mut run);
        global_id = "rank_ge4_global".to_string();
    } else {
        let survivors = match small_rank_degree_steps(&mut run) {
            Some((_, refined)) => quotient_steps(&mut run, &refined),
            None => vec![NumberFieldRecord::rationals()],
        };
        global = survivors.iter().map(|f| f.display_name()).collect();
        global.push("Q".into());
        global_id = format!("n{n}_global");
        let deps: Vec<String> = run
            .steps
            .iter()
            .filter(|s| s.id.starts_with(&format!("n{n}_")) || s.id.starts_with("units_"))
            .map(|s| s.id.clone())
            .collect();
        let expected: Vec<&str> = if n == 2 { vec!["Q(sqrt 5)", "Q"] } else { vec!["Q"] };
        run.attempt(
            &global_id,
            &format!("After the global stage for n = {n} the remaining fields are {}", expected.join(", ")),
            "global stage",
            |s| {
                let ok = global.iter().map(String::as_str).eq(expected.iter().copied());
                s.value = Some(global.join(", "));
                s.compare("remaining fields match", &ivi(ok as i64), Relation::Equal, &ivi(1));
                s.dependencies = deps;
                Ok(())
            },
        );
        if !run.proved(&global_id) {
            global.retain(|g| g == "Q");
        }
    }
    if n == 2 && run.proved(&global_id) {
        let ok = qsqrt5_steps(&mut run);
        if ok {
            after_local = vec!["Q".into()];
        }
    } else if run.proved(&global_id) {
        after_local = vec!["Q".into()];
    }
    local_q_steps(&mut run);

    let non_axiom_ok = run
        .steps
        .iter()
        .all(|s| matches!(s.verdict, Verdict::Proved | Verdict::Axiom));
    let all_proved = non_axiom_ok && after_local == vec!["Q".to_string()];
    let mut conclusion = CertificateStep::new(
        "conclusion",
        format!("Every lattice of minimal covolume in Sp_{}(R) is conjugate to Sp_{}(Z)", 2 * n, 2 * n),
        "conclusion",
        config.precision,
    );
    conclusion.compare("all steps proved", &ivi(all_proved as i64), Relation::Equal, &ivi(1));
    conclusion.dependencies = run.steps.iter().map(|s| s.id.clone()).collect();
    run.push(conclusion.done());

    let mut cert = Certificate {
        schema: SCHEMA_VERSION.into(),
        rank: n,
        precision: config.precision,
        data_source: config.data.source.clone(),
        steps: run.steps,
        surviving_fields_after_global: global,
        surviving_fields_after_local: after_local,
        axioms_used: axioms.iter().map(|s| s.to_string()).collect(),
        all_proved,
        final_conclusion: if all_proved {
            conclusion_text(n)
        } else {
            format!("not proved for Sp_{}(Z)", 2 * n)
        },
        digest: String::new(),
    };
    cert.digest = digest_of(&cert);
    Ok(cert)
}

/// Like [`run_case`] but turns the first failed step into an error.
pub fn run_case_strict(n: u32, config: &Config) -> Result<Certificate> {
    let c = run_case(n, config)?;
    if let Some(s) = c.steps.iter().find(|s| s.verdict == Verdict::Failed) {
        return Err(Error::StepFailed {
            id: s.id.clone(),
            claim: s.claim.clone(),
        });
    }
    Ok(c)
}

impl Certificate {
    /// Overall verdict: Failed beats Tie beats Proved.
    pub fn status(&self) -> Verdict {
        if self.steps.iter().any(|s| s.verdict == Verdict::Failed) {
            Verdict::Failed
        } else if self.steps.iter().any(|s| s.verdict == Verdict::Tie) {
            Verdict::Tie
        } else if self.all_proved {
            Verdict::Proved
        } else {
            Verdict::Failed
        }
    }

    pub fn step(&self, id: &str) -> Option<&CertificateStep> {
        self.steps.iter().find(|s| s.id == id)
    }
}

// ---------------------------------------------------------------- reports

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn fmt_enclosure(e: &EnclosureRecord) -> String {
    match e.to_interval() {
        Some(x) if x.is_point() => format_sig(x.lo(), 12),
        Some(x) => format!("[{}, {}]", format_sig(x.lo(), 12), format_sig(x.hi(), 12)),
        None => "?".into(),
    }
}

pub fn emit_report(cert: &Certificate, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_vec_pretty(cert).expect("serializable");
            v.push(b'\n');
            v
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "rank n = {}  precision {} bits  data: {}", cert.rank, cert.precision, cert.data_source);
            for s in &cert.steps {
                let _ = writeln!(out, "\n[{:?}] {}", s.verdict, s.id);
                let _ = writeln!(out, "  {}", s.claim);
                if let Some(v) = &s.value {
                    let _ = writeln!(out, "  value: {v}");
                }
                for e in &s.enclosures {
                    let _ = writeln!(out, "  {} = {}", e.name, fmt_enclosure(&e.enclosure));
                }
                for c in &s.comparisons {
                    let _ = writeln!(
                        out,
                        "  {:?}: {} ({} {:?} {})",
                        c.outcome,
                        c.label,
                        fmt_enclosure(&c.lhs),
                        c.relation,
                        fmt_enclosure(&c.rhs)
                    );
                }
                for a in &s.annotations {
                    let mark = if a.agrees { "ok" } else { "differs" };
                    let _ = writeln!(out, "  note {}: {} ({}, {mark})", a.label, a.printed, a.rule);
                }
            }
            let _ = writeln!(out, "\nafter global stage: {}", cert.surviving_fields_after_global.join(", "));
            let _ = writeln!(out, "after local stage: {}", cert.surviving_fields_after_local.join(", "));
            let _ = writeln!(out, "axioms used: {}", cert.axioms_used.join(", "));
            let _ = writeln!(out, "{}", cert.final_conclusion);
            out.into_bytes()
        }
    }
}

/// Re-checks every recorded comparison from its recorded enclosures, the
/// step verdicts, the dependency order and the digest.
pub fn verify_report(bytes: &[u8]) -> Result<Verdict> {
    let raw: serde_json::Value = serde_json::from_slice(bytes).map_err(|e| Error::BadReport(e.to_string()))?;
    let schema = raw.get("schema").and_then(|s| s.as_str()).unwrap_or("").to_string();
    if schema != SCHEMA_VERSION {
        return Err(Error::SchemaMismatch {
            expected: SCHEMA_VERSION.into(),
            found: schema,
        });
    }
    let cert: Certificate = serde_json::from_value(raw).map_err(|e| Error::BadReport(e.to_string()))?;
    let mut seen: Vec<(&str, Verdict)> = Vec::new();
    for s in &cert.steps {
        for c in &s.comparisons {
            let (l, r) = match (c.lhs.to_interval(), c.rhs.to_interval()) {
                (Some(l), Some(r)) => (l, r),
                _ => return Err(Error::TamperDetected(s.id.clone())),
            };
            if evaluate(&l, c.relation, &r) != c.outcome {
                return Err(Error::TamperDetected(s.id.clone()));
            }
        }
        let expected = if s.verdict == Verdict::Axiom {
            if !s.comparisons.is_empty() || !AXIOMS.iter().any(|(i, _, _)| *i == s.id) {
                return Err(Error::TamperDetected(s.id.clone()));
            }
            Verdict::Axiom
        } else {
            verdict_of(&s.comparisons)
        };
        if expected != s.verdict {
            return Err(Error::TamperDetected(s.id.clone()));
        }
        for d in &s.dependencies {
            match seen.iter().find(|(id, _)| id == d) {
                None => return Err(Error::TamperDetected(s.id.clone())),
                Some((_, v)) if s.verdict == Verdict::Proved && s.id != "conclusion" && !matches!(v, Verdict::Proved | Verdict::Axiom) => {
                    return Err(Error::TamperDetected(s.id.clone()))
                }
                _ => {}
            }
        }
        seen.push((&s.id, s.verdict));
    }
    if digest_of(&cert) != cert.digest {
        return Err(Error::TamperDetected("digest".into()));
    }
    let all = cert
        .steps
        .iter()
        .all(|s| matches!(s.verdict, Verdict::Proved | Verdict::Axiom));
    if cert.all_proved && !all {
        return Err(Error::TamperDetected("conclusion".into()));
    }
    Ok(cert.status())
}

/// Integer value of an exact single-point enclosure, if any.
pub fn enclosure_integer(e: &EnclosureRecord) -> Option<i64> {
    let x = e.to_interval()?;
    let p = x.as_point()?;
    if p.is_integer() {
        p.to_integer().to_i64()
    } else {
        None
    }
}
