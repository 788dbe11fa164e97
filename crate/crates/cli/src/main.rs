//! Command line front end for the certification engine.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use covcert_core::certifier::{self, Certificate, Config, DataSet, Format, Verdict};
use covcert_core::numberfields;
use covcert_core::optimizer::{self, TGrid};
use covcert_core::rigor::{decimal_string, format_sig};
use covcert_core::{Error, Interval, DEFAULT_PRECISION};

const EXIT_FAILED: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_TIE: u8 = 4;

#[derive(Parser)]
#[command(name = "covcert", version, about = "Certify minimal covolume of Sp_2n(Z) with interval arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    N2,
    N3,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldOp {
    Zeta,
    Units,
    Splitting,
}

#[derive(clap::Args)]
struct DataArgs {
    /// Odlyzko table (CSV with columns A,E)
    #[arg(long)]
    odlyzko: Option<PathBuf>,
    /// Number field catalog
    #[arg(long)]
    fields: Option<PathBuf>,
    /// Working precision in bits
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Run the proof pipeline and print the certificate
    Prove {
        /// Rank n of Sp_2n
        #[arg(long, required_unless_present = "all")]
        n: Option<u32>,
        /// Every rank from 2 to 8; JSON output is then an array
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Run one of the parameter searches on its own
    Optimize {
        #[arg(long, value_enum)]
        case: Case,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Re-check a JSON report without recomputing enclosures
    Verify { report: PathBuf },
    /// Inspect a catalog field by label, e.g. 2.2.5.1
    Field {
        label: String,
        #[arg(long, value_enum)]
        op: FieldOp,
        #[arg(long)]
        fields: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        precision: u32,
    },
}

fn code_for(e: &Error) -> u8 {
    match e {
        Error::DataMissing(_) | Error::ChecksumMismatch(_) => EXIT_DATA,
        _ => EXIT_FAILED,
    }
}

fn code_for_verdict(v: Verdict) -> u8 {
    match v {
        Verdict::Proved | Verdict::Axiom => 0,
        Verdict::Tie => EXIT_TIE,
        Verdict::Failed => EXIT_FAILED,
    }
}

fn show(x: &Interval) -> String {
    format!("[{}, {}]", format_sig(x.lo(), 15), format_sig(x.hi(), 15))
}

fn prove(ns: Vec<u32>, format: OutFormat, data: DataArgs) -> Result<u8, Error> {
    let config = Config {
        precision: data.precision,
        data: DataSet::resolve(data.odlyzko.as_deref(), data.fields.as_deref())?,
    };
    let certs: Vec<Certificate> = ns.iter().map(|&n| certifier::run_case(n, &config)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    match format {
        OutFormat::Json if certs.len() == 1 => out = certifier::emit_report(&certs[0], Format::Json),
        OutFormat::Json => {
            out = serde_json::to_vec_pretty(&certs).expect("serializable");
            out.push(b'\n');
        }
        OutFormat::Text => {
            for c in &certs {
                out.extend(certifier::emit_report(c, Format::Text));
                out.push(b'\n');
            }
        }
    }
    use std::io::Write;
    std::io::stdout().write_all(&out).map_err(|e| Error::BadReport(e.to_string()))?;
    let worst = certs.iter().map(|c| code_for_verdict(c.status())).max().unwrap_or(0);
    for c in &certs {
        if let Some(s) = c.steps.iter().find(|s| s.verdict != Verdict::Proved && s.verdict != Verdict::Axiom) {
            eprintln!("rank {}: step {} is {:?}: {}", c.rank, s.id, s.verdict, s.claim);
        }
    }
    Ok(worst)
}

fn optimize(case: Case, data: DataArgs) -> Result<u8, Error> {
    let ds = DataSet::resolve(data.odlyzko.as_deref(), data.fields.as_deref())?;
    let r = match case {
        Case::N2 => optimizer::optimize_n2(&ds.odlyzko, &TGrid::default(), data.precision)?,
        Case::N3 => optimizer::optimize_n3(&ds.odlyzko, data.precision)?,
    };
    println!("minimum   {}", show(&r.best_value));
    println!("row       {}", r.best_pair.label());
    if let Some(t) = &r.best_t {
        println!("t         {}", decimal_string(t));
    }
    println!("rows      {}", r.rows_scanned);
    println!("points    {} ({} feasible)", r.points_evaluated, r.feasible_points);
    println!("precision {} bits", r.precision);
    for c in &r.ties {
        println!("tie       {} {}", c.pair.label(), show(&c.value));
    }
    Ok(if r.ties.is_empty() { 0 } else { EXIT_TIE })
}

fn verify(path: PathBuf) -> Result<u8, Error> {
    let bytes = std::fs::read(&path).map_err(|e| Error::DataMissing(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_slice(&bytes).map_err(|e| Error::BadReport(e.to_string()))?;
    let reports = match value {
        serde_json::Value::Array(items) => items,
        v => vec![v],
    };
    let mut worst = 0;
    for r in reports {
        let rank = r.get("rank").cloned().unwrap_or_default();
        let v = certifier::verify_report(&serde_json::to_vec(&r).expect("serializable"))?;
        println!("rank {rank}: {v:?}");
        worst = worst.max(code_for_verdict(v));
    }
    Ok(worst)
}

fn field(label: &str, op: FieldOp, fields: Option<PathBuf>, bits: u32) -> Result<u8, Error> {
    let ds = DataSet::resolve(None, fields.as_deref())?;
    let f = ds
        .catalog
        .iter()
        .find(|f| f.label == label)
        .ok_or_else(|| Error::UnsupportedField(label.to_string()))?;
    println!("{} ({}), degree {}, D = {}, h = {}", f.label, f.display_name(), f.degree, f.discriminant, f.class_number);
    match op {
        FieldOp::Zeta => {
            for s in [2u32, 4, 6] {
                let z = numberfields::dedekind_zeta_enclosure(f, s, bits)?;
                println!("zeta_K({s}) = {}", show(&z));
            }
        }
        FieldOp::Units => {
            let u = numberfields::unit_data(f)?;
            if let Some(p) = u.pell {
                println!("fundamental unit (a + b sqrt D)/2 with a = {}, b = {}, a^2 - D b^2 = {}", p.a, p.b, p.norm4);
            }
            for e in &u.unit_expressions {
                println!("unit {:?}", e);
            }
            println!("[U+ : U^2] = {}", u.totally_positive_index);
        }
        FieldOp::Splitting => {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let s = numberfields::splitting_type(f, p)?;
                println!("p = {p}: {:?}, (e, f) = {:?}, q = {:?}", s.kind, s.primes, s.residue_cardinalities);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Prove { n, all, format, data } => {
            let ns = if all { (2..=8).collect() } else { vec![n.expect("clap requires n")] };
            prove(ns, format, data)
        }
        Command::Optimize { case, data } => optimize(case, data),
        Command::Verify { report } => verify(report),
        Command::Field { label, op, fields, precision } => field(&label, op, fields, precision),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(code_for(&e))
        }
    }
}
