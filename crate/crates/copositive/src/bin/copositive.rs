//! Command-line front end: check a tensor document, run the exhaustive
//! enumeration, verify the inequality suite, or sample the sufficient
//! conditions. Exit codes: 0 strictly copositive / clean run, 1 not /
//! findings, 2 indeterminate, 64 input error, 74 unwritable output.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use copositive::criteria::{self, Status};
use copositive::doc::TensorDocument;
use copositive::harness;
use copositive::oracle::{self, OracleStatus, Witness};
use copositive::rational::format_rational;
use copositive::tensor::EvalPoint;

const EXIT_STRICT: u8 = 0;
const EXIT_NOT_STRICT: u8 = 1;
const EXIT_INDETERMINATE: u8 = 2;
const EXIT_INPUT: u8 = 64;
const EXIT_OUTPUT: u8 = 74;

#[derive(Parser)]
#[command(name = "copositive", version, about = "strict copositivity certification for cubic forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Analytic,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Args)]
struct Common {
    /// grid denominator for the exact search
    #[arg(long, default_value_t = 84)]
    denominator: u32,
    /// subdivision depth limit
    #[arg(long, default_value_t = 30)]
    max_depth: u32,
    /// tolerance for floating-point sign calls
    #[arg(long, default_value_t = 1e-12)]
    epsilon: f64,
    /// text for humans, records for line-delimited JSON
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strict copositivity of one tensor document
    Check {
        /// JSON document path; omit or use "-" for standard input
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-validate the {-1,0,1} criteria over all 59049 tensors
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Verify the ternary cubic inequality table (printed and corrected)
    Inequalities {
        #[command(flatten)]
        common: Common,
    },
    /// Randomized soundness sampling of the sufficient conditions
    Sample {
        /// samples per corollary
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(common: &Common, text: String) -> Result<(), u8> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_OUTPUT
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn point_json(p: &EvalPoint) -> Value {
    Value::Array(
        p.coords()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "point": point_json(&w.point),
        "value": format_rational(&w.value),
    })
}

fn read_document(input: &Option<PathBuf>) -> Result<TensorDocument, u8> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| {
            eprintln!("error: cannot read {}: {e}", p.display());
            EXIT_INPUT
        })?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| {
                eprintln!("error: cannot read standard input: {e}");
                EXIT_INPUT
            })?;
            buf
        }
    };
    TensorDocument::from_str(&text).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    })
}

struct CheckOutcome {
    status: String,
    rule: Option<String>,
    role: Option<String>,
    witness: Option<Witness>,
    note: Option<String>,
    exit: u8,
}

fn check_dim3(doc: &TensorDocument, method: Method, common: &Common) -> Result<CheckOutcome, u8> {
    let t = doc.to_tensor3().map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    })?;
    let analytic = match method {
        Method::Oracle => None,
        _ => Some(criteria::classify(&t, common.epsilon)),
    };
    if let Some(v) = analytic {
        match v.status {
            Status::StrictlyCopositive | Status::SufficientConditionHolds => {
                let (min, point) = oracle::grid_min(&t, common.denominator);
                return Ok(CheckOutcome {
                    status: Status::StrictlyCopositive.to_string(),
                    rule: v.rule.map(|r| r.to_string()),
                    role: v.role.map(|r| r.to_string()),
                    witness: None,
                    note: Some(format!(
                        "simplex min {} at {} (grid denominator {})",
                        format_rational(&min),
                        point,
                        common.denominator
                    )),
                    exit: EXIT_STRICT,
                });
            }
            Status::NotStrictlyCopositive => {
                return Ok(CheckOutcome {
                    status: v.status.to_string(),
                    rule: v.rule.map(|r| r.to_string()),
                    role: None,
                    witness: v.witness,
                    note: None,
                    exit: EXIT_NOT_STRICT,
                });
            }
            Status::Inapplicable => {
                if matches!(method, Method::Analytic) {
                    return Ok(CheckOutcome {
                        status: "indeterminate".to_string(),
                        rule: None,
                        role: None,
                        witness: None,
                        note: Some("no analytic criterion applies".to_string()),
                        exit: EXIT_INDETERMINATE,
                    });
                }
            }
        }
    }
    let r = oracle::oracle_verdict(&t, common.denominator, common.max_depth);
    let (status, exit) = match r.status {
        OracleStatus::PositiveCertified => ("strictly-copositive".to_string(), EXIT_STRICT),
        OracleStatus::NonpositiveWitness => ("not-strictly-copositive".to_string(), EXIT_NOT_STRICT),
        OracleStatus::Inconclusive => ("indeterminate".to_string(), EXIT_INDETERMINATE),
    };
    let note = match (&r.certificate, &r.min_estimate) {
        (Some(c), _) => Some(format!(
            "subdivision certificate: {} leaves, depth {}",
            c.leaf_count, c.max_depth
        )),
        (None, Some(m)) => Some(format!("best value found {}", format_rational(m))),
        _ => None,
    };
    Ok(CheckOutcome {
        status,
        rule: Some("oracle".to_string()),
        role: None,
        witness: r.witness,
        note,
        exit,
    })
}

fn check_dim2(doc: &TensorDocument, method: Method, common: &Common) -> Result<CheckOutcome, u8> {
    let t = doc.to_tensor2().map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    })?;
    let outcome = match method {
        Method::Oracle => {
            let r = oracle::oracle_verdict2(&t, common.denominator, common.max_depth);
            let (status, exit) = match r.status {
                OracleStatus::PositiveCertified => ("strictly-copositive", EXIT_STRICT),
                OracleStatus::NonpositiveWitness => ("not-strictly-copositive", EXIT_NOT_STRICT),
                OracleStatus::Inconclusive => ("indeterminate", EXIT_INDETERMINATE),
            };
            CheckOutcome {
                status: status.to_string(),
                rule: Some("oracle".to_string()),
                role: None,
                witness: r.witness,
                note: None,
                exit,
            }
        }
        _ => {
            let v = criteria::check_dim2(&t, true);
            let exit = if v.status == Status::StrictlyCopositive {
                EXIT_STRICT
            } else {
                EXIT_NOT_STRICT
            };
            CheckOutcome {
                status: v.status.to_string(),
                rule: v.rule.map(|r| r.to_string()),
                role: None,
                witness: v.witness,
                note: Some(format!(
                    "discriminant {}",
                    format_rational(&criteria::dim2_discriminant(&t))
                )),
                exit,
            }
        }
    };
    Ok(outcome)
}

fn cmd_check(input: Option<PathBuf>, method: Method, common: Common) -> Result<u8, u8> {
    let doc = read_document(&input)?;
    let outcome = match doc.dim {
        2 => check_dim2(&doc, method, &common)?,
        _ => check_dim3(&doc, method, &common)?,
    };
    let text = match common.format {
        Format::Text => {
            let mut s = format!("status: {}\n", outcome.status);
            if let Some(rule) = &outcome.rule {
                s.push_str(&format!("rule: {rule}\n"));
            }
            if let Some(role) = &outcome.role {
                s.push_str(&format!("roles: {role}\n"));
            }
            if let Some(w) = &outcome.witness {
                s.push_str(&format!(
                    "witness: {} value {}\n",
                    w.point,
                    format_rational(&w.value)
                ));
            }
            if let Some(note) = &outcome.note {
                s.push_str(&format!("note: {note}\n"));
            }
            s
        }
        Format::Records => {
            let mut m = Map::new();
            m.insert("record".into(), "check".into());
            m.insert("status".into(), outcome.status.clone().into());
            m.insert(
                "rule".into(),
                outcome.rule.clone().map(Value::from).unwrap_or(Value::Null),
            );
            m.insert(
                "roles".into(),
                outcome.role.clone().map(Value::from).unwrap_or(Value::Null),
            );
            m.insert(
                "witness".into(),
                outcome
                    .witness
                    .as_ref()
                    .map(witness_json)
                    .unwrap_or(Value::Null),
            );
            m.insert(
                "note".into(),
                outcome.note.clone().map(Value::from).unwrap_or(Value::Null),
            );
            format!("{}\n", Value::Object(m))
        }
    };
    emit(&common, text)?;
    Ok(outcome.exit)
}

fn cmd_enumerate(common: Common) -> Result<u8, u8> {
    let report = harness::enumerate_pm10(common.denominator, common.max_depth);
    let text = match common.format {
        Format::Text => {
            let mut s = format!(
                "enumerated {} tensors, {} applicable ({} ms)\n",
                report.total, report.applicable, report.wall_time_ms
            );
            for r in &report.rules {
                s.push_str(&format!(
                    "  {:<14} applicable {:>6}  strict {:>6}  not strict {:>6}\n",
                    r.rule, r.applicable, r.strict, r.not_strict
                ));
            }
            s.push_str(&format!(
                "disagreements: {}\ninconclusive: {}\noverlap agreements: {}\norbit closed: {}\n",
                report.disagreements.len(),
                report.inconclusive,
                report.overlap_agreements,
                report.orbit_closed
            ));
            for d in &report.disagreements {
                s.push_str(&format!(
                    "  DISAGREE {:?} {} analytic={} oracle={}\n",
                    d.entries, d.rule, d.analytic, d.oracle
                ));
            }
            s
        }
        Format::Records => format!("{}\n", serde_json::to_string(&report).unwrap()),
    };
    emit(&common, text)?;
    Ok(if report.clean() { EXIT_STRICT } else { EXIT_NOT_STRICT })
}

fn cmd_inequalities(common: Common) -> Result<u8, u8> {
    let cases = harness::verify_inequalities(common.denominator, common.max_depth);
    let all_corrected_ok = cases
        .iter()
        .filter(|c| c.reading == harness::Reading::Corrected)
        .all(|c| c.verified);
    let text = match common.format {
        Format::Text => {
            let mut s = String::new();
            for c in &cases {
                s.push_str(&harness::format_case_row(c));
                s.push('\n');
            }
            s.push_str(&format!(
                "corrected readings all verified: {all_corrected_ok}\n"
            ));
            s
        }
        Format::Records => {
            let mut s = String::new();
            for c in &cases {
                let mut m = Map::new();
                m.insert("record".into(), "inequality".into());
                m.insert("label".into(), c.label.clone().into());
                m.insert("case".into(), (c.case as u64).into());
                m.insert("reading".into(), c.reading.to_string().into());
                m.insert(
                    "entries".into(),
                    Value::Array(
                        c.tensor
                            .entries()
                            .iter()
                            .map(|v| Value::String(format_rational(v)))
                            .collect(),
                    ),
                );
                m.insert("verified".into(), c.verified.into());
                m.insert(
                    "min_estimate".into(),
                    c.result
                        .min_estimate
                        .as_ref()
                        .map(|v| Value::String(format_rational(v)))
                        .unwrap_or(Value::Null),
                );
                m.insert(
                    "witness".into(),
                    c.result
                        .witness
                        .as_ref()
                        .map(witness_json)
                        .unwrap_or(Value::Null),
                );
                s.push_str(&format!("{}\n", Value::Object(m)));
            }
            s
        }
    };
    emit(&common, text)?;
    Ok(if all_corrected_ok { EXIT_STRICT } else { EXIT_NOT_STRICT })
}

fn cmd_sample(count: u64, seed: u64, common: Common) -> Result<u8, u8> {
    let report = harness::sample_sufficiency(count, seed, common.denominator, common.max_depth);
    let text = match common.format {
        Format::Text => {
            let mut s = format!("seed {seed}, {count} samples per corollary\n");
            for c in &report.corollaries {
                s.push_str(&format!(
                    "  {:<14} recognized {:>5}/{:<5} certified {:>5} nonpositive {:>3} inconclusive {:>3}\n",
                    c.rule, c.recognized, c.samples, c.positive_certified, c.nonpositive, c.inconclusive
                ));
            }
            s.push_str(&format!("clean: {}\n", report.clean()));
            s
        }
        Format::Records => format!("{}\n", serde_json::to_string(&report).unwrap()),
    };
    emit(&common, text)?;
    Ok(if report.clean() { EXIT_STRICT } else { EXIT_NOT_STRICT })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            input,
            method,
            common,
        } => cmd_check(input, method, common),
        Command::Enumerate { common } => cmd_enumerate(common),
        Command::Inequalities { common } => cmd_inequalities(common),
        Command::Sample {
            count,
            seed,
            common,
        } => cmd_sample(count, seed, common),
    };
    match result {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
