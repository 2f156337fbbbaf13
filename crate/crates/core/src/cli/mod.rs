//! Command line front end. `run` does all the work and returns the JSON
//! report with the exit code, so the binary only prints.

pub mod parse;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

pub use parse::{parse_coeffs, parse_poly};

use crate::budget::Budgets;
use crate::case::CaseLabel;
use crate::elliptic::{classify_from_j, family, psi3_factored, specialize};
use crate::error::{Error, Result};
use crate::exactmath::rational::parse_rational;
use crate::exactmath::{factor_small, Rational, UniPoly};
use crate::json::PolyJson;
use crate::quadforms::ObstructionReport;
use crate::quartic::{classify, validate, GaloisCase, ValidatedQuartic};
use crate::solver::{self, SolutionRecord, Witness};
use crate::{gl2f3, qexp};

#[derive(Debug, Parser)]
#[command(name = "torsion3", version, about = "Embedding problems for quartics with discriminant -3 and the elliptic curves solving them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Pollard rho iterations allowed per integer factorization.
    #[arg(long, global = true, env = "TORSION3_FACTOR_BUDGET", default_value_t = Budgets::DEFAULT_FACTOR)]
    pub factor_budget: u64,
    /// Height bound for conic point searches.
    #[arg(long, global = true, env = "TORSION3_HEIGHT_BUDGET", default_value_t = Budgets::DEFAULT_HEIGHT)]
    pub height_budget: u64,
    /// Retries for evenization and skipped degenerate parameters.
    #[arg(long, global = true, env = "TORSION3_RETRY_BUDGET", default_value_t = Budgets::DEFAULT_RETRY)]
    pub retry_budget: u32,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Include wall-clock time in the report (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Polynomial in x, e.g. "x^4+2*x^2-12".
    #[arg(long)]
    pub poly: Option<String>,
    /// Degree-descending coefficients, e.g. "1,0,2,0,-12".
    #[arg(long)]
    pub coeffs: Option<String>,
}

impl PolyInput {
    pub fn parse(&self) -> Result<UniPoly> {
        match (&self.poly, &self.coeffs) {
            (Some(p), _) => parse_poly(p),
            (_, Some(c)) => parse_coeffs(c),
            _ => Err(Error::InvalidInput("give --poly or --coeffs".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a quartic and classify its Galois group.
    Classify(PolyInput),
    /// Which families a j-invariant belongs to.
    ClassifyJ {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
    },
    /// The Hilbert symbol deciding solvability.
    Obstruction(PolyInput),
    /// Elliptic curves whose 3-division polynomial has the splitting field of f.
    Solve {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// The family member at parameter t.
    Family {
        #[arg(long)]
        case: CaseLabel,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Subgroups G_i of PGL2(F3), their preimages and split flags.
    GroupTable,
    /// Check j = t^3 on q-expansions.
    QexpCheck {
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Replay the records of a saved solve report against f.
    Verify {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        report: PathBuf,
    },
}

impl clap::ValueEnum for CaseLabel {
    fn value_variants<'a>() -> &'a [Self] {
        &CaseLabel::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        let v = clap::builder::PossibleValue::new(self.name());
        Some(if *self == CaseLabel::C2xC2 { v.alias("C2^2") } else { v })
    }
}

#[derive(Debug, Serialize)]
pub struct Status {
    pub code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ValidatedQuartic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<GaloisCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<SolutionRecord>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    pub budgets: Budgets,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    fn new(command: Vec<String>, budgets: Budgets) -> Self {
        Report {
            command,
            input: None,
            case: None,
            obstruction: None,
            records: vec![],
            result: Value::Null,
            budgets,
            status: Status { code: 0, error: None },
            timing_ms: None,
        }
    }
}

pub struct Outcome {
    pub report: Report,
    pub code: i32,
    pub dest: Option<PathBuf>,
}

impl Outcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("report serializes") + "\n"
    }
}

fn classified(f: &UniPoly, b: &Budgets, rep: &mut Report) -> Result<GaloisCase> {
    let v = validate(f, b.factor)?;
    let case = classify(&v, b.factor, b.retry);
    rep.input = Some(v);
    let case = case?;
    rep.case = Some(case.clone());
    Ok(case)
}

fn rational_arg(s: &str) -> Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| Error::InvalidInput(format!("not a rational number: `{s}`")))
}

fn execute(cmd: &Command, b: &Budgets, rep: &mut Report) -> Result<()> {
    match cmd {
        Command::Classify(input) => {
            classified(&input.parse()?, b, rep)?;
        }
        Command::ClassifyJ { j } => {
            rep.result = serde_json::to_value(classify_from_j(&rational_arg(j)?)).expect("serializes");
        }
        Command::Obstruction(input) => {
            let case = classified(&input.parse()?, b, rep)?;
            rep.obstruction = Some(solver::obstruction(&case, b)?);
        }
        Command::Solve { input, count } => {
            let case = classified(&input.parse()?, b, rep)?;
            rep.obstruction = Some(solver::obstruction(&case, b)?);
            rep.records = solver::solve(&case, *count, b)?;
            if rep.records.len() < *count {
                return Err(Error::SearchBudgetExceeded(b.height));
            }
        }
        Command::Family { case, t } => {
            let t = rational_arg(t)?;
            let e = family(*case, &t)?;
            let (c, factors) = psi3_factored(*case);
            let printed: Vec<PolyJson> = factors.iter().map(|p| PolyJson(specialize(p, &t))).collect();
            let fz = factor_small(&e.psi3());
            let factors: Vec<Value> = fz
                .factors
                .iter()
                .map(|(p, m)| json!({ "factor": PolyJson(p.clone()), "multiplicity": m }))
                .collect();
            rep.result = json!({
                "case": case,
                "t": t.to_string(),
                "curve": e,
                "j": e.j_invariant()?.to_string(),
                "psi3": PolyJson(e.psi3()),
                "psi3_closed_form": { "constant": c.to_string(), "factors": printed },
                "psi3_factorization": { "unit": fz.unit.to_string(), "factors": factors },
            });
        }
        Command::GroupTable => {
            rep.result = serde_json::to_value(gl2f3::table()?).expect("serializes");
        }
        Command::QexpCheck { terms } => {
            let top = *terms as i64 - 3;
            let h = qexp::eta_quotient_h(top + 2);
            let t = qexp::hauptmodul_t(&h)?;
            let j = qexp::j_series(top);
            let first = |s: &qexp::LaurentSeries| -> Vec<String> {
                (s.val..s.val + *terms as i64).filter_map(|k| s.coeff(k)).map(|c| c.to_string()).collect()
            };
            let ok = qexp::check_identity(*terms);
            rep.result = json!({
                "terms": terms,
                "h": { "valuation": h.val, "coeffs": first(&h) },
                "t": { "valuation": t.val, "coeffs": first(&t) },
                "j": { "valuation": j.val, "coeffs": first(&j) },
                "identity_holds": ok,
            });
            if !ok {
                return Err(Error::InvalidInput("t^3 and j differ".into()));
            }
        }
        Command::Verify { input, report } => {
            let f = input.parse()?;
            let case = classified(&f, b, rep)?;
            let text = std::fs::read_to_string(report)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", report.display())))?;
            let saved: Value = serde_json::from_str(&text).map_err(|e| Error::InvalidInput(e.to_string()))?;
            let records = saved.get("records").and_then(Value::as_array).cloned().unwrap_or_default();
            let mut verdicts = Vec::new();
            for r in &records {
                let ok = replay(r, &case, &f, b).unwrap_or(false);
                verdicts.push(json!({ "index": r.get("index"), "t": r.get("t"), "verified": ok }));
            }
            let all = !records.is_empty() && verdicts.iter().all(|v| v["verified"] == json!(true));
            rep.result = json!({ "records": verdicts, "all_verified": all });
            if !all {
                return Err(Error::InvalidInput("some records did not verify".into()));
            }
        }
    }
    Ok(())
}

fn value_rational(v: &Value, key: &str) -> Result<Rational> {
    v.get(key)
        .and_then(Value::as_str)
        .and_then(parse_rational)
        .ok_or_else(|| Error::InvalidInput(format!("missing rational `{key}`")))
}

fn value_opt_rational(v: &Value, key: &str) -> Result<Option<Rational>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(_) => value_rational(v, key).map(Some),
    }
}

fn value_point(v: &Value, key: &str) -> Result<(Rational, Rational)> {
    let bad = || Error::InvalidInput(format!("missing point `{key}`"));
    let a = v.get(key).and_then(Value::as_array).ok_or_else(bad)?;
    let p = |i: usize| a.get(i).and_then(Value::as_str).and_then(parse_rational).ok_or_else(bad);
    Ok((p(0)?, p(1)?))
}

fn witness_from(v: &Value) -> Result<Witness> {
    Ok(match v.get("kind").and_then(Value::as_str) {
        Some("Explicit") => Witness::Explicit,
        Some("Family") => Witness::Family { t: value_rational(v, "t")? },
        Some("Conic") => Witness::Conic { r: value_opt_rational(v, "r")?, point: value_point(v, "point")? },
        Some("S3") => Witness::S3 { r: value_rational(v, "r")?, n: value_rational(v, "n")? },
        Some("D4") => Witness::D4 {
            r: value_opt_rational(v, "r")?,
            conic: value_point(v, "conic")?,
            nm: value_point(v, "nm")?,
        },
        _ => return Err(Error::InvalidInput("unknown witness".into())),
    })
}

/// Rebuilds a saved record from its parameters, requires the saved JSON to
/// match the rebuilt one exactly, and verifies it against f.
fn replay(saved: &Value, case: &GaloisCase, f: &UniPoly, b: &Budgets) -> Result<bool> {
    let index = saved.get("index").and_then(Value::as_u64).unwrap_or(0) as usize;
    let witness = witness_from(saved.get("witness").unwrap_or(&Value::Null))?;
    let rec = solver::make_record(index, case, value_rational(saved, "t")?, value_rational(saved, "twist")?, witness, b)?;
    let same = serde_json::to_value(&rec).expect("serializes") == *saved;
    Ok(same && solver::verify_certificate_with(&rec, f, b))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> std::result::Result<Outcome, clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&args)?;
    let budgets = Budgets { factor: cli.factor_budget, height: cli.height_budget, retry: cli.retry_budget };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut rep = Report::new(echo, budgets);
    let start = Instant::now();
    let code = match execute(&cli.command, &budgets, &mut rep) {
        Ok(()) => 0,
        Err(e) => {
            rep.status.error = Some(e.to_string());
            e.exit_code()
        }
    };
    rep.status.code = code;
    if cli.timing {
        rep.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Outcome { report: rep, code, dest: cli.json })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("torsion3").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["classify", "--poly", "x^4+2*x^2-12"]).code, 0);
        assert_eq!(go(&["classify", "--poly", "x^4+1"]).code, 1);
        assert_eq!(go(&["classify", "--poly", "2x"]).code, 1);
        let o = go(&["solve", "--poly", "(x^2-2)*(x^2+6)"]);
        assert_eq!(o.code, 3);
        assert_eq!(o.report.obstruction.unwrap().global_symbol, crate::quadforms::Verdict::Minus);
        let s4 = crate::elliptic::family(CaseLabel::S4, &crate::exactmath::int(2)).unwrap().psi3();
        let coeffs: Vec<String> = s4.descending().iter().map(|c| c.to_string()).collect();
        assert_eq!(go(&["solve", "--coeffs", &coeffs.join(",")]).code, 4);
    }

    #[test]
    fn classify_j_and_family() {
        let o = go(&["classify-j", "--j", "432"]);
        assert_eq!(o.report.result["f1"], json!("-3"));
        assert_eq!(o.report.result["row"], json!("S3"));
        let o = go(&["family", "--case", "S3", "--t", "-3"]);
        assert_eq!(o.report.result["j"], json!("432"));
    }

    #[test]
    fn deterministic_reports() {
        let a = go(&["solve", "--poly", "(x^2+2)*(x^2-6)", "--count", "3"]);
        let b = go(&["solve", "--poly", "(x^2+2)*(x^2-6)", "--count", "3"]);
        assert_eq!(a.code, 0);
        assert_eq!(a.report.records.len(), 3);
        assert_eq!(a.to_json(), b.to_json());
    }
}
