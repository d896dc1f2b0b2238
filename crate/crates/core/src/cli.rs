//! Command-line front end.
//!
//! [`run`] is the whole program minus process plumbing: it takes the parsed
//! arguments and the raw input bytes and returns the exit code together with
//! the bytes for stdout and stderr. Exit codes: 0 success, 1 bad input,
//! 2 a proved statement failed a check.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{format_rational, to_decimal, Rational};
use crate::bounds::{bound_e0, bound_ej, BoundReport};
use crate::decomp::{decompose, symmetric_decompose};
use crate::error::{Error, Result};
use crate::explorer::{fuzz, koszul_table, Check, Constraint, Guardrails, SearchSpec};
use crate::hilbert::{coefficient_nu, e_l_symmetrized, multiplicity_ps, HilbertData, DEFAULT_MAX_L};
use crate::table::{is_self_dual, parse_betti_diagram, BettiTable};

pub const DEFAULT_DECIMAL_DIGITS: usize = 6;
pub const DIGITS_ENV: &str = "BETTI_DECIMAL_DIGITS";

#[derive(Debug, Clone, Parser)]
#[command(name = "bettikit", version, about = "Hilbert coefficients, decompositions and e1 bounds from Betti tables")]
pub struct CliConfig {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Fractional digits in decimal renderings (overrides BETTI_DECIMAL_DIGITS).
    #[arg(long, global = true)]
    pub decimal_digits: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// JSON if the input starts with `{`, diagram otherwise.
    Auto,
    Diagram,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// Codimension; defaults to the table length.
    #[arg(long)]
    pub codim: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Prop,
    Lemma,
    Conj,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Hilbert coefficients e_0..e_L by the nu formula and the h-polynomial.
    Coeffs {
        #[command(flatten)]
        input: InputArgs,
        /// Highest coefficient index.
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_L)]
        max_l: usize,
    },
    /// Boij-Soderberg decomposition into pure tables.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decomposition of a self-dual table into symmetrized pure tables.
    SymDecompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Upper bound for e_0, e_1 or (conjecturally) e_j.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, group = "which")]
        e0: bool,
        #[arg(long, group = "which")]
        e1: bool,
        #[arg(long, group = "which", value_name = "J")]
        ej: Option<usize>,
    },
    /// Run every consistency check and bound on one table.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exhaustive checks over degree sequences.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long, default_value_t = 4)]
        s_max: usize,
        #[arg(long, default_value_t = 10)]
        ds_max: i64,
        #[arg(long = "check", value_enum)]
        checks: Vec<CheckArg>,
        /// Coefficient index for the conjecture check.
        #[arg(long, default_value_t = 2)]
        j: usize,
        #[arg(long, default_value_t = Guardrails::default().max_s)]
        max_s_limit: usize,
        #[arg(long, default_value_t = Guardrails::default().max_ds)]
        max_ds_limit: i64,
    },
    /// Koszul table of length N.
    Koszul { n: usize },
}

impl Command {
    pub fn input(&self) -> Option<&InputArgs> {
        match self {
            Command::Coeffs { input, .. }
            | Command::Decompose { input }
            | Command::SymDecompose { input }
            | Command::Bound { input, .. }
            | Command::Verify { input } => Some(input),
            Command::Fuzz { .. } | Command::Koszul { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

/// Flag first, then `BETTI_DECIMAL_DIGITS`, then the default.
pub fn resolve_digits(flag: Option<usize>, env: Option<&str>) -> usize {
    flag.or_else(|| env.and_then(|v| v.trim().parse().ok()))
        .unwrap_or(DEFAULT_DECIMAL_DIGITS)
}

pub fn read_table(bytes: &[u8], format: InputFormat) -> Result<BettiTable> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Parse { line: 1, message: format!("input is not UTF-8: {e}") })?;
    let json = match format {
        InputFormat::Json => true,
        InputFormat::Diagram => false,
        InputFormat::Auto => text.trim_start().starts_with('{'),
    };
    if json {
        BettiTable::from_json(text)
    } else {
        parse_betti_diagram(text)
    }
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

pub fn run(config: &CliConfig, input: &[u8]) -> CliOutput {
    let digits = config.decimal_digits.unwrap_or(DEFAULT_DECIMAL_DIGITS);
    match execute(&config.command, input, digits) {
        Ok(report) => {
            let mut body = match config.output {
                OutputFormat::Json => serde_json::to_string_pretty(&report.json).expect("report json"),
                OutputFormat::Text => report.text,
            };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            CliOutput { code: report.code, stdout: body.into_bytes(), stderr: Vec::new() }
        }
        Err(e) => CliOutput {
            code: 1,
            stdout: Vec::new(),
            stderr: format!("error: {e}\n").into_bytes(),
        },
    }
}

fn execute(command: &Command, input: &[u8], digits: usize) -> Result<Report> {
    let load = |args: &InputArgs| -> Result<(BettiTable, usize)> {
        let table = read_table(input, args.format)?;
        let codim = args.codim.unwrap_or(table.length());
        Ok((table, codim))
    };
    match command {
        Command::Coeffs { input: args, l, max_l } => {
            if l > max_l {
                return Err(Error::Precondition(format!("l = {l} exceeds --max-l {max_l}")));
            }
            let (table, codim) = load(args)?;
            coeffs_report(&table, codim, *l)
        }
        Command::Decompose { input: args } => {
            let (table, _) = load(args)?;
            let dec = decompose(&table)?;
            let reconstructs = dec.reconstruct() == table.to_signed();
            let mut json = dec.to_json_value();
            json["reconstructs"] = json!(reconstructs);
            let text = parts_text(None, dec.parts.iter().map(|p| (&p.coefficient, p.degrees.degrees())), digits);
            Ok(Report { code: if reconstructs { 0 } else { 2 }, json, text })
        }
        Command::SymDecompose { input: args } => {
            let (table, _) = load(args)?;
            let dec = symmetric_decompose(&table)?;
            let reconstructs = dec.reconstruct() == table.to_signed();
            let mut json = dec.to_json_value();
            json["reconstructs"] = json!(reconstructs);
            let text = parts_text(Some(dec.n), dec.parts.iter().map(|p| (&p.coefficient, p.degrees.degrees())), digits);
            Ok(Report { code: if reconstructs { 0 } else { 2 }, json, text })
        }
        Command::Bound { input: args, e0, e1, ej } => {
            let (table, _) = load(args)?;
            let report = match (e0, e1, ej) {
                (true, _, _) => bound_e0(&table)?,
                (_, _, Some(j)) => bound_ej(&table, *j)?,
                (_, true, _) | (false, false, None) => bound_ej(&table, 1)?,
            };
            Ok(Report { code: 0, json: report.to_json_value(digits), text: report.to_text(digits) })
        }
        Command::Verify { input: args } => {
            let (table, codim) = load(args)?;
            Ok(verify(&table, codim, digits))
        }
        Command::Fuzz { s_min, s_max, ds_max, checks, j, max_s_limit, max_ds_limit } => {
            let checks: Vec<Check> = if checks.is_empty() {
                vec![Check::SymPureBound, Check::Monotonicity, Check::EjBound(*j)]
            } else {
                checks
                    .iter()
                    .map(|c| match c {
                        CheckArg::Prop => Check::SymPureBound,
                        CheckArg::Lemma => Check::Monotonicity,
                        CheckArg::Conj => Check::EjBound(*j),
                    })
                    .collect()
            };
            let mut spec = SearchSpec::new(*s_min, *s_max, *ds_max, Constraint::DominatedByDual).with_checks(checks);
            spec.guardrails = Guardrails { max_s: *max_s_limit, max_ds: *max_ds_limit };
            let report = fuzz(&spec)?;
            let mut text = format!("cases checked: {}\n", report.cases_checked);
            for c in &report.checks {
                text.push_str(&format!(
                    "{:?}: {} in hypothesis, {} violations; {} out of hypothesis, {} failing there\n",
                    c.check,
                    c.cases_checked,
                    c.violations.len(),
                    c.out_of_hypothesis_cases,
                    c.out_of_hypothesis.len()
                ));
                for w in &c.violations {
                    let input: Vec<_> = w.input.iter().map(|d| d.degrees().to_vec()).collect();
                    text.push_str(&format!(
                        "  {input:?}: lhs {} rhs {}\n",
                        format_rational(&w.lhs),
                        format_rational(&w.rhs)
                    ));
                }
            }
            let code = if report.theorem_violations() > 0 { 2 } else { 0 };
            Ok(Report { code, json: report.to_json_value(), text })
        }
        Command::Koszul { n } => {
            let table = koszul_table(*n)?;
            let json: Value = serde_json::from_str(&table.to_json())?;
            Ok(Report { code: 0, json, text: table.to_diagram() })
        }
    }
}

fn coeffs_report(table: &BettiTable, codim: usize, l: usize) -> Result<Report> {
    let nu_route = (0..=l)
        .map(|k| coefficient_nu(table, codim, k))
        .collect::<Result<Vec<Rational>>>()?;
    let data = HilbertData::compute(table, codim, l)?;
    let ps = multiplicity_ps(table, codim)?;
    let agree = data.coefficients == nu_route && ps == nu_route[0];
    let mut json = data.to_json_value();
    json["routes_agree"] = json!(agree);
    json["multiplicity_ps"] = json!(format_rational(&ps));
    let mut text = format!("codim {codim}\nK(t) = {}\nQ(t) = {}\n", data.numerator, data.h_poly);
    for (k, e) in nu_route.iter().enumerate() {
        text.push_str(&format!("e_{k} = {}\n", format_rational(e)));
    }
    text.push_str(&format!("routes agree: {agree}\n"));
    Ok(Report { code: if agree { 0 } else { 2 }, json, text })
}

fn parts_text<'a>(
    n: Option<i64>,
    parts: impl Iterator<Item = (&'a Rational, &'a [i64])>,
    digits: usize,
) -> String {
    let mut out = String::new();
    if let Some(n) = n {
        out.push_str(&format!("N = {n}\n"));
    }
    for (r, d) in parts {
        out.push_str(&format!("{} (~{}) * {d:?}\n", format_rational(r), to_decimal(r, digits)));
    }
    out
}

struct CheckOutcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn verify(table: &BettiTable, codim: usize, digits: usize) -> Report {
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut push = |name: &'static str, r: Result<(bool, String)>| {
        let (passed, detail) = r.unwrap_or_else(|e| (false, e.to_string()));
        checks.push(CheckOutcome { name, passed, detail });
    };

    push("oracle_equivalence", (|| {
        let data = HilbertData::compute(table, codim, 3)?;
        let nu_route = (0..=3).map(|l| coefficient_nu(table, codim, l)).collect::<Result<Vec<_>>>()?;
        let shown: Vec<String> = nu_route.iter().map(format_rational).collect();
        Ok((data.coefficients == nu_route, format!("e_0..e_3 = {shown:?}")))
    })());

    push("decomposition_round_trip", (|| {
        let dec = decompose(table)?;
        Ok((dec.reconstruct() == table.to_signed(), format!("{} parts", dec.parts.len())))
    })());

    let self_dual = is_self_dual(table);
    let mut bounds: Vec<(String, BoundReport)> = Vec::new();
    let mut conjecture_violations: Vec<Value> = Vec::new();
    if let Some((s, n)) = self_dual {
        push("symmetric_decomposition", (|| {
            let dec = symmetric_decompose(table)?;
            dec.check_structure(s)?;
            let exact = dec.reconstruct() == table.to_signed();
            let degree_zero = table.column(0).all(|(j, _)| j == 0);
            let anchored = !degree_zero
                || dec.parts.iter().all(|p| p.degrees.first() == 0 && p.degrees.last() == n);
            let expands = dec.expand() == decompose(table)?;
            Ok((exact && anchored && expands, format!("{} parts, N = {n}", dec.parts.len())))
        })());

        push("coefficient_additivity", (|| {
            let dec = symmetric_decompose(table)?;
            for l in 0..=2 {
                let direct = coefficient_nu(table, codim, l)?;
                let mut summed = Rational::from_integer(0.into());
                for p in &dec.parts {
                    summed += &p.coefficient * e_l_symmetrized(&p.degrees, n, l)?;
                }
                if direct != summed {
                    return Ok((false, format!("e_{l}: {direct} vs {summed}")));
                }
            }
            Ok((true, "e_0..e_2 additive over parts".into()))
        })());

        let mut bound_check = |name: &'static str, r: Result<BoundReport>| {
            push(name, r.map(|b| {
                let d = format!("{} <= {} ({})", format_rational(&b.e_value), format_rational(&b.bound), to_decimal(&b.bound, digits));
                let holds = b.holds;
                bounds.push((name.to_string(), b));
                (holds, d)
            }));
        };
        bound_check("bound_e0", bound_e0(table));
        bound_check("bound_e1", bound_ej(table, 1));

        if let Ok(b) = bound_ej(table, 2) {
            if !b.holds {
                conjecture_violations.push(b.to_json_value(digits));
            }
            bounds.push(("bound_e2_conjectural".into(), b));
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    let json = json!({
        "self_dual": self_dual.map(|(s, n)| json!({"s": s, "N": n})),
        "checks": checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "bounds": bounds.iter().map(|(k, b)| (k.clone(), b.to_json_value(digits))).collect::<serde_json::Map<_, _>>(),
        "violations": conjecture_violations,
        "passed": passed,
    });
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!("[{}] {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail));
    }
    if !conjecture_violations.is_empty() {
        text.push_str(&format!("conjectured e_2 bound violated: {}\n", conjecture_violations.len()));
    }
    Report { code: if passed { 0 } else { 2 }, json, text }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> CliConfig {
        CliConfig::try_parse_from(std::iter::once("bettikit").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn digits_resolution() {
        assert_eq!(resolve_digits(Some(3), Some("9")), 3);
        assert_eq!(resolve_digits(None, Some("9")), 9);
        assert_eq!(resolve_digits(None, Some("x")), 6);
        assert_eq!(resolve_digits(None, None), 6);
    }

    #[test]
    fn bound_flags_are_exclusive() {
        let r = CliConfig::try_parse_from(["bettikit", "bound", "--e0", "--e1"]);
        assert!(r.is_err());
    }

    #[test]
    fn bad_input_exits_one() {
        let out = run(&config(&["coeffs"]), b"0: 1 x");
        assert_eq!(out.code, 1);
        assert!(String::from_utf8(out.stderr).unwrap().contains("line 1"));
    }

    #[test]
    fn l_cap_enforced() {
        let out = run(&config(&["coeffs", "--l", "7"]), b"0: 1 2 1");
        assert_eq!(out.code, 1);
    }

    #[test]
    fn koszul_text() {
        let out = run(&config(&["--output", "text", "koszul", "2"]), b"");
        assert_eq!(out.code, 0);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n");
    }
}
