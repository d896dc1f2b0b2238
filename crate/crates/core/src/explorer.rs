//! Exhaustive enumeration of degree sequences and fuzz checks of the
//! symmetrized-pure inequality, the `Psi f_1` monotonicity statement and the
//! conjectured `e_j` bound.
//!
//! Every run is deterministic: sequences are produced in lexicographic order
//! (by length, then entries) and parallel evaluation preserves that order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::{binomial, format_rational, Rational};
use crate::bounds::{bound_ej, check_sym_pure_bound, lemma_hypotheses, psi_f1};
use crate::error::{Error, Result};
use crate::table::{symmetrized_pure, BettiTable, DegreeSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    All,
    DominatedByDual,
    MonotonicityPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `f_1(d) + f_1(d^v) <= b_d Psi_d f_1(d~)` on dominated sequences.
    SymPureBound,
    /// `Psi_d f_1(d~)` is monotone along admissible pairs.
    Monotonicity,
    /// Conjectured `e_j` bound on symmetrized pure tables.
    EjBound(usize),
}

impl Check {
    /// Proved statements: a violation is an implementation bug (or a wrong
    /// statement), never an expected finding.
    pub fn is_theorem(&self) -> bool {
        !matches!(self, Check::EjBound(_))
    }

    fn name(&self) -> String {
        match self {
            Check::SymPureBound => "sym_pure_bound".into(),
            Check::Monotonicity => "monotonicity".into(),
            Check::EjBound(j) => format!("ej_bound(j={j})"),
        }
    }

    fn claim(&self) -> &'static str {
        match self {
            Check::SymPureBound => "f_1(d) + f_1(d^v) <= b_d Psi_d f_1(d~)",
            Check::Monotonicity => "Psi_d f_1(d~) >= Psi_d' f_1(d'~)",
            Check::EjBound(_) => "e_j(beta_sym(d, d_s)) <= beta_0 Psi f_j(t~) / (s+1)!",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guardrails {
    pub max_s: usize,
    pub max_ds: i64,
}

impl Default for Guardrails {
    fn default() -> Self {
        Guardrails { max_s: 8, max_ds: 40 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub s_min: usize,
    pub s_max: usize,
    pub d_s_max: i64,
    pub constraint: Constraint,
    pub checks: Vec<Check>,
    #[serde(default)]
    pub guardrails: Guardrails,
}

impl SearchSpec {
    pub fn new(s_min: usize, s_max: usize, d_s_max: i64, constraint: Constraint) -> Self {
        SearchSpec {
            s_min,
            s_max,
            d_s_max,
            constraint,
            checks: Vec::new(),
            guardrails: Guardrails::default(),
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.s_min < 1 || self.s_min > self.s_max {
            return Err(Error::Guardrail(format!(
                "s range {}..={} must be nonempty and start at 1 or more",
                self.s_min, self.s_max
            )));
        }
        if self.s_max > self.guardrails.max_s {
            return Err(Error::Guardrail(format!(
                "s_max {} exceeds the limit {}",
                self.s_max, self.guardrails.max_s
            )));
        }
        if self.d_s_max > self.guardrails.max_ds {
            return Err(Error::Guardrail(format!(
                "d_s_max {} exceeds the limit {}",
                self.d_s_max, self.guardrails.max_ds
            )));
        }
        Ok(())
    }
}

/// Lexicographic stream of `(0, d_1, ..., d_s)` with `d_s <= d_s_max`,
/// `s` running over the search range.
pub struct Sequences {
    s: usize,
    s_max: usize,
    d_s_max: i64,
    constraint: Constraint,
    current: Option<Vec<i64>>,
}

impl Sequences {
    fn first_for(s: usize, d_s_max: i64) -> Option<Vec<i64>> {
        (s as i64 <= d_s_max).then(|| (1..=s as i64).collect())
    }

    fn advance(&mut self) -> Option<Vec<i64>> {
        loop {
            if let Some(cur) = self.current.take() {
                let out = cur.clone();
                self.current = next_combination(cur, self.d_s_max);
                return Some(out);
            }
            if self.s >= self.s_max {
                return None;
            }
            self.s += 1;
            self.current = Self::first_for(self.s, self.d_s_max);
        }
    }
}

/// Next strictly increasing tuple from `1..=top` in lexicographic order.
fn next_combination(mut c: Vec<i64>, top: i64) -> Option<Vec<i64>> {
    let k = c.len();
    let pos = (0..k).rev().find(|&i| c[i] < top - (k - 1 - i) as i64)?;
    c[pos] += 1;
    for i in pos + 1..k {
        c[i] = c[i - 1] + 1;
    }
    Some(c)
}

impl Iterator for Sequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let tail = self.advance()?;
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(0);
            v.extend(tail);
            let d = DegreeSequence::new(v).expect("enumerated sequences are strictly increasing");
            let keep = match self.constraint {
                Constraint::All => true,
                Constraint::DominatedByDual | Constraint::MonotonicityPairs => d.dominated_by_dual(d.last()),
            };
            if keep {
                return Some(d);
            }
        }
    }
}

pub fn enumerate_sequences(spec: &SearchSpec) -> Result<Sequences> {
    spec.validate()?;
    Ok(Sequences {
        s: spec.s_min,
        s_max: spec.s_max,
        d_s_max: spec.d_s_max,
        constraint: spec.constraint,
        current: Sequences::first_for(spec.s_min, spec.d_s_max),
    })
}

/// All pairs `(d, d')` meeting the monotonicity hypotheses, in
/// lexicographic order of `(s, d_s, d, d')`.
pub fn enumerate_monotonicity_pairs(spec: &SearchSpec) -> Result<Vec<(DegreeSequence, DegreeSequence)>> {
    let mut seqs: Vec<DegreeSequence> = enumerate_sequences(&SearchSpec {
        constraint: Constraint::DominatedByDual,
        ..spec.clone()
    })?
    .collect();
    seqs.sort_by(|a, b| (a.len(), a.last(), a).cmp(&(b.len(), b.last(), b)));
    let mut pairs = Vec::new();
    let mut start = 0;
    while start < seqs.len() {
        let key = (seqs[start].len(), seqs[start].last());
        let end = start + seqs[start..].iter().take_while(|d| (d.len(), d.last()) == key).count();
        let group = &seqs[start..end];
        for d in group {
            for dp in group {
                if lemma_hypotheses(d, dp).is_ok() {
                    pairs.push((d.clone(), dp.clone()));
                }
            }
        }
        start = end;
    }
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub input: Vec<DegreeSequence>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Witness {
    fn to_json_value(&self) -> serde_json::Value {
        json!({
            "input": self.input.iter().map(|d| d.degrees().to_vec()).collect::<Vec<_>>(),
            "lhs": format_rational(&self.lhs),
            "rhs": format_rational(&self.rhs),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub cases_checked: usize,
    pub violations: Vec<Witness>,
    /// Cases outside the statement's hypotheses (for instance `d_s < s + 2`).
    pub out_of_hypothesis_cases: usize,
    /// Failures among the out-of-hypothesis cases, logged but not counted.
    pub out_of_hypothesis: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub spec: SearchSpec,
    pub cases_checked: usize,
    pub checks: Vec<CheckReport>,
}

impl FuzzReport {
    /// Violations of proved statements (everything except the conjecture).
    pub fn theorem_violations(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.check.is_theorem())
            .map(|c| c.violations.len())
            .sum()
    }

    pub fn violations(&self) -> impl Iterator<Item = (&Check, &Witness)> {
        self.checks.iter().flat_map(|c| c.violations.iter().map(move |w| (&c.check, w)))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "spec": serde_json::to_value(&self.spec).expect("spec json"),
            "cases_checked": self.cases_checked,
            "theorem_violations": self.theorem_violations(),
            "checks": self.checks.iter().map(|c| json!({
                "check": c.check.name(),
                "claim": c.check.claim(),
                "theorem": c.check.is_theorem(),
                "cases_checked": c.cases_checked,
                "violations": c.violations.iter().map(Witness::to_json_value).collect::<Vec<_>>(),
                "out_of_hypothesis_cases": c.out_of_hypothesis_cases,
                "out_of_hypothesis": c.out_of_hypothesis.iter().map(Witness::to_json_value).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Outcome of one case: `(input, lhs, rhs, holds, in_hypothesis)`.
type Case = (Vec<DegreeSequence>, Rational, Rational, bool, bool);

fn collect(check: Check, cases: Vec<Case>) -> CheckReport {
    let mut report = CheckReport {
        check,
        cases_checked: 0,
        violations: Vec::new(),
        out_of_hypothesis_cases: 0,
        out_of_hypothesis: Vec::new(),
    };
    for (input, lhs, rhs, holds, in_hyp) in cases {
        if in_hyp {
            report.cases_checked += 1;
        } else {
            report.out_of_hypothesis_cases += 1;
        }
        if !holds {
            let w = Witness { input, lhs, rhs };
            if in_hyp {
                report.violations.push(w);
            } else {
                report.out_of_hypothesis.push(w);
            }
        }
    }
    report
}

/// `d_s >= s + 2`, used by the induction step of the monotonicity argument.
fn large_enough(d: &DegreeSequence) -> bool {
    d.last() >= d.len() as i64 + 2
}

fn run_sym_pure_bound(seqs: &[DegreeSequence]) -> Result<CheckReport> {
    let cases = seqs
        .par_iter()
        .map(|d| {
            let c = check_sym_pure_bound(d)?;
            Ok((vec![d.clone()], c.lhs, c.rhs, c.holds, large_enough(d)))
        })
        .collect::<Result<Vec<Case>>>()?;
    Ok(collect(Check::SymPureBound, cases))
}

fn run_monotonicity(spec: &SearchSpec) -> Result<CheckReport> {
    let pairs = enumerate_monotonicity_pairs(spec)?;
    let cases = pairs
        .par_iter()
        .map(|(d, dp)| {
            let lhs = Rational::from_integer(psi_f1(d)?);
            let rhs = Rational::from_integer(psi_f1(dp)?);
            let holds = lhs >= rhs;
            Ok((vec![d.clone(), dp.clone()], lhs, rhs, holds, large_enough(d)))
        })
        .collect::<Result<Vec<Case>>>()?;
    Ok(collect(Check::Monotonicity, cases))
}

fn run_ej_bound(seqs: &[DegreeSequence], j: usize) -> Result<CheckReport> {
    let cases = seqs
        .par_iter()
        .map(|d| {
            let table = symmetrized_pure(d, d.last())?;
            let report = bound_ej(&table, j)?;
            // f_j is defined for j <= s
            let in_hyp = j <= d.len();
            Ok((vec![d.clone()], report.e_value, report.bound, report.holds, in_hyp))
        })
        .collect::<Result<Vec<Case>>>()?;
    Ok(collect(Check::EjBound(j), cases))
}

pub fn fuzz(spec: &SearchSpec) -> Result<FuzzReport> {
    spec.validate()?;
    let needs_seqs = spec.checks.iter().any(|c| !matches!(c, Check::Monotonicity));
    let seqs: Vec<DegreeSequence> = if needs_seqs {
        enumerate_sequences(&SearchSpec { constraint: Constraint::DominatedByDual, ..spec.clone() })?
            .collect()
    } else {
        Vec::new()
    };
    let mut checks = Vec::with_capacity(spec.checks.len());
    for check in &spec.checks {
        checks.push(match *check {
            Check::SymPureBound => run_sym_pure_bound(&seqs)?,
            Check::Monotonicity => run_monotonicity(spec)?,
            Check::EjBound(j) => run_ej_bound(&seqs, j)?,
        });
    }
    let cases_checked = checks.iter().map(|c| c.cases_checked + c.out_of_hypothesis_cases).sum();
    Ok(FuzzReport { spec: spec.clone(), cases_checked, checks })
}

/// Koszul table of length `n`: `beta_{i,i} = C(n, i)`.
pub fn koszul_table(n: usize) -> Result<BettiTable> {
    if !(1..=12).contains(&n) {
        return Err(Error::Precondition(format!("koszul table needs 1 <= n <= 12, got {n}")));
    }
    BettiTable::validate((0..=n).map(|i| {
        ((i, i as i64), Rational::from_integer(binomial(n as u64, i as u64)))
    }))
}
