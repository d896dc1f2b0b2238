//! Upper bounds for Hilbert coefficients of self-dual (Gorenstein) tables.
//!
//! The ingredients are the clipped shift sequence `t~`, its product `Psi`,
//! the combinatorial sum `f_l(t~)` and the generator count `beta_0`:
//!
//! * `e_0 <= beta_0 Psi / s!`
//! * `e_1 <= beta_0 Psi f_1(t~) / (s+1)!`
//! * `e_j <= beta_0 Psi f_j(t~) / (s+1)!` (conjectural for `j >= 2`)

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::arith::{choose2, factorial, format_rational, rat, to_decimal, Rational};
use crate::error::{Error, Result};
use crate::hilbert::{coefficient_nu, f_l, multiplicity_ps};
use crate::table::{dual_sequence, is_self_dual, pure_entry, BettiTable, DegreeSequence, Shifts};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Index of the bounded coefficient.
    pub l: usize,
    pub e_value: Rational,
    pub bound: Rational,
    pub beta0: Rational,
    pub s: usize,
    pub shifts: Shifts,
    pub tilde: Vec<i64>,
    pub psi: BigInt,
    pub f_value: BigInt,
    /// `s` for the e_0 bound, `s + 1` otherwise.
    pub factorial_of: usize,
    pub holds: bool,
    pub conjectural: bool,
}

impl BoundReport {
    pub fn to_json_value(&self, digits: usize) -> serde_json::Value {
        json!({
            "l": self.l,
            "e_value": format_rational(&self.e_value),
            "e_decimal": to_decimal(&self.e_value, digits),
            "bound": format_rational(&self.bound),
            "decimal": to_decimal(&self.bound, digits),
            "holds": self.holds,
            "conjectural": self.conjectural,
            "provenance": {
                "s": self.s,
                "beta0": format_rational(&self.beta0),
                "min_shifts": self.shifts.min,
                "max_shifts": self.shifts.max,
                "tilde": self.tilde,
                "psi": self.psi.to_string(),
                "f_value": self.f_value.to_string(),
                "factorial_of": self.factorial_of,
            },
        })
    }

    pub fn to_text(&self, digits: usize) -> String {
        let kind = if self.conjectural { " (conjectural)" } else { "" };
        format!(
            "e_{l} = {e} ({ed})\nbound{kind}: beta_0 * Psi * f_{fl}(t~) / {k}! = {b} * {psi} * {f} / {k}! = {bound} ~ {bd}\nt~ = {tilde:?}\nholds: {holds}\n",
            l = self.l,
            e = format_rational(&self.e_value),
            ed = to_decimal(&self.e_value, digits),
            fl = if self.factorial_of == self.s { 0 } else { self.l },
            b = format_rational(&self.beta0),
            psi = self.psi,
            f = self.f_value,
            k = self.factorial_of,
            bound = format_rational(&self.bound),
            bd = to_decimal(&self.bound, digits),
            tilde = self.tilde,
            holds = self.holds,
        )
    }
}

/// Module-level `t~` from shifts: `min{T_i, floor(t_s/2)}` for
/// `i <= k = floor(s/2)` and `max{t_i, ceil(t_s/2)}` for `i > k`.
pub fn tilde_of_shifts(shifts: &Shifts, s: usize) -> Result<Vec<i64>> {
    if shifts.min.len() != s + 1 || shifts.max.len() != s + 1 {
        return Err(Error::Precondition(format!("shifts must cover columns 0..={s}")));
    }
    let (t, big_t) = (shifts.min[s], shifts.max[s]);
    if t != big_t {
        return Err(Error::TopNotSymmetric { t, big_t });
    }
    let k = s / 2;
    let floor_half = t.div_euclid(2);
    let ceil_half = t - floor_half;
    Ok((1..=s)
        .map(|i| {
            if i <= k {
                shifts.max[i].min(floor_half)
            } else {
                shifts.min[i].max(ceil_half)
            }
        })
        .collect())
}

fn check_sequence_preconditions(d: &DegreeSequence) -> Result<()> {
    if d.first() != 0 {
        return Err(Error::Precondition(format!("{d:?} must start at 0")));
    }
    if !d.dominated_by_dual(d.last()) {
        return Err(Error::NotDominatedByDual(d.degrees().to_vec()));
    }
    Ok(())
}

/// Sequence-level `t~`: `min{d_s - d_{s-i}, floor(d_s/2)}` for `i <= k`,
/// `max{d_i, ceil(d_s/2)}` otherwise.
pub fn tilde_of_sequence(d: &DegreeSequence) -> Result<Vec<i64>> {
    check_sequence_preconditions(d)?;
    let s = d.len();
    let k = s / 2;
    let top = d.last();
    let floor_half = top.div_euclid(2);
    let ceil_half = top - floor_half;
    Ok((1..=s)
        .map(|i| {
            if i <= k {
                (top - d.get(s - i)).min(floor_half)
            } else {
                d.get(i).max(ceil_half)
            }
        })
        .collect())
}

pub fn psi(tilde: &[i64]) -> BigInt {
    tilde.iter().map(|&x| BigInt::from(x)).product()
}

/// `b_d = beta_0(d) + beta_0(d^{v,d_s})`.
pub fn b_d(d: &DegreeSequence) -> Result<Rational> {
    check_sequence_preconditions(d)?;
    Ok(pure_entry(d, 0) + pure_entry(&dual_sequence(d, d.last()), 0))
}

struct BoundInputs {
    s: usize,
    beta0: Rational,
    shifts: Shifts,
    tilde: Vec<i64>,
}

fn bound_inputs(table: &BettiTable) -> Result<BoundInputs> {
    let (s, _) = is_self_dual(table).ok_or(Error::NotSelfDual)?;
    if table.column(0).any(|(j, _)| j != 0) {
        return Err(Error::NotGeneratedInDegreeZero);
    }
    let shifts = table.shifts();
    let tilde = tilde_of_shifts(&shifts, s)?;
    Ok(BoundInputs { s, beta0: table.beta0(), shifts, tilde })
}

/// `e_0 <= beta_0 Psi / s!`, with `e_0` from the power-sum identity.
pub fn bound_e0(table: &BettiTable) -> Result<BoundReport> {
    let inp = bound_inputs(table)?;
    let e_value = multiplicity_ps(table, inp.s)?;
    let psi = psi(&inp.tilde);
    let bound = &inp.beta0 * Rational::from_integer(psi.clone())
        / Rational::from_integer(factorial(inp.s));
    Ok(BoundReport {
        l: 0,
        holds: e_value <= bound,
        e_value,
        bound,
        beta0: inp.beta0,
        s: inp.s,
        shifts: inp.shifts,
        tilde: inp.tilde,
        psi,
        f_value: BigInt::one(),
        factorial_of: inp.s,
        conjectural: false,
    })
}

/// `e_j <= beta_0 Psi f_j(t~) / (s+1)!`; proved for `j = 1`, conjectural
/// for `j >= 2`.
pub fn bound_ej(table: &BettiTable, j: usize) -> Result<BoundReport> {
    let inp = bound_inputs(table)?;
    let e_value = coefficient_nu(table, inp.s, j)?;
    let psi = psi(&inp.tilde);
    let f_value = f_l(&inp.tilde, j);
    let bound = &inp.beta0 * Rational::from_integer(&psi * &f_value)
        / Rational::from_integer(factorial(inp.s + 1));
    Ok(BoundReport {
        l: j,
        holds: e_value <= bound,
        e_value,
        bound,
        beta0: inp.beta0,
        s: inp.s,
        shifts: inp.shifts,
        tilde: inp.tilde,
        psi,
        f_value,
        factorial_of: inp.s + 1,
        conjectural: j >= 2,
    })
}

pub fn bound_e1(table: &BettiTable) -> Result<BoundReport> {
    bound_ej(table, 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// `f_1(d) + f_1(d^{v,d_s}) <= b_d Psi_d f_1(d~)` for one sequence.
pub fn check_sym_pure_bound(d: &DegreeSequence) -> Result<InequalityCheck> {
    let tilde = tilde_of_sequence(d)?;
    let dual = dual_sequence(d, d.last());
    let lhs = Rational::from_integer(f_l(d.tail(), 1) + f_l(dual.tail(), 1));
    let rhs = b_d(d)? * Rational::from_integer(psi(&tilde) * f_l(&tilde, 1));
    Ok(InequalityCheck { holds: lhs <= rhs, lhs, rhs })
}

/// `Psi_d f_1(d~)`
pub fn psi_f1(d: &DegreeSequence) -> Result<BigInt> {
    let tilde = tilde_of_sequence(d)?;
    Ok(psi(&tilde) * f_l(&tilde, 1))
}

/// Checks the hypotheses `d_0 = d'_0 = 0`, `d_s = d'_s`,
/// `d < d' <= (d')^{v,d_s} < d^{v,d_s}`.
pub fn lemma_hypotheses(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<()> {
    let fail = |m: String| Err(Error::HypothesisViolated(m));
    if d.len() != d_prime.len() {
        return fail("sequences have different lengths".into());
    }
    if d.first() != 0 || d_prime.first() != 0 {
        return fail("sequences must start at 0".into());
    }
    if d.last() != d_prime.last() {
        return fail("sequences must share d_s".into());
    }
    let n = d.last();
    if !d.lt_pointwise(d_prime) {
        return fail(format!("{d:?} is not < {d_prime:?}"));
    }
    let dual_prime = dual_sequence(d_prime, n);
    if !d_prime.le_pointwise(&dual_prime) {
        return fail(format!("{d_prime:?} exceeds its dual"));
    }
    if !dual_prime.lt_pointwise(&dual_sequence(d, n)) {
        return fail("dual chain is not strict".into());
    }
    Ok(())
}

/// `Psi_d f_1(d~) >= Psi_{d'} f_1(d'~)` under the monotonicity hypotheses.
pub fn check_lemma_monotonicity(d: &DegreeSequence, d_prime: &DegreeSequence) -> Result<bool> {
    lemma_hypotheses(d, d_prime)?;
    Ok(psi_f1(d)? >= psi_f1(d_prime)?)
}

/// Closed-form literature bounds for `e_1` that need data beyond the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonBounds {
    /// `C(e_0, 2) - C(mu - dim, 2)`
    pub elias: Rational,
    pub rossi_valla: RossiValla,
    /// `C(e_0 - k, 2)`
    pub huneke_hanumanthu: Rational,
}

/// `e_1 <= C(e_0, 2) - C(mu - dim, 2) - lambda + 1` with
/// `lambda = e_0 - e_1 + e_2`. Since `lambda` involves `e_1`, the value is
/// stored as `constant + e_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RossiValla {
    /// `C(e_0, 2) - C(mu - dim, 2) - e_0 - e_2 + 1`
    pub constant: Rational,
}

impl RossiValla {
    /// Right-hand side for a given `e_1`.
    pub fn evaluate(&self, e1: &Rational) -> Rational {
        &self.constant + e1
    }

    /// Whether `e_1 <= rhs(e_1)`; this no longer depends on `e_1`.
    pub fn holds(&self) -> bool {
        self.constant >= Rational::zero()
    }
}

pub fn comparison_bounds(e0: &Rational, e2: &Rational, mu: i64, dim: i64, k: i64) -> ComparisonBounds {
    let elias = choose2(e0) - choose2(&rat(mu - dim));
    let constant = &elias - e0 - e2 + Rational::one();
    ComparisonBounds {
        elias,
        rossi_valla: RossiValla { constant },
        huneke_hanumanthu: choose2(&(e0 - rat(k))),
    }
}
