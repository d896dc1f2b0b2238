//! Hilbert coefficients `e_0, e_1, ...` of a Betti table.
//!
//! Three independent routes are provided:
//!
//! * [`multiplicity_ps`]: the Peskine-Szpiro power-sum identity for `e_0`;
//! * [`coefficient_nu`]: the nu-weighted power-sum formula for any `e_l`;
//! * [`coefficients_oracle`]: divide the alternating numerator `K(t)` by
//!   `(1 - t)^s` and read `e_l = Q^{(l)}(1) / l!` off the h-polynomial.
//!
//! Every formula depends only on the codimension `s`, never on the number of
//! variables of the ambient ring.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    complete_homogeneous, factorial, format_rational, nu, poly_divide_exact, Poly, Rational,
};
use crate::error::{Error, Result};
use crate::table::{dual_sequence, BettiTable, DegreeSequence};

/// Default cap on the coefficient index for callers that take `l` from
/// untrusted input.
pub const DEFAULT_MAX_L: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `K(t) = sum_i (-1)^i sum_j beta_{i,j} t^j`
    pub numerator: Poly,
    /// `Q(t)` with `K(t) = (1 - t)^s Q(t)`
    pub h_poly: Poly,
    pub codim: usize,
    /// `e_0, ..., e_L`
    pub coefficients: Vec<Rational>,
}

impl HilbertData {
    pub fn compute(table: &BettiTable, codim: usize, max_l: usize) -> Result<Self> {
        let numerator = numerator(table)?;
        let h_poly = h_polynomial(&numerator, codim)?;
        let coefficients = coefficients_oracle(&h_poly, max_l);
        Ok(HilbertData { numerator, h_poly, codim, coefficients })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(HilbertJson {
            numerator: self.numerator.coeffs().iter().map(format_rational).collect(),
            h_poly: self.h_poly.coeffs().iter().map(format_rational).collect(),
            codim: self.codim,
            coefficients: self.coefficients.iter().map(format_rational).collect(),
        })
        .expect("hilbert json")
    }
}

#[derive(Serialize, Deserialize)]
struct HilbertJson {
    numerator: Vec<String>,
    h_poly: Vec<String>,
    codim: usize,
    coefficients: Vec<String>,
}

/// Alternating-sign generating polynomial of the table.
pub fn numerator(table: &BettiTable) -> Result<Poly> {
    let top = table.entries().map(|(_, j, _)| j).max().unwrap_or(0);
    if let Some((_, j, _)) = table.entries().find(|&(_, j, _)| j < 0) {
        return Err(Error::NegativeDegree(j));
    }
    let mut coeffs = vec![Rational::zero(); top as usize + 1];
    for (i, j, v) in table.entries() {
        if i % 2 == 0 {
            coeffs[j as usize] += v;
        } else {
            coeffs[j as usize] -= v;
        }
    }
    Ok(Poly::new(coeffs))
}

/// `Q` with `K = (1 - t)^s Q`.
pub fn h_polynomial(k: &Poly, s: usize) -> Result<Poly> {
    poly_divide_exact(k, &Poly::one_minus_t_pow(s))
}

/// `(e_0, ..., e_L)` with `e_l = Q^{(l)}(1) / l!`.
pub fn coefficients_oracle(q: &Poly, max_l: usize) -> Vec<Rational> {
    (0..=max_l).map(|l| q.taylor_at_one(l)).collect()
}

/// `sum_i (-1)^i sum_j beta_{i,j} j^power`
pub fn power_sum(table: &BettiTable, power: usize) -> Rational {
    table.entries().fold(Rational::zero(), |acc, (i, j, v)| {
        let term = v * Rational::from_integer(BigInt::from(j).pow(power as u32));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

fn check_lower_power_sums(table: &BettiTable, s: usize) -> Result<()> {
    match (0..s).find(|&t| !power_sum(table, t).is_zero()) {
        Some(power) => Err(Error::PsViolation { power }),
        None => Ok(()),
    }
}

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `e_0 = (-1)^s / s! * sum_i (-1)^i sum_j beta_{i,j} j^s`, after checking
/// that the lower power sums vanish.
pub fn multiplicity_ps(table: &BettiTable, s: usize) -> Result<Rational> {
    check_lower_power_sums(table, s)?;
    Ok(sign(s) * power_sum(table, s) / Rational::from_integer(factorial(s)))
}

/// `e_l = (-1)^s / (s+l)! * sum_{r=0}^{l} (-1)^{l-r} nu_{l-r} P_{s+r}` where
/// `P_k` is the alternating power sum of exponent `k`.
pub fn coefficient_nu(table: &BettiTable, s: usize, l: usize) -> Result<Rational> {
    check_lower_power_sums(table, s)?;
    let total = (0..=l).fold(Rational::zero(), |acc, r| {
        let weight = Rational::from_integer(nu(l - r, s, l));
        acc + sign(l - r) * weight * power_sum(table, s + r)
    });
    Ok(sign(s) * total / Rational::from_integer(factorial(s + l)))
}

/// `f_l(y) = sum_{1 <= i_1 <= ... <= i_l <= s} prod_t (y_{i_t} - (i_t + t - 1))`,
/// with `f_0 = 1`.
pub fn f_l(y: &[i64], l: usize) -> BigInt {
    if l == 0 {
        return BigInt::one();
    }
    let s = y.len();
    // acc[i] = sum over tuples of length t whose last index is i (1-based)
    let mut acc: Vec<BigInt> = (1..=s).map(|i| BigInt::from(y[i - 1] - i as i64)).collect();
    for t in 2..=l {
        let mut prefix = BigInt::zero();
        let mut next = Vec::with_capacity(s);
        for i in 1..=s {
            prefix += &acc[i - 1];
            let factor = y[i - 1] - (i + t - 1) as i64;
            next.push(&prefix * BigInt::from(factor));
        }
        acc = next;
    }
    acc.into_iter().sum()
}

/// `(s+l)! e_l(beta(d))` as the nu-weighted sum of complete homogeneous
/// polynomials in the degrees.
fn scaled_e_l_pure(d: &DegreeSequence, l: usize) -> BigInt {
    let s = d.len();
    (0..=l).fold(BigInt::zero(), |acc, r| {
        let term = nu(l - r, s, l) * complete_homogeneous(r, d.degrees());
        if (l - r).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `e_l` of the pure table `beta(d)`.
///
/// When `d_0 = 0` the value is also computed through `f_l(d_1, ..., d_s)` and
/// both routes must agree.
pub fn e_l_pure(d: &DegreeSequence, l: usize) -> Result<Rational> {
    let scaled = scaled_e_l_pure(d, l);
    if d.first() == 0 && l >= 1 {
        let via_f = f_l(d.tail(), l);
        if via_f != scaled {
            return Err(Error::IdentityMismatch(format!(
                "f_{l}({:?}) = {via_f} but the nu-weighted sum is {scaled}",
                d.tail()
            )));
        }
    }
    Ok(Rational::new(scaled, factorial(d.len() + l)))
}

/// `e_l(beta(d) + beta(d^{v,N}))`.
///
/// For `d_0 = 0` and `N = d_s` the value is cross-checked against the
/// closed two-sum form `[f_l(d_1..d_s) + f_l(N - d_{s-1}, ..., N - d_0)] / (s+l)!`.
pub fn e_l_symmetrized(d: &DegreeSequence, n: i64, l: usize) -> Result<Rational> {
    let min = d.first() + d.last();
    if n < min {
        return Err(Error::InvalidN { n, min });
    }
    let dual = dual_sequence(d, n);
    let value = e_l_pure(d, l)? + e_l_pure(&dual, l)?;
    if d.first() == 0 && n == d.last() {
        let two_sum = f_l(d.tail(), l) + f_l(dual.tail(), l);
        let closed = Rational::new(two_sum, factorial(d.len() + l));
        if closed != value {
            return Err(Error::IdentityMismatch(format!(
                "symmetrized e_{l} for {d:?}, N={n}: closed form {closed} != {value}"
            )));
        }
    }
    Ok(value)
}
