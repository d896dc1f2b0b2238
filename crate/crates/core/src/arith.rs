//! Exact integers, rationals and polynomials, plus the symmetric-function
//! primitives (elementary symmetric sums, complete homogeneous sums,
//! generalized Vandermonde determinants) used by the rest of the crate.
//!
//! Nothing in here touches floating point. Decimal strings are produced by
//! [`to_decimal`] only for display.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Canonical `p/q` rendering (`p` alone when `q = 1`).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Json(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n.trim()).map_err(|_| bad())?,
            BigInt::from_str(d.trim()).map_err(|_| bad())?,
        ),
        None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Fixed-point rendering with `digits` fractional digits, rounded half away
/// from zero; trailing zeros (and a bare trailing point) are dropped.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = scaled - Rational::from_integer(floor.clone());
    let rounded = if frac >= ratio(1, 2) { floor + 1 } else { floor };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if r.is_negative() && !rounded_is_zero(&int_part, &frac_part) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let mut f = format!("{:0>width$}", frac_part.to_string(), width = digits);
        while f.ends_with('0') {
            f.pop();
        }
        if !f.is_empty() {
            out.push('.');
            out.push_str(&f);
        }
    }
    out
}

fn rounded_is_zero(a: &BigInt, b: &BigInt) -> bool {
    a.is_zero() && b.is_zero()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(x, 2)` for a rational argument.
pub fn choose2(x: &Rational) -> Rational {
    x * (x - Rational::one()) / rat(2)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Elementary symmetric polynomial `e_m(values)`.
pub fn elementary_symmetric(m: usize, values: &[BigInt]) -> BigInt {
    if m > values.len() {
        return BigInt::zero();
    }
    // e[k] over the prefix processed so far
    let mut e = vec![BigInt::zero(); m + 1];
    e[0] = BigInt::one();
    for x in values {
        for k in (1..=m).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    e.swap_remove(m)
}

/// Weight `nu_m = e_m(1, 2, ..., s + l - 1)` used by the generalized
/// Peskine-Szpiro formula for the `l`-th Hilbert coefficient.
pub fn nu(m: usize, s: usize, l: usize) -> BigInt {
    let top = (s + l).saturating_sub(1);
    let values: Vec<BigInt> = (1..=top).map(BigInt::from).collect();
    elementary_symmetric(m, &values)
}

/// Complete homogeneous symmetric polynomial `h_r(values)`: the sum of all
/// monomials of total degree `r`.
pub fn complete_homogeneous<T: Clone + Into<BigInt>>(r: usize, values: &[T]) -> BigInt {
    let mut h = vec![BigInt::zero(); r + 1];
    h[0] = BigInt::one();
    for x in values {
        let x: BigInt = x.clone().into();
        // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
        for k in 1..=r {
            let add = &h[k - 1] * &x;
            h[k] += add;
        }
    }
    h.swap_remove(r)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Generalized Vandermonde determinant `V_t(values)`: the ordinary Vandermonde
/// matrix with the last row raised to exponent `k - 1 + t`.
///
/// Evaluated twice, as an explicit determinant and as
/// `prod_{j<i}(a_i - a_j) * h_t(values)`; the two must agree.
pub fn vandermonde(t: usize, values: &[i64]) -> Result<BigInt> {
    if values.is_empty() {
        return Err(Error::Precondition("vandermonde needs at least one value".into()));
    }
    let k = values.len();
    let matrix: Vec<Vec<BigInt>> = (0..k)
        .map(|row| {
            let exp = if row + 1 == k { k - 1 + t } else { row };
            values.iter().map(|&a| BigInt::from(a).pow(exp as u32)).collect()
        })
        .collect();
    let det = determinant(matrix);
    let factored = vandermonde_factored(t, values);
    if det != factored {
        return Err(Error::IdentityMismatch(format!(
            "V_{t}({values:?}): determinant {det} != factored {factored}"
        )));
    }
    Ok(det)
}

pub fn vandermonde_factored(t: usize, values: &[i64]) -> BigInt {
    let mut prod = BigInt::one();
    for i in 0..values.len() {
        for j in 0..i {
            prod *= BigInt::from(values[i] - values[j]);
        }
    }
    prod * complete_homogeneous(t, values)
}

/// Univariate polynomial in `t` with exact rational coefficients, stored in
/// ascending order with trailing zeros trimmed. The zero polynomial has no
/// coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from_ints(&[1])
    }

    /// `(1 - t)^s`
    pub fn one_minus_t_pow(s: usize) -> Self {
        let base = Poly::from_ints(&[1, -1]);
        (0..s).fold(Poly::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p^{(l)}(1) / l!`, the `l`-th Taylor coefficient at `t = 1`.
    pub fn taylor_at_one(&self, l: usize) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .skip(l)
            .fold(Rational::zero(), |acc, (k, c)| {
                acc + c * Rational::from_integer(binomial(k as u64, l as u64))
            })
    }

    /// Long division; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }
}

/// Exact quotient `num / divisor`; a nonzero remainder is an error.
pub fn poly_divide_exact(num: &Poly, divisor: &Poly) -> Result<Poly> {
    let (q, r) = num.div_rem(divisor)?;
    if !r.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs.iter().map(format_rational).collect::<Vec<_>>())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serde adapters that write rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(D::Error::custom))
                .collect()
        }
    }
}

/// Serde adapter for arbitrary-precision integers as decimal strings.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(D::Error::custom)
    }
}
