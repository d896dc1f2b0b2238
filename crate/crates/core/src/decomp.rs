//! Boij-Soderberg decompositions.
//!
//! [`decompose`] peels pure tables off a Cohen-Macaulay table, always along
//! the current minimal shifts. [`symmetric_decompose`] does the same for a
//! self-dual table but removes a symmetrized pure table `beta(d) + beta(d^{v,N})`
//! at every step, which keeps the remainder self-dual.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::table::{
    dual_sequence, is_self_dual, pure_betti, BettiTable, DegreeSequence, SignedTable,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub coefficient: Rational,
    pub degrees: DegreeSequence,
}

/// `T = sum_a r_a beta(d^a)` along a chain `d^0 < d^1 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

/// `T = sum_a r_a beta_sym(d^a, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricDecomposition {
    pub n: i64,
    pub parts: Vec<Part>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    #[serde(rename = "N")]
    n: Option<i64>,
    parts: Vec<PartJson>,
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    r: String,
    d: Vec<i64>,
}

fn parts_to_json(n: Option<i64>, parts: &[Part]) -> serde_json::Value {
    serde_json::to_value(DecompositionJson {
        n,
        parts: parts
            .iter()
            .map(|p| PartJson { r: format_rational(&p.coefficient), d: p.degrees.degrees().to_vec() })
            .collect(),
    })
    .expect("decomposition json")
}

fn parts_from_json(text: &str) -> Result<(Option<i64>, Vec<Part>)> {
    let wire: DecompositionJson = serde_json::from_str(text)?;
    let parts = wire
        .parts
        .into_iter()
        .map(|p| {
            Ok(Part {
                coefficient: parse_rational(&p.r)?,
                degrees: DegreeSequence::new(p.d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((wire.n, parts))
}

impl Decomposition {
    pub fn reconstruct(&self) -> SignedTable {
        let mut acc = SignedTable::new();
        for p in &self.parts {
            acc.axpy(&p.coefficient, &pure_betti(&p.degrees));
        }
        acc
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        parts_to_json(None, &self.parts)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (_, parts) = parts_from_json(text)?;
        Ok(Decomposition { parts })
    }
}

impl SymmetricDecomposition {
    pub fn reconstruct(&self) -> SignedTable {
        let mut acc = SignedTable::new();
        for p in &self.parts {
            acc.axpy(&p.coefficient, &pure_betti(&p.degrees));
            acc.axpy(&p.coefficient, &pure_betti(&dual_sequence(&p.degrees, self.n)));
        }
        acc
    }

    /// Each part split into its two pure halves, merged when they coincide.
    pub fn expand(&self) -> Decomposition {
        let mut parts: Vec<Part> = Vec::new();
        for p in &self.parts {
            for d in [p.degrees.clone(), dual_sequence(&p.degrees, self.n)] {
                match parts.iter_mut().find(|q| q.degrees == d) {
                    Some(q) => q.coefficient += &p.coefficient,
                    None => parts.push(Part { coefficient: p.coefficient.clone(), degrees: d }),
                }
            }
        }
        parts.sort_by(|a, b| a.degrees.cmp(&b.degrees));
        Decomposition { parts }
    }

    /// Checks the structural properties of a symmetric decomposition:
    /// positive coefficients, sequences of length `s`, no two parts dual to
    /// each other, a strictly increasing chain, and `d^a <= (d^a)^{v,N}`.
    pub fn check_structure(&self, s: usize) -> Result<()> {
        let fail = |m: String| Err(Error::NotDecomposable(m));
        for (a, p) in self.parts.iter().enumerate() {
            if !p.coefficient.is_positive() {
                return fail(format!("part {a} has nonpositive coefficient"));
            }
            if p.degrees.len() != s {
                return fail(format!("part {a} has length {} != {s}", p.degrees.len()));
            }
            if !p.degrees.dominated_by_dual(self.n) {
                return fail(format!("part {a} {:?} exceeds its dual", p.degrees));
            }
            for q in &self.parts[a + 1..] {
                if dual_sequence(&p.degrees, self.n) == q.degrees {
                    return fail(format!("{:?} and {:?} are dual", p.degrees, q.degrees));
                }
            }
        }
        for w in self.parts.windows(2) {
            if !w[0].degrees.lt_pointwise(&w[1].degrees) {
                return fail(format!("{:?} !< {:?}", w[0].degrees, w[1].degrees));
            }
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        parts_to_json(Some(self.n), &self.parts)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (n, parts) = parts_from_json(text)?;
        let n = n.ok_or_else(|| Error::Json("symmetric decomposition needs N".into()))?;
        Ok(SymmetricDecomposition { n, parts })
    }
}

/// Minimal shifts of the remainder, which must cover columns `0..=s` and
/// strictly increase.
fn bottom_sequence(rem: &SignedTable, s: usize) -> Result<DegreeSequence> {
    let mut mins: Vec<Option<i64>> = vec![None; s + 1];
    for (i, j, _) in rem.entries() {
        if i > s {
            return Err(Error::NotDecomposable(format!("entry beyond column {s}")));
        }
        if mins[i].is_none_or(|m| j < m) {
            mins[i] = Some(j);
        }
    }
    let degrees = mins
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::NotDecomposable(format!("column {i} ran out of entries"))))
        .collect::<Result<Vec<_>>>()?;
    DegreeSequence::new(degrees)
        .map_err(|_| Error::NotDecomposable("minimal shifts are not strictly increasing".into()))
}

/// Largest `c` with `rem - c * piece >= 0` on the support of `piece`.
fn max_step(rem: &SignedTable, piece: &BettiTable) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for (i, j, v) in piece.entries() {
        let have = rem.get(i, j);
        if !have.is_positive() {
            return Err(Error::NotDecomposable(format!("pure footprint misses entry ({i},{j})")));
        }
        let c = have / v;
        if best.as_ref().is_none_or(|b| c < *b) {
            best = Some(c);
        }
    }
    best.ok_or_else(|| Error::NotDecomposable("empty footprint".into()))
}

/// Greedy Boij-Soderberg decomposition along minimal shifts.
pub fn decompose(table: &BettiTable) -> Result<Decomposition> {
    let s = table.length();
    let mut rem = table.to_signed();
    let mut parts: Vec<Part> = Vec::new();
    while !rem.is_zero() {
        let d = bottom_sequence(&rem, s)?;
        if let Some(prev) = parts.last() {
            if !prev.degrees.lt_pointwise(&d) {
                return Err(Error::NotDecomposable(format!(
                    "chain breaks: {:?} then {d:?}",
                    prev.degrees
                )));
            }
        }
        let pure = pure_betti(&d);
        let c = max_step(&rem, &pure)?;
        rem.axpy(&-c.clone(), &pure);
        if !rem.is_nonnegative() {
            return Err(Error::NotDecomposable("negative remainder".into()));
        }
        parts.push(Part { coefficient: c, degrees: d });
    }
    Ok(Decomposition { parts })
}

/// Decomposition of a self-dual table into symmetrized pure tables.
pub fn symmetric_decompose(table: &BettiTable) -> Result<SymmetricDecomposition> {
    let (s, n) = is_self_dual(table).ok_or(Error::NotSelfDual)?;
    let mut rem = table.to_signed();
    let mut parts: Vec<Part> = Vec::new();
    while !rem.is_zero() {
        let d = bottom_sequence(&rem, s)?;
        if !d.dominated_by_dual(n) {
            return Err(Error::NotDecomposable(format!("{d:?} is not dominated by its dual for N={n}")));
        }
        if let Some(prev) = parts.last() {
            if !prev.degrees.lt_pointwise(&d) {
                return Err(Error::NotDecomposable(format!(
                    "chain breaks: {:?} then {d:?}",
                    prev.degrees
                )));
            }
        }
        // beta_sym(d, N); equals 2 beta(d) when d is self-dual
        let mut sym = pure_betti(&d).to_signed();
        sym.axpy(&Rational::one(), &pure_betti(&dual_sequence(&d, n)));
        let sym = sym.into_betti()?;
        let r = max_step(&rem, &sym)?;
        rem.axpy(&-r.clone(), &sym);
        if !rem.is_nonnegative() {
            return Err(Error::NotDecomposable("negative remainder".into()));
        }
        parts.push(Part { coefficient: r, degrees: d });
    }
    let dec = SymmetricDecomposition { n, parts };
    dec.check_structure(s)?;
    Ok(dec)
}

/// Entrywise sum of either decomposition kind.
pub fn reconstruct(dec: &AnyDecomposition) -> SignedTable {
    match dec {
        AnyDecomposition::Plain(d) => d.reconstruct(),
        AnyDecomposition::Symmetric(d) => d.reconstruct(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDecomposition {
    Plain(Decomposition),
    Symmetric(SymmetricDecomposition),
}
