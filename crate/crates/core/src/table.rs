//! Graded Betti tables and degree sequences.
//!
//! A table is a sparse map `(i, j) -> beta_{i,j}` with exact rational entries.
//! [`BettiTable`] holds validated tables (strictly positive entries satisfying
//! the rational-Betti-table support condition); [`SignedTable`] is the
//! unrestricted accumulator used for decomposition arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Strictly increasing integer tuple `d_0 < d_1 < ... < d_s` with `s >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::InvalidDegreeSequence(format!(
                "{degrees:?} needs length s >= 1"
            )));
        }
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDegreeSequence(format!(
                "{degrees:?} is not strictly increasing"
            )));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// The length `s` (one less than the number of entries).
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// `(d_1, ..., d_s)`
    pub fn tail(&self) -> &[i64] {
        &self.0[1..]
    }

    /// Pointwise `self <= other` (same length required).
    pub fn le_pointwise(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self <= other` pointwise and `self != other`.
    pub fn lt_pointwise(&self, other: &Self) -> bool {
        self.le_pointwise(other) && self != other
    }

    /// `d_i + d_{s-i} <= N` for every `i`, i.e. `d <= d^{v,N}`.
    pub fn dominated_by_dual(&self, n: i64) -> bool {
        let s = self.len();
        (0..=s).all(|i| self.0[i] + self.0[s - i] <= n)
    }

    pub fn dual(&self, n: i64) -> DegreeSequence {
        dual_sequence(self, n)
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        DegreeSequence::new(v).map_err(serde::de::Error::custom)
    }
}

/// `d^{v,N} = (N - d_s, ..., N - d_0)`.
pub fn dual_sequence(d: &DegreeSequence, n: i64) -> DegreeSequence {
    DegreeSequence(d.0.iter().rev().map(|x| n - x).collect())
}

/// Minimal and maximal shifts per homological degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shifts {
    /// `t_i = min{ j : beta_{i,j} != 0 }`
    pub min: Vec<i64>,
    /// `T_i = max{ j : beta_{i,j} != 0 }`
    pub max: Vec<i64>,
}

/// Sparse table with arbitrary (possibly negative) rational entries. Zero
/// entries are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SignedTable {
    entries: BTreeMap<(usize, i64), Rational>,
}

impl SignedTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_entry(&mut self, i: usize, j: i64, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// `self += a * x`
    pub fn axpy(&mut self, a: &Rational, x: &BettiTable) {
        for (&(i, j), v) in &x.entries {
            self.add_entry(i, j, &(a * v));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every stored entry is positive, i.e. the table could be a
    /// Betti table as far as signs go.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| v.is_positive())
    }

    pub fn into_betti(self) -> Result<BettiTable> {
        BettiTable::validate(self.entries)
    }
}

impl fmt::Debug for SignedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|((i, j), v)| ((i, j), format_rational(v))))
            .finish()
    }
}

/// `a * x + y` over exact rationals. The result may have negative entries.
pub fn table_axpy(a: &Rational, x: &BettiTable, y: Option<&SignedTable>) -> SignedTable {
    let mut out = y.cloned().unwrap_or_default();
    out.axpy(a, x);
    out
}

/// A validated rational Betti table.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), Rational>,
    length: usize,
}

impl BettiTable {
    /// Builds a table from raw `(i, j) -> beta` entries. Repeated keys are
    /// summed before validation.
    pub fn validate<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, i64), Rational)>,
    {
        let mut entries: BTreeMap<(usize, i64), Rational> = BTreeMap::new();
        for (key, v) in raw {
            *entries.entry(key).or_insert_with(Rational::zero) += v;
        }
        if entries.is_empty() {
            return Err(Error::EmptyTable);
        }
        if let Some((&(i, j), _)) = entries.iter().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NonpositiveEntry { i, j });
        }
        for &(i, j) in entries.keys() {
            if i == 0 {
                continue;
            }
            let supported = entries.range((i - 1, i64::MIN)..(i - 1, j)).next().is_some();
            if !supported {
                return Err(Error::SupportViolation { i, j });
            }
        }
        let length = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        Ok(BettiTable { entries, length })
    }

    pub fn from_ints<I: IntoIterator<Item = ((usize, i64), i64)>>(raw: I) -> Result<Self> {
        Self::validate(
            raw.into_iter()
                .map(|(k, v)| (k, Rational::from_integer(BigInt::from(v)))),
        )
    }

    /// Length `s`: the largest homological index carrying an entry.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn column(&self, i: usize) -> impl Iterator<Item = (i64, &Rational)> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    /// `beta_0`: the total of column 0.
    pub fn beta0(&self) -> Rational {
        self.column_total(0)
    }

    pub fn column_total(&self, i: usize) -> Rational {
        self.column(i).fold(Rational::zero(), |acc, (_, v)| acc + v)
    }

    pub fn to_signed(&self) -> SignedTable {
        SignedTable { entries: self.entries.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Result<BettiTable> {
        BettiTable::validate(self.entries.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Min and max shifts. Columns without entries (possible only for
    /// malformed inputs) are skipped, so the vectors may be shorter than s+1.
    pub fn shifts(&self) -> Shifts {
        min_max_shifts(self)
    }

    pub fn to_json(&self) -> String {
        let wire = TableJson {
            entries: self
                .entries()
                .map(|(i, j, v)| EntryJson { i, j, beta: format_rational(v) })
                .collect(),
        };
        serde_json::to_string(&wire).expect("table json")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: TableJson = serde_json::from_str(text)?;
        let mut raw = Vec::with_capacity(wire.entries.len());
        for e in wire.entries {
            raw.push(((e.i, e.j), parse_rational(&e.beta)?));
        }
        BettiTable::validate(raw)
    }

    /// Macaulay2-style diagram: header of column indices, `total:` row, then
    /// one row per `r = j - i`.
    pub fn to_diagram(&self) -> String {
        let cols = self.length + 1;
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
            let hi = self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let cell = |v: Rational| if v.is_zero() { ".".to_string() } else { format_rational(&v) };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((String::new(), (0..cols).map(|c| c.to_string()).collect()));
        grid.push(("total:".into(), (0..cols).map(|c| cell(self.column_total(c))).collect()));
        for &r in &rows {
            grid.push((
                format!("{r}:"),
                (0..cols).map(|c| cell(self.get(c, c as i64 + r))).collect(),
            ));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            let mut line = format!("{label:>label_w$}");
            for (c, v) in cells.iter().enumerate() {
                line.push(' ');
                line.push_str(&format!("{v:>w$}", w = widths[c]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|((i, j), v)| ((i, j), format_rational(v))))
            .finish()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_diagram())
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: i64,
    beta: String,
}

/// Parses a Macaulay2 Betti diagram. Row `r`, column `i` holds
/// `beta_{i, i+r}`; `.` is zero. A header line of column indices and a
/// `total:` row are optional; the totals are checked when present.
pub fn parse_betti_diagram(text: &str) -> Result<BettiTable> {
    let mut header: Option<Vec<usize>> = None;
    let mut totals: Option<(usize, Vec<Rational>)> = None;
    let mut raw = Vec::new();
    let mut saw_row = false;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: lineno, message };
        let Some((label, rest)) = trimmed.split_once(':') else {
            if saw_row || header.is_some() || totals.is_some() {
                return Err(err(format!("expected 'row: values', got {trimmed:?}")));
            }
            let cols = trimmed
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err(format!("bad header line {trimmed:?}")))?;
            if cols.iter().enumerate().any(|(k, &c)| k != c) {
                return Err(err("header columns must be 0, 1, 2, ...".into()));
            }
            header = Some(cols);
            continue;
        };
        let label = label.trim();
        let values = rest
            .split_whitespace()
            .map(|tok| {
                if tok == "." {
                    Ok(Rational::zero())
                } else {
                    parse_rational(tok).map_err(|_| err(format!("bad entry {tok:?}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(h) = &header {
            if values.len() > h.len() {
                return Err(err(format!(
                    "{} entries but header has {} columns",
                    values.len(),
                    h.len()
                )));
            }
        }
        if label == "total" {
            if totals.is_some() {
                return Err(err("duplicate total row".into()));
            }
            totals = Some((lineno, values));
            continue;
        }
        let r: i64 = label
            .parse()
            .map_err(|_| err(format!("bad row label {label:?}")))?;
        saw_row = true;
        for (c, v) in values.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if v.is_negative() {
                return Err(err(format!("negative entry in column {c}")));
            }
            raw.push(((c, c as i64 + r), v));
        }
    }
    if !saw_row {
        return Err(Error::Parse { line: text.lines().count().max(1), message: "no diagram rows".into() });
    }
    let table = BettiTable::validate(raw)?;
    if let Some((_, tot)) = totals {
        let cols = table.length() + 1;
        for (c, want) in tot.iter().enumerate() {
            if table.column_total(c) != *want {
                return Err(Error::TotalMismatch { column: c });
            }
        }
        if tot.len() < cols {
            return Err(Error::TotalMismatch { column: tot.len() });
        }
    }
    Ok(table)
}

pub fn min_max_shifts(table: &BettiTable) -> Shifts {
    let mut min = Vec::new();
    let mut max = Vec::new();
    for i in 0..=table.length() {
        let mut col = table.column(i).map(|(j, _)| j);
        if let Some(first) = col.next() {
            min.push(first);
            max.push(col.last().unwrap_or(first));
        }
    }
    Shifts { min, max }
}

/// Returns `(s, N)` when `beta_{i,j} = beta_{s-i, N-j}` for every entry.
pub fn is_self_dual(table: &BettiTable) -> Option<(usize, i64)> {
    let s = table.length();
    let top = table.column(s).map(|(j, _)| j).max()?;
    let bottom = table.column(0).map(|(j, _)| j).min()?;
    let n = top + bottom;
    table
        .entries()
        .all(|(i, j, v)| table.get(s - i, n - j) == *v)
        .then_some((s, n))
}

/// Herzog-Kuhl pure table: `beta_i = 1 / prod_{l != i} |d_l - d_i|` at
/// degree `d_i`.
pub fn pure_betti(d: &DegreeSequence) -> BettiTable {
    let entries: BTreeMap<(usize, i64), Rational> = (0..=d.len())
        .map(|i| ((i, d.get(i)), pure_entry(d, i)))
        .collect();
    BettiTable { entries, length: d.len() }
}

pub fn pure_entry(d: &DegreeSequence, i: usize) -> Rational {
    let di = d.get(i);
    let denom: BigInt = d
        .degrees()
        .iter()
        .enumerate()
        .filter(|&(l, _)| l != i)
        .map(|(_, &dl)| BigInt::from((dl - di).abs()))
        .product();
    Rational::new(BigInt::one(), denom)
}

/// `beta(d) + beta(d^{v,N})`.
pub fn symmetrized_pure(d: &DegreeSequence, n: i64) -> Result<BettiTable> {
    let min = d.first() + d.last();
    if n < min {
        return Err(Error::InvalidN { n, min });
    }
    let mut acc = pure_betti(d).to_signed();
    acc.axpy(&Rational::one(), &pure_betti(&dual_sequence(d, n)));
    acc.into_betti()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    pub const EXAMPLE1: &str = "             0  1  2  3  4 5
      total: 1 11 28 28 11 1
          0: 1  .  .  .  . .
          1: .  3  .  .  . .
          2: .  8 20  8  . .
          3: .  .  8 20  8 .
          4: .  .  .  .  3 .
          5: .  .  .  .  . 1
";

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        let k2 = BettiTable::from_ints([((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]).unwrap();
        assert_eq!(k2.length(), 2);
        assert_eq!(
            BettiTable::from_ints([((0, 0), 1), ((2, 2), 1)]),
            Err(Error::SupportViolation { i: 2, j: 2 })
        );
        assert_eq!(BettiTable::from_ints([]), Err(Error::EmptyTable));
        assert_eq!(
            BettiTable::from_ints([((0, 0), 1), ((1, 1), -1)]),
            Err(Error::NonpositiveEntry { i: 1, j: 1 })
        );
        // support needs a strictly smaller degree in the previous column
        assert_eq!(
            BettiTable::from_ints([((0, 1), 1), ((1, 1), 1)]),
            Err(Error::SupportViolation { i: 1, j: 1 })
        );
    }

    #[test]
    fn degree_sequence_rules() {
        assert!(DegreeSequence::new(vec![0]).is_err());
        assert!(DegreeSequence::new(vec![0, 2, 2]).is_err());
        assert_eq!(seq(&[0, 1, 3]).len(), 2);
        assert!(seq(&[0, 1, 3]).lt_pointwise(&seq(&[0, 2, 3])));
        assert!(!seq(&[0, 2, 4]).lt_pointwise(&seq(&[0, 1, 4])));
    }

    #[test]
    fn parse_example_one() {
        let t = parse_betti_diagram(EXAMPLE1).unwrap();
        assert_eq!(t.length(), 5);
        assert_eq!(t.get(2, 4), rat(20));
        assert_eq!(t.get(1, 2), rat(3));
        assert_eq!(t.get(5, 10), rat(1));
    }

    #[test]
    fn parse_without_header_or_total() {
        let t = parse_betti_diagram("0: 1\n1: . 2\n2: . . 1").unwrap();
        let k2 = BettiTable::from_ints([((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]).unwrap();
        // row 1 col 1 is beta_{1,2}, row 2 col 2 is beta_{2,4}
        assert_eq!(t.get(1, 2), rat(2));
        assert_ne!(t, k2);
        let t = parse_betti_diagram("0: 1 2 1").unwrap();
        assert_eq!(t, k2);
    }

    #[test]
    fn parse_errors() {
        let bad_total = EXAMPLE1.replace("total: 1 11 28", "total: 1 12 28");
        assert_eq!(parse_betti_diagram(&bad_total), Err(Error::TotalMismatch { column: 1 }));
        match parse_betti_diagram("0: 1\nx: 2") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_betti_diagram("0: 1 q") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_betti_diagram("   0 1\n0: 1 2 3") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_betti_diagram(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn shifts_of_example_one() {
        let s = parse_betti_diagram(EXAMPLE1).unwrap().shifts();
        assert_eq!(s.max[1], 3);
        assert_eq!(s.max[2], 5);
        assert_eq!(s.min[3], 5);
        assert_eq!(s.min[4], 7);
        assert_eq!((s.min[5], s.max[5]), (10, 10));
    }

    #[test]
    fn self_duality() {
        let t = parse_betti_diagram(EXAMPLE1).unwrap();
        assert_eq!(is_self_dual(&t), Some((5, 10)));
        let k3 = BettiTable::from_ints([((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]).unwrap();
        assert_eq!(is_self_dual(&k3), Some((3, 3)));
        let t = BettiTable::from_ints([((0, 0), 2), ((1, 1), 3), ((2, 3), 1)]).unwrap();
        assert_eq!(is_self_dual(&t), None);
    }

    #[test]
    fn duals() {
        assert_eq!(dual_sequence(&seq(&[0, 1, 3]), 3), seq(&[0, 2, 3]));
        assert_eq!(dual_sequence(&seq(&[0, 1, 2]), 2), seq(&[0, 1, 2]));
        assert_eq!(dual_sequence(&seq(&[0, 1, 3]), 4), seq(&[1, 3, 4]));
    }

    #[test]
    fn pure_tables() {
        let b = pure_betti(&seq(&[0, 1, 2]));
        assert_eq!((b.get(0, 0), b.get(1, 1), b.get(2, 2)), (ratio(1, 2), rat(1), ratio(1, 2)));
        let b = pure_betti(&seq(&[0, 1, 3]));
        assert_eq!((b.get(0, 0), b.get(1, 1), b.get(2, 3)), (ratio(1, 3), ratio(1, 2), ratio(1, 6)));
        let b = pure_betti(&seq(&[0, 2]));
        assert_eq!((b.get(0, 0), b.get(1, 2)), (ratio(1, 2), ratio(1, 2)));
    }

    #[test]
    fn symmetrized_tables() {
        let d = seq(&[0, 1, 2, 3]);
        let sym = symmetrized_pure(&d, 3).unwrap();
        assert_eq!(sym, pure_betti(&d).scale(&rat(2)).unwrap());
        assert_eq!(sym.get(0, 0), ratio(1, 3));
        assert_eq!(sym.get(1, 1), rat(1));

        let sym = symmetrized_pure(&seq(&[0, 1, 3]), 4).unwrap();
        assert_eq!(sym.get(0, 0), ratio(1, 3));
        assert_eq!(sym.get(0, 1), ratio(1, 6));

        let sym = symmetrized_pure(&seq(&[0, 1, 3]), 3).unwrap();
        let mut want = pure_betti(&seq(&[0, 1, 3])).to_signed();
        want.axpy(&rat(1), &pure_betti(&seq(&[0, 2, 3])));
        assert_eq!(sym.to_signed(), want);

        assert_eq!(
            symmetrized_pure(&seq(&[0, 1, 3]), 2),
            Err(Error::InvalidN { n: 2, min: 3 })
        );
    }

    #[test]
    fn axpy_examples() {
        let b = pure_betti(&seq(&[0, 1, 2]));
        let k2 = BettiTable::from_ints([((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]).unwrap();
        assert_eq!(table_axpy(&rat(2), &b, None), k2.to_signed());
        assert!(table_axpy(&rat(-2), &b, Some(&k2.to_signed())).is_zero());
        let r = table_axpy(&rat(-3), &b, Some(&k2.to_signed()));
        assert_eq!(r.get(0, 0), ratio(-1, 2));
        assert!(!r.is_nonnegative());
        assert!(r.into_betti().is_err());
    }

    #[test]
    fn json_and_diagram_round_trip() {
        let t = parse_betti_diagram(EXAMPLE1).unwrap();
        let back = BettiTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(t.to_json().starts_with(r#"{"entries":[{"i":0,"j":0,"beta":"1"}"#));
        let again = parse_betti_diagram(&t.to_diagram()).unwrap();
        assert_eq!(again, t);
        let p = pure_betti(&seq(&[0, 1, 3]));
        assert_eq!(parse_betti_diagram(&p.to_diagram()).unwrap(), p);
    }

    #[test]
    fn emitted_diagram_layout() {
        let k2 = BettiTable::from_ints([((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]).unwrap();
        assert_eq!(k2.to_diagram(), "       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n");
    }
}
