//! Column tableaux encoding the summands of iterated derivatives of products
//! of level variables.
//!
//! A shape is a list of column heights, left to right. Entries are filled top
//! to bottom. For the first kind the entries of a column strictly increase and
//! each is at most the number of entries above it in its column plus the
//! number of entries in all columns to its right. For the second kind the
//! entries weakly increase and are bounded by the number of entries to the
//! right only. Either way a column's admissible fillings depend only on its
//! height and on how many entries lie to its right.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::StirlingKind;
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauShape {
    heights: Vec<usize>,
}

impl TableauShape {
    pub fn new(heights: Vec<usize>) -> Self {
        Self { heights }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn total(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Number of entries strictly to the right of column `i`.
    pub fn right_of(&self, i: usize) -> usize {
        self.heights[i + 1..].iter().sum()
    }

    /// Every shape with between one and `max_columns` columns whose total
    /// number of entries is at most `max_total`, in lexicographic order.
    pub fn all_up_to(max_total: usize, max_columns: usize) -> Vec<TableauShape> {
        fn go(left: usize, cols: usize, cur: &mut Vec<usize>, out: &mut Vec<TableauShape>) {
            if !cur.is_empty() {
                out.push(TableauShape::new(cur.clone()));
            }
            if cur.len() == cols {
                return;
            }
            for h in 0..=left {
                cur.push(h);
                go(left - h, cols, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(max_total, max_columns, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl FromStr for TableauShape {
    type Err = Error;

    /// Comma-separated heights, e.g. `4,3,5`. The empty string is the empty
    /// shape.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::default());
        }
        t.split(',')
            .map(|h| h.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
            .map_err(|_| Error::ParseShape(s.to_string()))
    }
}

impl fmt::Display for TableauShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filled shape; `columns[i]` lists the entries of column `i` top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Self {
        Self { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn shape(&self) -> TableauShape {
        TableauShape::new(self.columns.iter().map(Vec::len).collect())
    }

    pub fn is_valid(&self, kind: StirlingKind) -> bool {
        let shape = self.shape();
        self.columns
            .iter()
            .enumerate()
            .all(|(i, col)| column_is_valid(col, shape.right_of(i), kind))
    }

    /// `prod_i prod_{e in column i} (x_i - e)` (first kind) or `(x_i + e)`.
    fn polynomial(&self, kind: StirlingKind) -> TableauPolynomial {
        let vars = self.columns.len();
        self.columns
            .iter()
            .enumerate()
            .fold(TableauPolynomial::one(vars), |acc, (i, col)| {
                col.iter().fold(acc, |acc, &e| {
                    let shift = match kind {
                        StirlingKind::First => -BigInt::from(e),
                        StirlingKind::Second => BigInt::from(e),
                    };
                    acc.mul(&TableauPolynomial::linear(vars, i, shift))
                })
            })
    }
}

fn column_is_valid(col: &[usize], right: usize, kind: StirlingKind) -> bool {
    let ascending = col.windows(2).all(|w| match kind {
        StirlingKind::First => w[0] < w[1],
        StirlingKind::Second => w[0] <= w[1],
    });
    let bounded = col.iter().enumerate().all(|(above, &e)| match kind {
        StirlingKind::First => e <= above + right,
        StirlingKind::Second => e <= right,
    });
    ascending && bounded
}

/// All admissible fillings of one column, ascending lexicographically.
fn column_fillings(height: usize, right: usize, kind: StirlingKind) -> Vec<Vec<usize>> {
    fn go(height: usize, right: usize, kind: StirlingKind, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let pos = cur.len();
        if pos == height {
            out.push(cur.clone());
            return;
        }
        let (lo, hi) = match kind {
            StirlingKind::First => (cur.last().map_or(0, |&p| p + 1), pos + right),
            StirlingKind::Second => (cur.last().copied().unwrap_or(0), right),
        };
        for e in lo..=hi {
            cur.push(e);
            go(height, right, kind, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(height, right, kind, &mut Vec::with_capacity(height), &mut out);
    out
}

/// Every valid tableau of `shape`, ordered lexicographically by the
/// left-to-right concatenation of the columns.
///
/// Columns are filled right to left so that each column sees the number of
/// entries to its right; the sequences are then combined with the leftmost
/// column varying slowest.
pub fn tableau_enumerate(shape: &TableauShape, kind: StirlingKind) -> Vec<Tableau> {
    let n = shape.columns();
    let mut per_column: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut right = 0;
    for i in (0..n).rev() {
        per_column[i] = column_fillings(shape.heights()[i], right, kind);
        right += shape.heights()[i];
    }
    let mut out = vec![Vec::<Vec<usize>>::new()];
    for options in &per_column {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |col| {
                    let mut next = prefix.clone();
                    next.push(col.clone());
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Tableau::from_columns).collect()
}

/// Sparse integer polynomial in `x_1, ..., x_n`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TableauPolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], BigInt::one());
        p
    }

    /// `x_{var+1} + shift` (variables are 1-based when printed).
    pub fn linear(vars: usize, var: usize, shift: BigInt) -> Self {
        let mut p = Self::zero(vars);
        let mut e = vec![0; vars];
        e[var] = 1;
        p.add_term(e, BigInt::one());
        p.add_term(vec![0; vars], shift);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Degree in `x_{var+1}`.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn eval(&self, at: &[Rational]) -> Rational {
        assert_eq!(at.len(), self.vars, "one value per variable");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(at)
                    .fold(Rational::from_integer(c.clone()), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }
}

impl fmt::Display for TableauPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { format!("x{}", v + 1) } else { format!("x{}^{}", v + 1, k) })
                .collect();
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `[m_1, ..., m_n]_kind`: the sum over all valid tableaux of the products of
/// shifted entries.
pub fn tableau_polynomial(shape: &TableauShape, kind: StirlingKind) -> TableauPolynomial {
    tableau_enumerate(shape, kind)
        .iter()
        .fold(TableauPolynomial::zero(shape.columns()), |acc, t| acc.add(&t.polynomial(kind)))
}

/// `(m_1, ..., m_{n-1}; m_n)_kind`: with the forced rightmost column factored
/// out and every remaining variable set to zero, each tableau contributes the
/// product of its negated (first kind) or plain (second kind) entries outside
/// the rightmost column.
pub fn factored_constant(shape: &TableauShape, kind: StirlingKind) -> Result<BigInt> {
    let n = shape.columns();
    if n == 0 {
        return Err(Error::EmptyShape);
    }
    Ok(tableau_enumerate(shape, kind)
        .iter()
        .map(|t| {
            t.columns()[..n - 1]
                .iter()
                .flatten()
                .map(|&e| match kind {
                    StirlingKind::First => -BigInt::from(e),
                    StirlingKind::Second => BigInt::from(e),
                })
                .product::<BigInt>()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn shape(h: &[usize]) -> TableauShape {
        TableauShape::new(h.to_vec())
    }

    fn tab(cols: &[&[usize]]) -> Tableau {
        Tableau::from_columns(cols.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn worked_examples_first_kind() {
        let all = tableau_enumerate(&shape(&[4, 3, 5]), StirlingKind::First);
        let valid = tab(&[&[0, 2, 8, 11], &[5, 6, 7], &[0, 1, 2, 3, 4]]);
        let unsorted = tab(&[&[0, 8, 2, 11], &[3, 5, 6], &[0, 1, 2, 3, 4]]);
        let too_big = tab(&[&[0, 2, 8, 11], &[3, 5, 20], &[0, 1, 2, 3, 4]]);
        assert!(valid.is_valid(StirlingKind::First));
        assert!(!unsorted.is_valid(StirlingKind::First));
        assert!(!too_big.is_valid(StirlingKind::First));
        assert!(all.contains(&valid));
        assert!(!all.contains(&unsorted));
        assert!(!all.contains(&too_big));
        assert!(all.iter().all(|t| t.is_valid(StirlingKind::First)));
    }

    #[test]
    fn worked_examples_second_kind() {
        let all = tableau_enumerate(&shape(&[4, 3, 5]), StirlingKind::Second);
        let valid = tab(&[&[0, 2, 6, 8], &[4, 5, 5], &[0, 0, 0, 0, 0]]);
        let unsorted = tab(&[&[0, 8, 2, 8], &[3, 5, 5], &[0, 0, 0, 0, 0]]);
        let too_big = tab(&[&[0, 2, 8, 8], &[3, 5, 6], &[0, 0, 0, 0, 0]]);
        assert!(all.contains(&valid));
        assert!(!all.contains(&unsorted));
        assert!(!all.contains(&too_big));
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for kind in [StirlingKind::First, StirlingKind::Second] {
            let all = tableau_enumerate(&shape(&[2, 1, 2]), kind);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(all, sorted);
            // brute force over a box of candidate entries
            let mut brute = Vec::new();
            let bound = 6;
            for a in 0..bound {
                for b in 0..bound {
                    for c in 0..bound {
                        for d in 0..bound {
                            for e in 0..bound {
                                let t = tab(&[&[a, b], &[c], &[d, e]]);
                                if t.is_valid(kind) {
                                    brute.push(t);
                                }
                            }
                        }
                    }
                }
            }
            brute.sort();
            assert_eq!(all, brute, "{kind:?}");
        }
    }

    #[test]
    fn empty_shape_has_one_tableau() {
        let all = tableau_enumerate(&TableauShape::default(), StirlingKind::First);
        assert_eq!(all, vec![tab(&[])]);
        assert_eq!(factored_constant(&TableauShape::default(), StirlingKind::First), Err(Error::EmptyShape));
    }

    #[test]
    fn single_columns_are_forced() {
        for h in 0..7 {
            assert_eq!(tableau_enumerate(&shape(&[h]), StirlingKind::First).len(), 1);
            assert_eq!(tableau_enumerate(&shape(&[h]), StirlingKind::Second).len(), 1);
        }
    }

    #[test]
    fn polynomial_examples() {
        let p = tableau_polynomial(&shape(&[1]), StirlingKind::First);
        assert_eq!(p.to_string(), "x1");
        let p = tableau_polynomial(&shape(&[2]), StirlingKind::First);
        assert_eq!(p.to_string(), "x1^2 - x1");
        // x1*x2 + (x1 + 1)*x2
        let p = tableau_polynomial(&shape(&[1, 1]), StirlingKind::Second);
        assert_eq!(p.to_string(), "2*x1*x2 + x2");
    }

    #[test]
    fn polynomial_degrees_match_heights() {
        for kind in [StirlingKind::First, StirlingKind::Second] {
            let p = tableau_polynomial(&shape(&[2, 0, 3, 1]), kind);
            for (i, &h) in [2u32, 0, 3, 1].iter().enumerate() {
                assert_eq!(p.degree_in(i), Some(h));
            }
        }
    }

    #[test]
    fn factored_constant_examples() {
        assert_eq!(factored_constant(&shape(&[2, 1]), StirlingKind::First).unwrap(), BigInt::from(2));
        assert_eq!(factored_constant(&shape(&[1, 2]), StirlingKind::Second).unwrap(), BigInt::from(3));
        assert_eq!(factored_constant(&shape(&[0, 0]), StirlingKind::First).unwrap(), BigInt::from(1));
        assert_eq!(factored_constant(&shape(&[0, 0]), StirlingKind::Second).unwrap(), BigInt::from(1));
        assert_eq!(factored_constant(&shape(&[2, 1]), StirlingKind::Second).unwrap(), BigInt::from(1));
    }

    #[test]
    fn factored_constant_matches_polynomial() {
        // Setting every variable but the last to zero leaves the constant
        // times the rightmost column's factor.
        for kind in [StirlingKind::First, StirlingKind::Second] {
            let s = shape(&[2, 1, 2]);
            let p = tableau_polynomial(&s, kind);
            let c = Rational::from_integer(factored_constant(&s, kind).unwrap());
            for x in 0..5i64 {
                let right = match kind {
                    StirlingKind::First => int(x * (x - 1)),
                    StirlingKind::Second => int(x * x),
                };
                let got = p.eval(&[int(0), int(0), int(x)]);
                assert_eq!(got, &c * &right);
            }
        }
    }

    #[test]
    fn shape_parsing() {
        assert_eq!("4,3,5".parse::<TableauShape>().unwrap(), shape(&[4, 3, 5]));
        assert_eq!(" 1 ".parse::<TableauShape>().unwrap(), shape(&[1]));
        assert!("1,,2".parse::<TableauShape>().is_err());
        assert!("a".parse::<TableauShape>().is_err());
        assert!("-1".parse::<TableauShape>().is_err());
    }

    #[test]
    fn shape_sweep_counts() {
        let shapes = TableauShape::all_up_to(2, 2);
        // (0) (0,0) (0,1) (0,2) (1) (1,0) (1,1) (2) (2,0)
        assert_eq!(shapes.len(), 9);
    }
}
