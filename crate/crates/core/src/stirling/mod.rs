//! Stirling numbers of both kinds, each computed by four independent
//! constructions, plus the tableau machinery and the parameterized
//! recurrences that generalize them.

pub mod recurrence;
pub mod tableau;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{for_each_composition, for_each_strict_chain, for_each_weak_chain};
use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational};
use crate::series::{expm1_compose, log1p_compose, TranslationSeries};

pub use recurrence::{recurrence_m, recurrence_n};
pub use tableau::{factored_constant, tableau_enumerate, tableau_polynomial, Tableau, TableauPolynomial, TableauShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StirlingKind {
    /// Signless, first kind.
    First,
    Second,
}

impl StirlingKind {
    pub fn number(self) -> u8 {
        match self {
            StirlingKind::First => 1,
            StirlingKind::Second => 2,
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for StirlingKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" | "first" => Ok(StirlingKind::First),
            "2" | "second" => Ok(StirlingKind::Second),
            _ => Err(format!("unknown Stirling kind {s:?} (expected 1 or 2)")),
        }
    }
}

/// The constructive definitions available for each kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Definition {
    /// Sum of products over index chains.
    Explicit,
    /// Sum over compositions into positive parts (called the partition form
    /// for the second kind).
    Composition,
    Recurrence,
    /// Coefficient extraction from `log(1+y)^n` or `(e^y - 1)^n`.
    GenFunc,
    /// Factored tableau constant `(m-n; n)`.
    Tableau,
}

impl Definition {
    pub const ALL: [Definition; 5] = [
        Definition::Explicit,
        Definition::Composition,
        Definition::Recurrence,
        Definition::GenFunc,
        Definition::Tableau,
    ];

    pub fn name(self, kind: StirlingKind) -> &'static str {
        match (self, kind) {
            (Definition::Explicit, _) => "explicit",
            (Definition::Composition, StirlingKind::First) => "composition",
            (Definition::Composition, StirlingKind::Second) => "partition",
            (Definition::Recurrence, _) => "recurrence",
            (Definition::GenFunc, _) => "genfunc",
            (Definition::Tableau, _) => "tableau",
        }
    }
}

impl FromStr for Definition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "explicit" => Ok(Definition::Explicit),
            "composition" | "partition" => Ok(Definition::Composition),
            "recurrence" => Ok(Definition::Recurrence),
            "genfunc" => Ok(Definition::GenFunc),
            "tableau" => Ok(Definition::Tableau),
            _ => Err(format!("unknown definition {s:?}")),
        }
    }
}

fn check_range(m: usize, n: usize) -> Result<()> {
    if n > m {
        Err(Error::StirlingOutOfRange { m, n })
    } else {
        Ok(())
    }
}

fn exact_integer(q: Rational, what: &str) -> BigInt {
    assert!(q.is_integer(), "{what} produced the non-integer {q}");
    q.to_integer()
}

/// `sum_{0 <= t_1 < ... < t_{m-n} < m} t_1 ... t_{m-n}`.
pub fn stirling1_explicit(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    if n == 0 {
        return Ok(if m == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut total = BigInt::zero();
    for_each_strict_chain(m - n, m, &mut |ts| {
        total += ts.iter().map(|&t| BigInt::from(t)).product::<BigInt>();
    });
    Ok(total)
}

/// `(m!/n!) * sum over compositions i_1 + ... + i_n = m of 1/(i_1 ... i_n)`.
pub fn stirling1_composition(m: usize, n: usize) -> Result<Rational> {
    check_range(m, n)?;
    let mut total = Rational::zero();
    for_each_composition(m, n, 1, &mut |parts| {
        let den: BigInt = parts.iter().map(|&i| BigInt::from(i)).product();
        total += Rational::new(BigInt::one(), den);
    });
    Ok(total * Rational::new(factorial(m), factorial(n)))
}

/// Dynamic-programming triangle `rows[m][n]` for `m <= max_m`.
fn recurrence_triangle(kind: StirlingKind, max_m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        let mut row = vec![BigInt::zero(); m + 1];
        row[m] = BigInt::one();
        for n in 1..m {
            let weight = match kind {
                StirlingKind::First => m - 1,
                StirlingKind::Second => n,
            };
            row[n] = BigInt::from(weight) * &rows[m - 1][n] + &rows[m - 1][n - 1];
        }
        rows.push(row);
    }
    rows
}

/// `S(m,n) = (m-1) S(m-1,n) + S(m-1,n-1)` with `S(m,0) = 0` for `m > 0` and
/// `S(m,m) = 1`.
pub fn stirling1_recurrence(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    Ok(recurrence_triangle(StirlingKind::First, m)[m][n].clone())
}

/// Reads `S(m,n)` off the `y^m` coefficient of `log(1+y)^n`, which equals
/// `(-1)^{m-n} (n!/m!) S(m,n)`.
pub fn stirling1_genfunc(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    let log = log1p_compose(&TranslationSeries::y(m))?;
    let c = genfunc_coefficient(&log.pow(n), m);
    let sign: i64 = if (m - n).is_multiple_of(2) { 1 } else { -1 };
    let value = c * Rational::new(factorial(m) * BigInt::from(sign), factorial(n));
    Ok(exact_integer(value, "stirling1_genfunc"))
}

fn genfunc_coefficient(s: &TranslationSeries, m: usize) -> Rational {
    let coeff = s.coefficient(m).expect("series built at order m");
    coeff
        .as_scalar()
        .and_then(|p| p.as_constant())
        .expect("scalar series has rational coefficients")
}

/// `sum_{0 <= i_1 <= ... <= i_{m-n} <= n} i_1 ... i_{m-n}`.
pub fn stirling2_explicit(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    if n == 0 {
        return Ok(if m == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut total = BigInt::zero();
    for_each_weak_chain(m - n, n, &mut |is| {
        total += is.iter().map(|&i| BigInt::from(i)).product::<BigInt>();
    });
    Ok(total)
}

/// `(m!/n!) * sum over compositions i_1 + ... + i_n = m of 1/(i_1! ... i_n!)`.
pub fn stirling2_partition(m: usize, n: usize) -> Result<Rational> {
    check_range(m, n)?;
    let mut total = Rational::zero();
    for_each_composition(m, n, 1, &mut |parts| {
        let den: BigInt = parts.iter().map(|&i| factorial(i)).product();
        total += Rational::new(BigInt::one(), den);
    });
    Ok(total * Rational::new(factorial(m), factorial(n)))
}

/// `S(m,n) = n S(m-1,n) + S(m-1,n-1)` with the same boundary as the first
/// kind.
pub fn stirling2_recurrence(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    Ok(recurrence_triangle(StirlingKind::Second, m)[m][n].clone())
}

/// Reads `S(m,n)` off the `y^m` coefficient of `(e^y - 1)^n`, which equals
/// `(n!/m!) S(m,n)`.
pub fn stirling2_genfunc(m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    let e = expm1_compose(&TranslationSeries::y(m))?;
    let c = genfunc_coefficient(&e.pow(n), m);
    let value = c * Rational::new(factorial(m), factorial(n));
    Ok(exact_integer(value, "stirling2_genfunc"))
}

/// Stirling number recovered from the factored tableau constant `(m-n; n)`.
pub fn stirling_tableau(kind: StirlingKind, m: usize, n: usize) -> Result<BigInt> {
    check_range(m, n)?;
    let c = factored_constant(&TableauShape::new(vec![m - n, n]), kind)?;
    Ok(match kind {
        StirlingKind::First if (m - n) % 2 == 1 => -c,
        _ => c,
    })
}

/// `S_kind(m, n)` by the chosen construction.
pub fn stirling(kind: StirlingKind, def: Definition, m: usize, n: usize) -> Result<BigInt> {
    use Definition::*;
    use StirlingKind::*;
    match (kind, def) {
        (First, Explicit) => stirling1_explicit(m, n),
        (First, Composition) => stirling1_composition(m, n).map(|q| exact_integer(q, "stirling1_composition")),
        (First, Recurrence) => stirling1_recurrence(m, n),
        (First, GenFunc) => stirling1_genfunc(m, n),
        (Second, Explicit) => stirling2_explicit(m, n),
        (Second, Composition) => stirling2_partition(m, n).map(|q| exact_integer(q, "stirling2_partition")),
        (Second, Recurrence) => stirling2_recurrence(m, n),
        (Second, GenFunc) => stirling2_genfunc(m, n),
        (_, Tableau) => stirling_tableau(kind, m, n),
    }
}

/// Precomputed triangle `S(m, n)`, `0 <= n <= m <= max_m`, from one
/// definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn build(kind: StirlingKind, def: Definition, max_m: usize) -> Self {
        let rows = match def {
            Definition::Recurrence => recurrence_triangle(kind, max_m),
            _ => (0..=max_m)
                .map(|m| {
                    (0..=m)
                        .map(|n| stirling(kind, def, m, n).expect("n <= m"))
                        .collect()
                })
                .collect(),
        };
        Self { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `S(m, n)`; zero when `n > m`. Panics beyond the tabulated range.
    pub fn get(&self, m: usize, n: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if n > m {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.rows[m][n]
    }

    /// Overwrites one entry. Used to build corrupted fixtures for negative
    /// controls.
    pub fn set(&mut self, m: usize, n: usize, value: BigInt) {
        self.rows[m][n] = value;
    }

    /// Lexicographically first `(m, n)` where the tables differ.
    pub fn first_difference(&self, other: &StirlingTable) -> Option<(usize, usize)> {
        let top = self.max_m().min(other.max_m());
        (0..=top)
            .flat_map(|m| (0..=m).map(move |n| (m, n)))
            .find(|&(m, n)| self.get(m, n) != other.get(m, n))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|v| !v.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn first_kind_examples() {
        assert_eq!(stirling1_explicit(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(stirling1_explicit(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(stirling1_explicit(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(stirling1_composition(4, 2).unwrap(), int(11));
        assert_eq!(stirling1_composition(6, 6).unwrap(), int(1));
        assert_eq!(stirling1_composition(1, 0).unwrap(), int(0));
        assert_eq!(stirling1_recurrence(7, 7).unwrap(), BigInt::from(1));
        assert_eq!(stirling1_recurrence(5, 1).unwrap(), BigInt::from(24));
        assert_eq!(stirling1_recurrence(4, 3).unwrap(), BigInt::from(6));
        assert_eq!(stirling1_genfunc(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(stirling1_genfunc(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling1_genfunc(5, 5).unwrap(), BigInt::from(1));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(stirling2_explicit(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(stirling2_recurrence(4, 2).unwrap(), BigInt::from(7));
        assert_eq!(stirling2_partition(4, 2).unwrap(), int(7));
        assert_eq!(stirling2_genfunc(4, 2).unwrap(), BigInt::from(7));
        for m in 1..6 {
            assert_eq!(stirling2_explicit(m, 0).unwrap(), BigInt::zero());
            assert_eq!(stirling2_recurrence(m, 0).unwrap(), BigInt::zero());
            assert_eq!(stirling2_partition(m, 0).unwrap(), int(0));
            assert_eq!(stirling2_genfunc(m, 0).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn n_above_m_is_rejected() {
        let err = Error::StirlingOutOfRange { m: 2, n: 3 };
        assert_eq!(stirling1_explicit(2, 3), Err(err.clone()));
        assert_eq!(stirling1_composition(2, 3), Err(err.clone()));
        assert_eq!(stirling1_recurrence(2, 3), Err(err.clone()));
        assert_eq!(stirling1_genfunc(2, 3), Err(err.clone()));
        assert_eq!(stirling2_explicit(2, 3), Err(err.clone()));
        assert_eq!(stirling2_partition(2, 3), Err(err.clone()));
        assert_eq!(stirling2_recurrence(2, 3), Err(err.clone()));
        assert_eq!(stirling2_genfunc(2, 3), Err(err));
    }

    #[test]
    fn row_four_second_kind() {
        let t = StirlingTable::build(StirlingKind::Second, Definition::Recurrence, 4);
        let row: Vec<i64> = t.rows()[4].iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(row, vec![0, 1, 7, 6, 1]);
    }

    #[test]
    fn tables_agree_to_eight() {
        for kind in [StirlingKind::First, StirlingKind::Second] {
            let base = StirlingTable::build(kind, Definition::Recurrence, 8);
            for def in Definition::ALL {
                let t = StirlingTable::build(kind, def, 8);
                assert_eq!(t.first_difference(&base), None, "{kind:?} {def:?}");
            }
        }
    }

    #[test]
    fn first_difference_is_lexicographic() {
        let base = StirlingTable::build(StirlingKind::First, Definition::Recurrence, 6);
        let mut bad = base.clone();
        bad.set(6, 1, BigInt::from(0));
        bad.set(5, 3, BigInt::from(0));
        assert_eq!(bad.first_difference(&base), Some((5, 3)));
    }

    #[test]
    fn parse_names() {
        assert_eq!("partition".parse::<Definition>().unwrap(), Definition::Composition);
        assert_eq!(Definition::Composition.name(StirlingKind::Second), "partition");
        assert!("bogus".parse::<Definition>().is_err());
        assert_eq!("2".parse::<StirlingKind>().unwrap(), StirlingKind::Second);
    }
}
