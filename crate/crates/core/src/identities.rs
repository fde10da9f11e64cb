//! Exhaustive sweeps that verify the closed forms and identities coefficientwise.
//!
//! Every check walks its parameter range in ascending lexicographic order and
//! stops at the first failure, so a failing report always carries the
//! smallest counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, Monomial};
use crate::expansions::{
    method1_exp_with, method1_log_with, method2_exp_with, method2_log_with, oracle_expansion,
    recursion_step_down, recursion_step_up, tableau_derivative_exp, tableau_derivative_log, StirlingTables,
};
use crate::scalar::{factorial, int, ratio, AffineExponent, ParamPoly, Rational};
use crate::series::{exp_derivation, TranslationSeries};
use crate::stirling::{
    factored_constant, recurrence_m, recurrence_n, Definition, StirlingKind, StirlingTable, TableauShape,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub range: String,
    pub status: Status,
    /// Parameter tuple of the first failure, in the order named by `range`.
    pub counterexample: Option<Vec<Value>>,
}

impl IdentityReport {
    fn from_sweep(id: &str, range: String, counterexample: Option<Vec<Value>>) -> Self {
        Self {
            id: id.to_string(),
            range,
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} [{}]", self.id, self.range)?;
        if let Some(c) = &self.counterexample {
            let parts: Vec<String> = c.iter().map(Value::to_string).collect();
            write!(f, " counterexample ({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Stirling triangles for every kind and definition. Entries can be
/// overwritten to build corrupted fixtures.
#[derive(Clone, Debug)]
pub struct StirlingSource {
    max_m: usize,
    tables: BTreeMap<(StirlingKind, Definition), StirlingTable>,
}

impl StirlingSource {
    pub fn build(max_m: usize) -> Self {
        let mut tables = BTreeMap::new();
        for kind in [StirlingKind::First, StirlingKind::Second] {
            for def in Definition::ALL {
                tables.insert((kind, def), StirlingTable::build(kind, def, max_m));
            }
        }
        Self { max_m, tables }
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn table(&self, kind: StirlingKind, def: Definition) -> &StirlingTable {
        &self.tables[&(kind, def)]
    }

    pub fn corrupt(&mut self, kind: StirlingKind, def: Definition, m: usize, n: usize, value: BigInt) {
        self.tables.get_mut(&(kind, def)).expect("all tables built").set(m, n, value);
    }

    /// Tables for the closed-form expansions drawn from this source.
    pub fn expansion_tables(&self) -> StirlingTables {
        StirlingTables {
            method1_first: self.table(StirlingKind::First, Definition::Explicit).clone(),
            method1_second: self.table(StirlingKind::Second, Definition::Explicit).clone(),
            method2_first: self.table(StirlingKind::First, Definition::Composition).clone(),
            method2_second: self.table(StirlingKind::Second, Definition::Composition).clone(),
        }
    }
}

fn mn(m: usize, n: usize) -> Vec<Value> {
    vec![json!(m), json!(n)]
}

fn pairs(lo_n: usize, max_m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_m).flat_map(move |m| (lo_n..=m).map(move |n| (m, n)))
}

/// Explicit, composition, recurrence and generating-function values agree
/// for `0 <= n <= m <= max_m`.
pub fn check_stirling_agreement(kind: StirlingKind, source: &StirlingSource, max_m: usize) -> IdentityReport {
    const FOUR: [Definition; 4] = [
        Definition::Explicit,
        Definition::Composition,
        Definition::Recurrence,
        Definition::GenFunc,
    ];
    let bad = pairs(0, max_m).find(|&(m, n)| {
        let first = source.table(kind, FOUR[0]).get(m, n);
        FOUR[1..].iter().any(|&d| source.table(kind, d).get(m, n) != first)
    });
    IdentityReport::from_sweep(
        &format!("stirling{}-four-way", kind.number()),
        format!("(m, n): 0 <= n <= m <= {max_m}"),
        bad.map(|(m, n)| mn(m, n)),
    )
}

fn check_classical(kind: StirlingKind, source: &StirlingSource, max_m: usize) -> IdentityReport {
    let lhs = source.table(kind, Definition::Composition);
    let rhs = source.table(kind, Definition::Explicit);
    let bad = pairs(1, max_m).find(|&(m, n)| lhs.get(m, n) != rhs.get(m, n));
    let id = match kind {
        StirlingKind::First => "classical-first-kind",
        StirlingKind::Second => "classical-second-kind",
    };
    IdentityReport::from_sweep(id, format!("(m, n): 1 <= n <= m <= {max_m}"), bad.map(|(m, n)| mn(m, n)))
}

/// `(m!/n!) sum 1/(i_1...i_n) = sum t_1...t_{m-n}` for `1 <= n <= m <= max_m`.
pub fn check_classical_first_kind(source: &StirlingSource, max_m: usize) -> IdentityReport {
    check_classical(StirlingKind::First, source, max_m)
}

/// `(m!/n!) sum 1/(i_1!...i_n!) = sum i_1...i_{m-n}` for `1 <= n <= m <= max_m`.
pub fn check_classical_second_kind(source: &StirlingSource, max_m: usize) -> IdentityReport {
    check_classical(StirlingKind::Second, source, max_m)
}

/// Shapes swept by [`check_factorization`]: every shape of at most four
/// columns, plus every shape with positive heights, with total at most
/// `max_total`.
pub fn factorization_shapes(max_total: usize) -> Vec<TableauShape> {
    let mut shapes = TableauShape::all_up_to(max_total, 4.min(max_total.max(1)));
    for total in 1..=max_total {
        for parts in 5..=total {
            crate::combinat::for_each_composition(total, parts, 1, &mut |h| {
                shapes.push(TableauShape::new(h.to_vec()));
            });
        }
    }
    shapes.sort();
    shapes.dedup();
    shapes
}

/// `(m_1, ..., m_{n-1}; m_n) = prod_i (m_i; m_{i+1} + ... + m_n)`.
pub fn check_factorization(kind: StirlingKind, max_total: usize) -> IdentityReport {
    let bad = factorization_shapes(max_total).into_iter().find(|shape| {
        let lhs = factored_constant(shape, kind).expect("nonempty shape");
        let h = shape.heights();
        let rhs: BigInt = (0..h.len().saturating_sub(1))
            .map(|i| factored_constant(&TableauShape::new(vec![h[i], shape.right_of(i)]), kind).expect("two columns"))
            .product();
        lhs != rhs
    });
    IdentityReport::from_sweep(
        &format!("factorization-kind{}", kind.number()),
        format!("shape: total <= {max_total}"),
        bad.map(|s| s.heights().iter().map(|&h| json!(h)).collect()),
    )
}

/// `(m-j; j)_1 = (-1)^{m-j} S_1(m, j)` and `(m-j; j)_2 = S_2(m, j)` against
/// the recurrence table.
pub fn check_tableau_bridge(kind: StirlingKind, source: &StirlingSource, max_m: usize) -> IdentityReport {
    let table = source.table(kind, Definition::Recurrence);
    let bad = pairs(0, max_m).find(|&(m, j)| {
        let c = factored_constant(&TableauShape::new(vec![m - j, j]), kind).expect("two columns");
        let expected = match kind {
            StirlingKind::First if (m - j) % 2 == 1 => -table.get(m, j),
            _ => table.get(m, j).clone(),
        };
        c != expected
    });
    IdentityReport::from_sweep(
        &format!("tableau-bridge-kind{}", kind.number()),
        format!("(m, j): 0 <= j <= m <= {max_m}"),
        bad.map(|(m, j)| mn(m, j)),
    )
}

/// `M(m, j)` and `N(m, j)` at `s = 0` against the Stirling recurrence tables,
/// plus the symbolic boundary values `M(2,0) = s^2 - s` and `N(3,0) = s^3`.
pub fn check_parameter_recurrences(source: &StirlingSource, max_m: usize) -> IdentityReport {
    let zero = Rational::from_integer(BigInt::from(0));
    let s1 = source.table(StirlingKind::First, Definition::Recurrence);
    let s2 = source.table(StirlingKind::Second, Definition::Recurrence);
    let symbolic_ok = recurrence_m(2, 0).ok() == Some(ParamPoly::from_ints(&[0, -1, 1]))
        && recurrence_n(3, 0).ok() == Some(ParamPoly::from_ints(&[0, 0, 0, 1]));
    let bad = if symbolic_ok {
        pairs(0, max_m).find(|&(m, j)| {
            recurrence_m(m, j).expect("j <= m").eval(&zero) != Rational::from_integer(s1.get(m, j).clone())
                || recurrence_n(m, j).expect("j <= m").eval(&zero) != Rational::from_integer(s2.get(m, j).clone())
        })
    } else {
        Some((2, 0))
    };
    IdentityReport::from_sweep(
        "parameter-recurrences",
        format!("(m, j): 0 <= j <= m <= {max_m}"),
        bad.map(|(m, j)| mn(m, j)),
    )
}

/// Lexicographically first `(y-power, monomial)` where two series differ.
pub fn first_series_difference(a: &TranslationSeries, b: &TranslationSeries) -> Option<(usize, Monomial)> {
    if a.order() != b.order() {
        return Some((a.order().min(b.order()) + 1, Monomial::unit()));
    }
    a.coeffs().iter().zip(b.coeffs()).enumerate().find_map(|(k, (x, y))| {
        let diff = x - y;
        let first = diff.terms().next().map(|(m, _)| (k, m.clone()));
        first
    })
}

fn series_counterexample(level: i64, diff: Option<(usize, Monomial)>) -> Option<Vec<Value>> {
    diff.map(|(k, m)| vec![json!(level), json!(k), json!(m.to_string())])
}

fn method_series(level: i64, order: usize, tables: &StirlingTables) -> (TranslationSeries, TranslationSeries) {
    if level >= 0 {
        (
            method1_log_with(level, order, tables).expect("nonnegative level"),
            method2_log_with(level, order, tables).expect("nonnegative level"),
        )
    } else {
        let n = level.unsigned_abs() as usize;
        (method1_exp_with(n, order, tables), method2_exp_with(n, order, tables))
    }
}

/// Equates the two expansion methods coefficientwise for every level in
/// `levels`.
///
/// Both methods index their terms by the same partial-sum chain: the first
/// method's composition `j` enters through `alpha_i = j_i + ... + j_N`,
/// so each monomial `prod l_i^{-alpha_i}` pins one chain and comparing
/// monomial coefficients equates the two Stirling products chain by chain.
pub fn check_methods_equal(levels: &[i64], order: usize, tables: &StirlingTables) -> IdentityReport {
    let mut sorted = levels.to_vec();
    sorted.sort();
    let bad = sorted.iter().find_map(|&level| {
        let (one, two) = method_series(level, order, tables);
        series_counterexample(level, first_series_difference(&one, &two))
    });
    IdentityReport::from_sweep(
        "methods-equal",
        format!("(level, y-power, monomial): levels {sorted:?}, order {order}"),
        bad,
    )
}

/// Both methods against the oracle `e^{y d/dx} l_n^r`.
pub fn check_oracle_agreement(levels: &[i64], order: usize, tables: &StirlingTables) -> IdentityReport {
    let mut sorted = levels.to_vec();
    sorted.sort();
    let bad = sorted.iter().find_map(|&level| {
        let oracle = oracle_expansion(level, &AffineExponent::r(), order);
        let (one, two) = method_series(level, order, tables);
        series_counterexample(level, first_series_difference(&one, &oracle))
            .or_else(|| series_counterexample(level, first_series_difference(&two, &oracle)))
    });
    IdentityReport::from_sweep(
        "methods-vs-oracle",
        format!("(level, y-power, monomial): levels {sorted:?}, order {order}"),
        bad,
    )
}

/// `k! * [y^k] e^{y d/dx} a = (d/dx)^k a` for `a = l_n` and `a = l_n^r`.
pub fn check_taylor(max_level: i64, order: usize) -> IdentityReport {
    let bad = (-max_level..=max_level).find_map(|level| {
        [AffineExponent::integer(1), AffineExponent::r()]
            .iter()
            .find_map(|e| {
                let a = AlgebraElement::var_power(level, e.clone());
                let s = exp_derivation(&a, order);
                let mut power = a.clone();
                (0..=order).find_map(|k| {
                    if k > 0 {
                        power = power.derive();
                    }
                    let scaled = s.coefficient(k).expect("k <= order").scale_rational(&Rational::from_integer(factorial(k)));
                    (scaled != power).then(|| vec![json!(level), json!(e.to_string()), json!(k)])
                })
            })
    });
    IdentityReport::from_sweep(
        "taylor",
        format!("(level, exponent, k): |level| <= {max_level}, k <= {order}"),
        bad,
    )
}

/// Random monomial over levels `-3..=3` with exponents `a*r + b`,
/// `a in {0, 1}`, `b` a small rational.
pub fn random_monomial(rng: &mut impl Rng) -> Monomial {
    let factors = rng.gen_range(1..=3);
    Monomial::from_pairs((0..factors).map(|_| {
        let level = rng.gen_range(-3i64..=3);
        let a = int(rng.gen_range(0..=1));
        let b = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
        (level, AffineExponent::new(a, b))
    }))
}

/// The automorphism property `e^{yD}(ab) = (e^{yD} a)(e^{yD} b)` on
/// `pairs` random monomial pairs drawn from a fixed seed.
pub fn check_automorphism(pairs: usize, order: usize, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(Monomial, Monomial)> = (0..pairs)
        .map(|_| (random_monomial(&mut rng), random_monomial(&mut rng)))
        .collect();
    let bad = samples.iter().enumerate().find_map(|(i, (a, b))| {
        let a = AlgebraElement::monomial(a.clone());
        let b = AlgebraElement::monomial(b.clone());
        let lhs = exp_derivation(&(&a * &b), order);
        let rhs = exp_derivation(&a, order).mul(&exp_derivation(&b, order)).expect("same order");
        (lhs != rhs).then(|| vec![json!(i), json!(a.to_string()), json!(b.to_string())])
    });
    IdentityReport::from_sweep(
        "automorphism",
        format!("(sample, a, b): {pairs} pairs, order {order}, seed {seed}"),
        bad,
    )
}

/// Step up and step down reproduce the oracle for `l_n`, `n in levels`, and
/// undo each other.
pub fn check_recursion(levels: &[i64], order: usize) -> IdentityReport {
    let one = AffineExponent::integer(1);
    let mut sorted = levels.to_vec();
    sorted.sort();
    let bad = sorted.iter().find_map(|&n| {
        let here = oracle_expansion(n, &one, order);
        let above = oracle_expansion(n + 1, &one, order);
        let up = recursion_step_up(n, &here).ok();
        let down = recursion_step_down(n, &above).ok();
        let fail = |what: &str| Some(vec![json!(n), json!(what)]);
        if up.as_ref() != Some(&above) {
            return fail("step-up");
        }
        if down.as_ref() != Some(&here) {
            return fail("step-down");
        }
        let round = up.and_then(|u| recursion_step_down(n, &u).ok());
        if round.as_ref() != Some(&here) {
            return fail("round-trip");
        }
        None
    });
    IdentityReport::from_sweep(
        "recursion",
        format!("(n, step): n in {sorted:?}, order {order}"),
        bad,
    )
}

/// Deterministic rational exponent tuples for the general-product formulas.
pub fn exponent_tuples(count: usize, len: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| ratio(rng.gen_range(-7..=7), rng.gen_range(1..=4)))
                .collect()
        })
        .collect()
}

/// `(d/dx)^m` of a general product against the tableau-polynomial formulas,
/// both sides, for `1 <= N <= max_depth` factors and `m <= max_m`.
pub fn check_general_products(tuples: usize, max_depth: usize, max_m: usize, seed: u64) -> IdentityReport {
    let mut bad = None;
    'outer: for depth in 1..=max_depth {
        for (t, cs) in exponent_tuples(tuples, depth + 1, seed + depth as u64).iter().enumerate() {
            // log side uses levels 0..=depth; exp side levels -1..=-(depth+1)
            let log_prod = AlgebraElement::monomial(Monomial::from_pairs(
                cs.iter().enumerate().map(|(i, c)| (i as i64, AffineExponent::constant(c.clone()))),
            ));
            let exp_prod = AlgebraElement::monomial(Monomial::from_pairs(
                cs.iter().enumerate().map(|(i, c)| (-(i as i64) - 1, AffineExponent::constant(c.clone()))),
            ));
            let mut log_power = log_prod;
            let mut exp_power = exp_prod;
            for m in 0..=max_m {
                if m > 0 {
                    log_power = log_power.derive();
                    exp_power = exp_power.derive();
                }
                if tableau_derivative_log(cs, m) != log_power {
                    bad = Some(vec![json!("log"), json!(depth), json!(t), json!(m)]);
                    break 'outer;
                }
                if tableau_derivative_exp(cs, m) != exp_power {
                    bad = Some(vec![json!("exp"), json!(depth), json!(t), json!(m)]);
                    break 'outer;
                }
            }
        }
    }
    IdentityReport::from_sweep(
        "general-products",
        format!("(side, N, tuple, m): N <= {max_depth}, m <= {max_m}, {tuples} tuples per N, seed {seed}"),
        bad,
    )
}

/// Evaluating the symbolic expansion at `r = k` gives `(l_n(x+y))^k`.
pub fn check_specialization(levels: &[i64], max_k: usize, order: usize) -> IdentityReport {
    let mut sorted = levels.to_vec();
    sorted.sort();
    let bad = sorted.iter().find_map(|&level| {
        let symbolic = oracle_expansion(level, &AffineExponent::r(), order);
        let base = oracle_expansion(level, &AffineExponent::integer(1), order);
        let mut power = TranslationSeries::one(order);
        (0..=max_k).find_map(|k| {
            if k > 0 {
                power = power.mul(&base).expect("same order");
            }
            let at_k = symbolic.specialize(&Rational::from_integer(BigInt::from(k)));
            (at_k != power).then(|| vec![json!(level), json!(k)])
        })
    });
    IdentityReport::from_sweep(
        "specialization",
        format!("(level, k): levels {sorted:?}, k <= {max_k}, order {order}"),
        bad,
    )
}

/// Named groups of sweeps run by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Taylor,
    Automorphism,
    MethodsAgree,
    Recursion,
    Identities,
    Stirling,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["taylor", "automorphism", "methods-agree", "recursion", "identities", "stirling", "all"];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "taylor" => Suite::Taylor,
            "automorphism" => Suite::Automorphism,
            "methods-agree" => Suite::MethodsAgree,
            "recursion" => Suite::Recursion,
            "identities" => Suite::Identities,
            "stirling" => Suite::Stirling,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?} (expected one of {})", Suite::NAMES.join(", "))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Truncation order for series sweeps.
    pub max_order: usize,
    /// Largest `m` for Stirling sweeps.
    pub max_m: usize,
    /// Largest tableau size for the factorization sweep.
    pub max_total: usize,
    pub pairs: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_order: 6, max_m: 10, max_total: 8, pairs: 100, seed: 20240601 }
    }
}

impl Bounds {
    /// Stirling rows needed by every sweep at these bounds.
    pub fn table_size(&self) -> usize {
        self.max_m.max(self.max_order).max(self.max_total)
    }
}

const EXPANSION_LEVELS: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];
const RECURSION_LEVELS: [i64; 5] = [-2, -1, 0, 1, 2];

/// Runs `suite` against `source`, which must cover `bounds.table_size()`.
pub fn run_suite(suite: Suite, bounds: &Bounds, source: &StirlingSource) -> Vec<IdentityReport> {
    let tables = source.expansion_tables();
    let b = bounds;
    let mut out = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Stirling) {
        for kind in [StirlingKind::First, StirlingKind::Second] {
            out.push(check_stirling_agreement(kind, source, b.max_m));
        }
    }
    if wants(Suite::Taylor) {
        out.push(check_taylor(3, b.max_order));
    }
    if wants(Suite::Automorphism) {
        out.push(check_automorphism(b.pairs, b.max_order, b.seed));
    }
    if wants(Suite::MethodsAgree) {
        out.push(check_oracle_agreement(&EXPANSION_LEVELS, b.max_order, &tables));
    }
    if wants(Suite::Recursion) {
        out.push(check_recursion(&RECURSION_LEVELS, b.max_order));
    }
    if wants(Suite::Identities) {
        out.push(check_classical_first_kind(source, b.max_m));
        out.push(check_classical_second_kind(source, b.max_m));
        out.push(check_methods_equal(&EXPANSION_LEVELS, b.max_order, &tables));
        for kind in [StirlingKind::First, StirlingKind::Second] {
            out.push(check_factorization(kind, b.max_total));
        }
        for kind in [StirlingKind::First, StirlingKind::Second] {
            out.push(check_tableau_bridge(kind, source, b.max_m.min(b.max_total)));
        }
        out.push(check_parameter_recurrences(source, b.max_m));
    }
    if suite == Suite::All {
        out.push(check_general_products(20, 2, 5, b.seed));
        out.push(check_specialization(&EXPANSION_LEVELS, 4, b.max_order.min(4)));
    }
    out
}

pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_pass_and_fail() {
        let mut source = StirlingSource::build(8);
        assert!(check_classical_first_kind(&source, 8).passed());
        assert!(check_classical_second_kind(&source, 8).passed());
        source.corrupt(StirlingKind::First, Definition::Explicit, 6, 4, BigInt::from(0));
        source.corrupt(StirlingKind::First, Definition::Explicit, 5, 2, BigInt::from(0));
        let r = check_classical_first_kind(&source, 8);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexample, Some(mn(5, 2)));
        assert!(check_classical_second_kind(&source, 8).passed());
    }

    #[test]
    fn four_way_small() {
        let source = StirlingSource::build(7);
        for kind in [StirlingKind::First, StirlingKind::Second] {
            assert!(check_stirling_agreement(kind, &source, 7).passed());
            assert!(check_tableau_bridge(kind, &source, 7).passed());
        }
    }

    #[test]
    fn factorization_small() {
        assert!(check_factorization(StirlingKind::First, 5).passed());
        assert!(check_factorization(StirlingKind::Second, 5).passed());
        let shapes = factorization_shapes(6);
        assert!(shapes.contains(&TableauShape::new(vec![1; 6])));
        assert!(shapes.contains(&TableauShape::new(vec![0, 3, 0, 2])));
    }

    #[test]
    fn methods_small() {
        let tables = StirlingTables::build(4);
        assert!(check_methods_equal(&[-2, -1, 0, 1, 2], 4, &tables).passed());
        assert!(check_oracle_agreement(&[-2, 0, 2], 4, &tables).passed());
    }

    #[test]
    fn methods_counterexample_is_minimal() {
        let mut source = StirlingSource::build(4);
        source.corrupt(StirlingKind::First, Definition::Composition, 3, 1, BigInt::from(5));
        let r = check_methods_equal(&[2, 1, 0], 4, &source.expansion_tables());
        assert_eq!(r.status, Status::Fail);
        let c = r.counterexample.unwrap();
        assert_eq!(c[0], json!(1));
        assert_eq!(c[1], json!(3));
    }

    #[test]
    fn report_rendering() {
        let r = IdentityReport::from_sweep("x", "(m, n)".into(), Some(mn(2, 1)));
        assert_eq!(r.to_string(), "FAIL x [(m, n)] counterexample (2, 1)");
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"id":"x","range":"(m, n)","status":"fail","counterexample":[2,1]}"#);
        let ok = IdentityReport::from_sweep("y", "-".into(), None);
        assert!(ok.passed());
        assert_eq!(ok.to_string(), "PASS y [-]");
    }

    #[test]
    fn small_sweeps() {
        assert!(check_taylor(2, 4).passed());
        assert!(check_automorphism(10, 3, 7).passed());
        assert!(check_recursion(&[-1, 0, 1], 4).passed());
        assert!(check_general_products(3, 2, 3, 11).passed());
        assert!(check_specialization(&[-1, 0, 1], 3, 3).passed());
        assert!(check_parameter_recurrences(&StirlingSource::build(6), 6).passed());
    }
}
