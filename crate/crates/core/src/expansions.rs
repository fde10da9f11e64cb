//! Closed-form expansions of `l_N(x+y)^r`.
//!
//! Levels follow the public convention `n in Z`: positive levels are iterated
//! logarithms, negative levels iterated exponentials. The `*_log` routines
//! take `N >= 0` for level `N`; the `*_exp` routines take `N >= 0` for level
//! `-N`, and both agree at `N = 0`.
//!
//! Every series here is assembled term by term from a coefficient formula;
//! none of them differentiates. [`oracle_expansion`] is the brute-force
//! reference they are checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Monomial};
use crate::combinat::{for_each_composition, for_each_weak_chain};
use crate::error::{Error, Result};
use crate::scalar::{factorial, format_rational, parse_rational, AffineExponent, ParamPoly, Rational};
use crate::series::{exp_derivation, expm1_compose, log1p_compose, TranslationSeries};
use crate::stirling::{tableau_polynomial, Definition, StirlingKind, StirlingTable, TableauShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Operator expansion of `(d/dx)^m` through tableaux.
    Method1,
    /// Iterated composition of the translation recursion.
    Method2,
    /// Repeated differentiation.
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Method1 => "method1",
            Method::Method2 => "method2",
            Method::Oracle => "oracle",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" | "method1" => Ok(Method::Method1),
            "2" | "method2" => Ok(Method::Method2),
            "oracle" => Ok(Method::Oracle),
            _ => Err(format!("unknown method {s:?} (expected 1, 2 or oracle)")),
        }
    }
}

/// Exponent of the expanded variable: the symbol `r` or a fixed rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exponent {
    Symbolic,
    Value(Rational),
}

impl Exponent {
    pub fn affine(&self) -> AffineExponent {
        match self {
            Exponent::Symbolic => AffineExponent::r(),
            Exponent::Value(q) => AffineExponent::constant(q.clone()),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Symbolic => f.write_str("r"),
            Exponent::Value(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "r" {
            Ok(Exponent::Symbolic)
        } else {
            parse_rational(s).map(Exponent::Value)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionRequest {
    pub level: i64,
    pub exponent: Exponent,
    pub order: usize,
    pub method: Method,
}

/// Partial sums `alpha_i = j_i + ... + j_N` of a composition; weakly
/// decreasing with `alpha_0` the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector(Vec<usize>);

impl AlphaVector {
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut alphas = vec![0; parts.len()];
        let mut acc = 0;
        for i in (0..parts.len()).rev() {
            acc += parts[i];
            alphas[i] = acc;
        }
        Self(alphas)
    }

    pub fn alphas(&self) -> &[usize] {
        &self.0
    }

    /// Inverts the partial sums: `j_i = alpha_i - alpha_{i+1}`, `j_N = alpha_N`.
    pub fn parts(&self) -> Vec<usize> {
        let a = &self.0;
        (0..a.len())
            .map(|i| a[i] - a.get(i + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// Stirling tables feeding the closed forms. The first method reads the
/// explicit sums and the second the composition sums, so equating the two
/// methods compares two independent constructions.
#[derive(Clone, Debug)]
pub struct StirlingTables {
    pub method1_first: StirlingTable,
    pub method1_second: StirlingTable,
    pub method2_first: StirlingTable,
    pub method2_second: StirlingTable,
}

impl StirlingTables {
    pub fn build(max_m: usize) -> Self {
        Self {
            method1_first: StirlingTable::build(StirlingKind::First, Definition::Explicit, max_m),
            method1_second: StirlingTable::build(StirlingKind::Second, Definition::Explicit, max_m),
            method2_first: StirlingTable::build(StirlingKind::First, Definition::Composition, max_m),
            method2_second: StirlingTable::build(StirlingKind::Second, Definition::Composition, max_m),
        }
    }
}

fn inv_factorial(m: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(m))
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn to_level(n: usize) -> i64 {
    i64::try_from(n).expect("level fits in i64")
}

fn log_depth(level: i64) -> Result<usize> {
    usize::try_from(level).map_err(|_| Error::NegativeLevel(level))
}

/// `l_N^r * prod_{i=0}^{N} l_i^{-s_i}`.
fn log_monomial(n: usize, s: &[usize]) -> Monomial {
    let top = Monomial::single(to_level(n), AffineExponent::r());
    s.iter().enumerate().fold(top, |acc, (i, &si)| {
        acc.mul(&Monomial::single(to_level(i), AffineExponent::integer(-(si as i64))))
    })
}

/// Method one for `l_N(x+y)^r`, `N >= 0`.
pub fn method1_log(n: i64, order: usize) -> Result<TranslationSeries> {
    method1_log_with(n, order, &StirlingTables::build(order))
}

pub fn method1_log_with(n: i64, order: usize, tables: &StirlingTables) -> Result<TranslationSeries> {
    let n = log_depth(n)?;
    let s1 = &tables.method1_first;
    let mut coeffs = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut c = AlgebraElement::zero();
        for_each_composition(m, n + 1, 0, &mut |parts| {
            let alpha = AlphaVector::from_parts(parts);
            let a = alpha.alphas();
            let stirling: BigInt = (0..n).map(|i| s1.get(a[i], a[i + 1]).clone()).product();
            if stirling.is_zero() {
                return;
            }
            // j_N! C(r, j_N) is the falling factorial of length j_N
            let scalar = ParamPoly::falling_factorial(parts[n])
                .scale(&(sign(a[0] - a[n]) * Rational::from_integer(stirling)));
            c.add_term(log_monomial(n, a), scalar);
        });
        coeffs.push(c.scale_rational(&inv_factorial(m)));
    }
    Ok(TranslationSeries::from_coeffs(coeffs, order))
}

/// `l_{-N}^r * prod_{i=1}^{N-1} l_{-i}^{e_i}`.
fn exp_monomial(n: usize, exps: impl Iterator<Item = (usize, usize)>) -> Monomial {
    let top = Monomial::single(-to_level(n), AffineExponent::r());
    exps.fold(top, |acc, (i, e)| {
        acc.mul(&Monomial::single(-to_level(i), AffineExponent::integer(e as i64)))
    })
}

/// Method one for `l_{-N}(x+y)^r`, `N >= 0`.
pub fn method1_exp(n: usize, order: usize) -> TranslationSeries {
    method1_exp_with(n, order, &StirlingTables::build(order))
}

pub fn method1_exp_with(n: usize, order: usize, tables: &StirlingTables) -> TranslationSeries {
    if n == 0 {
        return method1_log_with(0, order, tables).expect("level 0");
    }
    let s2 = &tables.method1_second;
    let mut coeffs = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut c = AlgebraElement::zero();
        // parts[i - 1] holds j_i for i = 1..=N
        for_each_composition(m, n, 0, &mut |parts| {
            let alpha = AlphaVector::from_parts(parts);
            let a = |i: usize| alpha.alphas()[i - 1];
            let stirling: BigInt = (1..n).map(|i| s2.get(a(i), a(i + 1)).clone()).product();
            if stirling.is_zero() {
                return;
            }
            let scalar = ParamPoly::var().pow(parts[n - 1]).scale(&Rational::from_integer(stirling));
            c.add_term(exp_monomial(n, (1..n).map(|i| (i, a(i + 1)))), scalar);
        });
        coeffs.push(c.scale_rational(&inv_factorial(m)));
    }
    TranslationSeries::from_coeffs(coeffs, order)
}

/// How the index chain `s_N, ..., s_0` of the second logarithmic method is
/// read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainReading {
    /// `0 <= s_N <= ... <= s_1 <= s_0`; agrees with repeated differentiation.
    Weak,
    /// `0 <= s_N < ... < s_1 < s_0`; drops the diagonal terms
    /// `S(s, s) = 1` and so does not.
    Strict,
}

/// Method two for `l_N(x+y)^r`, `N >= 0`.
pub fn method2_log(n: i64, order: usize) -> Result<TranslationSeries> {
    method2_log_with(n, order, &StirlingTables::build(order))
}

pub fn method2_log_with(n: i64, order: usize, tables: &StirlingTables) -> Result<TranslationSeries> {
    method2_log_chain(n, order, ChainReading::Weak, tables)
}

pub fn method2_log_chain(
    n: i64,
    order: usize,
    reading: ChainReading,
    tables: &StirlingTables,
) -> Result<TranslationSeries> {
    let n = log_depth(n)?;
    let s1 = &tables.method2_first;
    let mut coeffs = vec![AlgebraElement::zero(); order + 1];
    // chain[k] = s_{N-k}: ascending from s_N up to s_0
    for_each_weak_chain(n + 1, order, &mut |chain| {
        if reading == ChainReading::Strict && n > 0 && chain.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let s: Vec<usize> = chain.iter().rev().copied().collect();
        let (s0, sn) = (s[0], s[n]);
        let stirling: BigInt = (0..n).map(|i| s1.get(s[i], s[i + 1]).clone()).product();
        if stirling.is_zero() {
            return;
        }
        let scalar = ParamPoly::binomial(sn).scale(
            &(Rational::new(factorial(sn), factorial(s0)) * sign(s0 - sn) * Rational::from_integer(stirling)),
        );
        coeffs[s0].add_term(log_monomial(n, &s), scalar);
    });
    Ok(TranslationSeries::from_coeffs(coeffs, order))
}

/// Method two for `l_{-N}(x+y)^r`, `N >= 0`.
pub fn method2_exp(n: usize, order: usize) -> TranslationSeries {
    method2_exp_with(n, order, &StirlingTables::build(order))
}

pub fn method2_exp_with(n: usize, order: usize, tables: &StirlingTables) -> TranslationSeries {
    if n == 0 {
        return method2_log_with(0, order, tables).expect("level 0");
    }
    let s2 = &tables.method2_second;
    let mut coeffs = vec![AlgebraElement::zero(); order + 1];
    // chain[k - 1] = l_k for k = 1..=N
    for_each_weak_chain(n, order, &mut |chain| {
        let l = |k: usize| chain[k - 1];
        let stirling: BigInt = (1..n).map(|i| s2.get(l(i + 1), l(i)).clone()).product();
        if stirling.is_zero() {
            return;
        }
        let scalar = ParamPoly::var()
            .pow(l(1))
            .scale(&(Rational::from_integer(stirling) * inv_factorial(l(n))));
        coeffs[l(n)].add_term(exp_monomial(n, (1..n).map(|i| (i, l(n - i)))), scalar);
    });
    TranslationSeries::from_coeffs(coeffs, order)
}

/// Brute-force reference: `e^{y d/dx} l_level^exponent`.
pub fn oracle_expansion(level: i64, exponent: &AffineExponent, order: usize) -> TranslationSeries {
    exp_derivation(&AlgebraElement::var_power(level, exponent.clone()), order)
}

/// Dispatches on the public level convention with symbolic `r`.
pub fn expand_symbolic(level: i64, order: usize, method: Method) -> TranslationSeries {
    let depth = level.unsigned_abs() as usize;
    match (method, level >= 0) {
        (Method::Oracle, _) => oracle_expansion(level, &AffineExponent::r(), order),
        (Method::Method1, true) => method1_log(level, order).expect("nonnegative level"),
        (Method::Method1, false) => method1_exp(depth, order),
        (Method::Method2, true) => method2_log(level, order).expect("nonnegative level"),
        (Method::Method2, false) => method2_exp(depth, order),
    }
}

pub fn expand(req: &ExpansionRequest) -> TranslationSeries {
    match (&req.exponent, req.method) {
        (Exponent::Symbolic, m) => expand_symbolic(req.level, req.order, m),
        (Exponent::Value(q), Method::Oracle) => {
            oracle_expansion(req.level, &AffineExponent::constant(q.clone()), req.order)
        }
        (Exponent::Value(q), m) => expand_symbolic(req.level, req.order, m).specialize(q),
    }
}

/// Machine-readable expansion result; one schema for every method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub level: i64,
    pub exponent: String,
    pub order: usize,
    pub method: String,
    pub coeffs: TranslationSeries,
}

impl ExpansionReport {
    pub fn run(req: &ExpansionRequest) -> Self {
        Self {
            level: req.level,
            exponent: req.exponent.to_string(),
            order: req.order,
            method: req.method.name().to_string(),
            coeffs: expand(req),
        }
    }
}

/// `l_{n+1}(x+y) = l_{n+1}(x) + log(1 + (l_n(x+y) - l_n(x)) / l_n(x))`,
/// given a series for `l_n(x+y)`.
pub fn recursion_step_up(n: i64, below: &TranslationSeries) -> Result<TranslationSeries> {
    let order = below.order();
    let base = TranslationSeries::constant(AlgebraElement::var(n), order);
    let u = below
        .sub(&base)?
        .mul_element(&AlgebraElement::var_power(n, AffineExponent::integer(-1)));
    let log = log1p_compose(&u)?;
    log.add(&TranslationSeries::constant(AlgebraElement::var(n + 1), order))
}

/// `l_n(x+y) = l_n(x) e^{l_{n+1}(x+y) - l_{n+1}(x)}`, given a series for
/// `l_{n+1}(x+y)`.
pub fn recursion_step_down(n: i64, above: &TranslationSeries) -> Result<TranslationSeries> {
    let order = above.order();
    let v = above.sub(&TranslationSeries::constant(AlgebraElement::var(n + 1), order))?;
    let exp = expm1_compose(&v)?.add(&TranslationSeries::one(order))?;
    Ok(exp.mul_element(&AlgebraElement::var(n)))
}

/// Right-hand side of the general-product derivative formula on the
/// logarithmic side:
/// `(d/dx)^m prod_{l=0}^{N} l_l^{c_l} = sum_j [j_0..j_N]_1(c) prod_i l_i^{c_i - alpha_i}`.
pub fn tableau_derivative_log(cs: &[Rational], m: usize) -> AlgebraElement {
    let n = cs.len();
    let mut out = AlgebraElement::zero();
    if n == 0 {
        return if m == 0 { AlgebraElement::one() } else { out };
    }
    for_each_composition(m, n, 0, &mut |parts| {
        let alpha = AlphaVector::from_parts(parts);
        let value = tableau_polynomial(&TableauShape::new(parts.to_vec()), StirlingKind::First).eval(cs);
        let mono = Monomial::from_pairs(cs.iter().zip(alpha.alphas()).enumerate().map(|(i, (c, &a))| {
            (to_level(i), AffineExponent::constant(c - Rational::from_integer(BigInt::from(a))))
        }));
        out.add_term(mono, ParamPoly::constant(value));
    });
    out
}

/// Exponential-side analogue:
/// `(d/dx)^k prod_{l=1}^{N} l_{-l}^{c_l} = sum_j [j_1..j_N]_2(c) l_{-N}^{c_N} prod_{i<N} l_{-i}^{c_i + alpha_{i+1}}`.
/// `cs[i - 1]` is the exponent of `l_{-i}`.
pub fn tableau_derivative_exp(cs: &[Rational], k: usize) -> AlgebraElement {
    let n = cs.len();
    let mut out = AlgebraElement::zero();
    if n == 0 {
        return if k == 0 { AlgebraElement::one() } else { out };
    }
    for_each_composition(k, n, 0, &mut |parts| {
        let alpha = AlphaVector::from_parts(parts);
        let value = tableau_polynomial(&TableauShape::new(parts.to_vec()), StirlingKind::Second).eval(cs);
        let mono = Monomial::from_pairs((1..=n).map(|i| {
            let shift = if i < n { alpha.alphas()[i] } else { 0 };
            (-to_level(i), AffineExponent::constant(&cs[i - 1] + Rational::from_integer(BigInt::from(shift))))
        }));
        out.add_term(mono, ParamPoly::constant(value));
    });
    out
}
