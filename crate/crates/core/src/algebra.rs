//! The algebra spanned by monomials `prod_i l_i(x)^{e_i}` over all integer
//! levels `i`, together with its derivation `d/dx`.
//!
//! Level `n > 0` is the `n`-th iterated logarithm, level `-n` the `n`-th
//! iterated exponential and level `0` the variable `x` itself.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::scalar::{AffineExponent, ParamPoly, Rational};

/// Sparse product of powers of the level variables. Zero exponents are never
/// stored, so the empty map is the unit monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<i64, AffineExponent>,
}

impl Monomial {
    pub fn unit() -> Self {
        Self::default()
    }

    /// `l_level^exponent`; the unit when the exponent is zero.
    pub fn single(level: i64, exponent: AffineExponent) -> Self {
        let mut exponents = BTreeMap::new();
        if !exponent.is_zero() {
            exponents.insert(level, exponent);
        }
        Self { exponents }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, AffineExponent)>>(pairs: I) -> Self {
        pairs
            .into_iter()
            .fold(Self::unit(), |acc, (lvl, e)| acc.mul(&Self::single(lvl, e)))
    }

    /// Monomial with integer exponents, e.g. `[(0, -2), (1, 1)]`.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Self::from_pairs(pairs.iter().map(|&(l, e)| (l, AffineExponent::integer(e))))
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, level: i64) -> AffineExponent {
        self.exponents.get(&level).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &AffineExponent)> {
        self.exponents.iter().map(|(&l, e)| (l, e))
    }

    /// Levelwise addition of exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&level, e) in &other.exponents {
            let sum = match exponents.get(&level) {
                Some(mine) => mine + e,
                None => e.clone(),
            };
            if sum.is_zero() {
                exponents.remove(&level);
            } else {
                exponents.insert(level, sum);
            }
        }
        Monomial { exponents }
    }

    /// Substitutes a value for `r` in every exponent.
    pub fn specialize(&self, r: &Rational) -> Monomial {
        Monomial::from_pairs(
            self.exponents
                .iter()
                .map(|(&l, e)| (l, AffineExponent::constant(e.eval(r)))),
        )
    }

    /// Factor by which differentiating the level-`level` variable multiplies
    /// the monomial, with the exponent decrement already absorbed.
    fn derivation_shift(level: i64) -> Monomial {
        use std::cmp::Ordering::*;
        match level.cmp(&0) {
            Equal => Monomial::from_ints(&[(0, -1)]),
            Greater => Monomial::from_pairs(
                (0..=level).map(|i| (i, AffineExponent::integer(-1))),
            ),
            // l_{-n}^{e-1} * l_{-1} ... l_{-n}: the l_{-n} factor cancels.
            Less => Monomial::from_pairs(
                (level + 1..0).map(|i| (i, AffineExponent::integer(1))),
            ),
        }
    }

    /// `d/dx` of this monomial, as a sum of monomials with coefficients.
    pub fn derive(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&level, e) in &self.exponents {
            let mono = self.mul(&Monomial::derivation_shift(level));
            out.add_term(mono, e.to_poly());
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(l, e)| format!("l[{l}]^({e})"))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.exponents.iter().map(|(l, e)| (l.to_string(), e)))
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, AffineExponent>::deserialize(d)?;
        let pairs = raw
            .into_iter()
            .map(|(k, e)| k.parse::<i64>().map(|l| (l, e)).map_err(de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial::from_pairs(pairs))
    }
}

/// Finite linear combination of monomials with [`ParamPoly`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, ParamPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::unit())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, ParamPoly::one())
    }

    pub fn term(m: Monomial, coeff: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::term(Monomial::unit(), c)
    }

    /// `l_level^exponent`.
    pub fn var_power(level: i64, exponent: AffineExponent) -> Self {
        Self::monomial(Monomial::single(level, exponent))
    }

    /// `l_level`.
    pub fn var(level: i64) -> Self {
        Self::var_power(level, AffineExponent::integer(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> ParamPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The scalar value of an element supported on the unit monomial.
    pub fn as_scalar(&self) -> Option<ParamPoly> {
        match self.terms.len() {
            0 => Some(ParamPoly::zero()),
            1 => self.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, coeff: ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(m, coeff);
            }
        }
    }

    /// `self += a * b` without materializing the product.
    pub fn add_product(&mut self, a: &AlgebraElement, b: &AlgebraElement) {
        for (m, x) in &a.terms {
            for (n, y) in &b.terms {
                self.add_term(m.mul(n), x * y);
            }
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&ParamPoly::constant(c.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero();
        for (n, a) in &self.terms {
            out.add_term(n.mul(m), a.clone());
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `d/dx`, extended from monomials by linearity.
    pub fn derive(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (n, d) in m.derive().terms {
                out.add_term(n, &d * c);
            }
        }
        out
    }

    /// `(d/dx)^m`.
    pub fn derive_power(&self, m: usize) -> Self {
        (0..m).fold(self.clone(), |acc, _| acc.derive())
    }

    /// Substitutes a value for `r` in coefficients and exponents alike.
    pub fn specialize(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.specialize(r), ParamPoly::constant(c.eval(r)));
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "+({c}) * {m}")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-ParamPoly::one())
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: ParamPoly,
    monomial: Monomial,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(m, c)| TermJson {
            coeff: c.clone(),
            monomial: m.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(d)?;
        let mut out = AlgebraElement::zero();
        for t in raw {
            out.add_term(t.monomial, t.coeff);
        }
        Ok(out)
    }
}

impl From<ParamPoly> for AlgebraElement {
    fn from(c: ParamPoly) -> Self {
        Self::constant(c)
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}
