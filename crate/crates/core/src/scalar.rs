//! Exact scalars: big rationals, polynomials in the symbolic parameter `r`,
//! and exponents of the form `a*r + b`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Serde adapter writing a [`Rational`] as its `p/q` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

/// Polynomial in one symbolic parameter with rational coefficients, stored
/// densely in ascending degree with trailing zeros stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoly {
    coeffs: Vec<Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The parameter itself.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a*r + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Falling factorial `r(r-1)...(r-m+1)`.
    pub fn falling_factorial(m: usize) -> Self {
        (0..m).fold(Self::one(), |acc, k| {
            &acc * &Self::linear(Rational::one(), -int(k as i64))
        })
    }

    /// The extended binomial coefficient `C(r, m)`.
    pub fn binomial(m: usize) -> Self {
        Self::falling_factorial(m).scale(&Rational::new(BigInt::one(), factorial(m)))
    }

    /// Renders with `var` as the parameter name, e.g. `1/2*r^2 - 1/2*r`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if var_part.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&var_part);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), var_part));
            }
        }
        out
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("r"))
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;

    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        ParamPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;

    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &-rhs
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ParamPoly::from_coeffs(out)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Serialize for ParamPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&format_rational(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ParamPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(ParamPoly::from_coeffs(coeffs))
    }
}

/// Exponent `r_coeff*r + const_term` of a formal variable.
///
/// Ordered by `(r_coeff, const_term)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineExponent {
    pub r_coeff: Rational,
    pub const_term: Rational,
}

impl AffineExponent {
    pub fn new(r_coeff: Rational, const_term: Rational) -> Self {
        Self {
            r_coeff,
            const_term,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(Rational::zero(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The bare parameter `r`.
    pub fn r() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.r_coeff.is_zero() && self.const_term.is_zero()
    }

    /// The exponent viewed as a scalar, as produced by differentiation.
    pub fn to_poly(&self) -> ParamPoly {
        ParamPoly::linear(self.r_coeff.clone(), self.const_term.clone())
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        &self.r_coeff * r + &self.const_term
    }
}

impl fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.const_term.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}*r{}{}",
            format_rational(&self.r_coeff),
            sign,
            format_rational(&self.const_term.abs())
        )
    }
}

impl Add for &AffineExponent {
    type Output = AffineExponent;

    fn add(self, rhs: &AffineExponent) -> AffineExponent {
        AffineExponent::new(
            &self.r_coeff + &rhs.r_coeff,
            &self.const_term + &rhs.const_term,
        )
    }
}

impl Neg for &AffineExponent {
    type Output = AffineExponent;

    fn neg(self) -> AffineExponent {
        AffineExponent::new(-&self.r_coeff, -&self.const_term)
    }
}

impl Serialize for AffineExponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.r_coeff), format_rational(&self.const_term)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineExponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let a = parse_rational(&a).map_err(de::Error::custom)?;
        let b = parse_rational(&b).map_err(de::Error::custom)?;
        Ok(Self::new(a, b))
    }
}
