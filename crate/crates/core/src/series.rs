//! Truncated power series in the translation variable `y` with algebra
//! coefficients.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational};

/// `sum_{k=0}^{order} coeffs[k] * y^k`. The truncation order is part of the
/// value: series of different orders never compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationSeries {
    order: usize,
    coeffs: Vec<AlgebraElement>,
}

impl TranslationSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![AlgebraElement::zero(); order + 1],
        }
    }

    pub fn constant(a: AlgebraElement, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = a;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(AlgebraElement::one(), order)
    }

    /// The series `y`.
    pub fn y(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = AlgebraElement::one();
        }
        s
    }

    /// Builds a series from coefficients; missing high coefficients are zero
    /// and anything beyond `order` is dropped.
    pub fn from_coeffs(mut coeffs: Vec<AlgebraElement>, order: usize) -> Self {
        coeffs.resize(order + 1, AlgebraElement::zero());
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    /// Coefficient of `y^k`.
    pub fn coefficient(&self, k: usize) -> Result<&AlgebraElement> {
        self.coeffs.get(k).ok_or(Error::CoefficientOutOfRange {
            index: k,
            order: self.order,
        })
    }

    pub fn has_zero_constant_term(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_product(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `a`.
    pub fn mul_element(&self, a: &AlgebraElement) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale_rational(q)).collect(),
        }
    }

    /// Substitutes a value for `r` in every coefficient.
    pub fn specialize(&self, r: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.specialize(r)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `sum_{n=1}^{order} weight(n) * u^n` for a `u` without constant term;
    /// `u^n` vanishes below `y^n`, so the truncated sum is exact.
    fn compose_zero_constant(u: &Self, weight: impl Fn(usize) -> Rational) -> Result<Self> {
        if !u.has_zero_constant_term() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = Self::zero(u.order);
        let mut power = u.clone();
        for n in 1..=u.order {
            out = out.add(&power.scale_rational(&weight(n)))?;
            power = power.mul(u)?;
        }
        Ok(out)
    }
}

/// The exponentiated derivation `e^{y d/dx} a`, i.e. the translation
/// `a(x + y)`, truncated at `order`.
pub fn exp_derivation(a: &AlgebraElement, order: usize) -> TranslationSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut current = a.clone();
    for k in 0..=order {
        if k > 0 {
            current = current.derive();
        }
        coeffs.push(current.scale_rational(&Rational::new(BigInt::one(), factorial(k))));
    }
    TranslationSeries { order, coeffs }
}

pub fn series_mul(a: &TranslationSeries, b: &TranslationSeries) -> Result<TranslationSeries> {
    a.mul(b)
}

/// `log(1 + u) = sum_{n>=1} (-1)^{n-1} u^n / n`.
pub fn log1p_compose(u: &TranslationSeries) -> Result<TranslationSeries> {
    TranslationSeries::compose_zero_constant(u, |n| {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        Rational::new(BigInt::from(sign), BigInt::from(n))
    })
}

/// `e^u - 1 = sum_{n>=1} u^n / n!`.
pub fn expm1_compose(u: &TranslationSeries) -> Result<TranslationSeries> {
    TranslationSeries::compose_zero_constant(u, |n| Rational::new(BigInt::one(), factorial(n)))
}

pub fn coefficient(s: &TranslationSeries, k: usize) -> Result<&AlgebraElement> {
    s.coefficient(k)
}

/// The scalar series `sum_k c_k y^k` from rational coefficients.
pub fn scalar_series(coeffs: &[Rational], order: usize) -> TranslationSeries {
    TranslationSeries::from_coeffs(
        coeffs
            .iter()
            .take(order + 1)
            .map(|c| AlgebraElement::constant(c.clone().into()))
            .collect(),
        order,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use crate::scalar::{int, ratio, AffineExponent, ParamPoly};

    fn scalars(order: usize, coeffs: &[Rational]) -> TranslationSeries {
        scalar_series(coeffs, order)
    }

    #[test]
    fn exp_derivation_x() {
        let s = exp_derivation(&AlgebraElement::var(0), 1);
        assert_eq!(s, TranslationSeries::from_coeffs(vec![AlgebraElement::var(0), AlgebraElement::one()], 1));
    }

    #[test]
    fn exp_derivation_exp_r() {
        let a = AlgebraElement::var_power(-1, AffineExponent::r());
        let s = exp_derivation(&a, 2);
        let want = [
            ParamPoly::one(),
            ParamPoly::var(),
            ParamPoly::from_coeffs(vec![int(0), int(0), ratio(1, 2)]),
        ];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(s.coefficient(k).unwrap(), &a.scale(w));
        }
    }

    #[test]
    fn exp_derivation_log() {
        let s = exp_derivation(&AlgebraElement::var(1), 2);
        assert_eq!(s.coefficient(0).unwrap(), &AlgebraElement::var(1));
        assert_eq!(
            s.coefficient(1).unwrap(),
            &AlgebraElement::monomial(Monomial::from_ints(&[(0, -1)]))
        );
        assert_eq!(
            s.coefficient(2).unwrap(),
            &AlgebraElement::term(Monomial::from_ints(&[(0, -2)]), ParamPoly::constant(ratio(-1, 2)))
        );
    }

    #[test]
    fn unit_and_simple_products() {
        let a = exp_derivation(&AlgebraElement::var(1), 3);
        assert_eq!(a.mul(&TranslationSeries::one(3)).unwrap(), a);

        let p = scalars(2, &[int(1), int(1)]);
        let q = scalars(2, &[int(1), int(-1)]);
        assert_eq!(p.mul(&q).unwrap(), scalars(2, &[int(1), int(0), int(-1)]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = TranslationSeries::one(2);
        let b = TranslationSeries::one(3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 2, right: 3 }));
        assert_ne!(a, b);
    }

    #[test]
    fn automorphism_small() {
        let l0 = AlgebraElement::var(0);
        let l1 = AlgebraElement::var(1);
        let lhs = exp_derivation(&(&l0 * &l1), 4);
        let rhs = exp_derivation(&l0, 4).mul(&exp_derivation(&l1, 4)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn log1p_of_y() {
        let s = log1p_compose(&TranslationSeries::y(3)).unwrap();
        assert_eq!(s, scalars(3, &[int(0), int(1), ratio(-1, 2), ratio(1, 3)]));
        assert_eq!(log1p_compose(&TranslationSeries::zero(4)).unwrap(), TranslationSeries::zero(4));
    }

    #[test]
    fn expm1_of_y() {
        let s = expm1_compose(&TranslationSeries::y(3)).unwrap();
        assert_eq!(s, scalars(3, &[int(0), int(1), ratio(1, 2), ratio(1, 6)]));
        assert_eq!(expm1_compose(&TranslationSeries::zero(4)).unwrap(), TranslationSeries::zero(4));
        let l = scalars(3, &[int(0), int(1), ratio(-1, 2), ratio(1, 3)]);
        assert_eq!(expm1_compose(&l).unwrap(), TranslationSeries::y(3));
    }

    #[test]
    fn compositions_invert() {
        let y = TranslationSeries::y(5);
        assert_eq!(log1p_compose(&expm1_compose(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn nonzero_constant_rejected() {
        let u = TranslationSeries::one(3);
        assert_eq!(log1p_compose(&u), Err(Error::NonzeroConstantTerm));
        assert_eq!(expm1_compose(&u), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn coefficient_access() {
        let s = exp_derivation(&AlgebraElement::var(0), 3);
        assert_eq!(s.coefficient(0).unwrap(), &AlgebraElement::var(0));
        let sr = exp_derivation(&AlgebraElement::var_power(0, AffineExponent::r()), 3);
        assert_eq!(
            sr.coefficient(1).unwrap(),
            &AlgebraElement::term(
                Monomial::single(0, AffineExponent::new(int(1), int(-1))),
                ParamPoly::var()
            )
        );
        assert!(TranslationSeries::zero(3).coefficient(2).unwrap().is_zero());
        assert_eq!(
            s.coefficient(4),
            Err(Error::CoefficientOutOfRange { index: 4, order: 3 })
        );
    }

    #[test]
    fn series_json_shape() {
        let s = TranslationSeries::y(1);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"order":1,"coeffs":[[],[{"coeff":["1"],"monomial":{}}]]}"#);
    }
}
