use iterlog::expansions::{oracle_expansion, recursion_step_down, recursion_step_up};
use iterlog::scalar::{int, ratio};
use iterlog::series::{exp_derivation, expm1_compose, log1p_compose};
use iterlog::{AffineExponent, AlgebraElement, Monomial, ParamPoly, Rational, TranslationSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(small_rational(), 0..4).prop_map(ParamPoly::from_coeffs)
}

fn exponent() -> impl Strategy<Value = AffineExponent> {
    (-1i64..=1, small_rational()).prop_map(|(a, b)| AffineExponent::new(int(a), b))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((-2i64..=2, exponent()), 0..3).prop_map(Monomial::from_pairs)
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((monomial(), param_poly()), 0..3).prop_map(|terms| {
        let mut a = AlgebraElement::zero();
        for (m, c) in terms {
            a.add_term(m, c);
        }
        a
    })
}

/// A series without constant term, coefficients drawn from small elements.
fn small_series(order: usize) -> impl Strategy<Value = TranslationSeries> {
    prop::collection::vec(element(), order).prop_map(move |mut cs| {
        cs.insert(0, AlgebraElement::zero());
        TranslationSeries::from_coeffs(cs, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_eval_is_a_ring_map(a in param_poly(), b in param_poly(), x in small_rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn binomial_at_integers(m in 1usize..7, n in 0i64..12) {
        let expected = if (n as usize) < m {
            BigInt::from(0)
        } else {
            (0..m as i64).fold(BigInt::from(1), |acc, i| acc * (n - i)) / (1..=m as i64).product::<i64>()
        };
        prop_assert_eq!(ParamPoly::binomial(m).eval(&int(n)), Rational::from_integer(expected));
    }

    #[test]
    fn algebra_ring_laws(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &AlgebraElement::one(), a.clone());
    }

    #[test]
    fn derivation_is_linear(a in element(), b in element(), p in param_poly()) {
        prop_assert_eq!((&a + &b).derive(), &a.derive() + &b.derive());
        prop_assert_eq!(a.scale(&p).derive(), a.derive().scale(&p));
    }

    #[test]
    fn leibniz(a in element(), b in element()) {
        prop_assert_eq!((&a * &b).derive(), &(&a.derive() * &b) + &(&a * &b.derive()));
    }

    #[test]
    fn chain_rule_on_powers(level in -2i64..=2, k in 1usize..5) {
        let v = AlgebraElement::var(level);
        let lhs = v.pow(k).derive();
        let rhs = v.pow(k - 1).scale_rational(&int(k as i64)) * v.derive();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn automorphism(a in monomial(), b in monomial(), order in 0usize..4) {
        let a = AlgebraElement::monomial(a);
        let b = AlgebraElement::monomial(b);
        let lhs = exp_derivation(&(&a * &b), order);
        let rhs = exp_derivation(&a, order).mul(&exp_derivation(&b, order)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_exp_compose_to_identity(u in small_series(3)) {
        let back = log1p_compose(&expm1_compose(&u).unwrap()).unwrap();
        prop_assert_eq!(&back, &u);
        let forth = expm1_compose(&log1p_compose(&u).unwrap()).unwrap();
        prop_assert_eq!(forth, u);
    }

    #[test]
    fn specialization_matches_integer_power(level in -2i64..=2, k in 0usize..4, order in 0usize..4) {
        let symbolic = oracle_expansion(level, &AffineExponent::r(), order);
        let base = exp_derivation(&AlgebraElement::var(level), order);
        prop_assert_eq!(symbolic.specialize(&int(k as i64)), base.pow(k));
    }

    #[test]
    fn recursion_steps_invert(n in -2i64..=2, order in 0usize..5) {
        let one = AffineExponent::integer(1);
        let here = oracle_expansion(n, &one, order);
        let up = recursion_step_up(n, &here).unwrap();
        prop_assert_eq!(&up, &oracle_expansion(n + 1, &one, order));
        prop_assert_eq!(recursion_step_down(n, &up).unwrap(), here);
    }
}
