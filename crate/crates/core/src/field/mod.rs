//! Exact arithmetic in the coefficient field Q(α).

mod frac;
mod parse;
mod poly;

pub use frac::{rising_factorial, AlphaFrac};
pub use poly::AlphaPoly;

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at α = {at}")]
    Pole { at: BigRational },
    #[error("cannot parse field element: {0}")]
    Parse(String),
}

/// Reads an exact rational such as `-5/2` or `3`.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = n
        .parse()
        .map_err(|_| FieldError::Parse(format!("bad rational {s:?}")))?;
    let d: num_bigint::BigInt = d
        .parse()
        .map_err(|_| FieldError::Parse(format!("bad rational {s:?}")))?;
    if num_traits::Zero::is_zero(&d) {
        return Err(FieldError::ZeroDenominator);
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ip(cs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_coeffs(cs.iter().map(|&c| q(c, 1)).collect())
    }

    fn frac(n: &[i64], d: &[i64]) -> AlphaFrac {
        AlphaFrac::new(ip(n), ip(d)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(frac(&[-1, 0, 1], &[1, 1]), AlphaFrac::linear(1, -1));
        assert!(frac(&[0], &[0, 1]).is_zero());
        let r = frac(&[2, 2], &[4]);
        assert_eq!(
            r.numerator(),
            &AlphaPoly::from_coeffs(vec![q(1, 2), q(1, 2)])
        );
        assert!(r.denominator().is_one());
        assert_eq!(r.to_string(), "(α+1)/2");
        assert_eq!(
            AlphaFrac::new(ip(&[1]), AlphaPoly::zero()),
            Err(FieldError::ZeroDenominator)
        );
    }

    #[test]
    fn field_arith_examples() {
        let a = AlphaFrac::alpha();
        let inv_a = a.recip().unwrap();
        assert_eq!(&inv_a + &AlphaFrac::one(), frac(&[1, 1], &[0, 1]));
        assert_eq!(
            &AlphaFrac::linear(1, 1) * &AlphaFrac::linear(1, -1),
            AlphaFrac::from_poly(ip(&[-1, 0, 1]))
        );
        assert_eq!(
            AlphaFrac::from_poly(ip(&[-1, 0, 1])).checked_div(&AlphaFrac::linear(1, 1)),
            Ok(AlphaFrac::linear(1, -1))
        );
        assert_eq!(
            a.checked_div(&AlphaFrac::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn rising_factorial_examples() {
        assert!(rising_factorial(&AlphaFrac::one(), 3).is_one());
        let c = AlphaFrac::alpha().recip().unwrap();
        assert_eq!(rising_factorial(&c, 1), c);
        // (1/α)(1/α + 1)/2 computed by hand
        let direct = &(&c * &(&c + &AlphaFrac::one())) * &AlphaFrac::from_ratio(1, 2);
        assert_eq!(rising_factorial(&c, 2), direct);
        assert_eq!(rising_factorial(&c, 2), frac(&[1, 1], &[0, 0, 2]));
        assert!(rising_factorial(&c, 0).is_one());
    }

    #[test]
    fn evaluate_alpha_examples() {
        assert_eq!(
            AlphaFrac::linear(1, 1).evaluate_alpha(&q(2, 1)),
            Ok(q(3, 1))
        );
        let pole = AlphaFrac::linear(1, 1).recip().unwrap();
        assert!(matches!(
            pole.evaluate_alpha(&q(-1, 1)),
            Err(FieldError::Pole { .. })
        ));
        assert_eq!(
            frac(&[-1, 0, 1], &[-1, 1]).evaluate_alpha(&q(1, 1)),
            Ok(q(2, 1))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(frac(&[0, 3, 1], &[1, 1]).to_string(), "(α^2+3α)/(α+1)");
        assert_eq!(frac(&[1, 1], &[0, 0, 2]).to_string(), "(α+1)/(2α^2)");
        assert_eq!(frac(&[-1], &[0, 1]).to_string(), "-1/α");
        assert_eq!(AlphaFrac::from_ratio(-5, 2).to_string(), "-5/2");
        assert_eq!(
            frac(&[0, 3, 1], &[1, 1]).to_latex(),
            "\\frac{\\alpha^{2}+3\\alpha}{\\alpha+1}"
        );
        assert_eq!(frac(&[-1], &[2, 1]).to_latex(), "-\\frac{1}{\\alpha+2}");
        assert_eq!(AlphaFrac::zero().to_string(), "0");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("5/2"), Ok(q(5, 2)));
        assert_eq!(parse_rational("-3"), Ok(q(-3, 1)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = AlphaPoly> {
        prop::collection::vec(-6i64..=6, 0..4).prop_map(|cs| ip(&cs))
    }

    fn arb_frac() -> impl Strategy<Value = AlphaFrac> {
        (
            arb_poly(),
            arb_poly().prop_filter("nonzero", |p| !p.is_zero()),
        )
            .prop_map(|(n, d)| AlphaFrac::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_under_common_factor(n in arb_poly(), d in arb_poly(), c in arb_poly()) {
            prop_assume!(!d.is_zero() && !c.is_zero());
            let a = AlphaFrac::new(&n * &c, &d * &c).unwrap();
            let b = AlphaFrac::new(n, d).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn associativity_and_distributivity(a in arb_frac(), b in arb_frac(), c in arb_frac()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn rising_factorial_is_scaled_product(a in arb_frac(), k in 0u32..5) {
            let lit: AlphaFrac = (0..k).map(|j| &a + &AlphaFrac::from_int(j as i64)).product();
            let fact: i64 = (1..=k as i64).product();
            prop_assert_eq!(&rising_factorial(&a, k) * &AlphaFrac::from_int(fact), lit);
        }

        #[test]
        fn text_round_trip(a in arb_frac()) {
            let back: AlphaFrac = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
