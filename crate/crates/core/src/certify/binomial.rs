use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, factorial, is_integer, Polynomial, Rational};

/// `g(t) = sum_i b_i binom(t, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialCertificate {
    #[serde(serialize_with = "super::serialize_rationals", deserialize_with = "super::deserialize_rationals")]
    pub coefficients: Vec<Rational>,
    /// Every `b_i` is in `N`, hence `g` maps `N` to `N`.
    pub all_nonneg_integers: bool,
}

impl BinomialCertificate {
    /// `sum_i b_i binom(t, i)` as a polynomial in `t`.
    pub fn expand(&self) -> Polynomial {
        let mut basis = Polynomial::one();
        let mut out = Polynomial::zero();
        for (i, b) in self.coefficients.iter().enumerate() {
            let norm = Rational::from_integer(factorial(i as u64)).recip();
            out = &out + &basis.scale(&(b * norm));
            basis = &basis * &Polynomial::from_coeffs(vec![-Rational::from_integer(i.into()), Rational::one()]);
        }
        out
    }
}

/// `b_0 = g(0)`, `b_i = g(i) - sum_{j<i} b_j binom(i, j)`.
pub fn binomial_basis(g: &Polynomial) -> BinomialCertificate {
    let r = g.degree().unwrap_or(0);
    let mut coefficients: Vec<Rational> = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let mut b = g.eval_i64(i as i64);
        for (j, bj) in coefficients.iter().enumerate() {
            b -= bj * Rational::from_integer(binomial(i as u64, j as u64));
        }
        coefficients.push(b);
    }
    let all_nonneg_integers = coefficients.iter().all(|b| is_integer(b) && !b.is_negative());
    BinomialCertificate { coefficients, all_nonneg_integers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let c = binomial_basis(&Polynomial::from_i64s(&[0, 0, 1]));
        assert_eq!(c.coefficients, [int(0), int(1), int(2)]);
        assert!(c.all_nonneg_integers);
        // binom(t, 3) = (t^3 - 3t^2 + 2t) / 6
        let b3 = Polynomial::from_coeffs(vec![int(0), rat(1, 3), rat(-1, 2), rat(1, 6)]);
        assert_eq!(binomial_basis(&b3).coefficients, [int(0), int(0), int(0), int(1)]);
        let half = binomial_basis(&Polynomial::from_coeffs(vec![int(0), rat(1, 2)]));
        assert_eq!(half.coefficients, [int(0), rat(1, 2)]);
        assert!(!half.all_nonneg_integers);
    }

    proptest! {
        #[test]
        fn reconstruction(bs in prop::collection::vec(-20i64..20, 1..=9)) {
            // an integer-valued polynomial built in the binomial basis
            let target = BinomialCertificate {
                coefficients: bs.iter().map(|&b| int(b)).collect(),
                all_nonneg_integers: false,
            };
            let g = target.expand();
            let c = binomial_basis(&g);
            prop_assert_eq!(c.expand(), g.clone());
            let r = g.degree().unwrap_or(0) as i64;
            for t in 0..=2 * r + 5 {
                let direct = g.eval_i64(t);
                let via: Rational = c
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, b)| b * Rational::from_integer(binomial(t as u64, i as u64)))
                    .sum();
                prop_assert_eq!(direct, via);
            }
        }
    }
}
