use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exact::{q_binomial, Polynomial, RationalFunction, UPolynomial};

/// `h(u) = sum_i c_i B_i(u)` with
/// `B_i(u) = prod_{l=1}^i (1 - u q^{(1-l)M}) / (1 - q^{lM})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBinomialCertificate {
    pub base_exponent: u64,
    pub coefficients: Vec<RationalFunction>,
    /// Every `c_i` is in `N[q]`, hence `h(q^{pM})` is in `N[q]` for all `p >= 0`.
    pub all_in_nq: bool,
}

impl QBinomialCertificate {
    pub fn expand(&self) -> UPolynomial {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| q_binomial_basis_element(i, self.base_exponent).scale(c))
            .sum()
    }
}

/// `B_i(u)`.
pub fn q_binomial_basis_element(i: usize, base_exponent: u64) -> UPolynomial {
    let m = base_exponent as i64;
    (1..=i as i64).fold(UPolynomial::one(), |acc, l| {
        let den = RationalFunction::from(Polynomial::one_minus_q_pow((l * m) as usize))
            .recip()
            .expect("nonzero");
        let factor = UPolynomial::one_minus(RationalFunction::q_pow((1 - l) * m)).scale(&den);
        &acc * &factor
    })
}

/// `c_0 = h(1)`, `c_i = h(q^{iM}) - sum_{j<i} [i choose j]_{q^M} c_j`.
pub fn q_binomial_basis(h: &UPolynomial, base_exponent: u64) -> Result<QBinomialCertificate> {
    if base_exponent == 0 {
        return invalid("the q-binomial basis needs M >= 1");
    }
    let m = base_exponent as i64;
    let r = h.degree().unwrap_or(0);
    let mut coefficients: Vec<RationalFunction> = Vec::with_capacity(r + 1);
    for i in 0..=r as i64 {
        let mut c = h.at_q_pow(i * m);
        for (j, cj) in coefficients.iter().enumerate() {
            let gauss = RationalFunction::from(q_binomial(i, j as i64, m)?);
            c = &c - &(&gauss * cj);
        }
        coefficients.push(c);
    }
    let all_in_nq = coefficients.iter().all(RationalFunction::is_nonneg_polynomial);
    Ok(QBinomialCertificate { base_exponent, coefficients, all_in_nq })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let h = UPolynomial::one_minus(RationalFunction::one());
        let c = q_binomial_basis(&h, 1).unwrap();
        assert_eq!(c.coefficients, [RationalFunction::zero(), Polynomial::from_i64s(&[1, -1]).into()]);
        assert!(!c.all_in_nq);
        let one = q_binomial_basis(&UPolynomial::one(), 3).unwrap();
        assert_eq!(one.coefficients, [RationalFunction::one()]);
        assert!(one.all_in_nq);
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (prop::collection::vec(-3i64..4, 1..4), 0usize..3).prop_map(|(num, d)| {
            let den = Polynomial::one_minus_q_pow(d + 1);
            RationalFunction::new(Polynomial::from_i64s(&num), den).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn reconstruction(coeffs in prop::collection::vec(small_rf(), 1..4), m in 1u64..4) {
            let h = UPolynomial::new(coeffs);
            let c = q_binomial_basis(&h, m).unwrap();
            prop_assert_eq!(c.expand(), h.clone());
            let r = h.degree().unwrap_or(0) as i64;
            for p in 0..=r + 2 {
                let e = p * m as i64;
                prop_assert_eq!(c.expand().at_q_pow(e), h.at_q_pow(e));
            }
        }
    }

    #[test]
    fn certificate_implies_values_in_nq() {
        // h(u) = (1 - u q)(1 - u q^2) / ((1 - q^2)(1 - q^3)) is Cat-like
        let den = RationalFunction::from(&Polynomial::one_minus_q_pow(2) * &Polynomial::one_minus_q_pow(3))
            .recip()
            .unwrap();
        let h = (&UPolynomial::one_minus(RationalFunction::q_pow(1))
            * &UPolynomial::one_minus(RationalFunction::q_pow(2)))
            .scale(&den);
        let shifted = h.scale_u(&RationalFunction::q_pow(1));
        let c = q_binomial_basis(&shifted, 3).unwrap();
        assert!(c.all_in_nq);
        for p in 0..6 {
            assert!(shifted.at_q_pow(3 * p).is_nonneg_polynomial());
        }
        assert_eq!(c.coefficients[0].value_at(&int(1)).unwrap(), Rational::from_integer(1.into()));
    }
}
