use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::cyclotomic_u;
use super::{Polynomial, Rational};

/// Element of `Q(zeta_m)`, stored as a polynomial in `zeta` reduced
/// modulo `Phi_m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    m: u64,
    value: Polynomial,
}

impl CyclotomicNumber {
    fn reduce(m: u64, p: Polynomial) -> Self {
        let phi = cyclotomic_u(m);
        let value = if p.degree().is_some_and(|d| d >= phi.degree().unwrap()) {
            p.div_rem(&phi).expect("Phi_m is nonzero").1
        } else {
            p
        };
        CyclotomicNumber { m, value }
    }

    pub fn zero(m: u64) -> Self {
        CyclotomicNumber { m, value: Polynomial::zero() }
    }

    pub fn rational(m: u64, c: Rational) -> Self {
        Self::reduce(m, Polynomial::constant(c))
    }

    pub fn integer(m: u64, c: i64) -> Self {
        Self::rational(m, Rational::from_integer(c.into()))
    }

    /// `zeta_m^i` for any integer `i`.
    pub fn zeta_pow(m: u64, i: i64) -> Self {
        let e = i.rem_euclid(m as i64) as usize;
        Self::reduce(m, Polynomial::monomial(Rational::one(), e))
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The value if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.value.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.value.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CyclotomicNumber { m: self.m, value: self.value.scale(c) }
    }

    /// `sum_e c_e zeta^e` from the coefficients `c_0, ..., c_{m-1}`.
    pub fn from_zeta_powers(m: u64, coeffs: Vec<Rational>) -> Self {
        Self::reduce(m, Polynomial::from_coeffs(coeffs))
    }

    /// Complex conjugate: `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.m as usize];
        for (e, c) in self.value.coeffs().iter().enumerate() {
            let target = (self.m as usize - e % self.m as usize) % self.m as usize;
            coeffs[target] += c;
        }
        Self::from_zeta_powers(self.m, coeffs)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.m, other.m, "mixing elements of different cyclotomic fields");
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.value.to_string().replace('q', "z");
        write!(f, "Q(z{})[{}]", self.m, s)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber { m: self.m, value: &self.value + &rhs.value }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber { m: self.m, value: &self.value - &rhs.value }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber::reduce(self.m, &self.value * &rhs.value)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { m: self.m, value: -&self.value }
    }
}

super::forward_owned_binop!(CyclotomicNumber, Add, add);
super::forward_owned_binop!(CyclotomicNumber, Sub, sub);
super::forward_owned_binop!(CyclotomicNumber, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in 2..=12 {
            let total = (0..m as i64)
                .map(|i| CyclotomicNumber::zeta_pow(m, i))
                .fold(CyclotomicNumber::zero(m), |a, b| &a + &b);
            assert!(total.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn zeta_plus_inverse_for_square_and_hexagon() {
        // zeta_4 + zeta_4^{-1} = 0, zeta_6 + zeta_6^{-1} = 1
        let c4 = &CyclotomicNumber::zeta_pow(4, 1) + &CyclotomicNumber::zeta_pow(4, -1);
        assert_eq!(c4.to_rational(), Some(int(0)));
        let c6 = &CyclotomicNumber::zeta_pow(6, 1) + &CyclotomicNumber::zeta_pow(6, -1);
        assert_eq!(c6.to_rational(), Some(int(1)));
        let z = CyclotomicNumber::zeta_pow(5, 2);
        assert_eq!((&z * &CyclotomicNumber::zeta_pow(5, 3)).to_rational(), Some(int(1)));
    }
}
