use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::fmt_terms;
use super::{forward_owned_binop, Polynomial, Rational};

/// `q^min_deg * (coeffs[0] + coeffs[1] q + ...)`, with both end
/// coefficients nonzero. Zero is stored with `min_deg = 0` and no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    min_deg: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPolynomial {
    pub fn new(min_deg: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPolynomial { min_deg: min_deg + lead as i64, coeffs }
    }

    pub fn zero() -> Self {
        LaurentPolynomial { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn monomial(c: Rational, deg: i64) -> Self {
        Self::new(deg, vec![c])
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: i64) -> Rational {
        let i = deg - self.min_deg;
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.min_deg >= 0
    }

    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if self.min_deg < 0 {
            return None;
        }
        Some(Polynomial::from_coeffs(self.coeffs.clone()).shift(self.min_deg as usize))
    }

    /// The polynomial part after dividing out `q^min_deg`.
    pub fn body(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.clone())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolynomial { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if x.is_zero() && self.min_deg < 0 {
            return None;
        }
        let body = self.body().eval(x);
        let factor = if self.min_deg >= 0 {
            num_traits::pow(x.clone(), self.min_deg as usize)
        } else {
            num_traits::pow(x.recip(), (-self.min_deg) as usize)
        };
        Some(body * factor)
    }
}

impl From<Polynomial> for LaurentPolynomial {
    fn from(p: Polynomial) -> Self {
        Self::new(0, p.into_coeffs())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.min_deg;
        fmt_terms(f, self.coeffs.iter().cloned().enumerate().map(|(i, c)| (base + i as i64, c)), "q")
    }
}

fn combine(a: &LaurentPolynomial, b: &LaurentPolynomial, sign: bool) -> LaurentPolynomial {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign { b.clone() } else { -b };
    }
    let lo = a.min_deg.min(b.min_deg);
    let hi = a.max_deg().unwrap().max(b.max_deg().unwrap());
    let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_deg - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.min_deg - lo) as usize + i];
        if sign {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentPolynomial::new(lo, coeffs)
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        combine(self, rhs, true)
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        combine(self, rhs, false)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let body = &self.body() * &rhs.body();
        LaurentPolynomial::new(self.min_deg + rhs.min_deg, body.into_coeffs())
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

forward_owned_binop!(LaurentPolynomial, Add, add);
forward_owned_binop!(LaurentPolynomial, Sub, sub);
forward_owned_binop!(LaurentPolynomial, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn normalizes_both_ends() {
        let p = LaurentPolynomial::new(-3, vec![int(0), int(2), int(0), int(0)]);
        assert_eq!(p.min_deg(), -2);
        assert_eq!(p.coeffs(), &[int(2)]);
        assert_eq!(LaurentPolynomial::new(5, vec![int(0)]), LaurentPolynomial::zero());
    }

    #[test]
    fn inverse_monomials_cancel() {
        let a = LaurentPolynomial::monomial(int(1), -2);
        let b = LaurentPolynomial::monomial(int(1), 2);
        assert_eq!((&a * &b).to_polynomial(), Some(Polynomial::one()));
        assert!(!a.is_polynomial());
        assert_eq!((&a - &a), LaurentPolynomial::zero());
    }

    #[test]
    fn display_negative_powers() {
        let p = LaurentPolynomial::new(-2, vec![int(-1), int(-1)]);
        assert_eq!(p.to_string(), "-q^-2 - q^-1");
    }
}
