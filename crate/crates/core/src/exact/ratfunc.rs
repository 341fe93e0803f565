use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{forward_owned_binop, LaurentPolynomial, Polynomial, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials in `q`, kept reduced with a monic
/// denominator so that equal values compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd_monic(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::normalized(num, den))
    }

    /// Assumes `num` and `den` are coprime.
    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coeff().cloned().expect("nonzero denominator");
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(Polynomial::constant(c))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from(Polynomial::monomial(Rational::one(), k as usize))
        } else {
            RationalFunction {
                num: Polynomial::one(),
                den: Polynomial::monomial(Rational::one(), (-k) as usize),
            }
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a polynomial, if the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The value as a Laurent polynomial, if the denominator is a monomial.
    pub fn as_laurent(&self) -> Option<LaurentPolynomial> {
        let d = self.den.degree()?;
        if self.den.coeffs()[..d].iter().all(Zero::is_zero) {
            Some(LaurentPolynomial::from(self.num.clone()).shift(-(d as i64)))
        } else {
            None
        }
    }

    /// Membership in `N[q]`.
    pub fn is_nonneg_polynomial(&self) -> bool {
        self.as_polynomial().is_some_and(Polynomial::is_nonneg_integral)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Substitute `q -> q^m` for `m >= 1`.
    pub fn substitute_power(&self, m: usize) -> Self {
        // q -> q^m preserves coprimality: a common root would pull back.
        RationalFunction { num: self.num.substitute_power(m), den: self.den.substitute_power(m) }
    }

    /// The value at `q = x`; an error if `x` is a pole.
    pub fn value_at(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        RationalFunction { num, den: Polynomial::one() }
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        if p.min_deg() >= 0 {
            return Self::from(p.to_polynomial().unwrap());
        }
        let body = p.body();
        let den = Polynomial::monomial(Rational::one(), (-p.min_deg()) as usize);
        // body has nonzero constant term, so it is coprime to q^a
        RationalFunction { num: body, den }
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let g = self.den.gcd_monic(&rhs.den).unwrap();
        let a = self.den.exact_div(&g).unwrap();
        let b = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RationalFunction::new(num, &a * &rhs.den).unwrap()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel so the product needs no further reduction
        let g1 = self.num.gcd_monic(&rhs.den).unwrap();
        let g2 = rhs.num.gcd_monic(&self.den).unwrap();
        let num = &self.num.exact_div(&g1).unwrap() * &rhs.num.exact_div(&g2).unwrap();
        let den = &self.den.exact_div(&g2).unwrap() * &rhs.den.exact_div(&g1).unwrap();
        RationalFunction::normalized(num, den)
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let f = RationalFunction::new(p(&[1, 0, -1]), p(&[2, -2])).unwrap();
        assert_eq!(f.as_polynomial(), Some(&p(&[1, 1]).scale(&crate::exact::rat(1, 2))));
        let g = RationalFunction::new(p(&[1, 0, 1, 0, 1]), p(&[1, 1, 1])).unwrap();
        assert_eq!(g.as_polynomial(), Some(&p(&[1, -1, 1])));
    }

    #[test]
    fn arithmetic_matches_fractions() {
        let a = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RationalFunction::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        assert_eq!(&a - &b, RationalFunction::one());
        let prod = &a * &RationalFunction::from(p(&[1, -1]));
        assert!(prod.is_one());
        assert_eq!(a.value_at(&int(0)).unwrap(), int(1));
        assert!(a.value_at(&int(1)).is_err());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::new(p(&[1]), Polynomial::zero()), Err(Error::DivisionByZero));
        assert!(RationalFunction::zero().recip().is_err());
    }

    #[test]
    fn laurent_round_trip() {
        let l = LaurentPolynomial::new(-2, vec![int(-1), int(-1)]);
        let f = RationalFunction::from(l.clone());
        assert_eq!(f.as_laurent(), Some(l));
        assert_eq!(RationalFunction::q_pow(-3) * RationalFunction::q_pow(3), RationalFunction::one());
    }
}
