use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_owned_binop, RationalFunction};

/// Polynomial in `u` with coefficients in `Q(q)`; `coeffs[j]` multiplies `u^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPolynomial {
    coeffs: Vec<RationalFunction>,
}

impl UPolynomial {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        UPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::new(vec![c])
    }

    /// `c * u^j`.
    pub fn monomial(c: RationalFunction, j: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(); j];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn u() -> Self {
        Self::monomial(RationalFunction::one(), 1)
    }

    /// `1 - c u`.
    pub fn one_minus(c: RationalFunction) -> Self {
        Self::new(vec![RationalFunction::one(), -c])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> RationalFunction {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `h(c u)`.
    pub fn scale_u(&self, c: &RationalFunction) -> Self {
        let mut power = RationalFunction::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power = &power * c;
        }
        Self::new(out)
    }

    /// Evaluate at `u = x`.
    pub fn eval(&self, x: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluate at `u = q^k`.
    pub fn at_q_pow(&self, k: i64) -> RationalFunction {
        self.eval(&RationalFunction::q_pow(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl From<RationalFunction> for UPolynomial {
    fn from(c: RationalFunction) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPolynomial({self})")
    }
}

impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*u")?,
                _ => write!(f, "[{c}]*u^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a UPolynomial> for &'a UPolynomial {
    type Output = UPolynomial;
    fn add(self, rhs: &UPolynomial) -> UPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPolynomial::new((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }
}

impl<'a> Sub<&'a UPolynomial> for &'a UPolynomial {
    type Output = UPolynomial;
    fn sub(self, rhs: &UPolynomial) -> UPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPolynomial::new((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }
}

impl<'a> Mul<&'a UPolynomial> for &'a UPolynomial {
    type Output = UPolynomial;
    fn mul(self, rhs: &UPolynomial) -> UPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UPolynomial::zero();
        }
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPolynomial::new(out)
    }
}

impl Neg for &UPolynomial {
    type Output = UPolynomial;
    fn neg(self) -> UPolynomial {
        UPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_owned_binop!(UPolynomial, Add, add);
forward_owned_binop!(UPolynomial, Sub, sub);
forward_owned_binop!(UPolynomial, Mul, mul);

impl std::iter::Sum for UPolynomial {
    fn sum<I: Iterator<Item = UPolynomial>>(iter: I) -> Self {
        iter.fold(UPolynomial::zero(), |acc, x| &acc + &x)
    }
}
