//! Laurent polynomials in `q` and polynomials in `u` over `Q(zeta_m)`,
//! used to compare class functions symbolically after clearing the common
//! `q`-denominator.

use std::collections::BTreeMap;

use crate::exact::{CyclotomicNumber, RationalFunction, UPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CycloBiPoly {
    m: u64,
    /// `(q-degree, u-degree) -> coefficient`, zero terms dropped.
    terms: BTreeMap<(i64, usize), CyclotomicNumber>,
}

impl CycloBiPoly {
    pub(crate) fn zero(m: u64) -> Self {
        CycloBiPoly { m, terms: BTreeMap::new() }
    }

    pub(crate) fn monomial(c: CyclotomicNumber, q_deg: i64, u_deg: usize) -> Self {
        let mut out = Self::zero(c.order());
        out.add_term((q_deg, u_deg), c);
        out
    }

    pub(crate) fn one(m: u64) -> Self {
        Self::monomial(CyclotomicNumber::integer(m, 1), 0, 0)
    }

    /// `1 - zeta^i q^a u^b`.
    pub(crate) fn one_minus_zeta(m: u64, i: i64, a: i64, b: usize) -> Self {
        let mut out = Self::one(m);
        out.add_term((a, b), -&CyclotomicNumber::zeta_pow(m, i));
        out
    }

    /// `h * d` with rational coefficients, provided every `u`-coefficient
    /// of the product is a Laurent polynomial in `q`.
    pub(crate) fn from_upoly(m: u64, h: &UPolynomial, d: &RationalFunction) -> Option<Self> {
        let mut out = Self::zero(m);
        for (j, c) in h.coeffs().iter().enumerate() {
            let l = (c * d).as_laurent()?;
            for (i, a) in l.coeffs().iter().enumerate() {
                out.add_term((l.min_deg() + i as i64, j), CyclotomicNumber::rational(m, a.clone()));
            }
        }
        Some(out)
    }

    fn add_term(&mut self, key: (i64, usize), c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Self) {
        for (key, c) in &other.terms {
            self.add_term(*key, c.clone());
        }
    }

    pub(crate) fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = Self::zero(self.m);
        for (key, a) in &self.terms {
            out.add_term(*key, a * c);
        }
        out
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.m);
        for ((qa, ua), a) in &self.terms {
            for ((qb, ub), b) in &other.terms {
                out.add_term((qa + qb, ua + ub), a * b);
            }
        }
        out
    }
}
