//! Exact arithmetic: rationals, dense polynomials in `q`, Laurent
//! polynomials, rational functions and polynomials in `u` over `Q(q)`.

mod cyclo_field;
mod cyclotomic;
mod json;
mod laurent;
mod poly;
mod ratfunc;
mod upoly;

pub use cyclo_field::CyclotomicNumber;
pub use cyclotomic::{
    cyclotomic, cyclotomic_valuation, gaussian_binomial, laurent_quotient_test, q_binomial, q_int, LaurentWitness,
    QuotientTest,
};
pub use json::{integer_from_json, integer_to_json, rational_from_json, rational_to_json};
pub use laurent::LaurentPolynomial;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use upoly::UPolynomial;

pub(crate) use poly::forward_owned_binop;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `binom(t, i)` for a rational `t`, as used by the binomial basis.
pub fn binomial_rational(t: &Rational, i: u64) -> Rational {
    let mut acc = Rational::one();
    for j in 0..i {
        acc = acc * (t - Rational::from_integer(j.into())) / Rational::from_integer((j + 1).into());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 2), 6.into());
        assert_eq!(binomial(3, 5), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(factorial(5), 120.into());
        assert_eq!(binomial_rational(&int(5), 2), int(10));
        assert_eq!(binomial_rational(&int(1), 3), int(0));
    }
}
