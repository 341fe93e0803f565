use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{LaurentPolynomial, Polynomial, Rational};
use crate::error::{invalid, Error, Result};

fn cache() -> &'static RwLock<HashMap<u64, Polynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Divisors of `n` in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `d`-th cyclotomic polynomial `Phi_d(q)`, memoized.
pub fn cyclotomic(d: i64) -> Result<Polynomial> {
    if d < 1 {
        return invalid(format!("cyclotomic index must be >= 1, got {d}"));
    }
    Ok(cyclotomic_u(d as u64))
}

pub(crate) fn cyclotomic_u(d: u64) -> Polynomial {
    if let Some(p) = cache().read().unwrap().get(&d) {
        return p.clone();
    }
    let mut num = Polynomial::monomial(Rational::one(), d as usize);
    num = &num - &Polynomial::one();
    let proper: Polynomial = divisors(d)
        .into_iter()
        .filter(|&e| e < d)
        .map(cyclotomic_u)
        .product();
    let phi = num.exact_div(&proper).expect("q^d - 1 is divisible by its proper cyclotomic factors");
    cache().write().unwrap().entry(d).or_insert(phi).clone()
}

/// `[a]_q`, with `[0]_q = 0` and `[-a]_q = -q^{-a} [a]_q`.
pub fn q_int(a: i64) -> LaurentPolynomial {
    let body = LaurentPolynomial::from(Polynomial::q_integer(a.unsigned_abs() as usize));
    if a >= 0 {
        body
    } else {
        -body.shift(a)
    }
}

/// Gaussian binomial `[i choose j]` in base `q^M`.
pub fn q_binomial(i: i64, j: i64, base_exp: i64) -> Result<Polynomial> {
    if j < 0 || j > i {
        return invalid(format!("q-binomial needs 0 <= j <= i, got i={i}, j={j}"));
    }
    if base_exp < 1 {
        return invalid(format!("q-binomial base exponent must be >= 1, got {base_exp}"));
    }
    Ok(gaussian_binomial(i as u64, j as u64).substitute_power(base_exp as usize))
}

/// Gaussian binomial `[n choose k]_q` via the q-Pascal rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`; zero when `k > n`.
pub fn gaussian_binomial(n: u64, k: u64) -> Polynomial {
    let (n, k) = (n as usize, k as usize);
    if k > n {
        return Polynomial::zero();
    }
    let k = k.min(n - k);
    // row[j] holds [r choose j] as integer coefficient vectors
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=n {
        let top = r.min(k);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let mut c: Vec<BigInt> = Vec::new();
            if j >= 1 {
                c = row[j - 1].clone();
            }
            if j < row.len() && j <= r - 1 {
                let prev = &row[j];
                if c.len() < prev.len() + j {
                    c.resize(prev.len() + j, BigInt::zero());
                }
                for (t, x) in prev.iter().enumerate() {
                    c[t + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    Polynomial::from_integers(row.swap_remove(k))
}

/// Outcome of the Laurent-quotient test for `prod [a_i]_q / prod [b_i]_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientTest {
    pub is_laurent: bool,
    pub witness: LaurentWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LaurentWitness {
    /// Some `a_i = 0`, so the quotient is zero.
    ZeroFactor,
    /// The smallest `d` with `N(d) < D(d)`.
    FailingDivisor { d: u64, numerator: usize, denominator: usize },
    /// Every `(d, N(d), D(d))` checked, all with `N(d) >= D(d)`.
    Table { rows: Vec<(u64, usize, usize)> },
}

/// Decide whether `prod [a_i]_q / prod [b_i]_q` is a Laurent polynomial by
/// comparing cyclotomic multiplicities over the divisors of the `b_i`.
pub fn laurent_quotient_test(a: &[i64], b: &[i64]) -> Result<QuotientTest> {
    if let Some(bad) = b.iter().find(|&&x| x <= 0) {
        return invalid(format!("denominator q-integers must be positive, got {bad}"));
    }
    if a.contains(&0) {
        return Ok(QuotientTest { is_laurent: true, witness: LaurentWitness::ZeroFactor });
    }
    let mut ts: Vec<u64> = b.iter().flat_map(|&x| divisors(x as u64)).filter(|&d| d > 1).collect();
    ts.sort_unstable();
    ts.dedup();
    let mut rows = Vec::with_capacity(ts.len());
    for d in ts {
        let n = a.iter().filter(|&&x| x.unsigned_abs() % d == 0).count();
        let dd = b.iter().filter(|&&x| x as u64 % d == 0).count();
        if n < dd {
            return Ok(QuotientTest {
                is_laurent: false,
                witness: LaurentWitness::FailingDivisor { d, numerator: n, denominator: dd },
            });
        }
        rows.push((d, n, dd));
    }
    Ok(QuotientTest { is_laurent: true, witness: LaurentWitness::Table { rows } })
}

/// Multiplicity of `Phi_d` as a factor of `p`.
pub fn cyclotomic_valuation(p: &Polynomial, d: i64) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("valuation of the zero polynomial".into()));
    }
    let phi = cyclotomic(d)?;
    let mut count = 0;
    let mut cur = p.clone();
    loop {
        let (q, r) = cur.div_rem(&phi)?;
        if !r.is_zero() {
            return Ok(count);
        }
        count += 1;
        cur = q;
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
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3).to_polynomial(), Some(p(&[1, 1, 1])));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-2), LaurentPolynomial::new(-2, vec![int(-1), int(-1)]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(2, 1, 1).unwrap(), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2, 1).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0, 3).unwrap(), Polynomial::one());
        assert_eq!(q_binomial(3, 1, 2).unwrap(), p(&[1, 0, 1, 0, 1]));
        assert!(q_binomial(2, 3, 1).is_err());
        assert!(q_binomial(2, -1, 1).is_err());
    }

    #[test]
    fn quotient_test_examples() {
        assert!(laurent_quotient_test(&[2], &[2]).unwrap().is_laurent);
        let t = laurent_quotient_test(&[3], &[2]).unwrap();
        assert!(!t.is_laurent);
        assert_eq!(t.witness, LaurentWitness::FailingDivisor { d: 2, numerator: 0, denominator: 1 });
        let z = laurent_quotient_test(&[0, 5], &[2, 3]).unwrap();
        assert_eq!(z.witness, LaurentWitness::ZeroFactor);
        assert!(laurent_quotient_test(&[1], &[0]).is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(cyclotomic_valuation(&p(&[1, 1]).pow(3), 2).unwrap(), 3);
        assert_eq!(cyclotomic_valuation(&p(&[1, 1, 1]), 3).unwrap(), 1);
        assert_eq!(cyclotomic_valuation(&p(&[1, 0, 1]), 3).unwrap(), 0);
        assert!(cyclotomic_valuation(&Polynomial::zero(), 2).is_err());
    }
}
