use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::Partition;
use crate::error::{invalid, Error, Result};
use crate::exact::binomial;

fn stirling_rows() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Row `n` of the signless Stirling numbers of the first kind.
pub(crate) fn stirling_row(n: usize) -> Vec<BigInt> {
    if let Some(row) = stirling_rows().read().unwrap().get(n) {
        return row.clone();
    }
    let mut rows = stirling_rows().write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            // c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j)
            let stay = prev.get(j).cloned().unwrap_or_default() * (m - 1);
            row[j] = &prev[j - 1] + stay;
        }
        rows.push(row);
    }
    rows[n].clone()
}

/// Signless Stirling number `c(n, j)`: permutations of `n` letters with `j` cycles.
pub fn stirling_first(n: i64, j: i64) -> Result<BigInt> {
    if n < 0 || j < 0 || j > n {
        return invalid(format!("stirling_first needs 0 <= j <= n, got n={n}, j={j}"));
    }
    Ok(stirling_row(n as usize)[j as usize].clone())
}

/// Whether `binom(n,2)` divides `c(n,j)` for every `j` with `n - j` odd.
pub fn stirling_divisibility_check(n: i64) -> Result<bool> {
    if n < 2 {
        return invalid(format!("stirling divisibility needs n >= 2, got {n}"));
    }
    let b = binomial(n as u64, 2);
    let row = stirling_row(n as usize);
    Ok((0..=n as usize).filter(|j| (n as usize - j) % 2 == 1).all(|j| row[j].is_multiple_of(&b)))
}

/// Whether the partition has an even part occurring an odd number of times.
pub fn has_even_part_with_odd_multiplicity(lambda: &Partition) -> bool {
    lambda.multiplicities().iter().any(|&(p, c)| p % 2 == 0 && c % 2 == 1)
}

/// Whether `binom(n,2)` divides the size of the class of cycle type `lambda`.
/// Only defined for cycle types with an even part of odd multiplicity.
pub fn class_divisibility_check(lambda: &Partition) -> Result<bool> {
    if !has_even_part_with_odd_multiplicity(lambda) {
        return Err(Error::Inapplicable(format!(
            "({lambda}) has no even part with odd multiplicity"
        )));
    }
    let b = binomial(lambda.size(), 2);
    Ok(lambda.class_size().is_multiple_of(&b))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n` in increasing order, without multiplicity.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `nu_p(binom(m, r))` as the number of borrows in `m - r` written in base `p`.
pub fn kummer_valuation(p: u64, m: u64, r: u64) -> Result<u32> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if r > m {
        return invalid(format!("need 0 <= r <= m, got m={m}, r={r}"));
    }
    let (mut a, mut b) = (m, r);
    let mut borrow = 0;
    let mut count = 0;
    while a > 0 || b > 0 {
        let da = a % p;
        let db = b % p + borrow;
        borrow = u64::from(da < db);
        count += borrow as u32;
        a /= p;
        b /= p;
    }
    Ok(count)
}

/// Exponent of the largest power of `p` dividing `x`.
pub fn padic_valuation(p: u64, x: &BigInt) -> Result<u32> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if x.is_zero() {
        return invalid("p-adic valuation of zero");
    }
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        x = q;
        v += 1;
    }
}

/// `nu_p(x)` for machine integers; `x` must be nonzero.
pub(crate) fn valuation_u64(p: u64, mut x: u64) -> u32 {
    debug_assert!(x != 0);
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first(3, 2).unwrap(), 3.into());
        assert_eq!(stirling_first(4, 2).unwrap(), 11.into());
        assert_eq!(stirling_first(7, 7).unwrap(), 1.into());
        assert_eq!(stirling_first(0, 0).unwrap(), 1.into());
        assert!(stirling_first(3, 4).is_err());
    }

    #[test]
    fn stirling_divisibility_small() {
        assert!(stirling_divisibility_check(2).unwrap());
        assert!(stirling_divisibility_check(3).unwrap());
        assert!(stirling_divisibility_check(4).unwrap());
        assert!(stirling_divisibility_check(1).is_err());
    }

    #[test]
    fn class_divisibility() {
        assert!(class_divisibility_check(&"2,1".parse().unwrap()).unwrap());
        assert!(class_divisibility_check(&"2".parse().unwrap()).unwrap());
        assert!(class_divisibility_check(&"4,2,2".parse().unwrap()).unwrap());
        assert!(matches!(
            class_divisibility_check(&"2,2,1".parse().unwrap()),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn kummer_and_padic() {
        assert_eq!(kummer_valuation(2, 4, 2).unwrap(), 1);
        assert_eq!(kummer_valuation(3, 9, 4).unwrap(), 2);
        assert_eq!(kummer_valuation(5, 5, 0).unwrap(), 0);
        assert!(kummer_valuation(4, 5, 1).is_err());
        assert!(kummer_valuation(3, 2, 5).is_err());
        assert_eq!(padic_valuation(2, &24.into()).unwrap(), 3);
        assert_eq!(padic_valuation(3, &126.into()).unwrap(), 2);
        assert_eq!(padic_valuation(7, &10.into()).unwrap(), 0);
        assert!(padic_valuation(2, &0.into()).is_err());
    }

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(360), [2, 3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(valuation_u64(3, 162), 4);
    }
}
