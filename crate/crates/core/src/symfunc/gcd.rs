use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{spec_schur_ones, spec_schur_q};
use crate::error::{invalid, Error, Result};
use crate::exact::{Polynomial, Rational};
use crate::partitions::{partitions_of, Partition};

/// `gcd_Z { s_lambda(1^k) : lambda |- n }` by brute force.
pub fn gcd_int_schur(n: u64, k: u64) -> BigInt {
    let values: Vec<Rational> =
        partitions_of(n, None).par_iter().map(|l| spec_schur_ones(l, k)).collect();
    values.iter().fold(BigInt::zero(), |g, v| g.gcd(&v.to_integer()))
}

/// Monic `gcd_Q[q] { s_lambda(1, q, ..., q^{k-1}) : lambda |- n }`, folded in
/// enumeration order.
pub fn gcd_poly_schur(n: u64, k: u64) -> Polynomial {
    let values: Vec<Polynomial> =
        partitions_of(n, None).par_iter().map(|l| spec_schur_q(l, k)).collect();
    values.iter().fold(Polynomial::zero(), |g, v| {
        if g.is_zero() {
            v.monic()
        } else if v.is_zero() {
            g
        } else {
            g.gcd_monic(v).expect("nonzero gcd")
        }
    })
}

/// `k / gcd(n, k)`.
pub fn predicted_gcd_int(n: u64, k: u64) -> BigInt {
    BigInt::from(k / n.gcd(&k))
}

/// `[k]_q / [gcd(n, k)]_q`.
pub fn predicted_gcd_poly(n: u64, k: u64) -> Polynomial {
    let d = n.gcd(&k) as usize;
    Polynomial::q_integer(k as usize)
        .exact_div(&Polynomial::q_integer(d))
        .expect("[d]_q divides [k]_q when d | k")
}

/// `s_lambda(1, q, ..., q^{k-1}) / ([k]_q / [d]_q)` with `d = gcd(|lambda|, k)`.
pub fn schur_quotient(lambda: &Partition, k: u64) -> Result<Polynomial> {
    if k < 1 {
        return invalid("schur_quotient needs k >= 1");
    }
    let s = spec_schur_q(lambda, k);
    let f = s.exact_div(&predicted_gcd_poly(lambda.size().max(1), k)).map_err(|_| {
        Error::InexactDivision(format!("s_({lambda}) at k={k} is not divisible by [k]/[d]"))
    })?;
    assert!(f.is_nonneg_integral(), "schur quotient for ({lambda}), k={k} left N[q]: {f}");
    Ok(f)
}

/// Rises weakly to a peak, then falls weakly. Empty and single-element
/// sequences count as unimodal.
pub fn is_unimodal<T: PartialOrd>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unimodality {
    pub even_ok: bool,
    pub odd_ok: bool,
    pub whole_ok: bool,
}

/// Unimodality of the even-index, odd-index and full coefficient sequences
/// of [`schur_quotient`].
pub fn unimodality_check(lambda: &Partition, k: u64) -> Result<Unimodality> {
    if (k as usize) < lambda.len() {
        return invalid(format!("need k >= l(lambda), got k={k} for ({lambda})"));
    }
    let f = schur_quotient(lambda, k)?;
    Ok(unimodality_of(&f))
}

pub fn unimodality_of(f: &Polynomial) -> Unimodality {
    let c = f.coeffs();
    debug_assert!(c.iter().all(|x| !x.is_negative()));
    let even: Vec<&Rational> = c.iter().step_by(2).collect();
    let odd: Vec<&Rational> = c.iter().skip(1).step_by(2).collect();
    Unimodality { even_ok: is_unimodal(&even), odd_ok: is_unimodal(&odd), whole_ok: is_unimodal(c) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_int_schur(2, 3), 3.into());
        assert_eq!(gcd_int_schur(2, 2), 1.into());
        assert_eq!(gcd_int_schur(5, 5), 1.into());
        assert_eq!(gcd_poly_schur(2, 2), Polynomial::one());
        assert_eq!(gcd_poly_schur(2, 3), Polynomial::q_integer(3));
        assert_eq!(gcd_poly_schur(6, 3), Polynomial::one());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(schur_quotient(&part("2"), 3).unwrap(), Polynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(schur_quotient(&part("1"), 6).unwrap(), Polynomial::one());
        assert_eq!(schur_quotient(&part("2,1"), 2).unwrap(), Polynomial::from_i64s(&[0, 1]));
    }

    #[test]
    fn remark_counterexample_shape() {
        let u = unimodality_check(&part("2"), 3).unwrap();
        assert_eq!(u, Unimodality { even_ok: true, odd_ok: true, whole_ok: false });
        let one = unimodality_check(&part("1"), 4).unwrap();
        assert!(one.even_ok && one.odd_ok && one.whole_ok);
        assert!(unimodality_check(&part("1,1,1"), 2).is_err());
    }

    #[test]
    fn unimodal_sequences() {
        assert!(is_unimodal::<i32>(&[]));
        assert!(is_unimodal(&[1, 2, 2, 3, 1, 0]));
        assert!(!is_unimodal(&[1, 0, 1]));
        assert!(is_unimodal(&[3, 2, 1]));
    }
}
