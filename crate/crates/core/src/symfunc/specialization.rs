use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{binomial, gaussian_binomial, Polynomial, Rational};
use crate::partitions::{hooks_and_contents, Partition};

/// A symmetric function evaluated either at `x_1 = ... = x_k = 1` or at
/// `x_i = q^{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecValue {
    Integer(BigInt),
    Polynomial(Polynomial),
}

impl Serialize for SpecValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SpecValue::Integer(n) => s.collect_str(n),
            SpecValue::Polynomial(p) => p.serialize(s),
        }
    }
}

impl SpecValue {
    pub fn at_one(&self) -> Rational {
        match self {
            SpecValue::Integer(n) => Rational::from_integer(n.clone()),
            SpecValue::Polynomial(p) => p.eval(&Rational::one()),
        }
    }
}

/// `h_r(1, q, ..., q^{k-1})` (q-mode) or `h_r(1^k)`.
pub fn spec_h(r: u64, k: u64, q_mode: bool) -> SpecValue {
    assert!(k >= 1, "spec_h needs k >= 1");
    if q_mode {
        SpecValue::Polynomial(gaussian_binomial(k + r - 1, r))
    } else {
        SpecValue::Integer(binomial(k + r - 1, r))
    }
}

fn h_poly(r: i64, k: u64) -> Polynomial {
    if r < 0 {
        return Polynomial::zero();
    }
    gaussian_binomial(k + r as u64 - 1, r as u64)
}

/// `e_lambda(1^k) = prod binom(k, lambda_i)`.
pub fn spec_e(lambda: &Partition, k: u64) -> BigInt {
    lambda.parts().iter().map(|&p| binomial(k, p)).product()
}

/// `h_lambda(1^k) = prod binom(k + lambda_i - 1, lambda_i)`.
pub fn spec_h_list(lambda: &Partition, k: u64) -> BigInt {
    lambda.parts().iter().map(|&p| binomial(k + p - 1, p)).product()
}

/// `m_lambda(1^k)`: the number of distinct monomials `x^alpha` with
/// `alpha` a rearrangement of `lambda` in `k` variables. `m_empty(1^0) = 1`.
pub fn spec_m(lambda: &Partition, k: u64) -> BigInt {
    let l = lambda.len() as u64;
    if l > k {
        return BigInt::zero();
    }
    let mut count = crate::exact::factorial(k) / crate::exact::factorial(k - l);
    for (_, c) in lambda.multiplicities() {
        count /= crate::exact::factorial(c as u64);
    }
    count
}

/// `prod_{x in lambda} (z + c(x)) / h(x)`.
pub fn content_product(lambda: &Partition, z: &Rational) -> Rational {
    let data = hooks_and_contents(lambda);
    data.cells
        .iter()
        .map(|c| (z + Rational::from_integer(c.content.into())) / Rational::from_integer(c.hook.into()))
        .product()
}

/// `s_lambda(1^k)` by the hook-content formula.
pub fn spec_schur_ones(lambda: &Partition, k: u64) -> Rational {
    let v = content_product(lambda, &Rational::from_integer(k.into()));
    if k as usize >= lambda.len() {
        assert!(v.is_integer() && v >= Rational::zero(), "s_{lambda}(1^{k}) = {v} is not in N");
    }
    v
}

/// `s_lambda(1, q, ..., q^{k-1})` by the q-hook-content formula
/// `q^{n(lambda)} prod [k + c(x)]_q / [h(x)]_q`.
pub fn spec_schur_q(lambda: &Partition, k: u64) -> Polynomial {
    assert!(k >= 1, "spec_schur_q needs k >= 1");
    if lambda.len() as u64 > k {
        return Polynomial::zero();
    }
    let data = hooks_and_contents(lambda);
    let num: Polynomial =
        data.cells.iter().map(|c| Polynomial::q_integer((k as i64 + c.content) as usize)).product();
    let den: Polynomial = data.hooks().map(|h| Polynomial::q_integer(h as usize)).product();
    let body = num
        .exact_div(&den)
        .unwrap_or_else(|e| panic!("q-hook-content quotient for {lambda:?}, k={k}: {e}"));
    body.shift(data.n_lambda as usize)
}

/// `s_lambda(1, q, ..., q^{k-1})` as the Jacobi-Trudi determinant
/// `det(h_{lambda_i - i + j})`, expanded along rows over column subsets.
pub fn jacobi_trudi_oracle(lambda: &Partition, k: u64) -> Polynomial {
    assert!(k >= 1, "jacobi_trudi_oracle needs k >= 1");
    let l = lambda.len();
    if l == 0 {
        return Polynomial::one();
    }
    let entry = |i: usize, j: usize| h_poly(lambda.parts()[i] as i64 - i as i64 + j as i64, k);
    // det[mask] = determinant of the minor on the first popcount(mask) rows
    // and the column set `mask`
    let mut det = vec![Polynomial::zero(); 1 << l];
    det[0] = Polynomial::one();
    for mask in 1usize..(1 << l) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero();
        for col in 0..l {
            if mask & (1 << col) == 0 {
                continue;
            }
            let rest = mask & !(1 << col);
            if det[rest].is_zero() {
                continue;
            }
            let e = entry(row, col);
            if e.is_zero() {
                continue;
            }
            // sign: number of chosen columns above `col` in `rest`
            let above = (rest >> col).count_ones();
            let term = &e * &det[rest];
            acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        det[mask] = acc;
    }
    det[(1 << l) - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn complete_homogeneous() {
        assert_eq!(spec_h(3, 3, true), SpecValue::Polynomial(gaussian_binomial(5, 3)));
        assert_eq!(spec_h(0, 4, true), SpecValue::Polynomial(Polynomial::one()));
        assert_eq!(spec_h(2, 2, false), SpecValue::Integer(3.into()));
    }

    #[test]
    fn elementary_and_monomial() {
        assert_eq!(spec_e(&part("2"), 3), 3.into());
        assert_eq!(spec_e(&part("1,1"), 3), 9.into());
        assert_eq!(spec_m(&part("2"), 3), 3.into());
        assert_eq!(spec_m(&part("1,1"), 3), 3.into());
        assert_eq!(spec_m(&part("1,1,1"), 2), 0.into());
        assert_eq!(spec_m(&Partition::empty(), 0), 1.into());
        assert_eq!(spec_m(&part("1"), 0), 0.into());
        assert_eq!(spec_h_list(&part("2,1"), 2), 6.into());
    }

    #[test]
    fn principal_specializations() {
        assert_eq!(spec_schur_q(&part("2"), 3), p(&[1, 1, 2, 1, 1]));
        assert_eq!(spec_schur_q(&part("1"), 5), Polynomial::q_integer(5));
        assert!(spec_schur_q(&part("1,1,1"), 2).is_zero());
        assert_eq!(spec_schur_q(&part("1,1"), 2), p(&[0, 1]));
    }

    #[test]
    fn determinant_oracle_small() {
        assert_eq!(jacobi_trudi_oracle(&part("2,1"), 3), spec_schur_q(&part("2,1"), 3));
        assert_eq!(jacobi_trudi_oracle(&part("4"), 3), gaussian_binomial(6, 4));
        assert_eq!(jacobi_trudi_oracle(&part("1,1"), 2), p(&[0, 1]));
        assert!(jacobi_trudi_oracle(&part("1,1,1"), 2).is_zero());
    }

    #[test]
    fn dimensions_at_one() {
        assert_eq!(spec_schur_ones(&part("2,1"), 3), int(8));
        assert_eq!(spec_schur_ones(&part("1"), 7), int(7));
        assert_eq!(spec_schur_ones(&part("2"), 3), int(6));
    }
}
