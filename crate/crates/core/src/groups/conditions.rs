use num_integer::Integer as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tables::exceptional_main;
use super::{catalan_at_one, catalan_star_at_one, GroupLabel, ReflectionGroupData, ResidueCondition};
use crate::exact::laurent_quotient_test;
use crate::partitions::{prime_factors, valuation_u64};

/// A `k = d*_i + 1` for which `Cat*_k(W, q)` vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCase {
    pub k: u64,
    /// Whether `k` lies in the periodic `Cat*` polynomiality condition anyway.
    pub in_cat_star: bool,
    pub in_cat: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialityConditions {
    /// `k` with `Cat_k(W, q)` a polynomial.
    pub cat: ResidueCondition,
    /// `k` with `Cat*_k(W, q)` a polynomial, not counting the isolated
    /// vanishing values in `zero_cases`.
    pub cat_star: ResidueCondition,
    pub both: ResidueCondition,
    pub zero_cases: Vec<ZeroCase>,
}

/// Residue characterization of the `k` for which `Cat_k(W, q)` and
/// `Cat*_k(W, q)` are polynomials, by scanning one period of the
/// cyclotomic multiplicity counts.
pub fn q_polynomiality_condition(w: &ReflectionGroupData) -> PolynomialityConditions {
    let period = w.degree_lcm();
    let degrees: Vec<i64> = w.degrees.iter().map(|&d| d as i64).collect();
    let max_co = w.codegrees.iter().copied().max().unwrap_or(0) as i64;
    // a representative of k's class large enough that no dual factor is zero
    let lift = period as i64 * (max_co / period as i64 + 1);
    let verdicts: Vec<(bool, bool)> = (1..=period)
        .into_par_iter()
        .map(|k| {
            let k = k as i64;
            let a: Vec<i64> = degrees.iter().map(|d| k + d - 1).collect();
            let a_star: Vec<i64> = w.codegrees.iter().map(|&c| k + lift - c as i64 - 1).collect();
            let cat = laurent_quotient_test(&a, &degrees).expect("degrees are positive").is_laurent;
            let star =
                laurent_quotient_test(&a_star, &degrees).expect("degrees are positive").is_laurent;
            (cat, star)
        })
        .collect();
    let pick = |f: fn(&(bool, bool)) -> bool| {
        ResidueCondition::new(
            period,
            verdicts.iter().enumerate().filter(|(_, v)| f(v)).map(|(i, _)| i as u64 + 1),
        )
    };
    let cat = pick(|v| v.0);
    let cat_star = pick(|v| v.1);
    let both = cat.intersection(&cat_star);
    let mut ks: Vec<u64> = w.codegrees.iter().map(|c| c + 1).collect();
    ks.dedup();
    let zero_cases = ks
        .into_iter()
        .filter(|&k| !cat_star.contains(k))
        .map(|k| ZeroCase { k, in_cat_star: false, in_cat: cat.contains(k) })
        .collect();
    PolynomialityConditions { cat, cat_star, both, zero_cases }
}

/// The `k >= 1` with `Cat_k(W, 1)` (or `Cat*_k(W, 1)` when `dual`) an
/// integer, prime by prime over the divisors of `|W|`.
pub fn integrality_condition(w: &ReflectionGroupData, dual: bool) -> ResidueCondition {
    let order: u64 = w.degrees.iter().product();
    let shifts: Vec<i64> = if dual {
        w.codegrees.iter().map(|&c| -(c as i64) - 1).collect()
    } else {
        w.degrees.iter().map(|&d| d as i64 - 1).collect()
    };
    let per_prime: Vec<ResidueCondition> = prime_factors(order)
        .into_par_iter()
        .map(|p| {
            let e = valuation_u64(p, order);
            let pe = p.pow(e);
            ResidueCondition::from_predicate(pe, |x| {
                let total: u32 = shifts
                    .iter()
                    .map(|&s| {
                        let y = (x as i64 + s).rem_euclid(pe as i64) as u64;
                        if y == 0 {
                            e
                        } else {
                            valuation_u64(p, y).min(e)
                        }
                    })
                    .sum();
                total >= e
            })
        })
        .collect();
    per_prime.iter().fold(ResidueCondition::all(), |acc, c| acc.intersection(c))
}

/// Integrality condition by testing every `k` in one full period `|W|`.
pub fn integrality_condition_naive(w: &ReflectionGroupData, dual: bool) -> ResidueCondition {
    let order: u64 = w.degrees.iter().product();
    ResidueCondition::from_predicate(order, |k| {
        let v = if dual { catalan_star_at_one(w, k as i64) } else { catalan_at_one(w, k as i64) };
        v.is_integer()
    })
}

/// The published condition under which both q-Catalan numbers are
/// polynomials (for dihedral groups: `k = +-1 mod m`).
pub fn main_condition(w: &ReflectionGroupData) -> ResidueCondition {
    match w.label {
        GroupLabel::Sym(n) => ResidueCondition::from_predicate(n, |k| k.gcd(&n) == 1),
        label if label.is_dihedral().is_some() => {
            let m = label.is_dihedral().unwrap();
            ResidueCondition::new(m, [1, m - 1])
        }
        GroupLabel::Imprimitive { m, .. } | GroupLabel::Cyclic(m) => ResidueCondition::new(m, [1]),
        GroupLabel::Exceptional(e) => exceptional_main(e),
        GroupLabel::Dihedral(_) => unreachable!(),
    }
}

/// The condition under which `phi_k` is a character: [`main_condition`]
/// except for dihedral groups, where it is `k = 1`, or `k >= m - 1` with
/// `k^2 = 1` modulo `2m` (m even) or `m` (m odd).
pub fn character_condition(w: &ReflectionGroupData) -> ResidueCondition {
    match w.label.is_dihedral() {
        Some(m) => {
            let h = if m % 2 == 0 { 2 * m } else { m };
            ResidueCondition::from_predicate(h, |k| (k * k) % h == 1 % h).with_min_k(m - 1)
        }
        None => main_condition(w),
    }
}
