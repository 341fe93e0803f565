use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{Basis, CharLabel, Coefficient, Decomposition};
use crate::error::{invalid, Result};
use crate::exact::{factorial, Polynomial, Rational, RationalFunction, UPolynomial};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{mn_character, spec_m, spec_schur_ones, spec_schur_q};

/// `phi_k(w)` as an integer, or `phi~_k(w)` as a reduced rational function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiValue {
    Integer(BigInt),
    RationalFunction(RationalFunction),
}

impl Serialize for PhiValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PhiValue::Integer(n) => s.collect_str(n),
            PhiValue::RationalFunction(f) => f.serialize(s),
        }
    }
}

fn check_cycle_type(mu: &Partition) -> Result<()> {
    if mu.is_empty() {
        return invalid("cycle type of S_0 has no reflection representation");
    }
    Ok(())
}

/// `[k]_{q^a}`.
fn q_int_base(k: u64, a: u64) -> Polynomial {
    Polynomial::q_integer(k as usize).substitute_power(a as usize)
}

/// `phi_k` on the reflection representation of `S_n` at cycle type `mu`:
/// `k^{l(mu) - 1}`, or graded `prod [k]_{q^{mu_i}} / [k]_q`.
pub fn phi_value_sym(mu: &Partition, k: u64, graded: bool) -> Result<PhiValue> {
    check_cycle_type(mu)?;
    if k == 0 {
        return invalid("phi_k needs k >= 1");
    }
    if !graded {
        return Ok(PhiValue::Integer(BigInt::from(k).pow(mu.len() as u32 - 1)));
    }
    let num: Polynomial = mu.parts().iter().map(|&a| q_int_base(k, a)).product();
    Ok(PhiValue::RationalFunction(RationalFunction::new(num, Polynomial::q_integer(k as usize))?))
}

/// `phi_hat(w) = det(1 - u w) / det(1 - q w)` on the reflection
/// representation: `(1 - q)/(1 - u) * prod (1 - u^{mu_i}) / (1 - q^{mu_i})`.
pub fn phi_hat_sym(mu: &Partition) -> Result<UPolynomial> {
    check_cycle_type(mu)?;
    let parts = mu.parts();
    let den = |a: u64| RationalFunction::from(Polynomial::one_minus_q_pow(a as usize));
    let first_scale = RationalFunction::from(Polynomial::one_minus_q_pow(1))
        .checked_div(&den(parts[0]))?;
    // (1 - u^a)/(1 - u) = 1 + u + ... + u^{a-1}
    let mut out = UPolynomial::new(vec![first_scale; parts[0] as usize]);
    for &a in &parts[1..] {
        let c = den(a).recip()?;
        let mut coeffs = vec![RationalFunction::zero(); a as usize + 1];
        coeffs[0] = c.clone();
        coeffs[a as usize] = -c;
        out = &out * &UPolynomial::new(coeffs);
    }
    Ok(out)
}

/// Multiplicities of the irreducible characters `chi^lambda` of `S_n` in
/// `phi_k` (`s_lambda(1^k) / k`) or in `phi~_k` (`s_lambda(1, ..., q^{k-1}) / [k]_q`).
pub fn sym_irr_decomposition(n: u64, k: u64, graded: bool) -> Result<Decomposition> {
    if n == 0 || k == 0 {
        return invalid("sym_irr_decomposition needs n >= 1 and k >= 1");
    }
    let k_q = RationalFunction::from(Polynomial::q_integer(k as usize));
    let terms = partitions_of(n, None).into_iter().map(|lambda| {
        let coeff = if graded {
            let s = RationalFunction::from(spec_schur_q(&lambda, k));
            Coefficient::RationalFunction(s.checked_div(&k_q).expect("[k]_q is nonzero"))
        } else {
            Coefficient::Rational(spec_schur_ones(&lambda, k) / Rational::from_integer(k.into()))
        };
        (CharLabel::Partition(lambda), coeff)
    });
    Ok(Decomposition::new(format!("S{n}"), Some(k as i64), Basis::Irreducible, terms.collect::<Vec<_>>()))
}

/// Graded multiplicities by the inner product
/// `(1/n!) sum_mu |C_mu| phi~_k(mu) chi^lambda(mu)` with Murnaghan-Nakayama values.
pub fn sym_irr_oracle(n: u64, k: u64) -> Result<Vec<(Partition, RationalFunction)>> {
    let classes = partitions_of(n, None);
    let phis: Vec<RationalFunction> = classes
        .iter()
        .map(|mu| match phi_value_sym(mu, k, true)? {
            PhiValue::RationalFunction(f) => Ok(f),
            PhiValue::Integer(_) => unreachable!(),
        })
        .collect::<Result<_>>()?;
    let n_fact = Rational::from_integer(factorial(n));
    partitions_of(n, None)
        .into_iter()
        .map(|lambda| {
            let mut acc = RationalFunction::zero();
            for (mu, phi) in classes.iter().zip(&phis) {
                let weight = Rational::from_integer(mu.class_size() * mn_character(&lambda, mu)?);
                acc = &acc + &phi.scale(&weight);
            }
            Ok((lambda, acc.scale(&n_fact.recip())))
        })
        .collect()
}

/// `phi_k = sum_lambda (m_lambda(1^k) / k) eta_lambda`.
pub fn sym_perm_decomposition(n: u64, k: u64) -> Result<Decomposition> {
    if n == 0 || k == 0 {
        return invalid("sym_perm_decomposition needs n >= 1 and k >= 1");
    }
    let terms: Vec<(CharLabel, Coefficient)> = partitions_of(n, None)
        .into_iter()
        .map(|lambda| {
            let c = Rational::new(spec_m(&lambda, k), k.into());
            (CharLabel::SymPerm(lambda), Coefficient::Rational(c))
        })
        .collect();
    Ok(Decomposition::new(format!("S{n}"), Some(k as i64), Basis::Permutation, terms))
}

/// Number of ways to distribute cycles of the given lengths into blocks of
/// sizes `blocks`: the coefficient of `x^blocks` in `prod_c p_{l_c}`, which
/// is also the value of the Young permutation character.
pub(crate) fn block_assignments(cycles: &[u64], blocks: &[u64]) -> BigInt {
    fn go(cycles: &[u64], room: &mut [u64]) -> BigInt {
        let Some((&l, rest)) = cycles.split_first() else {
            return if room.iter().all(Zero::is_zero) { BigInt::one() } else { BigInt::zero() };
        };
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= l {
                room[j] -= l;
                total += go(rest, room);
                room[j] += l;
            }
        }
        total
    }
    let mut room = blocks.to_vec();
    go(cycles, &mut room)
}
