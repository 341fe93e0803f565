//! `G(m,1,n)`: conjugacy classes are `m`-tuples of partitions recording
//! the cycle lengths of each color, and irreducible characters are indexed
//! by `m`-tuples of partitions through the Frobenius characteristic
//! `prod_{cycles (l, i)} sum_r zeta^{ir} p_l(x^(r)) = sum chi^lambda(mu) S_lambda`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::bipoly::CycloBiPoly;
use super::sym::block_assignments;
use super::{Basis, CharLabel, Coefficient, Decomposition};
use crate::error::{invalid, Error, Result};
use crate::exact::{
    factorial, CyclotomicNumber, Polynomial, Rational, RationalFunction, UPolynomial,
};
use crate::partitions::{enumerate_multipartitions, partitions_of, MultiPartition, Partition};
use crate::symfunc::{content_product, mn_character, spec_m, spec_schur_q};

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return invalid("G(m,1,n) needs m >= 2");
    }
    Ok(())
}

/// Conjugacy classes of `G(m,1,n)`.
pub fn g_m1n_classes(m: usize, n: u64) -> Vec<MultiPartition> {
    enumerate_multipartitions(m, n)
}

/// `n! m^n / prod_i (z_{mu^(i)} m^{l(mu^(i))})`.
pub fn g_m1n_class_size(mu: &MultiPartition) -> BigInt {
    let m = BigInt::from(mu.m());
    let n = mu.size();
    let mut den = BigInt::one();
    for part in mu.components() {
        den *= part.z() * m.pow(part.len() as u32);
    }
    factorial(n) * m.pow(n as u32) / den
}

/// `phi_k(w) = k^{dim V^w}`; only color-0 cycles contribute fixed vectors.
pub fn phi_g_m1n(mu: &MultiPartition, k: u64) -> BigInt {
    BigInt::from(k).pow(mu.components()[0].len() as u32)
}

/// `(length, color)` of every cycle.
fn cycles(mu: &MultiPartition) -> Vec<(u64, usize)> {
    mu.components()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.parts().iter().map(move |&l| (l, i)))
        .collect()
}

/// `chi^lambda(mu)` in `Q(zeta_m)`.
pub fn g_m1n_character(lambda: &MultiPartition, mu: &MultiPartition) -> Result<CyclotomicNumber> {
    let m = lambda.m();
    if mu.m() != m || mu.size() != lambda.size() {
        return invalid(format!("class {mu} does not belong to the group of {lambda}"));
    }
    let cyc = cycles(mu);
    let room: Vec<u64> = lambda.components().iter().map(Partition::size).collect();
    let mut acc = vec![BigInt::zero(); m];
    let mut assigned: Vec<Vec<u64>> = vec![Vec::new(); m];
    assign(&cyc, lambda, &mut room.clone(), &mut assigned, 0, &mut acc);
    let coeffs = acc.into_iter().map(Rational::from_integer).collect();
    Ok(CyclotomicNumber::from_zeta_powers(m as u64, coeffs))
}

fn assign(
    cyc: &[(u64, usize)],
    lambda: &MultiPartition,
    room: &mut [u64],
    assigned: &mut [Vec<u64>],
    exponent: usize,
    acc: &mut [BigInt],
) {
    let m = room.len();
    let Some((&(l, color), rest)) = cyc.split_first() else {
        let mut value = BigInt::one();
        for (r, lengths) in assigned.iter().enumerate() {
            let nu = Partition::from_unsorted(lengths.clone());
            value *= mn_character(&lambda.components()[r], &nu).expect("sizes match");
            if value.is_zero() {
                return;
            }
        }
        acc[exponent % m] += value;
        return;
    };
    for r in 0..m {
        if room[r] < l {
            continue;
        }
        room[r] -= l;
        assigned[r].push(l);
        assign(rest, lambda, room, assigned, exponent + color * r, acc);
        assigned[r].pop();
        room[r] += l;
    }
}

/// `pi_hat(p_l(x^(r)))`: `(1 - q^{(m-1)l} u^l) / (1 - q^{ml})` for `r = 0`
/// and `(q^{rl} - q^{(r-1)l} u^l) / (1 - q^{ml})` otherwise.
fn pi_hat_power_sum(m: usize, r: usize, l: u64) -> UPolynomial {
    let den = RationalFunction::from(Polynomial::one_minus_q_pow(m * l as usize))
        .recip()
        .expect("nonzero");
    let l_i = l as i64;
    let (c0, cl) = if r == 0 {
        (RationalFunction::one(), -RationalFunction::q_pow((m as i64 - 1) * l_i))
    } else {
        (RationalFunction::q_pow(r as i64 * l_i), -RationalFunction::q_pow((r as i64 - 1) * l_i))
    };
    let mut coeffs = vec![RationalFunction::zero(); l as usize + 1];
    coeffs[0] = &c0 * &den;
    coeffs[l as usize] = &cl * &den;
    UPolynomial::new(coeffs)
}

/// `pi_hat(s_lambda(x^(r)))` through the power-sum expansion
/// `s_lambda = sum_nu chi^lambda(nu) p_nu / z_nu`.
fn pi_hat_schur(m: usize, r: usize, lambda: &Partition) -> UPolynomial {
    let mut powers: HashMap<u64, UPolynomial> = HashMap::new();
    let mut total = UPolynomial::zero();
    for nu in partitions_of(lambda.size(), None) {
        let chi = mn_character(lambda, &nu).expect("sizes match");
        if chi.is_zero() {
            continue;
        }
        let mut term = UPolynomial::one();
        for &l in nu.parts() {
            let p = powers.entry(l).or_insert_with(|| pi_hat_power_sum(m, r, l));
            term = &term * &*p;
        }
        let c = RationalFunction::constant(Rational::new(chi, nu.z()));
        total = &total + &term.scale(&c);
    }
    total
}

fn hat_multiplicity(lambda: &MultiPartition) -> UPolynomial {
    let m = lambda.m();
    lambda
        .components()
        .iter()
        .enumerate()
        .fold(UPolynomial::one(), |acc, (r, part)| &acc * &pi_hat_schur(m, r, part))
}

/// Multiplicity of `chi^lambda` in `phi_hat`, as a polynomial in `u`, or
/// its reduced value at `u = q^k`.
pub fn g_m1n_hat_multiplicity(lambda: &MultiPartition, substitute_k: Option<i64>) -> Result<Coefficient> {
    check_m(lambda.m())?;
    let h = hat_multiplicity(lambda);
    Ok(match substitute_k {
        Some(k) => Coefficient::RationalFunction(h.at_q_pow(k)),
        None => Coefficient::UPolynomial(h),
    })
}

fn group_name(m: usize, n: u64) -> String {
    format!("G({m},1,{n})")
}

/// All multiplicities in `phi_hat` (or `phi~_k` when `k` is given).
pub fn g_m1n_hat_decomposition(m: usize, n: u64, substitute_k: Option<i64>) -> Result<Decomposition> {
    check_m(m)?;
    let labels = enumerate_multipartitions(m, n);
    let terms: Vec<(CharLabel, Coefficient)> = labels
        .into_par_iter()
        .map(|lambda| {
            let c = g_m1n_hat_multiplicity(&lambda, substitute_k).expect("m checked");
            (CharLabel::Multi(lambda), c)
        })
        .collect();
    Ok(Decomposition::new(group_name(m, n), substitute_k, Basis::Irreducible, terms))
}

/// `prod_{x in lambda^(0)} ((m+k-1)/m + c(x))/h(x) * prod_{r>=1} prod_{x in lambda^(r)} ((k-1)/m + c(x))/h(x)`.
pub fn g_m1n_mult_ungraded(lambda: &MultiPartition, k: i64) -> Result<Rational> {
    let m = lambda.m() as i64;
    check_m(m as usize)?;
    let z0 = Rational::new((m + k - 1).into(), m.into());
    let z = Rational::new((k - 1).into(), m.into());
    let mut acc = content_product(&lambda.components()[0], &z0);
    for part in &lambda.components()[1..] {
        acc *= content_product(part, &z);
    }
    Ok(acc)
}

pub fn g_m1n_ungraded_decomposition(m: usize, n: u64, k: i64) -> Result<Decomposition> {
    check_m(m)?;
    let terms: Vec<(CharLabel, Coefficient)> = enumerate_multipartitions(m, n)
        .into_iter()
        .map(|lambda| {
            let c = g_m1n_mult_ungraded(&lambda, k).expect("m checked");
            (CharLabel::Multi(lambda), Coefficient::Rational(c))
        })
        .collect();
    Ok(Decomposition::new(group_name(m, n), Some(k), Basis::Irreducible, terms))
}

fn fuss_p(m: usize, k: i64) -> Result<u64> {
    if k < 1 || (k - 1) % m as i64 != 0 {
        return Err(Error::Inapplicable(format!("k = {k} is not 1 mod {m}")));
    }
    Ok(((k - 1) / m as i64) as u64)
}

/// For `k = pm + 1`: `s_{lambda^(0)}(1, q^m, ..., q^{pm}) prod_r s_{lambda^(r)}(q^r, q^{r+m}, ..., q^{r+(p-1)m})`.
pub fn g_m1n_mult_graded_fuss(lambda: &MultiPartition, k: i64) -> Result<Polynomial> {
    let m = lambda.m();
    check_m(m)?;
    let p = fuss_p(m, k)?;
    let mut acc = spec_schur_q(&lambda.components()[0], p + 1).substitute_power(m);
    for (r, part) in lambda.components().iter().enumerate().skip(1) {
        let factor = if p == 0 {
            if part.is_empty() {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        } else {
            spec_schur_q(part, p).substitute_power(m).shift(r * part.size() as usize)
        };
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// `eta^{r,lambda}(mu)`: fixed points of a `mu`-element on the cosets of
/// `G(m,1,r) x S_lambda`. A fixed coset chooses a union `A` of cycles of
/// size `r` containing every colored cycle; the remaining color-0 cycles
/// are spread over blocks of sizes `lambda`, each with `m` choices of phase.
pub fn eta_value(r: u64, lambda: &Partition, mu: &MultiPartition) -> Result<BigInt> {
    let m = mu.m();
    if r + lambda.size() != mu.size() {
        return invalid(format!("eta^({r},{lambda}) and class {mu} have different ranks"));
    }
    let colored: u64 = mu.components()[1..].iter().map(Partition::size).sum();
    if colored > r {
        return Ok(BigInt::zero());
    }
    let free: &[u64] = mu.components()[0].parts();
    let need = r - colored;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << free.len()) {
        let chosen: u64 = (0..free.len()).filter(|i| mask & (1 << i) != 0).map(|i| free[i]).sum();
        if chosen != need {
            continue;
        }
        let rest: Vec<u64> = (0..free.len()).filter(|i| mask & (1 << i) == 0).map(|i| free[i]).collect();
        let ways = block_assignments(&rest, lambda.parts());
        total += ways * BigInt::from(m).pow(rest.len() as u32);
    }
    Ok(total)
}

/// `phi_k = sum_{r=0}^n sum_{lambda |- n-r} m_lambda(1^p) eta^{r,lambda}` for `k = pm + 1`.
pub fn g_m1n_perm_decomposition(m: usize, n: u64, k: i64) -> Result<Decomposition> {
    check_m(m)?;
    let p = fuss_p(m, k)?;
    let mut terms = Vec::new();
    for r in (0..=n).rev() {
        for lambda in partitions_of(n - r, None) {
            let c = Rational::from_integer(spec_m(&lambda, p));
            terms.push((CharLabel::MultiPerm { r, lambda }, Coefficient::Rational(c)));
        }
    }
    Ok(Decomposition::new(group_name(m, n), Some(k), Basis::Permutation, terms))
}

/// Symbolic identity `sum_lambda m_hat^lambda chi^lambda(w) = phi_hat(w)` on
/// every class, in `Q(zeta_m)[q^{+-1}, u]` after clearing
/// `prod_{i=1}^n (1 - q^{mi})`.
pub fn g_m1n_hat_reconstruction_check(m: usize, n: u64) -> Result<bool> {
    check_m(m)?;
    let mo = m as u64;
    let den: Polynomial = (1..=n as usize).map(|i| Polynomial::one_minus_q_pow(m * i)).product();
    let den = RationalFunction::from(den);
    let labels = enumerate_multipartitions(m, n);
    let cleared: Vec<Option<CycloBiPoly>> = labels
        .par_iter()
        .map(|lambda| CycloBiPoly::from_upoly(mo, &hat_multiplicity(lambda), &den))
        .collect();
    let Some(cleared) = cleared.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(false);
    };
    let den_bi = CycloBiPoly::from_upoly(mo, &UPolynomial::one(), &den).expect("polynomial");
    let classes = g_m1n_classes(m, n);
    let ok = classes.par_iter().map(|mu| -> Result<bool> {
        let mut lhs = CycloBiPoly::zero(mo);
        for (lambda, c) in labels.iter().zip(&cleared) {
            lhs.add_assign(&c.scale(&g_m1n_character(lambda, mu)?));
        }
        let mut rhs = den_bi.clone();
        for (l, i) in cycles(mu) {
            lhs = lhs.mul(&CycloBiPoly::one_minus_zeta(mo, i as i64, l as i64, 0));
            rhs = rhs.mul(&CycloBiPoly::one_minus_zeta(mo, i as i64, 0, l as usize));
        }
        Ok(lhs == rhs)
    });
    ok.collect::<Result<Vec<bool>>>().map(|v| v.into_iter().all(|b| b))
}

/// Pointwise check of a decomposition against `phi_k` on every class:
/// irreducible entries through [`g_m1n_character`], permutation entries
/// through [`eta_value`].
pub fn g_m1n_reconstructs_phi(d: &Decomposition, m: usize, n: u64, k: u64) -> Result<bool> {
    for mu in g_m1n_classes(m, n) {
        let mut sum = CyclotomicNumber::zero(m as u64);
        for e in &d.entries {
            let Some(c) = e.coeff.as_rational() else {
                return invalid("pointwise check needs numeric coefficients");
            };
            let value = match &e.label {
                CharLabel::Multi(lambda) => g_m1n_character(lambda, &mu)?,
                CharLabel::MultiPerm { r, lambda } => {
                    CyclotomicNumber::rational(m as u64, Rational::from_integer(eta_value(*r, lambda, &mu)?))
                }
                other => return invalid(format!("label {other} is not a G(m,1,n) character")),
            };
            sum = &sum + &value.scale(c);
        }
        let phi = CyclotomicNumber::rational(m as u64, Rational::from_integer(phi_g_m1n(&mu, k)));
        if sum != phi {
            return Ok(false);
        }
    }
    Ok(true)
}
