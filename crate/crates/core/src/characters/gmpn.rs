//! `G(m,p,n)` through restriction from `G(m,1,n)`: the characters in one
//! `<sh^{m/p}>`-orbit restrict to the same sum of `t` distinct
//! irreducibles, `t` the stabilizer order.

use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;

use super::{g_m1n_mult_ungraded, Basis, CharLabel, Coefficient, Decomposition};
use crate::error::{invalid, Result};
use crate::exact::{factorial, is_integer, Polynomial, Rational};
use crate::partitions::{enumerate_multipartitions, MultiPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftOrbit {
    /// Smallest member.
    pub representative: MultiPartition,
    pub members: Vec<MultiPartition>,
    /// Order of the stabilizer in `<sh^{m/p}>`; `members.len() * t = p`.
    pub stabilizer_order: u64,
}

impl ShiftOrbit {
    /// Orbit of `lambda` under `sh^{m/p}`.
    pub fn of(lambda: &MultiPartition, p: u64) -> Result<Self> {
        let m = lambda.m() as u64;
        if p == 0 || m % p != 0 {
            return invalid(format!("p = {p} does not divide m = {m}"));
        }
        let step = (m / p) as usize;
        let members: BTreeSet<MultiPartition> = (0..p as usize).map(|j| lambda.shift(j * step)).collect();
        let members: Vec<MultiPartition> = members.into_iter().collect();
        let stabilizer_order = p / members.len() as u64;
        Ok(ShiftOrbit { representative: members[0].clone(), members, stabilizer_order })
    }
}

/// All `<sh^{m/p}>`-orbits on `m`-tuples of partitions of `n`.
pub fn shift_orbits(m: usize, p: u64, n: u64) -> Result<Vec<ShiftOrbit>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for lambda in enumerate_multipartitions(m, n) {
        if seen.contains(&lambda) {
            continue;
        }
        let orbit = ShiftOrbit::of(&lambda, p)?;
        seen.extend(orbit.members.iter().cloned());
        out.push(orbit);
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

/// Multiplicity in `phi_k` of `G(m,p,n)` of each irreducible constituent
/// of the restriction: the sum of `G(m,1,n)` multiplicities over the orbit.
pub fn gmpn_restricted_multiplicity(orbit: &ShiftOrbit, k: i64) -> Result<Rational> {
    orbit.members.iter().map(|mu| g_m1n_mult_ungraded(mu, k)).sum()
}

/// One entry per shift orbit; each stands for `stabilizer_order`
/// irreducibles sharing the multiplicity.
pub fn gmpn_ungraded_decomposition(m: usize, p: u64, n: u64, k: i64) -> Result<Decomposition> {
    let terms = shift_orbits(m, p, n)?
        .into_iter()
        .map(|o| {
            let c = gmpn_restricted_multiplicity(&o, k)?;
            Ok((CharLabel::Orbit(o.representative), Coefficient::Rational(c)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition::new(format!("G({m},{p},{n})"), Some(k), Basis::Irreducible, terms))
}

/// For `G(m,p,2)`: the multiplicities of the constituents indexed by the
/// orbits of `((2), -, ...)` and `(-, (2), -, ...)`. Their difference is
/// `(k + m - 1)/m = 1 + (k - 1)/m`, so both are integers only if `k = 1 mod m`.
pub fn gmpn_pair_difference(m: usize, p: u64, k: i64) -> Result<(Rational, Rational)> {
    let chi = ShiftOrbit::of(&MultiPartition::in_slot(m, 0, Partition::row(2)), p)?;
    let eta = ShiftOrbit::of(&MultiPartition::in_slot(m, 1, Partition::row(2)), p)?;
    Ok((gmpn_restricted_multiplicity(&chi, k)?, gmpn_restricted_multiplicity(&eta, k)?))
}

/// Closed forms for `G(m,m,n)`:
/// `m^triv = prod_{i<n} (k + im - 1) (k + n - 1) / (m^{n-1} n!)` and
/// `m^det = prod_{i<n} (k - im + m - 1) (k - (n-1)m + n - 1) / (m^{n-1} n!)`.
pub fn g_mmn_triv_det_multiplicities(m: u64, n: u64, k: i64) -> Result<(Rational, Rational)> {
    if m < 2 || n < 2 {
        return invalid("G(m,m,n) needs m >= 2 and n >= 2");
    }
    let (mi, ni) = (m as i64, n as i64);
    let den = Rational::from_integer(factorial(n) * num_bigint::BigInt::from(m).pow(n as u32 - 1));
    let r = |x: i64| Rational::from_integer(x.into());
    let mut triv = r(k + ni - 1);
    let mut det = r(k - (ni - 1) * mi + ni - 1);
    for i in 1..ni {
        triv *= r(k + i * mi - 1);
        det *= r(k - i * mi + mi - 1);
    }
    Ok((triv / &den, det / den))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofPolynomials {
    pub f: Polynomial,
    pub g: Polynomial,
    pub h: Polynomial,
    /// `h` is monic of degree `n - 1` with integer coefficients.
    pub h_monic_integral: bool,
}

/// `f(z) = prod_{i<n} (z + i) (mz + n) / n!`, `g(z) = prod_{i<n} (z - i + 1) (m(z - n + 1) + n) / n!`
/// and `h = (n!/2)(f + g) - (n-2)! z (f - g)`, with `f((k-1)/m) = m^triv`
/// and `g((k-1)/m) = m^det`.
pub fn g_mmn_proof_polynomials(m: u64, n: u64) -> Result<ProofPolynomials> {
    if n < 2 {
        return invalid("the G(m,m,n) argument needs n >= 2");
    }
    let lin = |c0: i64, c1: i64| Polynomial::from_i64s(&[c0, c1]);
    let (mi, ni) = (m as i64, n as i64);
    let n_fact = Rational::from_integer(factorial(n));
    let mut f = lin(ni, mi);
    let mut g = lin(mi * (1 - ni) + ni, mi);
    for i in 1..ni {
        f = &f * &lin(i, 1);
        g = &g * &lin(1 - i, 1);
    }
    let f = f.scale(&n_fact.recip());
    let g = g.scale(&n_fact.recip());
    let half = n_fact / Rational::from_integer(2.into());
    let shifted = (&f - &g).shift(1).scale(&Rational::from_integer(factorial(n - 2)));
    let h = &(&f + &g).scale(&half) - &shifted;
    let h_monic_integral = h.degree() == Some(n as usize - 1)
        && h.leading_coeff().is_some_and(|c| c.is_one())
        && h.coeffs().iter().all(is_integer);
    Ok(ProofPolynomials { f, g, h, h_monic_integral })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::groups::{catalan_at_one, group};

    #[test]
    fn orbit_sizes_divide_p() {
        for m in 2..=6usize {
            for p in (1..=m as u64).filter(|p| m as u64 % p == 0) {
                let orbits = shift_orbits(m, p, 2).unwrap();
                let total: usize = orbits.iter().map(|o| o.members.len()).sum();
                assert_eq!(total, enumerate_multipartitions(m, 2).len());
                for o in &orbits {
                    assert_eq!(o.members.len() as u64 * o.stabilizer_order, p);
                }
            }
        }
    }

    #[test]
    fn g422_orbit_of_row() {
        let o = ShiftOrbit::of(&"2;-;-;-".parse().unwrap(), 2).unwrap();
        let names: Vec<String> = o.members.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["-;-;2;-", "2;-;-;-"]);
        assert_eq!(o.stabilizer_order, 1);
        let fixed = ShiftOrbit::of(&"1;-;1;-".parse().unwrap(), 2).unwrap();
        assert_eq!(fixed.members.len(), 1);
        assert_eq!(fixed.stabilizer_order, 2);
    }

    #[test]
    fn closed_forms_agree_with_orbit_sums_and_catalan() {
        for m in 2..=5u64 {
            for n in 2..=4u64 {
                let w = group(&format!("G({m},{m},{n})")).unwrap();
                let triv = ShiftOrbit::of(&MultiPartition::in_slot(m as usize, 0, Partition::row(n)), m).unwrap();
                let det =
                    ShiftOrbit::of(&MultiPartition::in_slot(m as usize, 1, Partition::column(n)), m).unwrap();
                for k in 1..=12 {
                    let (t, d) = g_mmn_triv_det_multiplicities(m, n, k).unwrap();
                    assert_eq!(t, catalan_at_one(&w, k));
                    assert_eq!(t, gmpn_restricted_multiplicity(&triv, k).unwrap());
                    assert_eq!(d, gmpn_restricted_multiplicity(&det, k).unwrap(), "m={m} n={n} k={k}");
                }
            }
        }
        let (t, _) = g_mmn_triv_det_multiplicities(2, 3, 3).unwrap();
        assert_eq!(t, rat(5, 1));
        let (t, d) = g_mmn_triv_det_multiplicities(3, 3, 1).unwrap();
        assert_eq!((t, d), (rat(1, 1), rat(0, 1)));
    }

    #[test]
    fn proof_polynomials_evaluate_to_multiplicities() {
        for m in 2..=5u64 {
            for n in 2..=6u64 {
                let pp = g_mmn_proof_polynomials(m, n).unwrap();
                assert!(pp.h_monic_integral, "m={m} n={n}: h = {}", pp.h);
                for k in 1..=10 {
                    let z = rat(k - 1, m as i64);
                    let (t, d) = g_mmn_triv_det_multiplicities(m, n, k).unwrap();
                    assert_eq!(pp.f.eval(&z), t);
                    assert_eq!(pp.g.eval(&z), d);
                }
            }
        }
    }

    #[test]
    fn pair_difference_identity() {
        for (m, p) in [(4usize, 2u64), (6, 3), (6, 1), (3, 1)] {
            for k in 1..=12 {
                let (chi, eta) = gmpn_pair_difference(m, p, k).unwrap();
                assert_eq!(chi - eta, rat(k + m as i64 - 1, m as i64));
            }
        }
    }
}
