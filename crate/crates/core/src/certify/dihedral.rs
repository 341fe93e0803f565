//! Shifted dihedral multiplicities `m_hat^chi(q^s u)`, `s = 1` and `s = m - 1`,
//! in the q-binomial basis with `M = m`.

use serde::{Deserialize, Serialize};

use super::{q_binomial_basis, QBinomialCertificate};
use crate::characters::{dihedral_decomposition, CharLabel, DihedralLabel};
use crate::error::{invalid, Result};
use crate::exact::{Polynomial, RationalFunction, UPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftExpansion {
    /// `xi0`, `xi1` or `M`.
    pub function: String,
    pub shift: i64,
    pub expected: Vec<RationalFunction>,
    pub certificate: QBinomialCertificate,
    /// Expected and computed coefficients agree.
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedCertificate {
    pub label: String,
    pub shift: i64,
    pub certificate: QBinomialCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralSoundness {
    pub m: u64,
    pub certificates: Vec<ShiftedCertificate>,
    pub all_certified: bool,
}

fn qp(e: i64) -> RationalFunction {
    RationalFunction::q_pow(e)
}

/// `[a]_q / [2]_q`.
fn ratio(a: usize) -> RationalFunction {
    RationalFunction::new(Polynomial::q_integer(a), Polynomial::q_integer(2)).expect("[2]_q is nonzero")
}

fn den(m: u64) -> RationalFunction {
    RationalFunction::from(&Polynomial::one_minus_q_pow(2) * &Polynomial::one_minus_q_pow(m as usize))
        .recip()
        .expect("nonzero")
}

/// `M(u) = (1 - uq)(1 - uq^{-1}) / ((1 - q^2)(1 - q^m))`.
fn common_factor(m: u64) -> UPolynomial {
    (&UPolynomial::one_minus(qp(1)) * &UPolynomial::one_minus(qp(-1))).scale(&den(m))
}

fn hat(m: u64, label: DihedralLabel) -> Result<UPolynomial> {
    let d = dihedral_decomposition(m, None)?;
    let c = d.get(&CharLabel::Dihedral(label)).and_then(|c| c.as_upolynomial()).cloned();
    c.ok_or_else(|| crate::error::Error::InvalidArgument(format!("no multiplicity for {label}")))
}

/// Closed-form coefficient lists of `xi0`, `xi1` and `M` at both shifts,
/// checked against the recursion.
pub fn dihedral_shift_expansions(m: u64) -> Result<Vec<ShiftExpansion>> {
    if m < 3 {
        return invalid("the shifted expansions need m >= 3");
    }
    let mi = m as i64;
    let mu = m as usize;
    let r2m = ratio(2 * mu);
    let r2m2 = ratio(2 * mu - 2);
    let zero = RationalFunction::zero;
    let one = RationalFunction::one;
    let table: Vec<(&str, i64, UPolynomial, Vec<RationalFunction>)> = vec![
        (
            "xi0",
            1,
            hat(m, DihedralLabel::Xi(0))?,
            vec![one(), &qp(mi) + &(&qp(2) * &r2m), &qp(2 * mi + 2) * &r2m],
        ),
        (
            "xi0",
            mi - 1,
            hat(m, DihedralLabel::Xi(0))?,
            vec![
                r2m2.clone(),
                &qp(mi) * &(&r2m2 + &(&qp(mi - 2) * &r2m)),
                &qp(4 * mi - 2) * &r2m,
            ],
        ),
        ("xi1", 1, hat(m, DihedralLabel::Xi(1))?, vec![zero(), qp(mi), &qp(mi + 2) * &r2m]),
        (
            "xi1",
            mi - 1,
            hat(m, DihedralLabel::Xi(1))?,
            vec![zero(), &qp(mi) * &r2m2, &qp(3 * mi - 2) * &r2m],
        ),
        ("M", 1, common_factor(m), vec![zero(), ratio(mu + 2), &qp(mi + 2) * &r2m]),
        (
            "M",
            mi - 1,
            common_factor(m),
            vec![
                ratio(mu - 2),
                &(&qp(mi - 2) * &r2m) + &(&qp(mi) * &ratio(mu - 2)),
                &qp(3 * mi - 2) * &r2m,
            ],
        ),
    ];
    table
        .into_iter()
        .map(|(name, shift, h, expected)| {
            let certificate = q_binomial_basis(&h.scale_u(&qp(shift)), m)?;
            let matches = certificate.coefficients == expected;
            Ok(ShiftExpansion { function: name.to_string(), shift, expected, certificate, matches })
        })
        .collect()
}

/// q-binomial certificates of every `m_hat^chi(q^s u)` for `s` in `{1, m - 1}`;
/// all certified means `m~^chi_k` is in `N[q]` whenever `k = +-1 mod m`.
pub fn dihedral_soundness(m: u64) -> Result<DihedralSoundness> {
    let d = dihedral_decomposition(m, None)?;
    let mut shifts = vec![1];
    if m > 2 {
        shifts.push(m as i64 - 1);
    }
    let mut certificates = Vec::new();
    for e in &d.entries {
        let h = e.coeff.as_upolynomial().expect("symbolic multiplicities");
        for &s in &shifts {
            certificates.push(ShiftedCertificate {
                label: e.label.to_string(),
                shift: s,
                certificate: q_binomial_basis(&h.scale_u(&qp(s)), m)?,
            });
        }
    }
    let all_certified = certificates.iter().all(|c| c.certificate.all_in_nq);
    Ok(DihedralSoundness { m, certificates, all_certified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::dihedral_condition_check;

    #[test]
    fn closed_forms_match_recursion() {
        for m in 3..=12 {
            for e in dihedral_shift_expansions(m).unwrap() {
                assert!(e.matches, "m={m} {}(q^{} u): {:?}", e.function, e.shift, e.certificate.coefficients);
            }
        }
    }

    #[test]
    fn common_factor_certified_iff_m_even() {
        for m in 3..=12 {
            let exps = dihedral_shift_expansions(m).unwrap();
            let all = exps.iter().filter(|e| e.function == "M").all(|e| e.certificate.all_in_nq);
            assert_eq!(all, m % 2 == 0, "m={m}");
        }
    }

    #[test]
    fn soundness_up_to_twelve() {
        for m in 2..=12 {
            let s = dihedral_soundness(m).unwrap();
            assert!(s.all_certified, "m={m}");
            // the certified residues agree with the direct criterion
            for p in 0..3i64 {
                for k in [p * m as i64 + 1, p * m as i64 + m as i64 - 1] {
                    assert!(dihedral_condition_check(m, k).unwrap().0, "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn values_along_progressions_are_in_nq() {
        for m in 3..=8u64 {
            let d = dihedral_decomposition(m, None).unwrap();
            for e in &d.entries {
                let h = e.coeff.as_upolynomial().unwrap();
                for k in [1, m as i64 - 1, m as i64 + 1, 2 * m as i64 - 1, 2 * m as i64 + 1] {
                    assert!(h.at_q_pow(k).is_nonneg_polynomial(), "m={m} {} k={k}", e.label);
                }
            }
        }
    }
}
