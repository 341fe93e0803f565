//! The dihedral group `D_2m = <a, b | a^m = b^2 = 1, b a b = a^{-1}>` on
//! its two-dimensional reflection representation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::bipoly::CycloBiPoly;
use super::{Basis, CharLabel, Coefficient, Decomposition};
use crate::error::{invalid, Error, Result};
use crate::exact::{CyclotomicNumber, Polynomial, Rational, RationalFunction, UPolynomial};

/// `xi_0` (trivial), `xi_1` (determinant), `xi_2`, `xi_3` (m even), and the
/// two-dimensional `chi_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralLabel {
    Xi(u8),
    Chi(u64),
}

impl fmt::Display for DihedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralLabel::Xi(i) => write!(f, "xi{i}"),
            DihedralLabel::Chi(j) => write!(f, "chi{j}"),
        }
    }
}

impl FromStr for DihedralLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad dihedral label `{s}`"));
        if let Some(i) = s.strip_prefix("xi") {
            let i: u8 = i.parse().map_err(|_| bad())?;
            return if i <= 3 { Ok(DihedralLabel::Xi(i)) } else { Err(bad()) };
        }
        if let Some(j) = s.strip_prefix("chi") {
            let j: u64 = j.parse().map_err(|_| bad())?;
            return if j >= 1 { Ok(DihedralLabel::Chi(j)) } else { Err(bad()) };
        }
        Err(bad())
    }
}

/// Class representatives: `a^i` for `0 <= i <= m/2` (`a^0 = 1`), `b`, and
/// `ab` when `m` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralClass {
    Rotation(u64),
    Reflection,
    ReflectionAB,
}

impl fmt::Display for DihedralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralClass::Rotation(0) => f.write_str("1"),
            DihedralClass::Rotation(i) => write!(f, "a^{i}"),
            DihedralClass::Reflection => f.write_str("b"),
            DihedralClass::ReflectionAB => f.write_str("ab"),
        }
    }
}

impl Serialize for DihedralClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_m(m: u64) -> Result<()> {
    if m < 2 {
        return invalid("dihedral groups need m >= 2");
    }
    Ok(())
}

pub fn dihedral_classes(m: u64) -> Vec<DihedralClass> {
    let mut out: Vec<DihedralClass> = (0..=m / 2).map(DihedralClass::Rotation).collect();
    out.push(DihedralClass::Reflection);
    if m % 2 == 0 {
        out.push(DihedralClass::ReflectionAB);
    }
    out
}

fn class_size(m: u64, c: DihedralClass) -> u64 {
    match c {
        DihedralClass::Rotation(0) => 1,
        DihedralClass::Rotation(i) if 2 * i == m => 1,
        DihedralClass::Rotation(_) => 2,
        DihedralClass::Reflection | DihedralClass::ReflectionAB if m % 2 == 0 => m / 2,
        _ => m,
    }
}

pub fn dihedral_labels(m: u64) -> Vec<DihedralLabel> {
    let even = m % 2 == 0;
    let xis: &[u8] = if even { &[0, 1, 2, 3] } else { &[0, 1] };
    let top = if even { m / 2 - 1 } else { (m - 1) / 2 };
    xis.iter()
        .map(|&i| DihedralLabel::Xi(i))
        .chain((1..=top).map(DihedralLabel::Chi))
        .collect()
}

/// Character value in `Q(zeta_m)`.
pub fn dihedral_character(m: u64, label: DihedralLabel, class: DihedralClass) -> CyclotomicNumber {
    let int = |v: i64| CyclotomicNumber::integer(m, v);
    let sign = |i: u64| if i % 2 == 0 { 1 } else { -1 };
    match (label, class) {
        (DihedralLabel::Xi(0), _) => int(1),
        (DihedralLabel::Xi(1), DihedralClass::Rotation(_)) => int(1),
        (DihedralLabel::Xi(1), _) => int(-1),
        (DihedralLabel::Xi(_), DihedralClass::Rotation(i)) => int(sign(i)),
        (DihedralLabel::Xi(2), DihedralClass::Reflection) => int(1),
        (DihedralLabel::Xi(2), _) => int(-1),
        (DihedralLabel::Xi(_), DihedralClass::Reflection) => int(-1),
        (DihedralLabel::Xi(_), _) => int(1),
        (DihedralLabel::Chi(j), DihedralClass::Rotation(i)) => {
            let e = (i * j) as i64;
            &CyclotomicNumber::zeta_pow(m, e) + &CyclotomicNumber::zeta_pow(m, -e)
        }
        (DihedralLabel::Chi(_), _) => int(0),
    }
}

/// Values of a class function on the class representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralClassFunction {
    pub m: u64,
    pub classes: Vec<DihedralClass>,
    pub values: Vec<CyclotomicNumber>,
}

impl DihedralClassFunction {
    pub fn character(m: u64, label: DihedralLabel) -> Self {
        let classes = dihedral_classes(m);
        let values = classes.iter().map(|&c| dihedral_character(m, label, c)).collect();
        DihedralClassFunction { m, classes, values }
    }

    /// `phi_k(w) = k^{dim V^w}`.
    pub fn phi(m: u64, k: u64) -> Self {
        let classes = dihedral_classes(m);
        let values = classes
            .iter()
            .map(|&c| CyclotomicNumber::rational(m, Rational::from_integer(phi_dihedral(c, k))))
            .collect();
        DihedralClassFunction { m, classes, values }
    }

    /// Normalized inner product `(1/2m) sum_w f(w) conj(g(w))`.
    pub fn inner(&self, other: &Self) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero(self.m);
        for ((c, a), b) in self.classes.iter().zip(&self.values).zip(&other.values) {
            let w = Rational::from_integer(class_size(self.m, *c).into());
            acc = &acc + &(a * &b.conj()).scale(&w);
        }
        acc.scale(&Rational::new(1.into(), (2 * self.m).into()))
    }
}

/// `k^{dim V^w}`: `k^2` at the identity, `1` at other rotations, `k` at reflections.
pub fn phi_dihedral(class: DihedralClass, k: u64) -> BigInt {
    match class {
        DihedralClass::Rotation(0) => BigInt::from(k) * k,
        DihedralClass::Rotation(_) => BigInt::from(1),
        _ => BigInt::from(k),
    }
}

/// `(1 - u q^a)` as a polynomial in `u`.
fn one_minus_u_q(a: i64) -> UPolynomial {
    UPolynomial::one_minus(RationalFunction::q_pow(a))
}

fn hat_multiplicities(m: u64) -> Vec<(DihedralLabel, UPolynomial)> {
    let mi = m as i64;
    let den = RationalFunction::from(&Polynomial::one_minus_q_pow(2) * &Polynomial::one_minus_q_pow(m as usize))
        .recip()
        .expect("nonzero");
    let big_m = (&one_minus_u_q(1) * &one_minus_u_q(-1)).scale(&den);
    dihedral_labels(m)
        .into_iter()
        .map(|label| {
            let h = match label {
                DihedralLabel::Xi(0) => (&one_minus_u_q(1) * &one_minus_u_q(mi - 1)).scale(&den),
                DihedralLabel::Xi(1) => (&one_minus_u_q(-1) * &one_minus_u_q(1 - mi))
                    .scale(&(&den * &RationalFunction::q_pow(mi))),
                DihedralLabel::Xi(_) => big_m.scale(&RationalFunction::q_pow(mi / 2)),
                DihedralLabel::Chi(j) => {
                    let j = j as i64;
                    big_m.scale(&(&RationalFunction::q_pow(j) + &RationalFunction::q_pow(mi - j)))
                }
            };
            (label, h)
        })
        .collect()
}

/// Multiplicities of every irreducible character in `phi_hat`, or their
/// reduced values at `u = q^k`.
pub fn dihedral_decomposition(m: u64, substitute_k: Option<i64>) -> Result<Decomposition> {
    check_m(m)?;
    let terms: Vec<(CharLabel, Coefficient)> = hat_multiplicities(m)
        .into_iter()
        .map(|(label, h)| {
            let c = match substitute_k {
                Some(k) => Coefficient::RationalFunction(h.at_q_pow(k)),
                None => Coefficient::UPolynomial(h),
            };
            (CharLabel::Dihedral(label), c)
        })
        .collect();
    Ok(Decomposition::new(format!("D{m}"), substitute_k, Basis::Irreducible, terms))
}

/// Symbolic identity `sum_chi m_hat^chi chi(w) = phi_hat(w)` on every
/// class, where `phi_hat(a^i) = (1 - zeta^i u)(1 - zeta^{-i} u) / ((1 - zeta^i q)(1 - zeta^{-i} q))`
/// and `phi_hat` of a reflection is `(1 - u^2)/(1 - q^2)`.
pub fn dihedral_reconstruction_check(m: u64) -> Result<bool> {
    check_m(m)?;
    let den = RationalFunction::from(&Polynomial::one_minus_q_pow(2) * &Polynomial::one_minus_q_pow(m as usize));
    let cleared: Vec<(DihedralLabel, CycloBiPoly)> = hat_multiplicities(m)
        .into_iter()
        .map(|(l, h)| CycloBiPoly::from_upoly(m, &h, &den).map(|b| (l, b)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InexactDivision("multiplicity denominators".into()))?;
    let den_bi = CycloBiPoly::from_upoly(m, &UPolynomial::one(), &den).expect("polynomial");
    for class in dihedral_classes(m) {
        let mut lhs = CycloBiPoly::zero(m);
        for (label, c) in &cleared {
            lhs.add_assign(&c.scale(&dihedral_character(m, *label, class)));
        }
        let (num_factors, den_factors) = match class {
            DihedralClass::Rotation(i) => {
                let i = i as i64;
                (
                    [CycloBiPoly::one_minus_zeta(m, i, 0, 1), CycloBiPoly::one_minus_zeta(m, -i, 0, 1)],
                    [CycloBiPoly::one_minus_zeta(m, i, 1, 0), CycloBiPoly::one_minus_zeta(m, -i, 1, 0)],
                )
            }
            _ => (
                [CycloBiPoly::one_minus_zeta(m, 0, 0, 1), plus_one(m, 0, 1)],
                [CycloBiPoly::one_minus_zeta(m, 0, 1, 0), plus_one(m, 1, 0)],
            ),
        };
        let mut rhs = den_bi.clone();
        for (nf, df) in num_factors.iter().zip(&den_factors) {
            rhs = rhs.mul(nf);
            lhs = lhs.mul(df);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `1 + q^a u^b`.
fn plus_one(m: u64, a: i64, b: usize) -> CycloBiPoly {
    let mut out = CycloBiPoly::one(m);
    out.add_assign(&CycloBiPoly::monomial(CyclotomicNumber::integer(m, 1), a, b));
    out
}

/// Ungraded multiplicities in `phi_k`: `(k+1)(k+m-1)/2m` for `xi_0`,
/// `(k-1)(k-m+1)/2m` for `xi_1`, `(k+1)(k-1)/2m` for `xi_2`, `xi_3` and
/// `(k^2-1)/m` for each `chi_j`.
pub fn dihedral_ungraded_decomposition(m: u64, k: i64) -> Result<Decomposition> {
    check_m(m)?;
    let mi = m as i64;
    let r = |num: i64, den: i64| Rational::new(num.into(), den.into());
    let terms: Vec<(CharLabel, Coefficient)> = dihedral_labels(m)
        .into_iter()
        .map(|label| {
            let c = match label {
                DihedralLabel::Xi(0) => r((k + 1) * (k + mi - 1), 2 * mi),
                DihedralLabel::Xi(1) => r((k - 1) * (k - mi + 1), 2 * mi),
                DihedralLabel::Xi(_) => r((k + 1) * (k - 1), 2 * mi),
                DihedralLabel::Chi(_) => r(k * k - 1, mi),
            };
            (CharLabel::Dihedral(label), Coefficient::Rational(c))
        })
        .collect();
    Ok(Decomposition::new(format!("D{m}"), Some(k), Basis::Irreducible, terms))
}

/// `phi_k` in permutation characters: `triv + (k-1)/2 eta1 + (k-1)/2 eta2 + (k-1)(k-m+1)/2m eta_reg`
/// for even `m`, `triv + (k-1) eta1 + (k-1)(k-m+1)/2m eta_reg` for odd `m`;
/// `eta1`, `eta2` act on the cosets of `<b>`, `<ab>`.
pub fn dihedral_perm_coefficients(m: u64, k: i64) -> Result<Decomposition> {
    check_m(m)?;
    let mi = m as i64;
    let reg = Rational::new(((k - 1) * (k - mi + 1)).into(), (2 * mi).into());
    let named = |s: &str, c: Rational| (CharLabel::Named(s.to_string()), Coefficient::Rational(c));
    let one = Rational::from_integer(1.into());
    let terms = if m % 2 == 0 {
        let half = Rational::new((k - 1).into(), 2.into());
        vec![named("triv", one), named("eta1", half.clone()), named("eta2", half), named("eta_reg", reg)]
    } else {
        vec![named("triv", one), named("eta1", Rational::from_integer((k - 1).into())), named("eta_reg", reg)]
    };
    Ok(Decomposition::new(format!("D{m}"), Some(k), Basis::Permutation, terms))
}

/// Value of `triv`, `eta1`, `eta2` or `eta_reg` at a class.
pub fn dihedral_perm_value(m: u64, name: &str, class: DihedralClass) -> BigInt {
    let even = m % 2 == 0;
    let v: u64 = match (name, class) {
        ("triv", _) => 1,
        ("eta_reg", DihedralClass::Rotation(0)) => 2 * m,
        ("eta_reg", _) => 0,
        (_, DihedralClass::Rotation(0)) => m,
        (_, DihedralClass::Rotation(_)) => 0,
        ("eta1", DihedralClass::Reflection) | ("eta2", DihedralClass::ReflectionAB) => {
            if even {
                2
            } else {
                1
            }
        }
        _ => 0,
    };
    BigInt::from(v)
}

/// `(is_character, is_perm_decomposable)`: all irreducible multiplicities
/// of `phi_k` lie in `N`, and all permutation coefficients lie in `N`.
pub fn dihedral_condition_check(m: u64, k: i64) -> Result<(bool, bool)> {
    let irr = dihedral_ungraded_decomposition(m, k)?;
    let perm = dihedral_perm_coefficients(m, k)?;
    Ok((irr.representation_valid, perm.representation_valid))
}

/// Pointwise check of an ungraded dihedral decomposition against `phi_k`.
pub fn dihedral_reconstructs_phi(d: &Decomposition, m: u64, k: u64) -> Result<bool> {
    for class in dihedral_classes(m) {
        let mut sum = CyclotomicNumber::zero(m);
        for e in &d.entries {
            let Some(c) = e.coeff.as_rational() else {
                return invalid("pointwise check needs numeric coefficients");
            };
            let value = match &e.label {
                CharLabel::Dihedral(l) => dihedral_character(m, *l, class),
                CharLabel::Named(s) => {
                    CyclotomicNumber::rational(m, Rational::from_integer(dihedral_perm_value(m, s, class)))
                }
                other => return invalid(format!("label {other} is not a dihedral character")),
            };
            sum = &sum + &value.scale(c);
        }
        let phi = Rational::from_integer(phi_dihedral(class, k));
        if sum != CyclotomicNumber::rational(m, phi) {
            return Ok(false);
        }
    }
    Ok(true)
}
