//! Serializable results of the subcommands that have no library type of
//! their own, and the text renderings.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use parkspace::certify::{
    dihedral_shift_expansions, dihedral_soundness, BinomialCertificate, DihedralSoundness, PeriodOutcome,
    QBinomialCertificate, ShiftExpansion,
};
use parkspace::characters::{
    dihedral_condition_check, dihedral_decomposition, dihedral_perm_coefficients, dihedral_reconstruction_check,
    dihedral_ungraded_decomposition, Decomposition,
};
use parkspace::exact::{rational_from_json, rational_to_json, Polynomial, Rational, RationalFunction};
use parkspace::partitions::Partition;
use parkspace::Result;

/// A q-Catalan number, or its value at `q = 1` (integers as decimal
/// strings, other rationals as `["num","den"]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalanValue {
    Integer(String),
    Rational(Rational),
    RationalFunction(RationalFunction),
}

impl CatalanValue {
    pub fn from_rational(x: &Rational) -> Self {
        if x.is_integer() {
            CatalanValue::Integer(x.to_integer().to_string())
        } else {
            CatalanValue::Rational(x.clone())
        }
    }
}

impl fmt::Display for CatalanValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalanValue::Integer(s) => write!(f, "{s}"),
            CatalanValue::Rational(r) => write!(f, "{r}"),
            CatalanValue::RationalFunction(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for CatalanValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CatalanValue::Integer(n) => s.serialize_str(n),
            CatalanValue::Rational(r) => rational_to_json(r).serialize(s),
            CatalanValue::RationalFunction(r) => r.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for CatalanValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        match &v {
            Value::String(s) => Ok(CatalanValue::Integer(s.clone())),
            Value::Array(_) => rational_from_json(&v).map(CatalanValue::Rational).map_err(D::Error::custom),
            _ => RationalFunction::deserialize(v).map(CatalanValue::RationalFunction).map_err(D::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GcdValue {
    Integer(String),
    Polynomial(Polynomial),
}

impl fmt::Display for GcdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcdValue::Integer(s) => write!(f, "{s}"),
            GcdValue::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralReport {
    pub m: u64,
    pub k: i64,
    pub is_character: bool,
    pub perm_decomposable: bool,
    pub irreducible: Decomposition,
    pub graded: Decomposition,
    pub permutation: Decomposition,
}

impl DihedralReport {
    pub fn compute(m: u64, k: i64) -> Result<Self> {
        let (is_character, perm_decomposable) = dihedral_condition_check(m, k)?;
        Ok(DihedralReport {
            m,
            k,
            is_character,
            perm_decomposable,
            irreducible: dihedral_ungraded_decomposition(m, k)?,
            graded: dihedral_decomposition(m, Some(k))?,
            permutation: dihedral_perm_coefficients(m, k)?,
        })
    }
}

impl fmt::Display for DihedralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "D{} k={}: character {}, permutation-decomposable {}", self.m, self.k, self.is_character, self.perm_decomposable)?;
        writeln!(f, "{}", decomposition_text(&self.irreducible))?;
        writeln!(f, "{}", decomposition_text(&self.graded))?;
        write!(f, "{}", decomposition_text(&self.permutation))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralSymbolic {
    pub m: u64,
    /// The multiplicities reproduce `phi_hat` on every class.
    pub reconstruction_ok: bool,
    pub multiplicities: Decomposition,
}

impl DihedralSymbolic {
    pub fn compute(m: u64) -> Result<Self> {
        Ok(DihedralSymbolic {
            m,
            reconstruction_ok: dihedral_reconstruction_check(m)?,
            multiplicities: dihedral_decomposition(m, None)?,
        })
    }
}

impl fmt::Display for DihedralSymbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "D{}: reconstruction {}", self.m, if self.reconstruction_ok { "ok" } else { "FAILED" })?;
        write!(f, "{}", decomposition_text(&self.multiplicities))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityReport {
    pub partition: Partition,
    pub k: u64,
    pub quotient: Polynomial,
    pub even_ok: bool,
    pub odd_ok: bool,
    pub whole_ok: bool,
}

impl fmt::Display for UnimodalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) k={}: {}\neven {}, odd {}, whole {}",
            self.partition, self.k, self.quotient, self.even_ok, self.odd_ok, self.whole_ok
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingRow {
    pub n: i64,
    /// `c(n, 0), ..., c(n, n)` as decimal strings.
    pub row: Vec<String>,
    pub divisible: bool,
}

impl fmt::Display for StirlingRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({}, j) = {}\nbinom(n,2) divides c(n,j) for n-j odd: {}", self.n, self.row.join(" "), self.divisible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingClass {
    pub partition: Partition,
    pub divisible: bool,
}

impl fmt::Display for StirlingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "binom(n,2) divides the class size of ({}): {}", self.partition, self.divisible)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralCertificates {
    pub soundness: DihedralSoundness,
    /// Closed forms for `xi0`, `xi1` and `M` at both shifts (`m >= 3`).
    pub expansions: Vec<ShiftExpansion>,
}

impl DihedralCertificates {
    pub fn compute(m: u64) -> Result<Self> {
        let expansions = if m >= 3 { dihedral_shift_expansions(m)? } else { Vec::new() };
        Ok(DihedralCertificates { soundness: dihedral_soundness(m)?, expansions })
    }
}

impl fmt::Display for DihedralCertificates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.soundness.certificates {
            writeln!(f, "{}(q^{} u): {}", c.label, c.shift, q_binomial_text(&c.certificate))?;
        }
        for e in &self.expansions {
            writeln!(f, "{}(q^{} u) closed form matches: {}", e.function, e.shift, e.matches)?;
        }
        write!(f, "all certified: {}", self.soundness.all_certified)
    }
}

pub fn decomposition_text(d: &Decomposition) -> String {
    let k = d.k.map(|k| format!(" k={k}")).unwrap_or_default();
    let basis = format!("{:?}", d.basis).to_lowercase();
    let mut lines = vec![format!("{}{k} ({basis} basis)", d.group)];
    for e in &d.entries {
        let coeff = match &e.coeff {
            parkspace::characters::Coefficient::Rational(r) => r.to_string(),
            parkspace::characters::Coefficient::RationalFunction(r) => r.to_string(),
            parkspace::characters::Coefficient::UPolynomial(h) => h.to_string(),
        };
        lines.push(format!("  {}: {coeff}{}", e.label, if e.valid { "" } else { "  (not in N)" }));
    }
    lines.push(format!("representation valid: {}", d.representation_valid));
    lines.join("\n")
}

pub fn binomial_text(c: &BinomialCertificate) -> String {
    let bs: Vec<String> = c.coefficients.iter().map(Rational::to_string).collect();
    format!("b = ({}), certified: {}", bs.join(", "), c.all_nonneg_integers)
}

pub fn q_binomial_text(c: &QBinomialCertificate) -> String {
    let cs: Vec<String> = c.coefficients.iter().map(RationalFunction::to_string).collect();
    format!("M={}, c = ({}), certified: {}", c.base_exponent, cs.join(", "), c.all_in_nq)
}

pub fn period_text(o: &PeriodOutcome) -> String {
    match o {
        PeriodOutcome::Condition(c) => c.to_string(),
        PeriodOutcome::Indeterminate(c) => format!("indeterminate: {}", binomial_text(c)),
    }
}
