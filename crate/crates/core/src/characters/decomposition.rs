use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::DihedralLabel;
use crate::error::{Error, Result};
use crate::exact::{is_integer, rational_from_json, rational_to_json, Rational, RationalFunction, UPolynomial};
use crate::partitions::{MultiPartition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Irreducible,
    Permutation,
}

/// Name of a character in a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    /// Irreducible `chi^lambda` of `S_n`.
    Partition(Partition),
    /// Permutation character `eta_lambda` of `S_n` on the cosets of the
    /// Young subgroup `S_lambda`.
    SymPerm(Partition),
    /// Irreducible `chi^lambda` of `G(m,1,n)`.
    Multi(MultiPartition),
    /// The irreducible constituents of `G(m,p,n)` obtained by restricting
    /// the characters in a shift orbit, addressed by the orbit's smallest member.
    Orbit(MultiPartition),
    /// `eta^{r,lambda}`: induced from the trivial character of
    /// `G(m,1,r) x S_lambda`.
    MultiPerm { r: u64, lambda: Partition },
    Dihedral(DihedralLabel),
    /// Dihedral permutation characters: `triv`, `eta1`, `eta2`, `eta_reg`.
    Named(String),
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Partition(p) => write!(f, "{p}"),
            CharLabel::SymPerm(p) => write!(f, "eta[{p}]"),
            CharLabel::Multi(p) => write!(f, "{p}"),
            CharLabel::Orbit(p) => write!(f, "orbit[{p}]"),
            CharLabel::MultiPerm { r, lambda } => write!(f, "eta[{r}|{lambda}]"),
            CharLabel::Dihedral(d) => write!(f, "{d}"),
            CharLabel::Named(s) => f.write_str(s),
        }
    }
}

impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bracketed = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(']'));
        if let Some(inner) = bracketed("orbit[") {
            return Ok(CharLabel::Orbit(inner.parse()?));
        }
        if let Some(inner) = bracketed("eta[") {
            return match inner.split_once('|') {
                Some((r, lambda)) => Ok(CharLabel::MultiPerm {
                    r: r.parse().map_err(|_| Error::Parse(format!("bad label `{s}`")))?,
                    lambda: lambda.parse()?,
                }),
                None => Ok(CharLabel::SymPerm(inner.parse()?)),
            };
        }
        if let Ok(d) = s.parse::<DihedralLabel>() {
            return Ok(CharLabel::Dihedral(d));
        }
        if matches!(s, "triv" | "eta1" | "eta2" | "eta_reg") {
            return Ok(CharLabel::Named(s.to_string()));
        }
        if s.contains(';') {
            return Ok(CharLabel::Multi(s.parse()?));
        }
        Ok(CharLabel::Partition(s.parse()?))
    }
}

impl Serialize for CharLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CharLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// A multiplicity: a number, a graded multiplicity in `Q(q)`, or a
/// polynomial in `u` over `Q(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Rational(Rational),
    RationalFunction(RationalFunction),
    UPolynomial(UPolynomial),
}

impl Coefficient {
    /// Nonnegative integer, or polynomial in `N[q]`. Coefficients still
    /// depending on `u` are never counted as valid.
    pub fn is_valid(&self) -> bool {
        match self {
            Coefficient::Rational(r) => is_integer(r) && *r >= Rational::zero(),
            Coefficient::RationalFunction(f) => f.is_nonneg_polynomial(),
            Coefficient::UPolynomial(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coefficient::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_rational_function(&self) -> Option<&RationalFunction> {
        match self {
            Coefficient::RationalFunction(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_upolynomial(&self) -> Option<&UPolynomial> {
        match self {
            Coefficient::UPolynomial(h) => Some(h),
            _ => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => write!(f, "{r}"),
            Coefficient::RationalFunction(r) => write!(f, "{r}"),
            Coefficient::UPolynomial(h) => write!(f, "{h}"),
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coefficient::Rational(r) => rational_to_json(r).serialize(s),
            Coefficient::RationalFunction(f) => f.serialize(s),
            Coefficient::UPolynomial(h) => h.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        let is_pair = v.as_array().is_some_and(|a| a.len() == 2 && a.iter().all(Value::is_string));
        if is_pair {
            return rational_from_json(&v).map(Coefficient::Rational).map_err(D::Error::custom);
        }
        if v.is_object() {
            return serde_json::from_value(v).map(Coefficient::RationalFunction).map_err(D::Error::custom);
        }
        serde_json::from_value(v).map(Coefficient::UPolynomial).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: CharLabel,
    pub coeff: Coefficient,
    pub valid: bool,
}

/// A class function written as a combination of irreducible or
/// permutation characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub group: String,
    pub k: Option<i64>,
    pub basis: Basis,
    pub entries: Vec<Entry>,
    /// Every coefficient is valid, so the class function is a (graded)
    /// character, or a permutation character in the permutation basis.
    pub representation_valid: bool,
}

impl Decomposition {
    pub fn new(
        group: impl Into<String>,
        k: Option<i64>,
        basis: Basis,
        terms: impl IntoIterator<Item = (CharLabel, Coefficient)>,
    ) -> Self {
        let entries: Vec<Entry> = terms
            .into_iter()
            .map(|(label, coeff)| {
                let valid = coeff.is_valid();
                Entry { label, coeff, valid }
            })
            .collect();
        let representation_valid = entries.iter().all(|e| e.valid);
        Decomposition { group: group.into(), k, basis, entries, representation_valid }
    }

    pub fn get(&self, label: &CharLabel) -> Option<&Coefficient> {
        self.entries.iter().find(|e| &e.label == label).map(|e| &e.coeff)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
