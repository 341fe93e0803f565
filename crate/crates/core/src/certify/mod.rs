//! Sufficient certificates that a polynomial takes values in `N` (or in
//! `N[q]`) along arithmetic progressions, and the residue enumeration they
//! justify.

mod binomial;
mod dihedral;
mod period;
mod qbinomial;

pub use binomial::{binomial_basis, BinomialCertificate};
pub use dihedral::{dihedral_shift_expansions, dihedral_soundness, DihedralSoundness, ShiftExpansion, ShiftedCertificate};
pub use period::{period_enumerate, PeriodOutcome};
pub use qbinomial::{q_binomial_basis, q_binomial_basis_element, QBinomialCertificate};

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serializer};

use crate::exact::{rational_from_json, rational_to_json, Rational};

fn serialize_rationals<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&rational_to_json(x))?;
    }
    seq.end()
}

fn deserialize_rationals<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
    let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
    raw.iter().map(|v| rational_from_json(v).map_err(serde::de::Error::custom)).collect()
}
