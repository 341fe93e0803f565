use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{binomial_basis, BinomialCertificate};
use crate::error::{invalid, Result};
use crate::exact::{is_integer, int, Polynomial};
use crate::groups::ResidueCondition;
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum PeriodOutcome {
    Condition(ResidueCondition),
    /// `f(t + L) - f(t)` was not certified; carries the failed certificate.
    Indeterminate(BinomialCertificate),
}

const BLOCK: u64 = 256;

/// If `g(t) = f(t + L) - f(t)` has a nonnegative integral binomial
/// expansion, the set of `k >= 1` with `f(k)` in `N` is read off from
/// `f(1), ..., f(L)`.
pub fn period_enumerate(f: &Polynomial, l: u64, h: u64) -> Result<PeriodOutcome> {
    if l == 0 || h == 0 || l % h != 0 {
        return invalid(format!("period L = {l} must be a positive multiple of H = {h}"));
    }
    let shift = Polynomial::from_coeffs(vec![int(l as i64), int(1)]);
    let g = &f.compose(&shift) - f;
    let cert = binomial_basis(&g);
    if !cert.all_nonneg_integers {
        return Ok(PeriodOutcome::Indeterminate(cert));
    }
    let residues: Vec<u64> = (0..l.div_ceil(BLOCK))
        .into_par_iter()
        .flat_map_iter(|b| {
            let lo = b * BLOCK + 1;
            let hi = ((b + 1) * BLOCK).min(l);
            (lo..=hi).filter(|&i| {
                let v = f.eval_i64(i as i64);
                is_integer(&v) && !v.is_negative()
            })
        })
        .collect();
    Ok(PeriodOutcome::Condition(ResidueCondition::new(l, residues)))
}
