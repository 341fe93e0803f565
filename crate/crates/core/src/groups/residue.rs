use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::partitions::prime_factors;

/// A set of positive integers `k` of the form `k mod H in K`, optionally
/// with a lower bound `k >= min_k` that `k = 1` is exempt from.
///
/// Residues are kept in `1..=H` (so `H` stands for `0 mod H`) and `H` is
/// always the minimal period of the set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueCondition {
    pub modulus: u64,
    pub residues: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_k: Option<u64>,
}

impl ResidueCondition {
    /// Residue set modulo `modulus`; residues are reduced and canonicalized.
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let set: BTreeSet<u64> = residues.into_iter().map(|r| r % modulus).collect();
        Self::canonical(modulus, set, None)
    }

    /// All `k` with `pred(k)` for `k` in `1..=modulus`, extended periodically.
    pub fn from_predicate(modulus: u64, pred: impl Fn(u64) -> bool) -> Self {
        Self::new(modulus, (1..=modulus).filter(|&k| pred(k)))
    }

    pub fn with_min_k(mut self, min_k: u64) -> Self {
        self.min_k = if min_k > 1 { Some(min_k) } else { None };
        self
    }

    pub fn all() -> Self {
        Self::new(1, [0])
    }

    pub fn none() -> Self {
        Self::new(1, [])
    }

    /// Residues in `0..H`, the internal form.
    fn zero_based(&self) -> BTreeSet<u64> {
        self.residues.iter().map(|&r| r % self.modulus).collect()
    }

    fn canonical(mut h: u64, mut set: BTreeSet<u64>, min_k: Option<u64>) -> Self {
        'outer: loop {
            for p in prime_factors(h) {
                let sub = h / p;
                let reduced: BTreeSet<u64> = set.iter().map(|r| r % sub).collect();
                // the set is sub-periodic iff it is the full preimage of its reduction
                if reduced.len() * p as usize == set.len() {
                    h = sub;
                    set = reduced;
                    continue 'outer;
                }
            }
            break;
        }
        let mut residues: Vec<u64> = set.into_iter().map(|r| if r == 0 { h } else { r }).collect();
        residues.sort_unstable();
        ResidueCondition { modulus: h, residues, min_k }
    }

    pub fn contains(&self, k: u64) -> bool {
        if let Some(floor) = self.min_k {
            if k != 1 && k < floor {
                return false;
            }
        }
        let r = k % self.modulus;
        let r = if r == 0 { self.modulus } else { r };
        self.residues.binary_search(&r).is_ok()
    }

    /// The same set of residues over a multiple `h` of the modulus, in `0..h`.
    fn lifted(&self, h: u64) -> BTreeSet<u64> {
        debug_assert_eq!(h % self.modulus, 0);
        let base = self.zero_based();
        (0..h).filter(|r| base.contains(&(r % self.modulus))).collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let h = self.modulus.lcm(&other.modulus);
        let set = self.lifted(h).union(&other.lifted(h)).copied().collect();
        Self::canonical(h, set, merge_floor(self.min_k, other.min_k, false))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let h = self.modulus.lcm(&other.modulus);
        let set = self.lifted(h).intersection(&other.lifted(h)).copied().collect();
        Self::canonical(h, set, merge_floor(self.min_k, other.min_k, true))
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// The members of `1..=bound`.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&k| self.contains(k)).collect()
    }
}

fn merge_floor(a: Option<u64>, b: Option<u64>, intersect: bool) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if intersect { x.max(y) } else { x.min(y) }),
        (Some(x), None) | (None, Some(x)) => {
            if intersect {
                Some(x)
            } else {
                None
            }
        }
        (None, None) => None,
    }
}

impl fmt::Display for ResidueCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        if rs.is_empty() {
            write!(f, "no k")?;
        } else if self.modulus == 1 {
            write!(f, "all k")?;
        } else {
            write!(f, "k = {} mod {}", rs.join(","), self.modulus)?;
        }
        if let Some(m) = self.min_k {
            write!(f, " with k = 1 or k >= {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_period() {
        let c = ResidueCondition::new(12, [1, 7]);
        assert_eq!((c.modulus, c.residues.clone()), (6, vec![1]));
        let all = ResidueCondition::new(4, [1, 2, 3, 4]);
        assert_eq!(all, ResidueCondition::all());
        assert_eq!(ResidueCondition::new(10, [0]).residues, [10]);
    }

    #[test]
    fn unions_lift_to_lcm() {
        let a = ResidueCondition::new(6, [1]);
        let b = ResidueCondition::new(24, [16]);
        let u = a.union(&b);
        assert_eq!(u.modulus, 24);
        assert_eq!(u.residues, [1, 7, 13, 16, 19]);
        let i = ResidueCondition::new(2, [1]).intersection(&ResidueCondition::new(3, [1, 2]));
        assert_eq!((i.modulus, i.residues), (6, vec![1, 5]));
    }

    #[test]
    fn floor_exempts_one() {
        let c = ResidueCondition::new(8, [1, 3, 5, 7]).with_min_k(3);
        assert!(c.contains(1));
        assert!(!c.contains(2));
        assert!(c.contains(3));
        assert!(!c.contains(4));
    }

    #[test]
    fn json_shape() {
        let c = ResidueCondition::new(10, [1, 5, 9]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"modulus":10,"residues":[1,5,9]}"#);
    }
}
