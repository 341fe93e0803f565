use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::exact::factorial;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u64) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u64) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u64).collect();
        Partition { parts }
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(p, c)| BigInt::from(p).pow(c as u32) * factorial(c as u64))
            .product()
    }

    /// Size of the conjugacy class of cycle type `self` in `S_n`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u64 * p).sum()
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len() as u64) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All partitions of `n`, optionally with at most `max_length` parts, in
/// reverse-lexicographic order starting from `(n)`.
pub fn enumerate_partitions(n: i64, max_length: Option<usize>) -> Result<Vec<Partition>> {
    if n < 0 {
        return invalid(format!("cannot partition a negative number ({n})"));
    }
    Ok(partitions_of(n as u64, max_length))
}

pub(crate) fn partitions_of(n: u64, max_length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, max_length.unwrap_or(usize::MAX), &mut cur, &mut out);
    out
}

fn fill(rest: u64, cap: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"3,2,1"`; `"-"` or the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad partition part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(4, None).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(0, None).unwrap(), vec![Partition::empty()]);
        let two_rows: Vec<String> =
            enumerate_partitions(5, Some(2)).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(two_rows, ["5", "4,1", "3,2"]);
        assert!(enumerate_partitions(-1, None).is_err());
    }

    #[test]
    fn centralizers_and_classes() {
        assert_eq!(part("2,1").z(), 2.into());
        assert_eq!(part("2,1").class_size(), 3.into());
        assert_eq!(part("1,1,1,1").z(), 24.into());
        assert_eq!(part("1,1,1,1").class_size(), 1.into());
        assert_eq!(part("3").class_size(), 2.into());
    }

    #[test]
    fn parsing_rejects_garbage() {
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(part("-"), Partition::empty());
        assert_eq!(part("3,1,1").to_string(), "3,1,1");
    }

    #[test]
    fn conjugates() {
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert_eq!(part("4,2,2").conjugate().conjugate(), part("4,2,2"));
    }
}
