use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{partitions_of, Partition};
use crate::error::{invalid, Error, Result};

/// An `m`-tuple of partitions `(lambda^(0), ..., lambda^(m-1))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return invalid("a multipartition needs at least one component");
        }
        Ok(MultiPartition { components })
    }

    /// `(lambda, -, ..., -)` with `m` components.
    pub fn in_slot(m: usize, slot: usize, lambda: Partition) -> Self {
        let mut components = vec![Partition::empty(); m];
        components[slot] = lambda;
        MultiPartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    /// `sh^s`: rotate components left by `s`.
    pub fn shift(&self, s: usize) -> Self {
        let mut components = self.components.clone();
        let m = components.len();
        components.rotate_left(s % m);
        MultiPartition { components }
    }
}

/// Every `m`-tuple of partitions of total size `n`.
pub fn enumerate_multipartitions(m: usize, n: u64) -> Vec<MultiPartition> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut cur: Vec<Partition> = Vec::with_capacity(m);
    spread(m, n, &mut cur, &mut out);
    out
}

fn spread(m: usize, rest: u64, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
    if cur.len() + 1 == m {
        for p in partitions_of(rest, None) {
            cur.push(p);
            out.push(MultiPartition { components: cur.clone() });
            cur.pop();
        }
        return;
    }
    for size in (0..=rest).rev() {
        for p in partitions_of(size, None) {
            cur.push(p);
            spread(m, rest - size, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "{}", s.join(";"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// `"2,1;-;1"`: components separated by `;`, empty ones written `-`.
    fn from_str(s: &str) -> Result<Self> {
        let components = s.split(';').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(components)
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
