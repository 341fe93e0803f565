use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Which irreducible complex reflection group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLabel {
    /// Symmetric group `S_n` acting on its `(n-1)`-dimensional reflection representation.
    Sym(u64),
    /// Imprimitive group `G(m, p, n)`.
    Imprimitive { m: u64, p: u64, n: u64 },
    Cyclic(u64),
    /// Dihedral group of order `2m`, the same group as `G(m, m, 2)`.
    Dihedral(u64),
    /// Shephard-Todd number 4..=37.
    Exceptional(u8),
}

impl GroupLabel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupLabel::Sym(n) if n < 2 => invalid(format!("S{n}: need n >= 2")),
            GroupLabel::Imprimitive { m, p, n } => {
                if m < 2 || n < 2 || p == 0 || m % p != 0 {
                    invalid(format!("G({m},{p},{n}): need m >= 2, n >= 2 and p | m"))
                } else {
                    Ok(())
                }
            }
            GroupLabel::Cyclic(m) | GroupLabel::Dihedral(m) if m < 2 => {
                invalid(format!("{self}: need m >= 2"))
            }
            GroupLabel::Exceptional(e) if !(4..=37).contains(&e) => {
                Err(Error::UnknownGroup(format!("G{e}")))
            }
            _ => Ok(()),
        }
    }

    /// `G(m,m,2)` and the dihedral label name the same group.
    pub fn is_dihedral(&self) -> Option<u64> {
        match *self {
            GroupLabel::Dihedral(m) => Some(m),
            GroupLabel::Imprimitive { m, p, n: 2 } if p == m => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Sym(n) => write!(f, "S{n}"),
            GroupLabel::Imprimitive { m, p, n } => write!(f, "G({m},{p},{n})"),
            GroupLabel::Cyclic(m) => write!(f, "C{m}"),
            GroupLabel::Dihedral(m) => write!(f, "D{m}"),
            GroupLabel::Exceptional(e) => write!(f, "G{e}"),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    /// `S<n>`, `G(<m>,<p>,<n>)`, `C<m>`, `D<m>` or `G4`..`G37`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let unknown = || Error::UnknownGroup(s.to_string());
        let num = |x: &str| x.parse::<u64>().map_err(|_| unknown());
        let label = if let Some(rest) = t.strip_prefix("G(") {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let v: Vec<&str> = inner.split(',').collect();
            if v.len() != 3 {
                return Err(unknown());
            }
            GroupLabel::Imprimitive { m: num(v[0])?, p: num(v[1])?, n: num(v[2])? }
        } else if let Some(rest) = t.strip_prefix('G') {
            let e = num(rest)?;
            if !(4..=37).contains(&e) {
                return Err(unknown());
            }
            GroupLabel::Exceptional(e as u8)
        } else if let Some(rest) = t.strip_prefix('S') {
            GroupLabel::Sym(num(rest)?)
        } else if let Some(rest) = t.strip_prefix('C') {
            GroupLabel::Cyclic(num(rest)?)
        } else if let Some(rest) = t.strip_prefix('D') {
            GroupLabel::Dihedral(num(rest)?)
        } else {
            return Err(unknown());
        };
        label.validate()?;
        Ok(label)
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Degrees and codegrees of an irreducible reflection group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionGroupData {
    pub label: GroupLabel,
    pub rank: usize,
    pub degrees: Vec<u64>,
    pub codegrees: Vec<u64>,
    #[serde(serialize_with = "big_as_string")]
    pub order: BigInt,
    /// `N = sum (d*_i + 1)`, the number of reflecting hyperplanes.
    pub n_hyperplanes: u64,
}

fn big_as_string<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl ReflectionGroupData {
    fn build(label: GroupLabel, mut degrees: Vec<u64>, mut codegrees: Vec<u64>) -> Self {
        degrees.sort_unstable();
        codegrees.sort_unstable();
        debug_assert_eq!(degrees.len(), codegrees.len());
        let order = degrees.iter().map(|&d| BigInt::from(d)).product();
        let n_hyperplanes = codegrees.iter().map(|&c| c + 1).sum();
        ReflectionGroupData { label, rank: degrees.len(), degrees, codegrees, order, n_hyperplanes }
    }

    /// Least common multiple of the degrees.
    pub fn degree_lcm(&self) -> u64 {
        self.degrees.iter().fold(1, |a, &d| num_integer::lcm(a, d))
    }
}

/// (degrees, codegrees) of `G4`..`G37`.
const EXCEPTIONAL: [(&[u64], &[u64]); 34] = [
    (&[4, 6], &[0, 2]),
    (&[6, 12], &[0, 6]),
    (&[4, 12], &[0, 8]),
    (&[12, 12], &[0, 12]),
    (&[8, 12], &[0, 4]),
    (&[8, 24], &[0, 16]),
    (&[12, 24], &[0, 12]),
    (&[24, 24], &[0, 24]),
    (&[6, 8], &[0, 10]),
    (&[8, 12], &[0, 16]),
    (&[6, 24], &[0, 18]),
    (&[12, 24], &[0, 24]),
    (&[20, 30], &[0, 10]),
    (&[20, 60], &[0, 40]),
    (&[30, 60], &[0, 30]),
    (&[60, 60], &[0, 60]),
    (&[12, 30], &[0, 18]),
    (&[12, 60], &[0, 48]),
    (&[12, 20], &[0, 28]),
    (&[2, 6, 10], &[0, 4, 8]),
    (&[4, 6, 14], &[0, 8, 10]),
    (&[6, 9, 12], &[0, 3, 6]),
    (&[6, 12, 18], &[0, 6, 12]),
    (&[6, 12, 30], &[0, 18, 24]),
    (&[2, 6, 8, 12], &[0, 4, 6, 10]),
    (&[4, 8, 12, 20], &[0, 8, 12, 16]),
    (&[2, 12, 20, 30], &[0, 10, 18, 28]),
    (&[8, 12, 20, 24], &[0, 12, 16, 28]),
    (&[12, 18, 24, 30], &[0, 6, 12, 18]),
    (&[4, 6, 10, 12, 18], &[0, 6, 8, 12, 14]),
    (&[6, 12, 18, 24, 30, 42], &[0, 12, 18, 24, 30, 36]),
    (&[2, 5, 6, 8, 9, 12], &[0, 3, 4, 6, 7, 10]),
    (&[2, 6, 8, 10, 12, 14, 18], &[0, 4, 6, 8, 10, 12, 16]),
    (&[2, 8, 12, 14, 18, 20, 24, 30], &[0, 6, 10, 12, 16, 18, 22, 28]),
];

/// Degree and codegree data for a group label.
pub fn group_data(label: GroupLabel) -> Result<ReflectionGroupData> {
    label.validate()?;
    let (degrees, codegrees) = match label {
        GroupLabel::Sym(n) => ((2..=n).collect(), (0..=n - 2).collect()),
        GroupLabel::Imprimitive { m, p, n } => {
            let mut degrees: Vec<u64> = (1..n).map(|i| i * m).collect();
            degrees.push(m * n / p);
            let codegrees = if p < m {
                (0..n).map(|i| i * m).collect()
            } else {
                let mut c: Vec<u64> = (0..n - 1).map(|i| i * m).collect();
                c.push((n - 1) * m - n);
                c
            };
            (degrees, codegrees)
        }
        GroupLabel::Cyclic(m) => (vec![m], vec![0]),
        GroupLabel::Dihedral(m) => (vec![2, m], vec![0, m - 2]),
        GroupLabel::Exceptional(e) => {
            let (d, c) = EXCEPTIONAL[e as usize - 4];
            (d.to_vec(), c.to_vec())
        }
    };
    Ok(ReflectionGroupData::build(label, degrees, codegrees))
}

/// Parse a label and look up its data.
pub fn group(label: &str) -> Result<ReflectionGroupData> {
    group_data(label.parse()?)
}

/// Every exceptional group `G4`..`G37`.
pub fn exceptional_groups() -> Vec<ReflectionGroupData> {
    (4..=37u8).map(|e| group_data(GroupLabel::Exceptional(e)).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for s in ["S5", "G(4,2,3)", "C7", "D5", "G4", "G37"] {
            assert_eq!(s.parse::<GroupLabel>().unwrap().to_string(), s);
        }
        assert!(matches!("G38".parse::<GroupLabel>(), Err(Error::UnknownGroup(_))));
        assert!(matches!("X3".parse::<GroupLabel>(), Err(Error::UnknownGroup(_))));
        assert!("G(4,3,2)".parse::<GroupLabel>().is_err());
        assert!("S1".parse::<GroupLabel>().is_err());
    }

    #[test]
    fn family_data() {
        assert_eq!(group("D5").unwrap().degrees, [2, 5]);
        assert_eq!(group("G(2,1,2)").unwrap().degrees, [2, 4]);
        let h3 = group("G23").unwrap();
        assert_eq!((h3.degrees.as_slice(), h3.codegrees.as_slice()), (&[2, 6, 10][..], &[0, 4, 8][..]));
        assert_eq!(h3.order, 120.into());
        assert_eq!(h3.n_hyperplanes, 15);
        let s4 = group("S4").unwrap();
        assert_eq!((s4.rank, s4.n_hyperplanes), (3, 6));
        let g = group("G(3,3,3)").unwrap();
        assert_eq!(g.degrees, [3, 3, 6]);
        assert_eq!(g.codegrees, [0, 3, 3]);
    }

    #[test]
    fn known_orders() {
        let e8 = group("G37").unwrap();
        assert_eq!(e8.order, 696_729_600u64.into());
        assert_eq!(e8.n_hyperplanes, 120);
        assert_eq!(group("G31").unwrap().order, 46080.into());
        assert_eq!(group("G28").unwrap().n_hyperplanes, 24);
        assert_eq!(group("G35").unwrap().n_hyperplanes, 36);
    }
}
