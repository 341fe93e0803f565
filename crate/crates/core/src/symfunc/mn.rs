use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::partitions::{partitions_of, Partition};

thread_local! {
    static MEMO: RefCell<HashMap<(Vec<u64>, Vec<u64>), BigInt>> = RefCell::new(HashMap::new());
}

/// Irreducible character `chi^lambda` of `S_n` at cycle type `mu`, by the
/// Murnaghan-Nakayama rule on beta-numbers.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return invalid(format!("|{lambda}| != |{mu}| in character evaluation"));
    }
    Ok(chi(lambda.parts(), mu.parts()))
}

fn chi(lambda: &[u64], mu: &[u64]) -> BigInt {
    if mu.is_empty() {
        return BigInt::from(1);
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let l = lambda.len();
    // beta_i = lambda_i + (l - 1 - i), strictly decreasing
    let beta: Vec<u64> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i) as u64).collect();
    let mut total = BigInt::zero();
    for i in 0..l {
        let Some(target) = beta[i].checked_sub(r) else { continue };
        if beta.contains(&target) {
            continue;
        }
        // beads strictly between target and beta[i] give the leg length
        let height = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<u64> = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (l - 1 - j) as u64)
            .filter(|&p| p > 0)
            .collect();
        let v = chi(&shape, rest);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// Character table of `S_n`; rows and columns both indexed by the
/// partitions of `n` in enumeration order.
#[derive(Debug, Clone)]
pub struct CharacterValueTable {
    pub n: u64,
    pub partitions: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterValueTable {
    pub fn new(n: u64) -> Self {
        let partitions = partitions_of(n, None);
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| chi(l.parts(), m.parts())).collect())
            .collect();
        CharacterValueTable { n, partitions, values }
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|x| x == p)
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index(lambda)?][self.index(mu)?])
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for mu in partitions_of(5, None) {
            assert_eq!(mn_character(&part("5"), &mu).unwrap(), 1.into());
            assert_eq!(mn_character(&Partition::column(5), &mu).unwrap(), mu.sign().into());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&part("2,1"), &part("1,1,1")).unwrap(), 2.into());
        assert_eq!(mn_character(&part("2,1"), &part("3")).unwrap(), (-1).into());
        assert_eq!(mn_character(&part("2,1"), &part("2,1")).unwrap(), 0.into());
        assert_eq!(mn_character(&part("2,2"), &part("2,2")).unwrap(), 2.into());
        assert!(mn_character(&part("2"), &part("1")).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = CharacterValueTable::new(n);
            for (j, mu) in t.partitions.iter().enumerate() {
                let sq: BigInt = (0..t.partitions.len()).map(|i| &t.row(i)[j] * &t.row(i)[j]).sum();
                assert_eq!(sq, mu.z(), "n={n}, mu={mu}");
            }
        }
    }
}
