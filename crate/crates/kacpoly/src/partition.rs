//! Integer partitions, their transposes, and the transpose pairing that
//! drives the quiver series exponents.

use std::collections::BTreeMap;
use std::fmt;

/// A partition as a weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: `transpose[i] = #\{parts >= i+1\}`.
    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// `<lambda, mu> = sum_i lambda'_i mu'_i` over the transposes.
pub fn pairing(lambda: &Partition, mu: &Partition) -> u64 {
    let lt = lambda.transpose();
    let mt = mu.transpose();
    lt.parts
        .iter()
        .zip(mt.parts.iter())
        .map(|(&a, &b)| a as u64 * b as u64)
        .sum()
}

/// All partitions of `m`, first part descending: `(m)`, ..., `(1^m)`.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m.max(1), &mut Vec::new(), &mut out);
    out
}

/// All partitions of every `m` in `0..=n`, grouped by ascending size.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_order_and_grouping() {
        let all = partitions_up_to(3);
        let expect: Vec<Partition> = vec![
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[3]),
            p(&[2, 1]),
            p(&[1, 1, 1]),
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn counts_match_the_partition_recurrence() {
        // p(n) by the bounded-part recurrence, independent of the enumerator
        let n = 10usize;
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        let total: u64 = (0..=n).map(|m| table[m][n]).sum();
        assert_eq!(partitions_up_to(n as u32).len() as u64, total);
        assert_eq!(total, 139);
        for m in 0..=n {
            assert_eq!(partitions_of(m as u32).len() as u64, table[m][n]);
        }
    }

    #[test]
    fn transpose_is_an_involution() {
        for lambda in partitions_up_to(8) {
            let t = lambda.transpose();
            assert_eq!(t.size(), lambda.size());
            assert_eq!(t.transpose(), lambda);
        }
    }

    #[test]
    fn pairing_examples() {
        // (2,1) is self-conjugate: transpose (2,1), pairing 2*2 + 1*1
        assert_eq!(pairing(&p(&[2, 1]), &p(&[2, 1])), 5);
        // one-column partitions pair to l^2
        for l in 1..=6u32 {
            let col = Partition::new(vec![1; l as usize]);
            assert_eq!(pairing(&col, &col), (l as u64) * (l as u64));
        }
        assert_eq!(pairing(&p(&[2]), &p(&[2])), 2);
        assert_eq!(pairing(&Partition::empty(), &p(&[3, 1])), 0);
    }

    #[test]
    fn pairing_is_symmetric() {
        let all = partitions_up_to(5);
        for a in &all {
            for b in &all {
                assert_eq!(pairing(a, b), pairing(b, a));
            }
        }
    }

    #[test]
    fn multiplicities() {
        let m = p(&[3, 2, 2, 1]).multiplicities();
        assert_eq!(m.get(&2), Some(&2));
        assert_eq!(m.get(&1), Some(&1));
        assert_eq!(m.get(&4), None);
    }
}
