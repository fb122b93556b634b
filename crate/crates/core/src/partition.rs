//! Integer partitions and the billiard class `D`.
//!
//! The billiard class consists of partitions into distinct parts whose
//! smallest part is even and in which no two adjacent parts are both odd.
//! Its basis consists of those members that cannot have any part reduced by
//! 2 and stay in the class: smallest part exactly 2 and adjacent gaps at
//! most 2.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::series::{Monomial, MultiSeries, TruncationPolicy};

/// An integer partition stored with parts in decreasing order.
///
/// Repeated parts are allowed at construction: type-A classes treat
/// partitions as multisets. The billiard and type-B predicates require
/// strictly decreasing parts and reject repeats.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order; rejects empty input and
    /// zero parts.
    pub fn new(parts: &[u64]) -> Result<Partition> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition);
        }
        let mut parts: Vec<u64> = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Parts in increasing order (the natural order for gap conditions).
    pub fn ascending(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts.iter().rev().copied()
    }

    /// Number of parts, `d`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, `n`.
    pub fn largest(&self) -> u64 {
        self.parts[0]
    }

    pub fn smallest(&self) -> u64 {
        self.parts[self.parts.len() - 1]
    }

    /// Sum of parts, `|pi|`.
    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of odd parts, `s`.
    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// True when all parts are distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

/// Membership in the billiard class: distinct parts, even smallest part, no
/// two adjacent parts both odd.
pub fn is_member_d(p: &Partition) -> bool {
    p.is_strict()
        && p.smallest() % 2 == 0
        && p.parts().windows(2).all(|w| w[0] % 2 == 0 || w[1] % 2 == 0)
}

/// Membership in the basis of the billiard class: smallest part 2, no
/// adjacent odd pair, adjacent differences at most 2.
pub fn is_basal_d(p: &Partition) -> bool {
    p.is_strict()
        && p.smallest() == 2
        && p.parts()
            .windows(2)
            .all(|w| (w[0] % 2 == 0 || w[1] % 2 == 0) && w[0] - w[1] <= 2)
}

/// The x-exponent of the weight of a billiard partition: `d - 1 - 2s` when
/// the largest part is even, `d - 2s` when it is odd (the weight itself is
/// 2 to this power).
pub fn weight_exponent(p: &Partition) -> Result<u32> {
    if !is_member_d(p) {
        return Err(Error::NotInClass);
    }
    let d = p.num_parts() as i64;
    let s = p.odd_parts() as i64;
    let e = if p.largest() % 2 == 0 { d - 1 - 2 * s } else { d - 2 * s };
    // nonnegative on every member: between two odd parts sits at least one
    // even part, and the smallest part is even
    debug_assert!(e >= 0, "negative weight exponent on a member");
    Ok(e as u32)
}

/// All billiard partitions of each `n <= n_cap`, grouped by `n`.
///
/// Buckets are sorted in decreasing lexicographic order of the decreasing
/// part sequences, so output (and golden files built from it) is
/// deterministic.
pub fn enumerate_d(n_cap: u64) -> BTreeMap<u64, Vec<Partition>> {
    let mut out: BTreeMap<u64, Vec<Partition>> = BTreeMap::new();
    let mut chain: Vec<u64> = Vec::new();
    // ascending chains: smallest part first, even; extended by larger parts
    // avoiding adjacent odd pairs
    let mut first = 2;
    while first <= n_cap {
        chain.push(first);
        extend_d(&mut chain, first, n_cap, &mut out);
        chain.pop();
        first += 2;
    }
    for bucket in out.values_mut() {
        bucket.sort_unstable_by(|a, b| b.cmp(a));
    }
    out
}

fn extend_d(chain: &mut Vec<u64>, sum: u64, n_cap: u64, out: &mut BTreeMap<u64, Vec<Partition>>) {
    let mut parts: Vec<u64> = chain.clone();
    parts.reverse();
    out.entry(sum).or_default().push(Partition { parts });

    let last = *chain.last().expect("chain is never empty here");
    let mut next = last + 1;
    while sum + next <= n_cap {
        if !(last % 2 == 1 && next % 2 == 1) {
            chain.push(next);
            extend_d(chain, sum + next, n_cap, out);
            chain.pop();
        }
        next += 1;
    }
}

/// Number of billiard partitions of `n` for each `n <= n_cap`.
pub fn count_d(n_cap: u64) -> BTreeMap<u64, usize> {
    enumerate_d(n_cap).into_iter().map(|(n, v)| (n, v.len())).collect()
}

/// The weighted series `1 + sum x^(weight exponent) q^|pi|` over all
/// billiard partitions with `|pi| <= q_cap`.
pub fn weighted_series_d(q_cap: i64) -> MultiSeries {
    let policy = TruncationPolicy::exact().with_q_cap(q_cap);
    let mut terms = alloc::vec![(Monomial::UNIT, num_bigint::BigInt::from(1))];
    for (n, bucket) in enumerate_d(q_cap.max(0) as u64) {
        for p in bucket {
            let e = weight_exponent(&p).expect("enumerated member");
            terms.push((Monomial::new(n as i64, 0, e, 0), num_bigint::BigInt::from(1)));
        }
    }
    MultiSeries::from_big_terms(policy, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member_d(&part(&[13, 2])));
        assert!(!is_member_d(&part(&[7, 5, 2]))); // adjacent odd pair
        assert!(!is_member_d(&part(&[4, 3]))); // smallest part odd
    }

    #[test]
    fn basal_examples() {
        assert!(is_basal_d(&part(&[5, 4, 2])));
        assert!(!is_basal_d(&part(&[7, 4, 2]))); // gap 3
        assert!(is_basal_d(&part(&[2])));
    }

    #[test]
    fn weight_exponents_for_three_parts() {
        assert_eq!(weight_exponent(&part(&[6, 4, 2])).unwrap(), 2);
        assert_eq!(weight_exponent(&part(&[4, 3, 2])).unwrap(), 0);
        assert_eq!(weight_exponent(&part(&[7, 6, 4])).unwrap(), 1);
        assert_eq!(weight_exponent(&part(&[4, 3])).unwrap_err(), Error::NotInClass);
    }

    #[test]
    fn enumerate_d_small_values() {
        let all = enumerate_d(15);
        assert!(all.get(&1).is_none());
        assert_eq!(all.get(&6).map(Vec::len), Some(2));
        let n6: Vec<_> = all[&6].iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(n6, alloc::vec![alloc::vec![6], alloc::vec![4, 2]]);

        let n15: Vec<_> = all[&15].iter().map(|p| p.parts().to_vec()).collect();
        let expect: Vec<Vec<u64>> = [
            alloc::vec![13, 2],
            alloc::vec![11, 4],
            alloc::vec![10, 3, 2],
            alloc::vec![9, 6],
            alloc::vec![9, 4, 2],
            alloc::vec![8, 5, 2],
            alloc::vec![7, 6, 2],
            alloc::vec![6, 5, 4],
            alloc::vec![6, 4, 3, 2],
        ]
        .to_vec();
        assert_eq!(n15, expect);
    }

    #[test]
    fn weighted_series_matches_display() {
        let s = weighted_series_d(15);
        let coeff = |e_q: i64, e_x: u32| {
            s.coefficient(&Monomial::new(e_q, 0, e_x, 0)).unwrap()
        };
        // (1+2x+x^2) q^12
        assert_eq!(coeff(12, 0), 1.into());
        assert_eq!(coeff(12, 1), 2.into());
        assert_eq!(coeff(12, 2), 1.into());
        // (2+3x+x^2) q^14
        assert_eq!(coeff(14, 0), 2.into());
        assert_eq!(coeff(14, 1), 3.into());
        assert_eq!(coeff(14, 2), 1.into());
        // 3 q^9
        assert_eq!(coeff(9, 0), 3.into());
        assert_eq!(coeff(9, 1), 0.into());
        // (6+3x) q^15
        assert_eq!(coeff(15, 0), 6.into());
        assert_eq!(coeff(15, 1), 3.into());
    }
}
