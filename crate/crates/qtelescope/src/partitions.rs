//! Integer partitions with multiplicity statistics and constrained enumeration.
//!
//! A [`Partition`] is a non-increasing sequence of positive parts. Multiplicities
//! follow the convention `m_0 = INFINITY`: every partition has infinitely many
//! zero parts, which is what makes the boundary cells of the telescoping
//! bijections come out right without special cases. [`ExtNat`] carries that
//! convention; its order places `INFINITY` strictly above every finite value and
//! equal to itself, so `INFINITY + 2 > INFINITY` is false while
//! `INFINITY + 2 <= INFINITY` is true.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A natural number extended with an absorbing infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    /// A finite count.
    Fin(usize),
    /// The multiplicity of the part 0 in any partition.
    Inf,
}

impl ExtNat {
    /// Returns the finite value, panicking on infinity.
    pub fn finite(self) -> usize {
        match self {
            ExtNat::Fin(v) => v,
            ExtNat::Inf => panic!("expected a finite multiplicity"),
        }
    }

    /// True when the value is infinite.
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Inf)
    }
}

impl Add<usize> for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: usize) -> ExtNat {
        match self {
            ExtNat::Fin(v) => ExtNat::Fin(v + rhs),
            ExtNat::Inf => ExtNat::Inf,
        }
    }
}

impl fmt::Debug for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

/// A partition of a nonnegative integer: parts are positive, non-increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The parts in non-increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The i-th part (0-based), reading past the end as zero parts.
    pub fn part_or_zero(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of the part `k`, with `m_0 = INFINITY`.
    pub fn multiplicity(&self, k: usize) -> ExtNat {
        if k == 0 {
            ExtNat::Inf
        } else {
            ExtNat::Fin(self.parts.iter().filter(|&&p| p == k).count())
        }
    }

    /// Finite multiplicity of a positive part value.
    pub fn multiplicity_fin(&self, k: usize) -> usize {
        assert!(k > 0, "use multiplicity() for the part 0");
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Number of parts strictly greater than `k` (always finite).
    pub fn multiplicity_gt(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p > k).count()
    }

    /// Part-value -> multiplicity map of the positive parts.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Rebuilds a partition from a multiplicity map.
    pub fn from_counts(counts: &BTreeMap<usize, usize>) -> Self {
        let mut parts = Vec::new();
        for (&value, &mult) in counts.iter().rev() {
            assert!(value > 0, "partition parts must be positive");
            parts.extend(std::iter::repeat_n(value, mult));
        }
        Partition { parts }
    }

    /// Decreases every part by `d`; all parts must stay positive.
    pub fn decrement_each(&self, d: usize) -> Partition {
        let parts = self
            .parts
            .iter()
            .map(|&p| {
                assert!(p > d, "decrement would produce a nonpositive part");
                p - d
            })
            .collect();
        Partition { parts }
    }

    /// Removes `count` copies of `value`; panics if fewer are present.
    pub fn remove_parts(&self, value: usize, count: usize) -> Partition {
        let mut counts = self.counts();
        let have = counts.get(&value).copied().unwrap_or(0);
        assert!(have >= count, "removing {count} parts of size {value}, only {have} present");
        if have == count {
            counts.remove(&value);
        } else {
            counts.insert(value, have - count);
        }
        Partition::from_counts(&counts)
    }

    /// Adds `count` copies of `value`.
    pub fn add_parts(&self, value: usize, count: usize) -> Partition {
        assert!(value > 0);
        let mut counts = self.counts();
        *counts.entry(value).or_insert(0) += count;
        Partition::from_counts(&counts)
    }

    /// Turns every part equal to `from` into a part equal to `to`.
    pub fn convert_parts(&self, from: usize, to: usize) -> Partition {
        assert!(to > 0);
        Partition::new(self.parts.iter().map(|&p| if p == from { to } else { p }).collect())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(D::Error::custom("partition parts must be non-increasing"));
            }
        }
        if parts.contains(&0) {
            return Err(D::Error::custom("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }
}

/// The trapezoid (k, ..., k, k-1, ..., 2, 1) with 2k copies of k; its weight is
/// k(5k-1)/2, the exponent of the k-th term of Watson's alternating sum.
pub fn trapezoid_watson(k: usize) -> Partition {
    let mut parts = vec![k; 2 * k];
    parts.extend((1..k).rev());
    let t = Partition { parts };
    debug_assert_eq!(t.weight(), k * (5 * k).saturating_sub(1) / 2);
    t
}

/// The trapezoid (k, ..., k, k-1, ..., 2, 1) with k+1 copies of k; its weight is
/// k(3k+1)/2, the exponent of the k-th term of Sylvester's alternating sum.
pub fn trapezoid_sylvester(k: usize) -> Partition {
    let mut parts = vec![k; k + 1];
    parts.extend((1..k).rev());
    parts.retain(|&p| p > 0);
    let t = Partition { parts };
    debug_assert_eq!(t.weight(), k * (3 * k + 1) / 2);
    t
}

/// Constraints for [`enumerate`]; unset fields do not constrain.
#[derive(Clone, Debug, Default)]
pub struct PartitionConstraint {
    /// Every part is at most this value; `Some(0)` admits only the empty partition.
    pub max_part: Option<usize>,
    /// Every part is at least this value.
    pub min_part: Option<usize>,
    /// No part equals this value.
    pub forbidden_part: Option<usize>,
    /// The number of parts is exactly this value.
    pub exact_length: Option<usize>,
    /// `(k, c)`: exactly `c` parts are strictly greater than `k`.
    pub exact_count_gt: Option<(usize, usize)>,
}

impl PartitionConstraint {
    /// True when a complete partition satisfies every set constraint.
    pub fn admits(&self, p: &Partition) -> bool {
        if let Some(m) = self.max_part {
            if p.largest() > m {
                return false;
            }
        }
        if let Some(m) = self.min_part {
            if p.parts.iter().any(|&x| x < m) {
                return false;
            }
        }
        if let Some(fp) = self.forbidden_part {
            if p.parts.contains(&fp) {
                return false;
            }
        }
        if let Some(l) = self.exact_length {
            if p.len() != l {
                return false;
            }
        }
        if let Some((k, c)) = self.exact_count_gt {
            if p.multiplicity_gt(k) != c {
                return false;
            }
        }
        true
    }
}

/// Enumerates every partition of weight at most `max_weight` meeting the
/// constraint, without duplicates, graded by weight and then lexicographically
/// by the part sequence.
pub fn enumerate(constraint: &PartitionConstraint, max_weight: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let lo = constraint.min_part.unwrap_or(1).max(1);
    let hi = constraint.max_part.unwrap_or(max_weight).min(max_weight);
    let mut cur: Vec<usize> = Vec::new();
    rec(constraint, max_weight, hi, lo, &mut cur, 0, &mut out);
    out.sort_unstable_by(|a, b| (a.weight(), &a.parts).cmp(&(b.weight(), &b.parts)));
    out
}

fn rec(
    c: &PartitionConstraint,
    budget: usize,
    max_next: usize,
    min_part: usize,
    cur: &mut Vec<usize>,
    count_gt: usize,
    out: &mut Vec<Partition>,
) {
    let complete_len = c.exact_length.is_none_or(|l| cur.len() == l);
    let complete_gt = c.exact_count_gt.is_none_or(|(_, n)| count_gt == n);
    if complete_len && complete_gt {
        out.push(Partition { parts: cur.clone() });
    }
    if let Some(l) = c.exact_length {
        if cur.len() >= l {
            return;
        }
        // each remaining slot costs at least min_part
        if (l - cur.len()) * min_part > budget {
            return;
        }
    }
    if let Some((k, n)) = c.exact_count_gt {
        // parts are generated in non-increasing order, so once a part <= k is
        // placed no further part can exceed k
        if count_gt < n {
            if let Some(&last) = cur.last() {
                if last <= k {
                    return;
                }
            }
            if (n - count_gt) * (k + 1) > budget {
                return;
            }
        }
    }
    let hi = max_next.min(budget);
    for p in (min_part..=hi).rev() {
        if Some(p) == c.forbidden_part {
            continue;
        }
        let next_gt = count_gt + usize::from(c.exact_count_gt.is_some_and(|(k, _)| p > k));
        if let Some((_, n)) = c.exact_count_gt {
            if next_gt > n {
                continue;
            }
        }
        cur.push(p);
        rec(c, budget - p, p, min_part, cur, next_gt, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Reference count of constrained partitions of exactly `m`, by direct
    /// filtering of an unconstrained recursive enumeration.
    fn reference_count(c: &PartitionConstraint, m: usize) -> usize {
        fn all_parts(budget: usize, max_next: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            for p in (1..=max_next.min(budget)).rev() {
                cur.push(p);
                all_parts(budget - p, p, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        all_parts(m, m, &mut Vec::new(), &mut raw);
        raw.iter()
            .filter(|parts| parts.iter().sum::<usize>() == m)
            .filter(|parts| c.admits(&Partition { parts: (*parts).clone() }))
            .count()
    }

    #[test]
    fn multiplicity_of_zero_is_infinite() {
        let p = Partition::new(vec![3, 1, 1]);
        assert_eq!(p.multiplicity(0), ExtNat::Inf);
        assert_eq!(p.multiplicity(1), ExtNat::Fin(2));
        assert_eq!(p.multiplicity(2), ExtNat::Fin(0));
        assert_eq!(p.multiplicity_gt(1), 1);
        assert_eq!(p.multiplicity_gt(0), 3);
    }

    #[test]
    fn extnat_absorbs_and_compares() {
        assert_eq!(ExtNat::Inf + 2, ExtNat::Inf);
        assert!(ExtNat::Inf + 2 <= ExtNat::Inf);
        assert!(!(ExtNat::Inf + 2 > ExtNat::Inf));
        assert!(!(ExtNat::Inf < ExtNat::Inf));
        assert!(ExtNat::Fin(5) < ExtNat::Inf);
        assert!(ExtNat::Fin(2) + 2 > ExtNat::Fin(3));
    }

    #[test]
    fn trapezoid_shapes() {
        assert_eq!(trapezoid_watson(0), Partition::empty());
        assert_eq!(trapezoid_watson(1), Partition::new(vec![1, 1]));
        assert_eq!(trapezoid_watson(2), Partition::new(vec![2, 2, 2, 2, 1]));
        assert_eq!(trapezoid_sylvester(0), Partition::empty());
        assert_eq!(trapezoid_sylvester(1), Partition::new(vec![1, 1]));
        assert_eq!(trapezoid_sylvester(2), Partition::new(vec![2, 2, 2, 1]));
        for k in 0..=12 {
            assert_eq!(trapezoid_watson(k).weight(), k * (5 * k).saturating_sub(1) / 2);
            assert_eq!(trapezoid_watson(k).len(), if k == 0 { 0 } else { 3 * k - 1 });
            assert_eq!(trapezoid_sylvester(k).weight(), k * (3 * k + 1) / 2);
        }
    }

    #[test]
    fn enumerate_unconstrained_matches_partition_numbers() {
        // p(0..8) = 1, 1, 2, 3, 5, 7, 11, 15, 22
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22];
        let all = enumerate(&PartitionConstraint::default(), 8);
        for (m, &want) in expected.iter().enumerate() {
            assert_eq!(all.iter().filter(|p| p.weight() == m).count(), want, "p({m})");
        }
    }

    #[test]
    fn enumerate_is_graded_then_lexicographic() {
        let all = enumerate(&PartitionConstraint::default(), 3);
        let got: Vec<Vec<usize>> = all.iter().map(|p| p.parts.to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![],
                vec![1],
                vec![1, 1],
                vec![2],
                vec![1, 1, 1],
                vec![2, 1],
                vec![3],
            ]
        );
    }

    #[test]
    fn enumerate_with_all_constraints() {
        let c = PartitionConstraint {
            min_part: Some(1),
            forbidden_part: Some(2),
            exact_length: Some(1),
            ..Default::default()
        };
        let got = enumerate(&c, 4);
        assert_eq!(
            got,
            vec![
                Partition::new(vec![1]),
                Partition::new(vec![3]),
                Partition::new(vec![4]),
            ]
        );

        // exactly 2 parts greater than 1, no part equal to 3
        let c = PartitionConstraint {
            forbidden_part: Some(3),
            exact_count_gt: Some((1, 2)),
            ..Default::default()
        };
        for p in enumerate(&c, 9) {
            assert_eq!(p.multiplicity_gt(1), 2);
            assert_eq!(p.multiplicity_fin(3), 0);
        }
    }

    #[test]
    fn max_part_zero_admits_only_the_empty_partition() {
        let c = PartitionConstraint { max_part: Some(0), ..Default::default() };
        assert_eq!(enumerate(&c, 10), vec![Partition::empty()]);
    }

    #[test]
    fn surgery_helpers() {
        let p = Partition::new(vec![4, 2, 2, 1]);
        assert_eq!(p.remove_parts(2, 1), Partition::new(vec![4, 2, 1]));
        assert_eq!(p.add_parts(3, 2), Partition::new(vec![4, 3, 3, 2, 2, 1]));
        assert_eq!(p.convert_parts(2, 5), Partition::new(vec![5, 5, 4, 1]));
        assert_eq!(Partition::new(vec![4, 3]).decrement_each(2), Partition::new(vec![2, 1]));
        assert_eq!(Partition::from_counts(&p.counts()), p);
    }

    proptest! {
        /// Every enumerated partition is valid, admitted, within budget, and
        /// the enumeration is duplicate-free with counts matching a direct
        /// filter of the unconstrained enumeration.
        #[test]
        fn enumerate_complete_and_duplicate_free(
            max_part in proptest::option::of(0usize..6),
            min_part in proptest::option::of(1usize..4),
            forbidden in proptest::option::of(1usize..6),
            exact_length in proptest::option::of(0usize..5),
            gt in proptest::option::of((0usize..4, 0usize..4)),
            s in 0usize..11,
        ) {
            let c = PartitionConstraint {
                max_part,
                min_part,
                forbidden_part: forbidden,
                exact_length,
                exact_count_gt: gt,
            };
            let got = enumerate(&c, s);
            let mut seen = std::collections::HashSet::new();
            for p in &got {
                prop_assert!(p.weight() <= s);
                prop_assert!(c.admits(p));
                prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                prop_assert!(seen.insert(p.clone()), "duplicate {p:?}");
            }
            for m in 0..=s {
                let count = got.iter().filter(|p| p.weight() == m).count();
                prop_assert_eq!(count, reference_count(&c, m), "weight {}", m);
            }
        }

        /// Multiplicities are consistent: sum of m_j over j > k equals m_{>k}.
        #[test]
        fn multiplicity_tail_sums(parts in proptest::collection::vec(1usize..9, 0..8), k in 0usize..9) {
            let p = Partition::new(parts);
            let tail: usize = (k + 1..=9).map(|j| p.multiplicity_fin(j)).sum();
            prop_assert_eq!(tail, p.multiplicity_gt(k));
        }
    }
}
