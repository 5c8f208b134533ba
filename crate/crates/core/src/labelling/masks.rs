//! Ascending enumeration of friendly labellings as bitmasks, with counting,
//! ranking, and unranking so exhaustive scans can be partitioned
//! deterministically.

use super::{Scope, VertexLabelling};
use crate::graph::Vertices;
use crate::{Error, Result};

/// Exact binomial coefficient; the intermediate product is kept in 128 bits,
/// which is ample for the orders the crate caps at.
pub(crate) fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial fits in 64 bits at supported orders")
}

/// All bitmasks over `bits` low bits whose popcount is one of `counts`, in
/// ascending numeric order.
#[derive(Clone, Debug)]
pub(crate) struct MaskFamily {
    bits: u32,
    counts: Vec<u32>,
}

impl MaskFamily {
    pub fn new(bits: u32, counts: &[u32]) -> Self {
        assert!(bits <= 62, "mask families are limited to 62 bits");
        let mut counts: Vec<u32> = counts.iter().copied().filter(|&c| c <= bits).collect();
        counts.sort_unstable();
        counts.dedup();
        Self { bits, counts }
    }

    pub fn len(&self) -> u64 {
        self.counts.iter().map(|&c| binomial(self.bits, c)).sum()
    }

    fn completions(&self, placed: u32, low_bits: u32) -> u64 {
        self.counts
            .iter()
            .map(|&c| {
                c.checked_sub(placed)
                    .map_or(0, |need| binomial(low_bits, need))
            })
            .sum()
    }

    /// The mask at 0-based position `idx` of the ascending order.
    pub fn mask_at(&self, idx: u64) -> u64 {
        assert!(idx < self.len(), "mask index out of range");
        let mut remaining = idx;
        let mut placed = 0u32;
        let mut mask = 0u64;
        for b in (0..self.bits).rev() {
            let with_zero = self.completions(placed, b);
            if remaining < with_zero {
                continue;
            }
            remaining -= with_zero;
            mask |= 1 << b;
            placed += 1;
        }
        debug_assert_eq!(remaining, 0);
        mask
    }

    /// Number of family members strictly below `mask`.
    pub fn rank(&self, mask: u64) -> u64 {
        let mut placed = 0u32;
        let mut r = 0u64;
        for b in (0..self.bits).rev() {
            if mask >> b & 1 == 1 {
                r += self.completions(placed, b);
                placed += 1;
            }
        }
        r
    }

    pub fn iter(&self) -> MaskIter {
        self.iter_from(0)
    }

    /// Iterates the ascending order starting at position `idx`; `idx` equal
    /// to the family size yields an empty iterator.
    pub fn iter_from(&self, idx: u64) -> MaskIter {
        let len = self.len();
        assert!(idx <= len, "mask index out of range");
        let cursors = if idx == len {
            vec![None; self.counts.len()]
        } else {
            let target = self.mask_at(idx);
            self.counts
                .iter()
                .map(|&c| {
                    let single = MaskFamily::new(self.bits, &[c]);
                    let r = single.rank(target);
                    if r < single.len() {
                        Some(single.mask_at(r))
                    } else {
                        None
                    }
                })
                .collect()
        };
        MaskIter {
            bits: self.bits,
            counts: self.counts.clone(),
            cursors,
        }
    }
}

/// Merges one ascending same-popcount stream per allowed count.
pub(crate) struct MaskIter {
    bits: u32,
    counts: Vec<u32>,
    cursors: Vec<Option<u64>>,
}

/// Smallest value above `m` with the same popcount.
fn next_same_popcount(m: u64) -> u64 {
    let low = m & m.wrapping_neg();
    let carry = m + low;
    carry | (((m ^ carry) >> 2) / low)
}

impl Iterator for MaskIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let (slot, &value) = self
            .cursors
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_ref().map(|v| (i, v)))
            .min_by_key(|&(_, v)| *v)?;
        self.cursors[slot] = if self.counts[slot] == 0 {
            None
        } else {
            let succ = next_same_popcount(value);
            (succ < 1 << self.bits).then_some(succ)
        };
        Some(value)
    }
}

/// Vertices that count toward the friendly balance, ascending.
pub(crate) fn in_scope_vertices(host: &impl Vertices, scope: Scope) -> Vec<usize> {
    (0..host.vertex_count())
        .filter(|&v| scope == Scope::AllVertices || !host.is_isolated(v))
        .collect()
}

fn friendly_counts(p: u32) -> [u32; 2] {
    [p / 2, p.div_ceil(2)]
}

/// Family of friendly masks over `p` in-scope vertices.
pub(crate) fn full_mask_family(p: u32) -> MaskFamily {
    MaskFamily::new(p, &friendly_counts(p))
}

/// Friendly masks whose highest in-scope bit is 0, as a family over `p - 1`
/// bits. Complementing a labelling flips that bit and preserves both
/// friendliness and the popcount multiset, so this is exactly the first half
/// of the full ascending order, with positions preserved.
pub(crate) fn half_mask_family(p: u32) -> MaskFamily {
    assert!(p >= 1);
    MaskFamily::new(p - 1, &friendly_counts(p))
}

/// All friendly labellings of the host under the given scope, in ascending
/// order of the bitmask they induce on the in-scope vertices (low in-scope
/// vertex in the low bit). Out-of-scope vertices are labelled 0. Supports at
/// most 32 in-scope vertices.
pub fn enumerate_friendly_labellings<H: Vertices>(
    host: &H,
    scope: Scope,
) -> Result<FriendlyLabellings> {
    let in_scope = in_scope_vertices(host, scope);
    if in_scope.len() > 32 {
        return Err(Error::SizeCap {
            what: "friendly labelling enumeration",
            requested: in_scope.len() as u64,
            cap: 32,
        });
    }
    let family = full_mask_family(in_scope.len() as u32);
    let iter = family.iter();
    Ok(FriendlyLabellings {
        family,
        iter,
        in_scope,
        order: host.vertex_count(),
        scope,
    })
}

/// Iterator over every friendly labelling of one host; see
/// [`enumerate_friendly_labellings`].
pub struct FriendlyLabellings {
    family: MaskFamily,
    iter: MaskIter,
    in_scope: Vec<usize>,
    order: usize,
    scope: Scope,
}

impl FriendlyLabellings {
    /// Total number of friendly labellings, independent of how many have
    /// been consumed.
    pub fn total(&self) -> u64 {
        self.family.len()
    }
}

impl Iterator for FriendlyLabellings {
    type Item = VertexLabelling;

    fn next(&mut self) -> Option<VertexLabelling> {
        let mask = self.iter.next()?;
        let mut labels = vec![0u8; self.order];
        for (k, &v) in self.in_scope.iter().enumerate() {
            labels[v] = (mask >> k & 1) as u8;
        }
        Some(VertexLabelling::new(labels, self.scope).expect("mask bits are binary"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, parallel_edges};
    use crate::labelling::is_friendly;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(32, 16), 601_080_390);
    }

    #[test]
    fn family_is_ascending_and_complete() {
        let fam = MaskFamily::new(5, &[2, 3]);
        assert_eq!(fam.len(), 20);
        let masks: Vec<u64> = fam.iter().collect();
        assert_eq!(masks.len(), 20);
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert!(masks
            .iter()
            .all(|m| m.count_ones() == 2 || m.count_ones() == 3));
        assert_eq!(masks[0], 0b00011);
        assert_eq!(*masks.last().unwrap(), 0b11100);
    }

    #[test]
    fn rank_and_unrank_are_inverse() {
        let fam = MaskFamily::new(9, &[4, 5]);
        for (i, m) in fam.iter().enumerate() {
            assert_eq!(fam.mask_at(i as u64), m);
            assert_eq!(fam.rank(m), i as u64);
        }
    }

    #[test]
    fn iter_from_matches_a_skipped_full_iteration() {
        let fam = MaskFamily::new(8, &[4]);
        let all: Vec<u64> = fam.iter().collect();
        for start in [0u64, 1, 17, 69, 70] {
            let tail: Vec<u64> = fam.iter_from(start).collect();
            assert_eq!(tail, all[start as usize..]);
        }
    }

    #[test]
    fn zero_popcount_family_has_one_member() {
        let fam = MaskFamily::new(0, &[0]);
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn half_family_is_the_first_half_for_both_parities() {
        for p in 1..=11u32 {
            let full: Vec<u64> = full_mask_family(p).iter().collect();
            let half: Vec<u64> = half_mask_family(p).iter().collect();
            assert_eq!(half.len() * 2, full.len(), "p = {p}");
            assert_eq!(half[..], full[..half.len()], "p = {p}");
        }
    }

    #[test]
    fn friendly_enumeration_is_exhaustive_and_friendly() {
        let g = cycle(5).unwrap();
        let labellings: Vec<_> = enumerate_friendly_labellings(&g, Scope::NonisolatedOnly)
            .unwrap()
            .collect();
        assert_eq!(labellings.len(), 20);
        for f in &labellings {
            assert!(is_friendly(f, &g).unwrap());
        }
        let distinct: std::collections::HashSet<_> =
            labellings.iter().map(|f| f.labels().to_vec()).collect();
        assert_eq!(distinct.len(), 20);
    }

    #[test]
    fn scope_changes_the_enumerated_set() {
        let g = parallel_edges(7).unwrap();
        let nonisolated = enumerate_friendly_labellings(&g, Scope::NonisolatedOnly).unwrap();
        assert_eq!(nonisolated.total(), 20);
        for f in nonisolated {
            assert_eq!(f.get(6), 0);
        }
        let all = enumerate_friendly_labellings(&g, Scope::AllVertices).unwrap();
        assert_eq!(all.total(), 70);
    }

    #[test]
    fn empty_scope_yields_the_all_zero_labelling() {
        let g = crate::graph::Graph::new(0, Vec::new()).unwrap();
        let mut it = enumerate_friendly_labellings(&g, Scope::AllVertices).unwrap();
        assert_eq!(it.total(), 1);
        let f = it.next().unwrap();
        assert!(f.is_empty());
        assert!(it.next().is_none());
    }
}
