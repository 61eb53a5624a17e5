//! Fixed-length bitsets over the element indices of a group.

use std::cmp::Ordering;
use std::fmt;

/// A set of element indices `0..len`, stored as 64-bit words.
///
/// The total order compares characteristic vectors from element `0` upward,
/// with the set that contains the first differing element ordered first.
/// Among sets of equal size this is the lexicographic order of their sorted
/// member lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    len: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(len: usize) -> Self {
        ElemSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, it: I) -> Self {
        let mut s = Self::new(len);
        for i in it {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Universe size (the parent group order).
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Inserts `i`; returns true when it was absent.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = 1u64 << diff.trailing_zeros();
                return if a & bit != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = ElemSet::new(130);
        assert!(s.insert(0));
        assert!(!s.insert(0));
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        assert_eq!(ElemSet::full(130).count(), 130);
        assert!(s.is_subset(&ElemSet::full(130)));
        s.remove(64);
        assert!(!s.contains(64));
    }

    proptest! {
        #[test]
        fn order_matches_sorted_member_lists(
            a in proptest::collection::btree_set(0usize..100, 0..20),
            b in proptest::collection::btree_set(0usize..100, 0..20),
        ) {
            let sa = ElemSet::from_indices(100, a.iter().copied());
            let sb = ElemSet::from_indices(100, b.iter().copied());
            if a.len() == b.len() {
                let la: Vec<_> = a.iter().collect();
                let lb: Vec<_> = b.iter().collect();
                prop_assert_eq!(sa.cmp(&sb), la.cmp(&lb));
            }
            prop_assert_eq!(sa.intersection(&sb).to_vec(),
                a.intersection(&b).copied().collect::<Vec<_>>());
        }
    }
}
