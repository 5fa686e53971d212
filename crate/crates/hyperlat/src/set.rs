//! Subsets of a hyperring carrier as fixed-width bit vectors.
//!
//! Carriers are capped at 64 elements so that every subset fits in a `u64`
//! and all set algebra (unions in hyperproducts, subset tests in ideal
//! closures, exhaustive scans) is a handful of machine ops.

use std::fmt;

/// Hard upper bound on carrier size imposed by the bitset representation.
pub const MAX_CARRIER: usize = 64;

/// A subset of carrier indices `0..n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_CARRIER);
        ElemSet(1u64 << i)
    }

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in members {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_CARRIER);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Self::full(n).minus(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Members in increasing index order.
    pub fn members(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Least member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

/// Iterator over set members in increasing order.
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_members(iter)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Orders sets by size, then lexicographically on the sorted member list.
pub fn canonical_set_order(a: &ElemSet, b: &ElemSet) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.members().cmp(&b.members()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = ElemSet::from_members([0, 3]);
        let b = ElemSet::from_members([3, 5]);
        assert_eq!(a.union(b).members(), vec![0, 3, 5]);
        assert_eq!(a.intersect(b).members(), vec![3]);
        assert_eq!(a.minus(b).members(), vec![0]);
        assert!(a.intersects(b));
        assert!(!a.is_subset(b));
        assert!(ElemSet::singleton(3).is_subset(a));
        assert_eq!(a.complement(6).members(), vec![1, 2, 4, 5]);
        assert_eq!(ElemSet::full(6).len(), 6);
        assert_eq!(a.min(), Some(0));
        assert_eq!(ElemSet::EMPTY.min(), None);
        assert_eq!(format!("{a}"), "{0,3}");
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets = vec![
            ElemSet::from_members([1, 2]),
            ElemSet::from_members([0, 3]),
            ElemSet::from_members([2]),
        ];
        sets.sort_by(canonical_set_order);
        assert_eq!(sets[0].members(), vec![2]);
        assert_eq!(sets[1].members(), vec![0, 3]);
        assert_eq!(sets[2].members(), vec![1, 2]);
    }
}
