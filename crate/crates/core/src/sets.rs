//! Subsets of `0..n` as fixed-width bitsets.
//!
//! Points of a space and elements of a group are dense indices, so every
//! subset in the crate is a [`PointSet`] of the right width.

use alloc::vec::Vec;

pub use fixedbitset::FixedBitSet as PointSet;

pub fn empty(n: usize) -> PointSet {
    PointSet::with_capacity(n)
}

pub fn full(n: usize) -> PointSet {
    let mut s = PointSet::with_capacity(n);
    s.insert_range(..);
    s
}

pub fn singleton(n: usize, x: usize) -> PointSet {
    let mut s = PointSet::with_capacity(n);
    s.insert(x);
    s
}

/// Builds a set of width `n`. Panics if an index is `>= n`.
pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> PointSet {
    let mut s = PointSet::with_capacity(n);
    for i in items {
        s.insert(i);
    }
    s
}

/// Sorted elements.
pub fn elements(s: &PointSet) -> Vec<usize> {
    s.ones().collect()
}

pub fn complement(s: &PointSet) -> PointSet {
    let mut c = s.clone();
    c.toggle_range(..);
    c
}

pub fn union(a: &PointSet, b: &PointSet) -> PointSet {
    let mut u = a.clone();
    u.union_with(b);
    u
}

pub fn intersection(a: &PointSet, b: &PointSet) -> PointSet {
    let mut u = a.clone();
    u.intersect_with(b);
    u
}

/// Widens a set of width at most 64 into its bitmask.
pub fn to_mask(s: &PointSet) -> u64 {
    s.ones().fold(0u64, |m, i| m | (1u64 << i))
}

pub fn from_mask(n: usize, mask: u64) -> PointSet {
    from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

/// Orders sets by their sorted element lists.
pub fn cmp_lex(a: &PointSet, b: &PointSet) -> core::cmp::Ordering {
    a.ones().cmp(b.ones())
}
