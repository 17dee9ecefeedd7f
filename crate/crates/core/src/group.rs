//! Finite groups as validated Cayley tables.
//!
//! Elements are dense indices `0..order`; names are labels for reports and
//! documents only. All group laws are checked when a table is accepted, so
//! the rest of the crate takes them for granted.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::sets::{self, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group table is empty")]
    Empty,
    #[error("table row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("{names} names given for a table of order {order}")]
    NameCount { names: usize, order: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("embedding table has {len} entries for a source of order {order}")]
    MapLength { len: usize, order: usize },
    #[error("embedding maps {value} outside the target group")]
    MapOutOfRange { value: usize },
    #[error("not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("not injective: {a} and {b} have the same image")]
    NotInjective { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    // row-major, mul[a * order + b] = ab
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates a multiplication table. `mul[a][b]` is the index of `ab`.
    pub fn from_table(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if names.len() != n {
            return Err(GroupError::NameCount {
                names: names.len(),
                order: n,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in mul.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value });
                }
                flat.push(value);
            }
        }
        let at = |a: usize, b: usize| flat[a * n + b];

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = Vec::with_capacity(n);
        for g in 0..n {
            let h = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or(GroupError::NoInverse { element: g })?;
            inv.push(h);
        }
        Ok(FiniteGroup {
            names,
            mul: flat,
            inv,
            identity,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with elements named `"0"`..`"n-1"`.
    ///
    /// Panics if `n == 0`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let names = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inv = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup {
            names,
            mul,
            inv,
            identity: 0,
        }
    }

    /// The symmetric group on three letters, elements listed as permutations
    /// in one-line notation.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| format!("{}{}{}", p[0], p[1], p[2]))
            .collect();
        Self::from_table(names, mul).expect("S3 table is a group")
    }

    /// Componentwise product. The pair `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let mut names = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                names.push(format!("({},{})", self.names[a], other.names[b]));
            }
        }
        let mut mul = Vec::with_capacity(n * n * m * m);
        for x in 0..n * m {
            for y in 0..n * m {
                let a = self.mul(x / m, y / m);
                let b = other.mul(x % m, y % m);
                mul.push(a * m + b);
            }
        }
        let inv = (0..n * m)
            .map(|x| self.inv(x / m) * m + other.inv(x % m))
            .collect();
        FiniteGroup {
            names,
            mul,
            inv,
            identity: self.identity * m + other.identity,
        }
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    /// Multiplication table as rows, the inverse of [`FiniteGroup::from_table`].
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// Smallest `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut p = g;
        while p != self.identity {
            p = self.mul(p, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, |acc, k| acc / gcd(acc, k) * k)
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements()
            .any(|g| self.element_order(g) == self.order())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `gS = {gs : s in S}`.
    pub fn translate_left(&self, g: usize, s: &PointSet) -> PointSet {
        sets::from_indices(self.order(), s.ones().map(|k| self.mul(g, k)))
    }

    /// `Sg = {sg : s in S}`.
    pub fn translate_right(&self, s: &PointSet, g: usize) -> PointSet {
        sets::from_indices(self.order(), s.ones().map(|k| self.mul(k, g)))
    }

    /// `S^{-1}`.
    pub fn inverse_set(&self, s: &PointSet) -> PointSet {
        sets::from_indices(self.order(), s.ones().map(|k| self.inv(k)))
    }

    /// `S = S^{-1}`.
    pub fn is_symmetric(&self, s: &PointSet) -> bool {
        self.inverse_set(s) == *s
    }

    pub fn is_subgroup(&self, s: &PointSet) -> bool {
        s.contains(self.identity)
            && s.ones()
                .all(|a| s.ones().all(|b| s.contains(self.mul(a, b))))
    }

    /// All subgroups, by exhaustive search over subsets. Intended for small
    /// groups (order at most 20).
    pub fn subgroups(&self) -> Vec<PointSet> {
        let n = self.order();
        assert!(n <= 20, "subgroup enumeration is exhaustive");
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            if mask >> self.identity & 1 == 0 {
                continue;
            }
            let s = sets::from_mask(n, mask);
            if self.is_subgroup(&s) {
                out.push(s);
            }
        }
        out
    }

    /// Left cosets `gK` of a subgroup, ordered by least element.
    pub fn left_cosets(&self, subgroup: &PointSet) -> Vec<PointSet> {
        let mut seen = sets::empty(self.order());
        let mut out = Vec::new();
        for g in self.elements() {
            if seen.contains(g) {
                continue;
            }
            let coset = self.translate_left(g, subgroup);
            seen.union_with(&coset);
            out.push(coset);
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An injective homomorphism `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupEmbedding {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupEmbedding {
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::MapLength {
                len: map.len(),
                order: source.order(),
            });
        }
        if let Some(&value) = map.iter().find(|&&v| v >= target.order()) {
            return Err(GroupError::MapOutOfRange { value });
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        for a in source.elements() {
            for b in a + 1..source.order() {
                if map[a] == map[b] {
                    return Err(GroupError::NotInjective { a, b });
                }
            }
        }
        Ok(GroupEmbedding {
            source,
            target,
            map,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupEmbedding {
            source: group.clone(),
            target: group.clone(),
            map: group.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Image of the source as a subset of the target.
    pub fn image(&self) -> PointSet {
        sets::from_indices(self.target.order(), self.map.iter().copied())
    }
}

/// Builds the group `Z_a x Z_b x ...` out of cyclic factors.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    factors
        .iter()
        .map(|&n| FiniteGroup::cyclic(n))
        .reduce(|a, b| a.direct_product(&b))
        .unwrap_or_else(FiniteGroup::trivial)
}

/// Default element names `"0"`..`"n-1"`.
pub fn index_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}
