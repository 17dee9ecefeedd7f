//! Finite topological spaces.
//!
//! A topology on a finite set is closed under arbitrary intersections, so
//! every point `x` has a smallest open neighbourhood `U_x`, and a set is open
//! exactly when it contains `U_x` for each of its points. [`FiniteSpace`]
//! stores these neighbourhoods; the full open-set lattice can be enumerated
//! on demand for spaces of up to [`FiniteSpace::MAX_ENUMERATION_POINTS`]
//! points. Products of spaces with a few dozen points stay cheap this way,
//! while every predicate remains exact.

use alloc::vec;
use alloc::vec::Vec;

use crate::sets::{self, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("set {set} mentions point {point} outside a space of {size} points")]
    OutOfRange {
        set: usize,
        point: usize,
        size: usize,
    },
    #[error("not a topology: {0}")]
    NotATopology(&'static str),
    #[error("bad partition: {0}")]
    BadPartition(&'static str),
    #[error("enumerating opens of a {points}-point space exceeds the limit")]
    TooLarge { points: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    // min_open[x] = U_x
    min_open: Vec<PointSet>,
}

impl FiniteSpace {
    pub const MAX_ENUMERATION_POINTS: usize = 20;

    /// Smallest topology containing every set of `subbase`.
    pub fn from_subbase(size: usize, subbase: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let members = to_sets(size, subbase)?;
        let min_open = (0..size)
            .map(|x| {
                members
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(sets::full(size), |acc, s| sets::intersection(&acc, s))
            })
            .collect();
        Ok(FiniteSpace { min_open })
    }

    /// Checks that `opens` is a topology and builds it.
    pub fn from_opens(size: usize, opens: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let family = to_sets(size, opens)?;
        if !family.iter().any(|s| s.is_clear()) {
            return Err(TopologyError::NotATopology("missing the empty set"));
        }
        if !family.iter().any(|s| s.count_ones(..) == size) {
            return Err(TopologyError::NotATopology("missing the whole space"));
        }
        for a in &family {
            for b in &family {
                if !family.contains(&sets::union(a, b)) {
                    return Err(TopologyError::NotATopology("not closed under unions"));
                }
                if !family.contains(&sets::intersection(a, b)) {
                    return Err(TopologyError::NotATopology(
                        "not closed under intersections",
                    ));
                }
            }
        }
        let subbase: Vec<Vec<usize>> = family.iter().map(sets::elements).collect();
        Self::from_subbase(size, &subbase)
    }

    /// Builds a space from candidate minimal neighbourhoods, checking that
    /// `x in U_x` and `y in U_x => U_y ⊆ U_x`.
    pub fn from_minimal_opens(min_open: Vec<PointSet>) -> Result<Self, TopologyError> {
        let n = min_open.len();
        for (x, u) in min_open.iter().enumerate() {
            if u.len() != n {
                return Err(TopologyError::NotATopology(
                    "neighbourhood has the wrong width",
                ));
            }
            if !u.contains(x) {
                return Err(TopologyError::NotATopology(
                    "point outside its neighbourhood",
                ));
            }
            if u.ones().any(|y| !min_open[y].is_subset(u)) {
                return Err(TopologyError::NotATopology(
                    "neighbourhoods are not transitive",
                ));
            }
        }
        Ok(FiniteSpace { min_open })
    }

    pub fn discrete(n: usize) -> Self {
        FiniteSpace {
            min_open: (0..n).map(|x| sets::singleton(n, x)).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteSpace {
            min_open: vec![sets::full(n); n],
        }
    }

    /// Points `0` and `1`, with `{1}` open and `{0}` closed.
    pub fn sierpinski() -> Self {
        FiniteSpace {
            min_open: vec![sets::full(2), sets::singleton(2, 1)],
        }
    }

    pub fn size(&self) -> usize {
        self.min_open.len()
    }

    pub fn points(&self) -> core::ops::Range<usize> {
        0..self.size()
    }

    /// The smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> &PointSet {
        &self.min_open[x]
    }

    pub fn minimal_opens(&self) -> &[PointSet] {
        &self.min_open
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        s.ones().all(|x| self.min_open[x].is_subset(s))
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        self.is_open(&sets::complement(s))
    }

    pub fn is_clopen(&self, s: &PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// Largest open set inside `s`.
    pub fn interior(&self, s: &PointSet) -> PointSet {
        sets::from_indices(
            self.size(),
            self.points().filter(|&x| self.min_open[x].is_subset(s)),
        )
    }

    /// Smallest closed set containing `s`.
    pub fn closure(&self, s: &PointSet) -> PointSet {
        sets::from_indices(
            self.size(),
            self.points().filter(|&x| !self.min_open[x].is_disjoint(s)),
        )
    }

    pub fn point_closure(&self, x: usize) -> PointSet {
        self.closure(&sets::singleton(self.size(), x))
    }

    /// Smallest open set containing `s`.
    pub fn open_hull(&self, s: &PointSet) -> PointSet {
        s.ones().fold(sets::empty(self.size()), |mut acc, x| {
            acc.union_with(&self.min_open[x]);
            acc
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.min_open.iter().all(|u| u.count_ones(..) == 1)
    }

    /// Every open set, ordered by bitmask.
    pub fn opens(&self) -> Result<Vec<PointSet>, TopologyError> {
        let n = self.size();
        if n > Self::MAX_ENUMERATION_POINTS {
            return Err(TopologyError::TooLarge { points: n });
        }
        let nbhd: Vec<u64> = self.min_open.iter().map(sets::to_mask).collect();
        Ok((0u64..1 << n)
            .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || nbhd[x] & !m == 0))
            .map(|m| sets::from_mask(n, m))
            .collect())
    }

    pub fn closed_sets(&self) -> Result<Vec<PointSet>, TopologyError> {
        let mut closed: Vec<PointSet> = self.opens()?.iter().map(sets::complement).collect();
        closed.sort_by_key(sets::to_mask);
        Ok(closed)
    }

    /// Product topology. The pair `(a, b)` has index `a * |B| + b`.
    pub fn product(&self, other: &FiniteSpace) -> FiniteSpace {
        let m = other.size();
        let n = self.size() * m;
        let mut min_open = Vec::with_capacity(n);
        for a in self.points() {
            for b in other.points() {
                let mut u = sets::empty(n);
                for a2 in self.min_open[a].ones() {
                    for b2 in other.min_open[b].ones() {
                        u.insert(a2 * m + b2);
                    }
                }
                min_open.push(u);
            }
        }
        FiniteSpace { min_open }
    }

    /// Subspace on `s`; its points are the elements of `s` in increasing order.
    pub fn subspace(&self, s: &PointSet) -> FiniteSpace {
        let local = local_indices(s);
        let k = s.count_ones(..);
        let min_open = s
            .ones()
            .map(|x| {
                sets::from_indices(
                    k,
                    self.min_open[x]
                        .ones()
                        .filter(|&y| s.contains(y))
                        .map(|y| local[y]),
                )
            })
            .collect();
        FiniteSpace { min_open }
    }

    pub fn quotient(&self, partition: &[Vec<usize>]) -> Result<QuotientSpace, TopologyError> {
        QuotientSpace::new(self.clone(), partition)
    }

    pub fn separation_report(&self) -> SeparationReport {
        let pts = self.points();
        let closures: Vec<PointSet> = pts.clone().map(|x| self.point_closure(x)).collect();
        let t0 = pts.clone().all(|x| {
            (x + 1..self.size())
                .all(|y| !(self.min_open[x].contains(y) && self.min_open[y].contains(x)))
        });
        let t1 = closures.iter().all(|c| c.count_ones(..) == 1);
        let hausdorff = pts
            .clone()
            .all(|x| (x + 1..self.size()).all(|y| self.min_open[x].is_disjoint(&self.min_open[y])));
        // A closed F with y in F and x outside exists iff x is not in cl{y};
        // the best separating opens are U_x and the open hull of F, which
        // contains U_y.
        let regular = pts.clone().all(|x| {
            pts.clone()
                .all(|y| closures[y].contains(x) || self.min_open[x].is_disjoint(&self.min_open[y]))
        });
        SeparationReport {
            t0,
            t1,
            hausdorff,
            regular,
        }
    }
}

fn to_sets(size: usize, family: &[Vec<usize>]) -> Result<Vec<PointSet>, TopologyError> {
    family
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if let Some(&point) = s.iter().find(|&&p| p >= size) {
                return Err(TopologyError::OutOfRange {
                    set: i,
                    point,
                    size,
                });
            }
            Ok(sets::from_indices(size, s.iter().copied()))
        })
        .collect()
}

/// For each element of `s`, its position among the elements of `s`;
/// `usize::MAX` elsewhere.
pub fn local_indices(s: &PointSet) -> Vec<usize> {
    let mut local = vec![usize::MAX; s.len()];
    for (i, x) in s.ones().enumerate() {
        local[x] = i;
    }
    local
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    /// Closed sets and outside points have disjoint neighbourhoods. T1 is
    /// not assumed.
    pub regular: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapReport {
    pub continuous: bool,
    pub open: bool,
    pub injective: bool,
    pub surjective: bool,
    pub homeomorphism: bool,
}

/// Properties of `f: A -> B` given as a table of images.
///
/// Continuity is `f(U_x) ⊆ U_{f(x)}` for every `x`; openness is that each
/// `f(U_x)` is open, since every open set is a union of the `U_x`.
pub fn map_report(f: &[usize], a: &FiniteSpace, b: &FiniteSpace) -> MapReport {
    assert_eq!(f.len(), a.size(), "map must be total on the source");
    let image_of = |s: &PointSet| sets::from_indices(b.size(), s.ones().map(|x| f[x]));
    let continuous = a
        .points()
        .all(|x| image_of(a.minimal_open(x)).is_subset(b.minimal_open(f[x])));
    let open = a.points().all(|x| b.is_open(&image_of(a.minimal_open(x))));
    let image = image_of(&sets::full(a.size()));
    let injective = image.count_ones(..) == a.size();
    let surjective = image.count_ones(..) == b.size();
    MapReport {
        continuous,
        open,
        injective,
        surjective,
        homeomorphism: injective && surjective && continuous && open,
    }
}

/// Searches for a homeomorphism `a -> b` by backtracking. A bijection is a
/// homeomorphism iff `y in U_x <=> f(y) in U_{f(x)}` for all `x, y`.
pub fn find_homeomorphism(a: &FiniteSpace, b: &FiniteSpace) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        x: usize,
        a: &FiniteSpace,
        b: &FiniteSpace,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.size();
        if x == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            let ok = (0..x).all(|y| {
                a.minimal_open(x).contains(y) == b.minimal_open(t).contains(f[y])
                    && a.minimal_open(y).contains(x) == b.minimal_open(f[y]).contains(t)
            }) && a.minimal_open(x).count_ones(..) == b.minimal_open(t).count_ones(..);
            if ok {
                f[x] = t;
                used[t] = true;
                if extend(x + 1, a, b, f, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }

    extend(0, a, b, &mut f, &mut used).then_some(f)
}

/// A binary relation on the points of a space; `(x, y)` is bit `x * n + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRelation {
    size: usize,
    pairs: PointSet,
}

impl PointRelation {
    pub fn empty(size: usize) -> Self {
        PointRelation {
            size,
            pairs: sets::empty(size * size),
        }
    }

    pub fn diagonal(size: usize) -> Self {
        let mut r = Self::empty(size);
        for x in 0..size {
            r.insert(x, x);
        }
        r
    }

    pub fn full(size: usize) -> Self {
        PointRelation {
            size,
            pairs: sets::full(size * size),
        }
    }

    /// The equivalence relation whose classes are given by `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut r = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if labels[x] == labels[y] {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.pairs.insert(x * self.size + y);
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(x * self.size + y)
    }

    pub fn len(&self) -> usize {
        self.pairs.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_clear()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs
            .ones()
            .map(move |k| (k / self.size, k % self.size))
    }

    /// The relation as a subset of `A x A`, indexed like [`FiniteSpace::product`].
    pub fn as_set(&self) -> &PointSet {
        &self.pairs
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(x, y)| (0..self.size).all(|z| !self.contains(y, z) || self.contains(x, z)))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Equivalence classes ordered by least element. Only meaningful for
    /// equivalence relations.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut seen = sets::empty(self.size);
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen.contains(x) {
                continue;
            }
            let class: Vec<usize> = (0..self.size).filter(|&y| self.contains(x, y)).collect();
            for &y in &class {
                seen.insert(y);
            }
            out.push(class);
        }
        out
    }
}

/// Closure of `r` in `A x A`: the union of `cl{a} x cl{b}` over `(a, b) in r`.
pub fn relation_closure(r: &PointRelation, a: &FiniteSpace) -> PointRelation {
    assert_eq!(r.size(), a.size());
    let closures: Vec<PointSet> = a.points().map(|x| a.point_closure(x)).collect();
    let mut out = PointRelation::empty(a.size());
    for (x, y) in r.pairs() {
        for cx in closures[x].ones() {
            for cy in closures[y].ones() {
                out.insert(cx, cy);
            }
        }
    }
    out
}

/// Whether `r` is a closed subset of `A x A`.
pub fn relation_is_closed(r: &PointRelation, a: &FiniteSpace) -> bool {
    relation_closure(r, a) == *r
}

/// A quotient of a finite space by a partition, with the exact quotient
/// topology: a set of classes is open iff the union of its classes is open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    base: FiniteSpace,
    classes: Vec<Vec<usize>>,
    projection: Vec<usize>,
    space: FiniteSpace,
}

impl QuotientSpace {
    /// Classes are sorted internally and ordered by least element, so the
    /// class of point 0 is class 0.
    pub fn new(base: FiniteSpace, partition: &[Vec<usize>]) -> Result<Self, TopologyError> {
        let n = base.size();
        let mut projection = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        for class in partition {
            if class.is_empty() {
                return Err(TopologyError::BadPartition("empty class"));
            }
            let mut c = class.clone();
            c.sort_unstable();
            for &x in &c {
                if x >= n {
                    return Err(TopologyError::BadPartition("point out of range"));
                }
                if projection[x] != usize::MAX {
                    return Err(TopologyError::BadPartition("classes overlap"));
                }
                projection[x] = 0;
            }
            classes.push(c);
        }
        if projection.contains(&usize::MAX) {
            return Err(TopologyError::BadPartition(
                "classes do not cover the space",
            ));
        }
        classes.sort_unstable_by_key(|c| c[0]);
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                projection[x] = i;
            }
        }

        let k = classes.len();
        let saturate = |s: &PointSet| {
            let mut out = sets::empty(n);
            for c in s.ones().map(|x| projection[x]) {
                for &y in &classes[c] {
                    out.insert(y);
                }
            }
            out
        };
        // Smallest saturated open set containing a class: alternate open hull
        // and saturation until both are stable.
        let min_open = (0..k)
            .map(|c| {
                let mut s = sets::from_indices(n, classes[c].iter().copied());
                loop {
                    let next = saturate(&base.open_hull(&s));
                    if next == s {
                        break;
                    }
                    s = next;
                }
                sets::from_indices(k, s.ones().map(|x| projection[x]))
            })
            .collect();
        Ok(QuotientSpace {
            base,
            classes,
            projection,
            space: FiniteSpace { min_open },
        })
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.projection[x]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Union of the given classes.
    pub fn preimage(&self, s: &PointSet) -> PointSet {
        sets::from_indices(
            self.base.size(),
            s.ones().flat_map(|c| self.classes[c].iter().copied()),
        )
    }

    pub fn image(&self, s: &PointSet) -> PointSet {
        sets::from_indices(self.len(), s.ones().map(|x| self.projection[x]))
    }

    pub fn projection_report(&self) -> MapReport {
        map_report(&self.projection, &self.base, &self.space)
    }

    /// The equivalence relation on the base.
    pub fn relation(&self) -> PointRelation {
        PointRelation::from_labels(&self.projection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn masks(s: &[PointSet]) -> Vec<u64> {
        s.iter().map(sets::to_mask).collect()
    }

    // Reference definitions straight from the open-set lattice.
    fn brute_separation(a: &FiniteSpace) -> (bool, bool, bool) {
        let opens = a.opens().unwrap();
        let closed = a.closed_sets().unwrap();
        let n = a.size();
        let t1 = (0..n).all(|x| closed.contains(&sets::singleton(n, x)));
        let hausdorff = (0..n).all(|x| {
            (0..n).all(|y| {
                x == y
                    || opens.iter().any(|u| {
                        u.contains(x) && opens.iter().any(|v| v.contains(y) && u.is_disjoint(v))
                    })
            })
        });
        let regular = closed.iter().all(|f| {
            (0..n).filter(|&x| !f.contains(x)).all(|x| {
                opens.iter().any(|u| {
                    u.contains(x) && opens.iter().any(|v| f.is_subset(v) && u.is_disjoint(v))
                })
            })
        });
        (t1, hausdorff, regular)
    }

    fn brute_map(f: &[usize], a: &FiniteSpace, b: &FiniteSpace) -> (bool, bool) {
        let (oa, ob) = (a.opens().unwrap(), b.opens().unwrap());
        let continuous = ob.iter().all(|v| {
            a.is_open(&sets::from_indices(
                a.size(),
                a.points().filter(|&x| v.contains(f[x])),
            ))
        });
        let open = oa
            .iter()
            .all(|u| ob.contains(&sets::from_indices(b.size(), u.ones().map(|x| f[x]))));
        (continuous, open)
    }

    prop_compose! {
        fn arb_space(max: usize)(n in 0..=max)(
            n in Just(n),
            subbase in prop::collection::vec(prop::collection::vec(0..n.max(1), 0..=n), 0..5),
        ) -> FiniteSpace {
            let subbase: Vec<Vec<usize>> =
                subbase.into_iter().map(|s| s.into_iter().filter(|&p| p < n).collect()).collect();
            FiniteSpace::from_subbase(n, &subbase).unwrap()
        }
    }

    #[test]
    fn sierpinski_from_subbase() {
        let s = FiniteSpace::from_subbase(2, &[vec![1]]).unwrap();
        assert_eq!(s, FiniteSpace::sierpinski());
        assert_eq!(masks(&s.opens().unwrap()), [0b00, 0b10, 0b11]);
    }

    #[test]
    fn discrete_and_indiscrete_generation() {
        let singles: Vec<Vec<usize>> = (0..5).map(|x| vec![x]).collect();
        let d = FiniteSpace::from_subbase(5, &singles).unwrap();
        assert_eq!(d, FiniteSpace::discrete(5));
        assert_eq!(d.opens().unwrap().len(), 32);
        let i = FiniteSpace::from_subbase(3, &[]).unwrap();
        assert_eq!(i, FiniteSpace::indiscrete(3));
        assert_eq!(i.opens().unwrap().len(), 2);
    }

    #[test]
    fn subbase_out_of_range() {
        assert_eq!(
            FiniteSpace::from_subbase(2, &[vec![0], vec![2]]),
            Err(TopologyError::OutOfRange {
                set: 1,
                point: 2,
                size: 2
            })
        );
    }

    #[test]
    fn from_opens_rejects_non_topologies() {
        assert!(FiniteSpace::from_opens(2, &[vec![], vec![0, 1], vec![1]]).is_ok());
        assert!(matches!(
            FiniteSpace::from_opens(3, &[vec![], vec![0, 1, 2], vec![0], vec![1]]),
            Err(TopologyError::NotATopology(_))
        ));
        assert!(matches!(
            FiniteSpace::from_opens(2, &[vec![0, 1], vec![1]]),
            Err(TopologyError::NotATopology(_))
        ));
    }

    #[test]
    fn products() {
        let p = FiniteSpace::discrete(2).product(&FiniteSpace::discrete(3));
        assert_eq!(p, FiniteSpace::discrete(6));

        let s = FiniteSpace::sierpinski();
        let ss = s.product(&s);
        assert_eq!(ss.size(), 4);
        // (1,1) = 3, (0,0) = 0
        assert!(ss.is_open(&sets::singleton(4, 3)));
        assert!(!ss.is_open(&sets::singleton(4, 0)));
        // rectangle generation: opens of S x S are the down-closed unions of rectangles
        assert_eq!(
            masks(&ss.opens().unwrap()),
            [0b0000, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111]
        );
    }

    #[test]
    fn indiscrete_times_space() {
        let a = FiniteSpace::from_subbase(3, &[vec![0], vec![1, 2]]).unwrap();
        let p = FiniteSpace::indiscrete(2).product(&a);
        let mut expected: Vec<u64> = a
            .opens()
            .unwrap()
            .iter()
            .map(|u| {
                let m = sets::to_mask(u);
                m | m << 3
            })
            .collect();
        expected.sort_unstable();
        assert_eq!(masks(&p.opens().unwrap()), expected);
    }

    #[test]
    fn subspaces() {
        let d = FiniteSpace::discrete(4);
        assert_eq!(
            d.subspace(&sets::from_indices(4, [1, 3])),
            FiniteSpace::discrete(2)
        );
        let s = FiniteSpace::sierpinski();
        assert_eq!(
            s.subspace(&sets::singleton(2, 0)),
            FiniteSpace::indiscrete(1)
        );
        let ss = s.product(&s);
        let diagonal = sets::from_indices(4, [0, 3]);
        assert_eq!(ss.subspace(&diagonal), s);
    }

    #[test]
    fn quotients() {
        let s = FiniteSpace::from_subbase(3, &[vec![0, 1], vec![2]]).unwrap();
        let q = s.quotient(&[vec![2], vec![0], vec![1]]).unwrap();
        assert_eq!(q.space(), &s);
        let one = s.quotient(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(one.space(), &FiniteSpace::indiscrete(1));

        // S x discrete(2): points (s, i) -> 2s + i; the open points are 2 and 3.
        let base = FiniteSpace::sierpinski().product(&FiniteSpace::discrete(2));
        let q = base.quotient(&[vec![0], vec![1], vec![2, 3]]).unwrap();
        assert_eq!(q.len(), 3);
        let glued = q.class_of(2);
        assert!(q.space().is_open(&sets::singleton(3, glued)));
        assert!(!q.space().is_open(&sets::singleton(3, q.class_of(0))));
    }

    #[test]
    fn bad_partitions() {
        let d = FiniteSpace::discrete(3);
        assert!(d.quotient(&[vec![0, 1]]).is_err());
        assert!(d.quotient(&[vec![0, 1], vec![1, 2]]).is_err());
        assert!(d.quotient(&[vec![0, 1, 2], vec![]]).is_err());
        assert!(d.quotient(&[vec![0, 1, 3], vec![2]]).is_err());
    }

    #[test]
    fn separation_examples() {
        for n in 0..5 {
            let r = FiniteSpace::discrete(n).separation_report();
            assert!(r.t1 && r.hausdorff && r.regular);
        }
        let r = FiniteSpace::sierpinski().separation_report();
        assert_eq!((r.t1, r.hausdorff, r.regular), (false, false, false));
        assert!(r.t0);
        let r = FiniteSpace::indiscrete(3).separation_report();
        assert_eq!((r.t1, r.hausdorff, r.regular), (false, false, true));
    }

    #[test]
    fn map_examples() {
        let s = FiniteSpace::sierpinski();
        let id = map_report(&[0, 1], &s, &s);
        assert!(id.continuous && id.open && id.homeomorphism);

        let c = map_report(&[1, 1], &FiniteSpace::discrete(2), &s);
        assert!(c.continuous && c.open && !c.homeomorphism);

        let r = map_report(&[0, 1], &s, &FiniteSpace::discrete(2));
        assert!(!r.continuous);
        assert!(r.open);
    }

    #[test]
    fn relation_closedness() {
        for n in 0..5 {
            let d = FiniteSpace::discrete(n);
            assert!(relation_is_closed(&PointRelation::diagonal(n), &d));
        }
        let i = FiniteSpace::indiscrete(2);
        assert!(!relation_is_closed(&PointRelation::diagonal(2), &i));
        assert_eq!(
            relation_closure(&PointRelation::diagonal(2), &i),
            PointRelation::full(2)
        );
        let s = FiniteSpace::sierpinski();
        assert!(relation_is_closed(&PointRelation::full(2), &s));
    }

    #[test]
    fn homeomorphism_search() {
        let s = FiniteSpace::sierpinski();
        let flipped = FiniteSpace::from_subbase(2, &[vec![0]]).unwrap();
        assert_eq!(find_homeomorphism(&s, &flipped), Some(vec![1, 0]));
        assert_eq!(find_homeomorphism(&s, &FiniteSpace::discrete(2)), None);
    }

    proptest! {
        #[test]
        fn generation_is_idempotent(a in arb_space(6)) {
            let opens: Vec<Vec<usize>> = a.opens().unwrap().iter().map(sets::elements).collect();
            prop_assert_eq!(FiniteSpace::from_subbase(a.size(), &opens).unwrap(), a.clone());
            prop_assert_eq!(FiniteSpace::from_opens(a.size(), &opens).unwrap(), a);
        }

        #[test]
        fn opens_form_a_lattice(a in arb_space(6)) {
            let opens = a.opens().unwrap();
            for u in &opens {
                for v in &opens {
                    prop_assert!(a.is_open(&sets::union(u, v)));
                    prop_assert!(a.is_open(&sets::intersection(u, v)));
                }
            }
        }

        #[test]
        fn interior_and_closure(a in arb_space(6), mask in any::<u64>()) {
            let s = sets::from_mask(a.size(), mask & ((1u64 << a.size()) - 1));
            let opens = a.opens().unwrap();
            let interior = opens.iter().filter(|u| u.is_subset(&s))
                .fold(sets::empty(a.size()), |acc, u| sets::union(&acc, u));
            prop_assert_eq!(a.interior(&s), interior);
            let closure = a.closed_sets().unwrap().into_iter().filter(|f| s.is_subset(f))
                .fold(sets::full(a.size()), |acc, f| sets::intersection(&acc, &f));
            prop_assert_eq!(a.closure(&s), closure);
        }

        #[test]
        fn separation_matches_definitions(a in arb_space(5)) {
            let r = a.separation_report();
            prop_assert_eq!((r.t1, r.hausdorff, r.regular), brute_separation(&a));
            // finite: t1 => hausdorff => discrete
            if r.t1 { prop_assert!(r.hausdorff); }
            if r.hausdorff { prop_assert!(a.is_discrete()); }
        }

        #[test]
        fn map_report_matches_definitions(
            a in arb_space(4), b in arb_space(4), seed in prop::collection::vec(any::<usize>(), 4)
        ) {
            prop_assume!(b.size() > 0 || a.size() == 0);
            let f: Vec<usize> = (0..a.size()).map(|x| seed[x] % b.size().max(1)).collect();
            let r = map_report(&f, &a, &b);
            prop_assert_eq!((r.continuous, r.open), brute_map(&f, &a, &b));
        }

        #[test]
        fn slice_of_product_is_homeomorphic(a in arb_space(4), b in arb_space(3), pick in any::<usize>()) {
            prop_assume!(b.size() > 0);
            let p = a.product(&b);
            let y = pick % b.size();
            let slice = sets::from_indices(p.size(), a.points().map(|x| x * b.size() + y));
            // slice points are in the order of A, so the identity table works
            let id: Vec<usize> = a.points().collect();
            prop_assert!(map_report(&id, &a, &p.subspace(&slice)).homeomorphism);
        }

        #[test]
        fn relation_closure_matches_product(a in arb_space(4), mask in any::<u64>()) {
            let n = a.size();
            let mut r = PointRelation::empty(n);
            for k in 0..n * n {
                if mask >> k & 1 == 1 {
                    r.insert(k / n, k % n);
                }
            }
            let aa = a.product(&a);
            prop_assert_eq!(relation_is_closed(&r, &a), aa.is_closed(r.as_set()));
            let closure = relation_closure(&r, &a);
            prop_assert_eq!(closure.as_set(), &aa.closure(r.as_set()));
        }

        #[test]
        fn quotient_topology_is_exact(a in arb_space(5), labels in prop::collection::vec(0usize..3, 5)) {
            let n = a.size();
            let mut partition: Vec<Vec<usize>> = vec![Vec::new(); 3];
            for x in 0..n { partition[labels[x]].push(x); }
            partition.retain(|c| !c.is_empty());
            let q = a.quotient(&partition).unwrap();
            let k = q.len();
            for mask in 0u64..(1 << k) {
                let s = sets::from_mask(k, mask);
                prop_assert_eq!(q.space().is_open(&s), a.is_open(&q.preimage(&s)));
            }
        }

        #[test]
        fn quotient_universal_property(
            a in arb_space(4),
            labels in prop::collection::vec(0usize..3, 4),
            c in arb_space(3),
            seed in prop::collection::vec(any::<usize>(), 3),
        ) {
            prop_assume!(c.size() > 0);
            let n = a.size();
            let mut partition: Vec<Vec<usize>> = vec![Vec::new(); 3];
            for x in 0..n { partition[labels[x]].push(x); }
            partition.retain(|cl| !cl.is_empty());
            let q = a.quotient(&partition).unwrap();
            let g: Vec<usize> = (0..q.len()).map(|i| seed[i] % c.size()).collect();
            let composed: Vec<usize> = (0..n).map(|x| g[q.class_of(x)]).collect();
            prop_assert_eq!(
                map_report(&g, q.space(), &c).continuous,
                map_report(&composed, &a, &c).continuous
            );
        }
    }
}
