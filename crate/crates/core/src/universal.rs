//! Embedding a partial action into tuples of subsets of `G`.
//!
//! For open sets `V_0..V_{N-1}` of `X`, a point maps to
//! `π(x) = (π_n(x))_n` with `π_n(x) = {h^-1 : h in G^x, h.x in V_n}`, and `G`
//! acts on tuples by left translation, `θ(g, (F_n)) = (gF_n)`. The tuple
//! space is finite, so it carries the discrete topology and `π` is compared
//! with the source action as a map of sets.

use alloc::vec::Vec;

use crate::globalization::{EnvelopingSpace, GlobalizationError};
use crate::group::FiniteGroup;
use crate::partial_action::{ActionError, GlobalAction, PartialAction, PartialBijection};
use crate::sets::{self, PointSet};
use crate::topology::{FiniteSpace, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Globalization(#[from] GlobalizationError),
    #[error("not a base: the minimal neighbourhood of point {point} is missing")]
    NotABase { point: usize },
    #[error("base set {index} is not open")]
    NotOpen { index: usize },
    #[error("points {x} and {y} have the same image")]
    NotInjective { x: usize, y: usize },
    #[error("no domain separates points {x} and {y}")]
    DoesNotSeparate { x: usize, y: usize },
    #[error("tuple space needs {bits} bits, the limit is {limit}")]
    TooLarge { bits: usize, limit: usize },
    #[error("shift length {n} is outside 2..=10")]
    OutOfRange { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseChoice {
    /// Every open set, in the order of [`FiniteSpace::opens`].
    #[default]
    Full,
    /// The distinct minimal neighbourhoods `U_x`, in order of first point.
    Minimal,
}

impl BaseChoice {
    pub fn base(self, space: &FiniteSpace) -> Result<Vec<PointSet>, TopologyError> {
        match self {
            BaseChoice::Full => space.opens(),
            BaseChoice::Minimal => Ok(minimal_base(space)),
        }
    }
}

pub fn minimal_base(space: &FiniteSpace) -> Vec<PointSet> {
    let mut base: Vec<PointSet> = Vec::new();
    for u in space.minimal_opens() {
        if !base.contains(u) {
            base.push(u.clone());
        }
    }
    base
}

/// A family of opens is a base iff it contains every minimal neighbourhood.
pub fn is_base(space: &FiniteSpace, family: &[PointSet]) -> bool {
    first_missing(space, family).is_none()
}

fn first_missing(space: &FiniteSpace, family: &[PointSet]) -> Option<usize> {
    space
        .points()
        .find(|&x| !family.contains(space.minimal_open(x)))
}

/// `π` evaluated on every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingImage {
    pub group: FiniteGroup,
    pub arity: usize,
    pub base: Vec<PointSet>,
    /// `points[x][n] = π_n(x)`, a subset of `G`.
    pub points: Vec<Vec<PointSet>>,
}

impl EmbeddingImage {
    pub fn image(&self, x: usize) -> &[PointSet] {
        &self.points[x]
    }

    /// The point whose image is `tuple`, if any.
    pub fn preimage(&self, tuple: &[PointSet]) -> Option<usize> {
        self.points.iter().position(|p| p.as_slice() == tuple)
    }

    fn first_collision(&self) -> Option<(usize, usize)> {
        (0..self.points.len()).find_map(|y| {
            (0..y)
                .find(|&x| self.points[x] == self.points[y])
                .map(|x| (x, y))
        })
    }
}

/// `π_n(x) = {h^-1 : h in G^x, h.x in V_n}`.
pub fn pi(pa: &PartialAction, base: &[PointSet], x: usize) -> Vec<PointSet> {
    let group = pa.group();
    base.iter()
        .map(|v| {
            sets::from_indices(
                group.order(),
                group
                    .elements()
                    .filter(|&h| pa.act(h, x).is_some_and(|y| v.contains(y)))
                    .map(|h| group.inv(h)),
            )
        })
        .collect()
}

/// `θ(g, (F_n)) = (gF_n)`.
pub fn theta(group: &FiniteGroup, g: usize, tuple: &[PointSet]) -> Vec<PointSet> {
    tuple.iter().map(|f| group.translate_left(g, f)).collect()
}

pub const THETA_BITS_LIMIT: usize = 10;

/// `θ` as a global action on the discrete space of all `arity`-tuples of
/// subsets of `G`. The tuple `(F_0, .., F_{N-1})` has index
/// `Σ mask(F_n) << (n |G|)`.
pub fn theta_action(group: &FiniteGroup, arity: usize) -> Result<GlobalAction, EmbeddingError> {
    let k = group.order();
    let bits = k * arity;
    if bits > THETA_BITS_LIMIT {
        return Err(EmbeddingError::TooLarge {
            bits,
            limit: THETA_BITS_LIMIT,
        });
    }
    let size = 1usize << bits;
    let decode = |i: usize| -> Vec<PointSet> {
        (0..arity)
            .map(|n| sets::from_mask(k, (i >> (n * k)) as u64 & ((1 << k) - 1)))
            .collect()
    };
    let encode = |t: &[PointSet]| -> usize {
        t.iter()
            .enumerate()
            .map(|(n, f)| (sets::to_mask(f) as usize) << (n * k))
            .sum()
    };
    let tables = group
        .elements()
        .map(|g| {
            (0..size)
                .map(|i| encode(&theta(group, g, &decode(i))))
                .collect()
        })
        .collect();
    Ok(GlobalAction::new(
        group.clone(),
        FiniteSpace::discrete(size),
        tables,
    )?)
}

/// Computes `π` for `base`, which must be a base of open sets.
pub fn embed(pa: &PartialAction, base: &[PointSet]) -> Result<EmbeddingImage, EmbeddingError> {
    pa.require_valid()?;
    let space = pa.space();
    if let Some(index) = base.iter().position(|v| !space.is_open(v)) {
        return Err(EmbeddingError::NotOpen { index });
    }
    if let Some(point) = first_missing(space, base) {
        return Err(EmbeddingError::NotABase { point });
    }
    image_for(pa, base.to_vec())
}

pub fn embed_with(
    pa: &PartialAction,
    choice: BaseChoice,
) -> Result<EmbeddingImage, EmbeddingError> {
    embed(pa, &choice.base(pa.space())?)
}

/// The domains `X_g` separate points: for `x != y` some `X_g` contains
/// exactly one of them.
pub fn separates_points(pa: &PartialAction) -> bool {
    first_unseparated(pa).is_none()
}

fn first_unseparated(pa: &PartialAction) -> Option<(usize, usize)> {
    let n = pa.space().size();
    (0..n).find_map(|y| {
        (0..y)
            .find(|&x| {
                pa.group()
                    .elements()
                    .all(|g| pa.range(g).contains(x) == pa.range(g).contains(y))
            })
            .map(|x| (x, y))
    })
}

/// `π(x) = {h^-1 : h in G^x}`, the arity one embedding with `V_0 = X`.
pub fn embed_simple(pa: &PartialAction) -> Result<EmbeddingImage, EmbeddingError> {
    pa.require_valid()?;
    if let Some((x, y)) = first_unseparated(pa) {
        return Err(EmbeddingError::DoesNotSeparate { x, y });
    }
    image_for(pa, alloc::vec![sets::full(pa.space().size())])
}

fn image_for(pa: &PartialAction, base: Vec<PointSet>) -> Result<EmbeddingImage, EmbeddingError> {
    let points = pa.space().points().map(|x| pi(pa, &base, x)).collect();
    let image = EmbeddingImage {
        group: pa.group().clone(),
        arity: base.len(),
        base,
        points,
    };
    match image.first_collision() {
        Some((x, y)) => Err(EmbeddingError::NotInjective { x, y }),
        None => Ok(image),
    }
}

fn all_domains_clopen(pa: &PartialAction) -> bool {
    pa.group()
        .elements()
        .all(|g| pa.space().is_clopen(pa.range(g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Every `X_g` is clopen. Recorded, not assumed.
    pub clopen_hypothesis: bool,
    /// `θ(g, π(x)) = π(g.x)` for `x in X_{g^-1}`.
    pub forward_equivariant: bool,
    /// `θ(g, π(x)) = π(y)` forces `x in X_{g^-1}` and `y = g.x`.
    pub reflection: bool,
    /// The partial action `θ` induces on `π[X]`, pulled back along `π`, has
    /// exactly the maps of the source.
    pub induced_matches: bool,
    /// `G^x = ⋃_n G^x_n` with `G^x_n = {h in G^x : h.x in V_n}`, checked when
    /// the base covers `X`.
    pub gx_union: bool,
}

impl EmbeddingReport {
    pub fn items(&self) -> [(&'static str, bool); 4] {
        [
            ("forward-equivariant", self.forward_equivariant),
            ("reflection", self.reflection),
            ("induced-action-matches", self.induced_matches),
            ("g-set-is-union", self.gx_union),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.items().iter().all(|(_, ok)| *ok)
    }
}

pub fn verify_embedding(pa: &PartialAction, emb: &EmbeddingImage) -> EmbeddingReport {
    let group = pa.group();
    let n = pa.space().size();
    let moved = |g: usize, x: usize| emb.preimage(&theta(group, g, emb.image(x)));

    let forward_equivariant = group.elements().all(|g| {
        pa.map(g)
            .pairs()
            .all(|(x, y)| theta(group, g, emb.image(x)) == emb.image(y))
    });
    let reflection = group.elements().all(|g| {
        (0..n).all(|x| match moved(g, x) {
            Some(y) => pa.act(g, x) == Some(y),
            None => true,
        })
    });
    let induced_matches = group.elements().all(|g| {
        let table = (0..n).map(|x| moved(g, x)).collect();
        PartialBijection::from_table(table).as_ref() == Ok(pa.map(g))
    });

    let covers = emb
        .base
        .iter()
        .fold(sets::empty(n), |acc, v| sets::union(&acc, v));
    let gx_union = covers.count_ones(..) < n
        || (0..n).all(|x| {
            let mut union = sets::empty(group.order());
            for v in &emb.base {
                union.extend(
                    group
                        .elements()
                        .filter(|&h| pa.act(h, x).is_some_and(|y| v.contains(y))),
                );
            }
            union == pa.g_set(x)
        });

    EmbeddingReport {
        clopen_hypothesis: all_domains_clopen(pa),
        forward_equivariant,
        reflection,
        induced_matches,
        gx_union,
    }
}

/// `F: X_G -> G.π[X]`, `F([g, x]) = θ(g, π(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub clopen_hypothesis: bool,
    /// `G.π[X]`, sorted.
    pub saturation: Vec<Vec<PointSet>>,
    /// `f_table[c]` indexes `saturation`.
    pub f_table: Vec<usize>,
    pub envelope_size: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub equivariant: bool,
}

impl SaturationReport {
    pub fn is_bijection(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }

    pub fn all_hold(&self) -> bool {
        self.is_bijection() && self.equivariant
    }
}

pub fn image_globalization(
    pa: &PartialAction,
    emb: &EmbeddingImage,
) -> Result<SaturationReport, EmbeddingError> {
    let env = EnvelopingSpace::build(pa)?;
    let group = pa.group();
    let n = pa.space().size();

    let mut saturation: Vec<Vec<PointSet>> = group
        .elements()
        .flat_map(|g| (0..n).map(move |x| theta(group, g, emb.image(x))))
        .collect();
    saturation.sort_by(|a, b| cmp_tuple(a, b));
    saturation.dedup();
    let index = |t: &[PointSet]| {
        saturation
            .binary_search_by(|s| cmp_tuple(s, t))
            .expect("every translate is in the saturation")
    };

    let mut well_defined = true;
    let f_table: Vec<usize> = env
        .carrier()
        .classes()
        .iter()
        .map(|members| {
            let mut values = members
                .iter()
                .map(|&k| index(&theta(group, k / n, emb.image(k % n))));
            let first = values.next().expect("classes are nonempty");
            well_defined &= values.all(|v| v == first);
            first
        })
        .collect();

    let mut hit = alloc::vec![false; saturation.len()];
    let mut injective = true;
    for &v in &f_table {
        injective &= !core::mem::replace(&mut hit[v], true);
    }
    let surjective = hit.iter().all(|&h| h);
    let equivariant = group.elements().all(|g| {
        (0..env.len()).all(|c| {
            f_table[env.mu().apply(g, c)] == index(&theta(group, g, &saturation[f_table[c]]))
        })
    });

    Ok(SaturationReport {
        clopen_hypothesis: all_domains_clopen(pa),
        saturation,
        f_table,
        envelope_size: env.len(),
        well_defined,
        injective,
        surjective,
        equivariant,
    })
}

fn cmp_tuple(a: &[PointSet], b: &[PointSet]) -> core::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| sets::cmp_lex(x, y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

/// `Z_n` rotating `{0,1}^n`, restricted to `W = {x : x(0) = 0}`.
///
/// A word `x` is stored as the bitmask with bit `k` equal to `x(k)`; the
/// rotation by `m` is `(u_m x)(k) = x(k + m mod n)`. Points of the partial
/// action are the words of `W` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftExample {
    pub n: usize,
    pub shift: GlobalAction,
    pub action: PartialAction,
    /// `words[i]` is the word of point `i`.
    pub words: Vec<usize>,
}

pub const SHIFT_RANGE: core::ops::RangeInclusive<usize> = 2..=10;

pub fn shift_example(n: usize) -> Result<ShiftExample, EmbeddingError> {
    if !SHIFT_RANGE.contains(&n) {
        return Err(EmbeddingError::OutOfRange { n });
    }
    let tables = (0..n)
        .map(|m| (0..1 << n).map(|x| rotate(n, m, x)).collect())
        .collect();
    let shift = GlobalAction::new(
        FiniteGroup::cyclic(n),
        FiniteSpace::discrete(1 << n),
        tables,
    )?;
    let w = sets::from_indices(1 << n, (0..1 << n).filter(|x| x & 1 == 0));
    let action = PartialAction::induced(&shift, &w);
    Ok(ShiftExample {
        n,
        shift,
        action,
        words: w.ones().collect(),
    })
}

fn rotate(n: usize, m: usize, x: usize) -> usize {
    (0..n).fold(0, |acc, k| acc | ((x >> ((k + m) % n)) & 1) << k)
}

impl ShiftExample {
    pub fn bit(&self, point: usize, k: usize) -> bool {
        self.words[point] >> (k % self.n) & 1 == 1
    }

    /// `W_m = {x in W : x(-m) = 0}`.
    pub fn expected_range(&self, m: usize) -> PointSet {
        let back = (self.n - m % self.n) % self.n;
        sets::from_indices(
            self.words.len(),
            (0..self.words.len()).filter(|&i| !self.bit(i, back)),
        )
    }

    /// `G^x = {m : x(m) = 0}`.
    pub fn expected_g_set(&self, point: usize) -> PointSet {
        sets::from_indices(self.n, (0..self.n).filter(|&m| !self.bit(point, m)))
    }

    /// `{A ⊆ Z_n : 0 in A}`, sorted.
    pub fn expected_image(&self) -> Vec<PointSet> {
        let mut all: Vec<PointSet> = (0..1u64 << self.n)
            .map(|m| sets::from_mask(self.n, m))
            .filter(|a| a.contains(0))
            .collect();
        all.sort_by(sets::cmp_lex);
        all
    }

    /// The nonempty subsets of `Z_n`, sorted.
    pub fn expected_saturation(&self) -> Vec<PointSet> {
        let mut all: Vec<PointSet> = (1..1u64 << self.n)
            .map(|m| sets::from_mask(self.n, m))
            .collect();
        all.sort_by(sets::cmp_lex);
        all
    }

    /// The word as a string of `x(0) x(1) ..`.
    pub fn word_string(&self, point: usize) -> alloc::string::String {
        (0..self.n)
            .map(|k| if self.bit(point, k) { '1' } else { '0' })
            .collect()
    }
}
