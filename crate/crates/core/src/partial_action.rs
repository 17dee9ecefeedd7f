//! Partial actions of a finite (discrete) group on a finite space.
//!
//! A partial action is stored as one [`PartialBijection`] per group element:
//! `m_g` sends `X_{g^-1}` (its domain, the points where `g` acts) onto `X_g`
//! (its range). Nothing about the axioms is assumed at construction time;
//! [`PartialAction::validate`] checks both the pointwise axioms and the
//! family form, and reports the two independently.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, GroupEmbedding};
use crate::sets::{self, PointSet};
use crate::topology::{
    local_indices, map_report, FiniteSpace, MapReport, PointRelation, QuotientSpace, TopologyError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("expected one map per group element ({expected}), found {found}")]
    MapCount { expected: usize, found: usize },
    #[error("map of element {element}: {reason}")]
    MalformedTable {
        element: usize,
        reason: &'static str,
    },
    #[error("malformed partial bijection: {0}")]
    MalformedBijection(&'static str),
    #[error("the actions are over different groups")]
    GroupMismatch,
    #[error("not a valid partial action: {0} fails")]
    Invalid(&'static str),
    #[error("not a global action")]
    NotGlobal,
    #[error("orbit relation is not an equivalence relation")]
    NotEquivalence,
    #[error("orbit projection is not an open map")]
    OpennessViolation,
    #[error("equivalence search is limited to {limit} points, got {points}")]
    TooLarge { points: usize, limit: usize },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// A bijection between two subsets of `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBijection {
    table: Vec<Option<usize>>,
    domain: PointSet,
    range: PointSet,
}

impl PartialBijection {
    pub fn from_table(table: Vec<Option<usize>>) -> Result<Self, ActionError> {
        let n = table.len();
        let mut domain = sets::empty(n);
        let mut range = sets::empty(n);
        for (x, y) in table.iter().enumerate() {
            if let Some(y) = *y {
                if y >= n {
                    return Err(ActionError::MalformedBijection("image out of range"));
                }
                if range.put(y) {
                    return Err(ActionError::MalformedBijection("not injective"));
                }
                domain.insert(x);
            }
        }
        Ok(PartialBijection {
            table,
            domain,
            range,
        })
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, ActionError> {
        let mut table = vec![None; size];
        for &(x, y) in pairs {
            if x >= size {
                return Err(ActionError::MalformedBijection("source out of range"));
            }
            if table[x].replace(y).is_some() {
                return Err(ActionError::MalformedBijection("source listed twice"));
            }
        }
        Self::from_table(table)
    }

    pub fn identity(n: usize) -> Self {
        PartialBijection {
            table: (0..n).map(Some).collect(),
            domain: sets::full(n),
            range: sets::full(n),
        }
    }

    pub fn empty(n: usize) -> Self {
        PartialBijection {
            table: vec![None; n],
            domain: sets::empty(n),
            range: sets::empty(n),
        }
    }

    /// Identity on `s`.
    pub fn identity_on(s: &PointSet) -> Self {
        PartialBijection {
            table: (0..s.len()).map(|x| s.contains(x).then_some(x)).collect(),
            domain: s.clone(),
            range: s.clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.table[x]
    }

    pub fn domain(&self) -> &PointSet {
        &self.domain
    }

    pub fn range(&self) -> &PointSet {
        &self.range
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.domain.ones().map(move |x| (x, self.table[x].unwrap()))
    }

    /// Image of the part of `s` inside the domain.
    pub fn image(&self, s: &PointSet) -> PointSet {
        sets::from_indices(self.size(), s.ones().filter_map(|x| self.table[x]))
    }

    pub fn is_total(&self) -> bool {
        self.domain.count_ones(..) == self.size()
    }
}

/// Which pointwise or family condition a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Element { g: usize },
    Point { g: usize, x: usize },
    Pair { g: usize, h: usize },
    Triple { g: usize, h: usize, x: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Check {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    fn from_witness(witness: Option<Witness>) -> Self {
        Check {
            passed: witness.is_none(),
            witness,
        }
    }
}

/// Outcome of [`PartialAction::validate`]. Each check is computed on its own
/// so the pointwise axioms and the family form can be compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    /// `g.x` defined implies `g^-1.(g.x)` defined and equal to `x`.
    pub pa1: Check,
    /// `g.(h.x)` defined implies `(gh).x` defined and equal.
    pub pa2: Check,
    /// `1.x = x` for every `x`.
    pub pa3: Check,
    /// `m_g` maps `X_{g^-1}` onto `X_g`, i.e. `dom m_g = ran m_{g^-1}`.
    pub family_shape: Check,
    /// `X_1 = X` and `m_1 = id`.
    pub family_identity: Check,
    /// `m_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}`.
    pub family_ranges: Check,
    /// `m_g m_h = m_{gh}` on `X_{h^-1} ∩ X_{(gh)^-1}`, landing in `X_g ∩ X_{gh}`.
    pub family_composition: Check,
    /// Every `X_g` is open.
    pub domains_open: Check,
    /// Every `m_g` is a homeomorphism of subspaces.
    pub maps_homeomorphic: Check,
    /// Each `m_g` is continuous on its domain.
    pub continuous_per_element: bool,
    /// `m: G*X -> X` is continuous, with `G` discrete.
    pub continuous_joint: bool,
}

impl ValidationReport {
    pub fn axioms_hold(&self) -> bool {
        self.pa1.passed && self.pa2.passed && self.pa3.passed
    }

    pub fn family_holds(&self) -> bool {
        self.family_shape.passed
            && self.family_identity.passed
            && self.family_ranges.passed
            && self.family_composition.passed
    }

    /// The two formulations must agree on every input.
    pub fn forms_agree(&self) -> bool {
        self.axioms_hold() == self.family_holds()
    }

    /// With `G` discrete, joint continuity of `m` is continuity of each `m_g`.
    pub fn continuity_reduction_holds(&self) -> bool {
        self.continuous_per_element == self.continuous_joint
    }

    pub fn topological(&self) -> bool {
        self.domains_open.passed && self.maps_homeomorphic.passed
    }

    pub fn is_valid(&self) -> bool {
        self.axioms_hold() && self.family_holds() && self.topological()
    }

    pub fn checks(&self) -> [(&'static str, Check); 9] {
        [
            ("pa1", self.pa1),
            ("pa2", self.pa2),
            ("pa3", self.pa3),
            ("family-shape", self.family_shape),
            ("family-identity", self.family_identity),
            ("family-ranges", self.family_ranges),
            ("family-composition", self.family_composition),
            ("domains-open", self.domains_open),
            ("maps-homeomorphic", self.maps_homeomorphic),
        ]
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks()
            .iter()
            .find(|(_, c)| !c.passed)
            .map(|(n, _)| *n)
    }
}

/// Result of [`PartialAction::orbit_quotient`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitQuotient {
    pub quotient: QuotientSpace,
    pub projection_open: bool,
    /// `π^-1(π(U)) = ⋃_g m_g(U ∩ X_{g^-1})` on every checked open `U`.
    pub saturation_formula: bool,
    pub opens_checked: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Openness {
    pub open: bool,
    pub closed: bool,
    pub clopen: bool,
}

impl Openness {
    fn of(space: &FiniteSpace, s: &PointSet) -> Self {
        let (open, closed) = (space.is_open(s), space.is_closed(s));
        Openness {
            open,
            closed,
            clopen: open && closed,
        }
    }
}

/// Topological position of `G*X` in `G x X` and of each `X_g` in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainReport {
    pub gstar: Openness,
    /// Indexed by `g`, describing `X_g`.
    pub per_element: Vec<Openness>,
}

impl DomainReport {
    pub fn all_ranges_closed(&self) -> bool {
        self.per_element.iter().all(|o| o.closed)
    }

    pub fn all_ranges_clopen(&self) -> bool {
        self.per_element.iter().all(|o| o.clopen)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAction {
    group: FiniteGroup,
    space: FiniteSpace,
    maps: Vec<PartialBijection>,
}

impl PartialAction {
    /// Checks only that the tables are well formed; see [`Self::validate`].
    pub fn new(
        group: FiniteGroup,
        space: FiniteSpace,
        maps: Vec<PartialBijection>,
    ) -> Result<Self, ActionError> {
        if maps.len() != group.order() {
            return Err(ActionError::MapCount {
                expected: group.order(),
                found: maps.len(),
            });
        }
        if let Some(element) = maps.iter().position(|m| m.size() != space.size()) {
            return Err(ActionError::MalformedTable {
                element,
                reason: "table width differs from the space",
            });
        }
        Ok(PartialAction { group, space, maps })
    }

    /// `m_1 = id`, every other `m_g` empty.
    pub fn trivial(group: FiniteGroup, space: FiniteSpace) -> Self {
        let n = space.size();
        let maps = group
            .elements()
            .map(|g| {
                if g == group.identity() {
                    PartialBijection::identity(n)
                } else {
                    PartialBijection::empty(n)
                }
            })
            .collect();
        PartialAction { group, space, maps }
    }

    /// `Z_2` on the Sierpiński space, the non-identity element fixing the
    /// open point and undefined on the closed one.
    pub fn sierpinski_z2() -> Self {
        let s = FiniteSpace::sierpinski();
        let maps = vec![
            PartialBijection::identity(2),
            PartialBijection::identity_on(&sets::singleton(2, 1)),
        ];
        PartialAction {
            group: FiniteGroup::cyclic(2),
            space: s,
            maps,
        }
    }

    /// The partial action induced on `subset` by a global action: `X_g =
    /// X ∩ u_g(X)` and `m_g` restricts `u_g`. Points of the result are the
    /// elements of `subset` in increasing order.
    pub fn induced(u: &GlobalAction, subset: &PointSet) -> PartialAction {
        let base = u.as_partial();
        let local = local_indices(subset);
        let maps = base
            .group
            .elements()
            .map(|g| {
                let table = subset
                    .ones()
                    .map(|y| {
                        let t = u.apply(g, y);
                        subset.contains(t).then(|| local[t])
                    })
                    .collect();
                PartialBijection::from_table(table).expect("restriction of a bijection")
            })
            .collect();
        PartialAction {
            group: base.group.clone(),
            space: base.space.subspace(subset),
            maps,
        }
    }

    /// The partial action of `G` on `G x X` given by `(h, x) -> (hg^-1, g.x)`
    /// on `G x X_{g^-1}`. The pair `(h, x)` has index `h * |X| + x`.
    pub fn hat(&self) -> PartialAction {
        self.hat_with(&GroupEmbedding::identity(&self.group))
    }

    /// As [`Self::hat`] but on `H x X` for a supergroup `H`:
    /// `(h, x) -> (h emb(g)^-1, g.x)`.
    pub fn hat_over(&self, emb: &GroupEmbedding) -> Result<PartialAction, ActionError> {
        if emb.source() != &self.group {
            return Err(ActionError::GroupMismatch);
        }
        Ok(self.hat_with(emb))
    }

    fn hat_with(&self, emb: &GroupEmbedding) -> PartialAction {
        let h_group = emb.target();
        let n = self.space.size();
        let total = h_group.order() * n;
        let maps = self
            .group
            .elements()
            .map(|g| {
                let shift = h_group.inv(emb.apply(g));
                let mut table = vec![None; total];
                for h in h_group.elements() {
                    for (x, y) in self.maps[g].pairs() {
                        table[h * n + x] = Some(h_group.mul(h, shift) * n + y);
                    }
                }
                PartialBijection::from_table(table).expect("hat map is injective")
            })
            .collect();
        PartialAction {
            group: self.group.clone(),
            space: FiniteSpace::discrete(h_group.order()).product(&self.space),
            maps,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn maps(&self) -> &[PartialBijection] {
        &self.maps
    }

    pub fn map(&self, g: usize) -> &PartialBijection {
        &self.maps[g]
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> Option<usize> {
        self.maps[g].apply(x)
    }

    /// `X_{g^-1}`: the points `g` acts on.
    pub fn domain(&self, g: usize) -> &PointSet {
        self.maps[g].domain()
    }

    /// `X_g`: the image of `m_g`.
    pub fn range(&self, g: usize) -> &PointSet {
        self.maps[g].range()
    }

    /// `G^x = {g : g.x defined}`.
    pub fn g_set(&self, x: usize) -> PointSet {
        sets::from_indices(
            self.group.order(),
            self.group
                .elements()
                .filter(|&g| self.domain(g).contains(x)),
        )
    }

    /// `G.U = {g.u : u in U, g in G^u}`.
    pub fn saturation(&self, u: &PointSet) -> PointSet {
        self.maps
            .iter()
            .fold(sets::empty(self.space.size()), |mut acc, m| {
                acc.union_with(&m.image(u));
                acc
            })
    }

    /// `G x X` with `G` discrete.
    pub fn product_space(&self) -> FiniteSpace {
        FiniteSpace::discrete(self.group.order()).product(&self.space)
    }

    /// `G*X` as a subset of `G x X` (index `g * |X| + x`).
    pub fn gstar(&self) -> PointSet {
        let n = self.space.size();
        sets::from_indices(
            self.group.order() * n,
            self.group
                .elements()
                .flat_map(|g| self.domain(g).ones().map(move |x| g * n + x)),
        )
    }

    pub fn is_global(&self) -> bool {
        self.maps.iter().all(PartialBijection::is_total)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn validate(&self) -> ValidationReport {
        let g_all = self.group.elements();
        let pts = self.space.points();
        let e = self.group.identity();

        let pa1 = Check::from_witness(g_all.clone().find_map(|g| {
            self.maps[g].pairs().find_map(|(x, y)| {
                (self.act(self.group.inv(g), y) != Some(x)).then_some(Witness::Point { g, x })
            })
        }));
        let pa2 = Check::from_witness(g_all.clone().find_map(|g| {
            g_all.clone().find_map(|h| {
                self.maps[h].pairs().find_map(|(x, y)| {
                    let gy = self.act(g, y)?;
                    (self.act(self.group.mul(g, h), x) != Some(gy)).then_some(Witness::Triple {
                        g,
                        h,
                        x,
                    })
                })
            })
        }));
        let pa3 = Check::from_witness(
            pts.clone()
                .find(|&x| self.act(e, x) != Some(x))
                .map(|x| Witness::Point { g: e, x }),
        );

        let family_shape = Check::from_witness(
            g_all
                .clone()
                .find(|&g| self.domain(g) != self.range(self.group.inv(g)))
                .map(|g| Witness::Element { g }),
        );
        let family_identity = Check::from_witness(
            pts.clone()
                .find(|&x| !self.range(e).contains(x) || self.act(e, x) != Some(x))
                .map(|x| Witness::Point { g: e, x }),
        );
        let family_ranges = Check::from_witness(g_all.clone().find_map(|g| {
            g_all.clone().find_map(|h| {
                let source = sets::intersection(self.range(self.group.inv(g)), self.range(h));
                let lhs = self.maps[g].image(&source);
                let rhs = sets::intersection(self.range(g), self.range(self.group.mul(g, h)));
                let all_defined = source.is_subset(self.domain(g));
                (!all_defined || lhs != rhs).then_some(Witness::Pair { g, h })
            })
        }));
        let family_composition = Check::from_witness(g_all.clone().find_map(|g| {
            g_all.clone().find_map(|h| {
                let gh = self.group.mul(g, h);
                let on = sets::intersection(
                    self.range(self.group.inv(h)),
                    self.range(self.group.inv(gh)),
                );
                let target = sets::intersection(self.range(g), self.range(gh));
                on.ones().find_map(|x| {
                    let composed = self.act(h, x).and_then(|y| self.act(g, y));
                    let ok = match (composed, self.act(gh, x)) {
                        (Some(a), Some(b)) => a == b && target.contains(a),
                        _ => false,
                    };
                    (!ok).then_some(Witness::Triple { g, h, x })
                })
            })
        }));

        let domains_open = Check::from_witness(
            g_all
                .clone()
                .find(|&g| {
                    !self.space.is_open(self.domain(g)) || !self.space.is_open(self.range(g))
                })
                .map(|g| Witness::Element { g }),
        );
        let maps_homeomorphic = Check::from_witness(
            g_all
                .clone()
                .find(|&g| !self.element_report(g).homeomorphism)
                .map(|g| Witness::Element { g }),
        );
        let continuous_per_element = g_all.clone().all(|g| self.element_into_space(g).continuous);
        let (gstar_space, table) = self.action_map();
        let continuous_joint = map_report(&table, &gstar_space, &self.space).continuous;

        ValidationReport {
            pa1,
            pa2,
            pa3,
            family_shape,
            family_identity,
            family_ranges,
            family_composition,
            domains_open,
            maps_homeomorphic,
            continuous_per_element,
            continuous_joint,
        }
    }

    pub(crate) fn require_valid(&self) -> Result<(), ActionError> {
        match self.validate().first_failure() {
            Some(name) => Err(ActionError::Invalid(name)),
            None => Ok(()),
        }
    }

    /// `m_g` as a map between the subspaces `X_{g^-1}` and `X_g`.
    fn element_report(&self, g: usize) -> MapReport {
        let m = &self.maps[g];
        let local = local_indices(m.range());
        let table: Vec<usize> = m.pairs().map(|(_, y)| local[y]).collect();
        map_report(
            &table,
            &self.space.subspace(m.domain()),
            &self.space.subspace(m.range()),
        )
    }

    /// `m_g` as a map from the subspace `X_{g^-1}` into `X`.
    fn element_into_space(&self, g: usize) -> MapReport {
        let m = &self.maps[g];
        let table: Vec<usize> = m.pairs().map(|(_, y)| y).collect();
        map_report(&table, &self.space.subspace(m.domain()), &self.space)
    }

    /// `m: G*X -> X` as the subspace `G*X` of `G x X` with its table.
    pub fn action_map(&self) -> (FiniteSpace, Vec<usize>) {
        let n = self.space.size();
        let gstar = self.gstar();
        let table = gstar
            .ones()
            .map(|k| self.act(k / n, k % n).unwrap())
            .collect();
        (self.product_space().subspace(&gstar), table)
    }

    /// Openness and continuity of `m: G*X -> X`.
    pub fn action_map_report(&self) -> MapReport {
        let (space, table) = self.action_map();
        map_report(&table, &space, &self.space)
    }

    /// `x ~ y` iff `g.x = y` for some `g`.
    pub fn orbit_relation(&self) -> PointRelation {
        let mut r = PointRelation::empty(self.space.size());
        for m in &self.maps {
            for (x, y) in m.pairs() {
                r.insert(x, y);
            }
        }
        r
    }

    pub fn orbit_quotient(&self) -> Result<OrbitQuotient, ActionError> {
        self.require_valid()?;
        let relation = self.orbit_relation();
        if !relation.is_equivalence() {
            return Err(ActionError::NotEquivalence);
        }
        let quotient = self.space.quotient(&relation.classes())?;
        let projection_open = quotient.projection_report().open;
        if !projection_open {
            return Err(ActionError::OpennessViolation);
        }
        let formula = |u: &PointSet| {
            let pulled = quotient.preimage(&quotient.image(u));
            let union = self
                .group
                .elements()
                .fold(sets::empty(self.space.size()), |acc, g| {
                    let part = self.maps[g].image(&sets::intersection(u, self.domain(g)));
                    sets::union(&acc, &part)
                });
            pulled == union
        };
        // Both sides commute with unions, so the minimal neighbourhoods
        // decide; all opens are also checked when they are few.
        let mut opens_checked = 0;
        let mut saturation_formula = true;
        for u in self.space.minimal_opens() {
            saturation_formula &= formula(u);
            opens_checked += 1;
        }
        if self.space.size() <= 12 {
            for u in self.space.opens()? {
                saturation_formula &= formula(&u);
                opens_checked += 1;
            }
        }
        Ok(OrbitQuotient {
            quotient,
            projection_open,
            saturation_formula,
            opens_checked,
        })
    }

    pub fn domain_report(&self) -> DomainReport {
        DomainReport {
            gstar: Openness::of(&self.product_space(), &self.gstar()),
            per_element: self
                .group
                .elements()
                .map(|g| Openness::of(&self.space, self.range(g)))
                .collect(),
        }
    }

    /// First `(g, x)` with `x in X_g` where `G^x g != G^{g^-1.x}`.
    pub fn g_set_translation_violation(&self) -> Option<(usize, usize)> {
        self.group.elements().find_map(|g| {
            self.range(g).ones().find_map(|x| {
                let moved = match self.act(self.group.inv(g), x) {
                    Some(y) => self.g_set(y),
                    None => return Some((g, x)),
                };
                (self.group.translate_right(&self.g_set(x), g) != moved).then_some((g, x))
            })
        })
    }
}

/// A partial action in which every element acts everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalAction(PartialAction);

impl GlobalAction {
    /// `tables[g][x] = g.x`.
    pub fn new(
        group: FiniteGroup,
        space: FiniteSpace,
        tables: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let maps = tables
            .into_iter()
            .enumerate()
            .map(|(g, t)| {
                PartialBijection::from_table(t.into_iter().map(Some).collect()).map_err(|e| match e
                {
                    ActionError::MalformedBijection(reason) => {
                        ActionError::MalformedTable { element: g, reason }
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_partial(PartialAction::new(group, space, maps)?)
    }

    pub fn from_partial(pa: PartialAction) -> Result<Self, ActionError> {
        if !pa.is_global() {
            return Err(ActionError::NotGlobal);
        }
        pa.require_valid()?;
        Ok(GlobalAction(pa))
    }

    /// The action of `G` on `G` by left multiplication.
    pub fn left_regular(group: &FiniteGroup) -> Self {
        let tables = group
            .elements()
            .map(|g| group.elements().map(|h| group.mul(g, h)).collect())
            .collect();
        Self::new(group.clone(), FiniteSpace::discrete(group.order()), tables)
            .expect("left multiplication is an action")
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.0.act(g, x).expect("global action is total")
    }

    pub fn as_partial(&self) -> &PartialAction {
        &self.0
    }

    pub fn into_partial(self) -> PartialAction {
        self.0
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.0.group
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.0.space
    }
}

/// Definition of a morphism `m -> θ`: `φ` continuous, `φ(X_g) ⊆ Y_g`, and
/// `θ_g φ = φ m_g` on `X_{g^-1}`.
pub fn is_morphism(phi: &[usize], m: &PartialAction, theta: &PartialAction) -> bool {
    is_equivariant(phi, m, theta) && map_report(phi, &m.space, &theta.space).continuous
}

/// The algebraic half of [`is_morphism`], without continuity.
pub fn is_equivariant(phi: &[usize], m: &PartialAction, theta: &PartialAction) -> bool {
    if m.group != theta.group
        || phi.len() != m.space.size()
        || phi.iter().any(|&y| y >= theta.space.size())
    {
        return false;
    }
    m.group.elements().all(|g| {
        m.range(g).ones().all(|x| theta.range(g).contains(phi[x]))
            && m.maps[g]
                .pairs()
                .all(|(x, y)| theta.act(g, phi[x]) == Some(phi[y]))
    })
}

pub const EQUIVALENCE_SEARCH_LIMIT: usize = 8;

/// Searches every bijection `X -> Y` for an isomorphism of partial actions,
/// a morphism whose inverse is also a morphism.
pub fn are_equivalent(
    m: &PartialAction,
    theta: &PartialAction,
) -> Result<Option<Vec<usize>>, ActionError> {
    let n = m.space.size();
    if n > EQUIVALENCE_SEARCH_LIMIT {
        return Err(ActionError::TooLarge {
            points: n,
            limit: EQUIVALENCE_SEARCH_LIMIT,
        });
    }
    if m.group != theta.group || n != theta.space.size() {
        return Ok(None);
    }

    struct Search<'a> {
        m: &'a PartialAction,
        theta: &'a PartialAction,
        phi: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn compatible(&self, x: usize, t: usize) -> bool {
            let (a, b) = (&self.m.space, &self.theta.space);
            self.m
                .group
                .elements()
                .all(|g| self.m.domain(g).contains(x) == self.theta.domain(g).contains(t))
                && (0..x).all(|y| {
                    let s = self.phi[y];
                    a.minimal_open(x).contains(y) == b.minimal_open(t).contains(s)
                        && a.minimal_open(y).contains(x) == b.minimal_open(s).contains(t)
                })
        }

        fn run(&mut self, x: usize) -> bool {
            let n = self.phi.len();
            if x == n {
                let inverse = invert(&self.phi);
                return is_morphism(&self.phi, self.m, self.theta)
                    && is_morphism(&inverse, self.theta, self.m);
            }
            for t in 0..n {
                if !self.used[t] && self.compatible(x, t) {
                    self.phi[x] = t;
                    self.used[t] = true;
                    if self.run(x + 1) {
                        return true;
                    }
                    self.used[t] = false;
                }
            }
            false
        }
    }

    let mut search = Search {
        m,
        theta,
        phi: vec![0; n],
        used: vec![false; n],
    };
    Ok(search.run(0).then_some(search.phi))
}

/// Inverse of a permutation table.
pub fn invert(phi: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; phi.len()];
    for (x, &y) in phi.iter().enumerate() {
        inv[y] = x;
    }
    inv
}
