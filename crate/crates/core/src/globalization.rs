//! The enveloping space `X_G` of a partial action.
//!
//! `X_G` is the quotient of `G x X` by `(g, x) ~ (gf^-1, f.x)` for `f in G^x`,
//! computed with a union-find over single steps. The enveloping action
//! `μ(g, [h, x]) = [gh, x]` is global on `X_G`, and `ι(x) = [1, x]` embeds
//! `X`. Classes are numbered by their least pair `(g, x)` in lexicographic
//! order, which is also the order of the index `g * |X| + x`.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::GroupEmbedding;
use crate::partial_action::{
    invert, is_morphism, ActionError, GlobalAction, Openness, PartialAction,
};
use crate::sets::{self, PointSet};
use crate::topology::{
    local_indices, map_report, relation_is_closed, MapReport, PointRelation, QuotientSpace,
    SeparationReport, TopologyError,
};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GlobalizationError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("the gluing relation on G x X is not an equivalence relation")]
    RelationNotEquivalence,
    #[error("enveloping action of element {g} is not well defined on class {class}")]
    MuIllDefined { g: usize, class: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopingSpace {
    source: PartialAction,
    carrier: QuotientSpace,
    mu: GlobalAction,
    iota: Vec<usize>,
}

impl EnvelopingSpace {
    pub fn build(pa: &PartialAction) -> Result<Self, GlobalizationError> {
        pa.require_valid()?;
        let group = pa.group();
        let n = pa.space().size();
        let mut uf = UnionFind::new(group.order() * n);
        for g in group.elements() {
            for f in group.elements() {
                let gf = group.mul(g, group.inv(f));
                for (x, y) in pa.map(f).pairs() {
                    uf.union(g * n + x, gf * n + y);
                }
            }
        }
        let classes = uf.classes();

        let literal = literal_relation(pa);
        if !literal.is_equivalence() {
            return Err(GlobalizationError::RelationNotEquivalence);
        }

        let carrier = QuotientSpace::new(pa.product_space(), &classes)?;
        let tables = group
            .elements()
            .map(|g| {
                carrier
                    .classes()
                    .iter()
                    .enumerate()
                    .map(|(c, members)| {
                        let image = |k: usize| carrier.class_of(group.mul(g, k / n) * n + k % n);
                        let target = image(members[0]);
                        if members.iter().any(|&k| image(k) != target) {
                            return Err(GlobalizationError::MuIllDefined { g, class: c });
                        }
                        Ok(target)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mu = GlobalAction::new(group.clone(), carrier.space().clone(), tables)?;
        let e = group.identity();
        let iota = (0..n).map(|x| carrier.class_of(e * n + x)).collect();
        Ok(EnvelopingSpace {
            source: pa.clone(),
            carrier,
            mu,
            iota,
        })
    }

    pub fn source(&self) -> &PartialAction {
        &self.source
    }

    pub fn carrier(&self) -> &QuotientSpace {
        &self.carrier
    }

    pub fn mu(&self) -> &GlobalAction {
        &self.mu
    }

    /// `ι(x) = [1, x]` as class indices.
    pub fn iota(&self) -> &[usize] {
        &self.iota
    }

    pub fn iota_image(&self) -> PointSet {
        sets::from_indices(self.len(), self.iota.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn class_of(&self, g: usize, x: usize) -> usize {
        self.carrier.class_of(g * self.source.space().size() + x)
    }

    /// The least pair `(g, x)` of a class.
    pub fn representative(&self, class: usize) -> (usize, usize) {
        let n = self.source.space().size();
        let k = self.carrier.classes()[class][0];
        (k / n, k % n)
    }

    /// The gluing relation read off the classes.
    pub fn class_relation(&self) -> PointRelation {
        self.carrier.relation()
    }

    /// `q: G x X -> X_G`.
    pub fn quotient_map_report(&self) -> MapReport {
        self.carrier.projection_report()
    }

    /// Edges `[h, x] -> [gh, x]` labelled by `g`, for every non-identity `g`.
    pub fn class_graph(&self) -> Vec<(usize, usize, usize)> {
        let group = self.source.group();
        let mut edges = Vec::new();
        for c in 0..self.len() {
            for g in group.elements().filter(|&g| g != group.identity()) {
                edges.push((c, g, self.mu.apply(g, c)));
            }
        }
        edges
    }

    pub fn verify(&self) -> EnvelopeReport {
        let pa = &self.source;
        let group = pa.group();
        let n = pa.space().size();
        let image = self.iota_image();
        let local = local_indices(&image);
        let iota_local: Vec<usize> = self.iota.iter().map(|&c| local[c]).collect();

        let iota_homeomorphism = image.count_ones(..) == n
            && map_report(
                &iota_local,
                pa.space(),
                &self.carrier.space().subspace(&image),
            )
            .homeomorphism;

        let induced = PartialAction::induced(&self.mu, &image);
        let induced_equivalent = image.count_ones(..) == n
            && is_morphism(&iota_local, pa, &induced)
            && is_morphism(&invert(&iota_local), &induced, pa);

        let equivariant = group.elements().all(|g| {
            pa.map(g)
                .pairs()
                .all(|(x, y)| self.mu.apply(g, self.iota[x]) == self.iota[y])
        });

        let literal = literal_relation(pa);
        let relation_matches_hat_orbits = literal == pa.hat().orbit_relation();
        let union_find_matches_literal = literal == self.class_relation();

        let saturated = sets::from_indices(
            self.len(),
            group
                .elements()
                .flat_map(|g| self.iota.iter().map(move |&c| self.mu.apply(g, c))),
        );
        let saturation_is_everything = saturated.count_ones(..) == self.len();

        let q = self.quotient_map_report();
        let mu_homeomorphisms = group.elements().all(|g| {
            let table: Vec<usize> = (0..self.len()).map(|c| self.mu.apply(g, c)).collect();
            map_report(&table, self.carrier.space(), self.carrier.space()).homeomorphism
        });

        let off_identity_empty = group
            .elements()
            .filter(|&g| g != group.identity())
            .all(|g| pa.domain(g).is_clear());
        let product = group.order() * n;
        let size_bound = self.len() <= product && ((self.len() == product) == off_identity_empty);

        EnvelopeReport {
            iota_homeomorphism,
            induced_equivalent,
            equivariant,
            relation_matches_hat_orbits,
            union_find_matches_literal,
            saturation_is_everything,
            quotient_continuous: q.continuous,
            quotient_open: q.open,
            mu_homeomorphisms,
            size_bound,
        }
    }

    pub fn diagnose(&self) -> DiagnosticsReport {
        let pa = &self.source;
        let sep = self.carrier.space().separation_report();
        let space = pa.space().separation_report();
        let hat = pa.hat();
        let ehat_closed = relation_is_closed(&hat.orbit_relation(), hat.space());
        let domains = pa.domain_report();
        let all_ranges_closed = domains.all_ranges_closed();
        let q_open = self.quotient_map_report().open;
        let discrete = self.carrier.space().is_discrete();

        let audits = vec![
            Audit::equivalence(
                "hausdorff-iff-relation-closed",
                "with q open: X_G is Hausdorff iff the gluing relation is closed in (G x X)^2",
                q_open,
                sep.hausdorff == ehat_closed,
            ),
            Audit::implication(
                "closed-domain-implies-hausdorff",
                "X Hausdorff and G*X closed imply the gluing relation closed and X_G Hausdorff",
                domains.gstar.closed && space.hausdorff,
                ehat_closed && sep.hausdorff,
            ),
            Audit::implication(
                "closed-ranges-imply-regular",
                "X regular and every X_g closed imply X_G regular",
                all_ranges_closed && space.regular,
                sep.regular,
            ),
            Audit::implication(
                "hausdorff-closed-relation-implies-regular",
                "X (compact) Hausdorff and the gluing relation closed imply X_G regular",
                space.hausdorff && ehat_closed,
                sep.regular,
            ),
            Audit::equivalence(
                "t1-regular-iff-discrete",
                "a finite space is T1 and regular iff it is discrete (iff metrizable)",
                true,
                (sep.t1 && sep.regular) == discrete,
            ),
        ];
        DiagnosticsReport {
            hausdorff: sep.hausdorff,
            t1: sep.t1,
            regular: sep.regular,
            discrete,
            ehat_closed,
            gstar: domains.gstar,
            all_ranges_closed,
            space,
            quotient_open: q_open,
            audits,
            notes: NOTES,
        }
    }
}

const NOTES: &[&str] = &[
    "G is discrete, so {1} is a neighbourhood of the identity inside every G^x; \
     the interior condition on X^M holds with M = {1}",
    "every finite space is compact; the locally compact metric case is covered \
     by the compact Hausdorff audit",
    "for finite spaces T1 already forces the discrete topology",
];

/// `(g, x) R (h, y)` iff `x in X_{g^-1 h}` and `m_{h^-1 g}(x) = y`, computed
/// pair by pair.
pub fn literal_relation(pa: &PartialAction) -> PointRelation {
    let group = pa.group();
    let n = pa.space().size();
    let total = group.order() * n;
    let mut r = PointRelation::empty(total);
    for a in 0..total {
        let (g, x) = (a / n, a % n);
        for h in group.elements() {
            let f = group.mul(group.inv(h), g);
            if let Some(y) = pa.act(f, x) {
                r.insert(a, h * n + y);
            }
        }
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnvelopeReport {
    /// `ι: X -> ι(X)` is a homeomorphism onto its image.
    pub iota_homeomorphism: bool,
    /// The partial action induced by `μ` on `ι(X)` is isomorphic to the source via `ι`.
    pub induced_equivalent: bool,
    /// `μ_g ι = ι m_g` on `X_{g^-1}`.
    pub equivariant: bool,
    /// The gluing relation equals the orbit relation of the hat action.
    pub relation_matches_hat_orbits: bool,
    /// Union-find classes equal the literal relation (no extra collapsing).
    pub union_find_matches_literal: bool,
    /// `G.ι(X) = X_G`.
    pub saturation_is_everything: bool,
    pub quotient_continuous: bool,
    pub quotient_open: bool,
    pub mu_homeomorphisms: bool,
    /// `|X_G| <= |G||X|`, with equality iff every off-identity domain is empty.
    pub size_bound: bool,
}

impl EnvelopeReport {
    pub fn items(&self) -> [(&'static str, bool); 10] {
        [
            ("iota-homeomorphism", self.iota_homeomorphism),
            ("induced-action-equivalent", self.induced_equivalent),
            ("iota-equivariant", self.equivariant),
            (
                "relation-equals-hat-orbits",
                self.relation_matches_hat_orbits,
            ),
            (
                "union-find-equals-literal-relation",
                self.union_find_matches_literal,
            ),
            (
                "saturation-of-image-is-everything",
                self.saturation_is_everything,
            ),
            ("quotient-map-continuous", self.quotient_continuous),
            ("quotient-map-open", self.quotient_open),
            ("mu-homeomorphisms", self.mu_homeomorphisms),
            ("size-bound", self.size_bound),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.items().iter().all(|(_, ok)| *ok)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditKind {
    Implication,
    Equivalence,
}

/// A guaranteed consequence checked on one instance. A failing audit
/// with its hypothesis met is a defect in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Audit {
    pub name: &'static str,
    pub statement: &'static str,
    pub kind: AuditKind,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Audit {
    fn implication(
        name: &'static str,
        statement: &'static str,
        hypothesis: bool,
        conclusion: bool,
    ) -> Self {
        Audit {
            name,
            statement,
            kind: AuditKind::Implication,
            hypothesis,
            conclusion,
        }
    }

    fn equivalence(
        name: &'static str,
        statement: &'static str,
        hypothesis: bool,
        conclusion: bool,
    ) -> Self {
        Audit {
            name,
            statement,
            kind: AuditKind::Equivalence,
            hypothesis,
            conclusion,
        }
    }

    pub fn passed(&self) -> bool {
        !self.hypothesis || self.conclusion
    }

    pub fn status(&self) -> &'static str {
        match (self.hypothesis, self.conclusion) {
            (false, _) => "vacuous",
            (true, true) => "pass",
            (true, false) => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagnosticsReport {
    pub hausdorff: bool,
    pub t1: bool,
    pub regular: bool,
    pub discrete: bool,
    /// Orbit relation of the hat action, closed in `(G x X)^2`.
    pub ehat_closed: bool,
    pub gstar: Openness,
    pub all_ranges_closed: bool,
    /// Separation of the source space `X`.
    pub space: SeparationReport,
    pub quotient_open: bool,
    pub audits: Vec<Audit>,
    pub notes: &'static [&'static str],
}

impl DiagnosticsReport {
    pub fn audits_pass(&self) -> bool {
        self.audits.iter().all(Audit::passed)
    }

    pub fn audit(&self, name: &str) -> Option<&Audit> {
        self.audits.iter().find(|a| a.name == name)
    }
}

/// A global `G`-action extended along `G ⊆ H`: `Y = (H x X)` modulo the
/// orbits of the hat action over `H`, with `H` acting by left translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupergroupExtension {
    pub space: QuotientSpace,
    pub action: GlobalAction,
    /// `x -> [1, x]`.
    pub embedding: Vec<usize>,
    pub embedding_homeomorphic: bool,
    pub image_closed: bool,
    /// `b(g, [1, x]) = [1, g.x]` for `g in G`.
    pub extends: bool,
}

impl SupergroupExtension {
    pub fn certified(&self) -> bool {
        self.embedding_homeomorphic && self.image_closed && self.extends
    }
}

pub fn extend_to_supergroup(
    u: &GlobalAction,
    emb: &GroupEmbedding,
) -> Result<SupergroupExtension, GlobalizationError> {
    let hat = u.as_partial().hat_over(emb)?;
    let relation = hat.orbit_relation();
    if !relation.is_equivalence() {
        return Err(GlobalizationError::RelationNotEquivalence);
    }
    let space = QuotientSpace::new(hat.space().clone(), &relation.classes())?;
    let big = emb.target();
    let n = u.space().size();
    let tables = big
        .elements()
        .map(|h| {
            space
                .classes()
                .iter()
                .enumerate()
                .map(|(c, members)| {
                    let image = |k: usize| space.class_of(big.mul(h, k / n) * n + k % n);
                    let target = image(members[0]);
                    if members.iter().any(|&k| image(k) != target) {
                        return Err(GlobalizationError::MuIllDefined { g: h, class: c });
                    }
                    Ok(target)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let action = GlobalAction::new(big.clone(), space.space().clone(), tables)?;

    let e = big.identity();
    let embedding: Vec<usize> = (0..n).map(|x| space.class_of(e * n + x)).collect();
    let image = sets::from_indices(space.len(), embedding.iter().copied());
    let local = local_indices(&image);
    let local_table: Vec<usize> = embedding.iter().map(|&c| local[c]).collect();
    let embedding_homeomorphic = image.count_ones(..) == n
        && map_report(&local_table, u.space(), &space.space().subspace(&image)).homeomorphism;
    let image_closed = space.space().is_closed(&image);
    let extends = u.group().elements().all(|g| {
        (0..n).all(|x| action.apply(emb.apply(g), embedding[x]) == embedding[u.apply(g, x)])
    });
    Ok(SupergroupExtension {
        space,
        action,
        embedding,
        embedding_homeomorphic,
        image_closed,
        extends,
    })
}
