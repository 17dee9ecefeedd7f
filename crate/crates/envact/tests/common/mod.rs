//! Seeded corpus of partial actions induced from global ones.
//!
//! A global action is a disjoint union of coset spaces `G/H` with left
//! multiplication, topologized by an invariant topology: discrete, a
//! partition into fibres of `G/H -> G/K`, or the topology generated by the
//! translates of random subsets. `X` is a subset of at most six points, and
//! only instances whose induced action is a valid topological partial
//! action are kept.

#![allow(dead_code)]

use envact_core::group::abelian;
use envact_core::sets::{self, PointSet};
use envact_core::{FiniteGroup, FiniteSpace, GlobalAction, PartialAction};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

pub fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", FiniteGroup::cyclic(1)),
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("Z5", FiniteGroup::cyclic(5)),
        ("Z6", FiniteGroup::cyclic(6)),
        ("Z2xZ2", abelian(&[2, 2])),
        ("S3", FiniteGroup::symmetric3()),
        ("Z2xZ3", abelian(&[2, 3])),
    ]
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub global: GlobalAction,
    pub subset: PointSet,
    pub pa: PartialAction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Discrete,
    Partition,
    Generated,
}

/// A union of coset spaces with its point labels `(component, coset)`.
pub struct CosetSpace {
    pub group: FiniteGroup,
    /// `cosets[p]` is the coset of point `p`, as a subset of `G`.
    pub cosets: Vec<PointSet>,
    /// Subgroup index of each point's component.
    pub component: Vec<usize>,
    pub subgroups: Vec<PointSet>,
}

impl CosetSpace {
    pub fn new(group: &FiniteGroup, subgroups: Vec<PointSet>) -> Self {
        let mut cosets = Vec::new();
        let mut component = Vec::new();
        for (i, h) in subgroups.iter().enumerate() {
            for c in group.left_cosets(h) {
                cosets.push(c);
                component.push(i);
            }
        }
        CosetSpace {
            group: group.clone(),
            cosets,
            component,
            subgroups,
        }
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    fn find(&self, component: usize, coset: &PointSet) -> usize {
        (0..self.len())
            .find(|&p| self.component[p] == component && &self.cosets[p] == coset)
            .expect("translates of cosets are cosets")
    }

    pub fn tables(&self) -> Vec<Vec<usize>> {
        self.group
            .elements()
            .map(|g| {
                (0..self.len())
                    .map(|p| {
                        self.find(
                            self.component[p],
                            &self.group.translate_left(g, &self.cosets[p]),
                        )
                    })
                    .collect()
            })
            .collect()
    }

    pub fn action(&self, space: FiniteSpace) -> GlobalAction {
        GlobalAction::new(self.group.clone(), space, self.tables()).expect("invariant topology")
    }

    /// Fibres of `G/H -> G/K`, one `K ⊇ H` per component.
    fn partition(&self, rng: &mut ChaCha8Rng) -> FiniteSpace {
        let all = self.group.subgroups();
        let over: Vec<PointSet> = self
            .subgroups
            .iter()
            .map(|h| {
                let bigger: Vec<&PointSet> = all.iter().filter(|k| h.is_subset(k)).collect();
                (*bigger.choose(rng).unwrap()).clone()
            })
            .collect();
        let n = self.len();
        let min_open = (0..n)
            .map(|p| {
                let c = self.component[p];
                let g = self.cosets[p].ones().next().unwrap();
                let fibre = self.group.translate_left(g, &over[c]);
                sets::from_indices(
                    n,
                    (0..n).filter(|&q| self.component[q] == c && self.cosets[q].is_subset(&fibre)),
                )
            })
            .collect();
        FiniteSpace::from_minimal_opens(min_open).expect("a partition is a topology")
    }

    /// Topology generated by all translates of a few random subsets.
    fn generated(&self, rng: &mut ChaCha8Rng) -> FiniteSpace {
        let n = self.len();
        let tables = self.tables();
        let mut subbase: Vec<Vec<usize>> = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.35)).collect();
            for t in &tables {
                let mut image: Vec<usize> = s.iter().map(|&p| t[p]).collect();
                image.sort_unstable();
                subbase.push(image);
            }
        }
        FiniteSpace::from_subbase(n, &subbase).expect("indices are in range")
    }

    pub fn topology(&self, kind: Topology, rng: &mut ChaCha8Rng) -> FiniteSpace {
        match kind {
            Topology::Discrete => FiniteSpace::discrete(self.len()),
            Topology::Partition => self.partition(rng),
            Topology::Generated => self.generated(rng),
        }
    }
}

fn random_subset(space: &FiniteSpace, open: bool, rng: &mut ChaCha8Rng) -> Option<PointSet> {
    let n = space.size();
    let k = rng.gen_range(1..=n.min(6));
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut s = sets::from_indices(n, points[..k].iter().copied());
    if open {
        s = space.open_hull(&sets::from_indices(
            n,
            points[..rng.gen_range(1..=k.min(2))].iter().copied(),
        ));
    }
    (s.count_ones(..) <= 6).then_some(s)
}

/// `count` valid instances, deterministic in `seed`. Also returns how many
/// candidates were rejected as topologically invalid.
pub fn corpus(count: usize, seed: u64) -> (Vec<Instance>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = groups();
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let (name, group) = &groups[rng.gen_range(0..groups.len())];
        let subgroups = group.subgroups();
        let parts: Vec<PointSet> = (0..rng.gen_range(1..=3))
            .map(|_| subgroups.choose(&mut rng).unwrap().clone())
            .collect();
        let y = CosetSpace::new(group, parts);
        if y.len() > 18 {
            continue;
        }
        let kind =
            [Topology::Discrete, Topology::Partition, Topology::Generated][rng.gen_range(0..3)];
        let space = y.topology(kind, &mut rng);
        let global = y.action(space);
        let open = rng.gen_bool(0.6);
        let Some(subset) = random_subset(global.space(), open, &mut rng) else {
            continue;
        };
        let pa = PartialAction::induced(&global, &subset);
        if !pa.is_valid() {
            rejected += 1;
            continue;
        }
        let label = format!(
            "#{} {name} on {} points ({kind:?}), X = {:?}",
            out.len(),
            y.len(),
            sets::elements(&subset)
        );
        out.push(Instance {
            label,
            global,
            subset,
            pa,
        });
    }
    (out, rejected)
}

/// A copy of `pa` with one table entry redirected, for checking that the
/// two forms of the axioms fail together.
pub fn mutate(pa: &PartialAction, rng: &mut ChaCha8Rng) -> PartialAction {
    use envact_core::PartialBijection;
    let n = pa.space().size();
    let mut maps: Vec<PartialBijection> = pa.maps().to_vec();
    let g = rng.gen_range(0..maps.len());
    let mut table = maps[g].table().to_vec();
    let x = rng.gen_range(0..n);
    let choice = rng.gen_range(0..=n);
    let target = (choice < n).then_some(choice);
    if let Some(t) = target {
        if let Some(other) = table.iter().position(|&y| y == Some(t)) {
            table[other] = table[x];
        }
    }
    table[x] = target;
    maps[g] = PartialBijection::from_table(table).expect("swap keeps injectivity");
    PartialAction::new(pa.group().clone(), pa.space().clone(), maps).expect("same shape")
}
