//! Partial actions of finite groups on finite topological spaces.
//!
//! Everything here is exact and exhaustive: groups are Cayley tables,
//! topologies are stored through the minimal open neighbourhood of each
//! point, and every property a report claims is checked by enumeration.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command line front-end live in the `envact` crate.
//!
//! * [`group`]: validated Cayley tables, products and embeddings.
//! * [`topology`]: finite spaces, products, subspaces, quotients,
//!   separation axioms and map predicates.
//! * [`partial_action`]: partial actions, their validation, the induced and
//!   hat constructions, orbits and morphisms.
//! * [`globalization`]: the enveloping space `X_G` with the enveloping action,
//!   Hausdorff/regularity diagnostics and extension to supergroups.
//! * [`universal`]: the embedding into tuples of subsets of `G` with the
//!   translation action, and the cyclic shift example.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod globalization;
pub mod group;
pub mod partial_action;
pub mod sets;
pub mod topology;
mod union_find;
pub mod universal;

pub use globalization::{
    extend_to_supergroup, DiagnosticsReport, EnvelopeReport, EnvelopingSpace, GlobalizationError,
    SupergroupExtension,
};
pub use group::{FiniteGroup, GroupEmbedding, GroupError};
pub use partial_action::{
    are_equivalent, is_equivariant, is_morphism, ActionError, GlobalAction, PartialAction,
    PartialBijection, ValidationReport,
};
pub use sets::PointSet;
pub use topology::{
    map_report, relation_is_closed, FiniteSpace, MapReport, PointRelation, QuotientSpace,
    SeparationReport, TopologyError,
};
pub use universal::{
    embed, embed_simple, image_globalization, separates_points, shift_example, verify_embedding,
    BaseChoice, EmbeddingError, EmbeddingImage, EmbeddingReport, SaturationReport, ShiftExample,
};
