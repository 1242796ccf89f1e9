//! Morphisms out of building balls: construction with controlled choices on
//! the root set, certification of local injectivity and surjectivity, and
//! pairs of self-maps with disjoint images away from a finite set.

mod certify;
mod construct;
mod disjoint;
mod format;

pub use certify::{certify, Certificate, Witness};
pub use construct::{construct_morphism, construct_morphism_in_order, length_order};
pub use disjoint::{audit_disjoint_pair, disjoint_pair, realization_disjointness_check, Audit, DisjointPair};
pub use format::{content_hash, parse_morphism, write_morphism};
