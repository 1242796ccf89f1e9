use thiserror::Error;

use crate::chamber::ChamberId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),

    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,

    #[error("resource cap exceeded: more than {limit} {what}")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("generators `{0}` and `{1}` do not commute")]
    NonCommuting(String, String),

    #[error("generator set is not spherical")]
    NotSpherical,

    #[error("thickness parameter must be at least {min}, got {got} for `{generator}`")]
    Thickness { generator: String, got: usize, min: usize },

    #[error("chamber set is not star-like: chamber {chamber} has a lower neighbour {missing} outside it")]
    NotStarLike { chamber: ChamberId, missing: ChamberId },

    #[error("map is not a morphism: chambers {x} ~{generator} {y} but images {fx}, {fy} are not adjacent")]
    NotMorphism { x: ChamberId, y: ChamberId, fx: ChamberId, fy: ChamberId, generator: String },

    #[error("building axiom violated: {0}")]
    Axiom(String),

    #[error("chooser returned chamber {chosen}, which is not in the panel of {base} for `{generator}`")]
    ChooserOutside { chosen: ChamberId, base: ChamberId, generator: String },

    #[error("chooser declined to choose an image for chamber {chamber}")]
    ChooserDeclined { chamber: ChamberId },

    #[error("no forced image for chamber {chamber}: target panels do not meet in exactly one chamber")]
    NoForcedImage { chamber: ChamberId },

    #[error("residue of chamber {chamber} is truncated by the ball boundary (needs radius {needed}, have {radius})")]
    Truncated { chamber: ChamberId, needed: usize, radius: usize },

    #[error("chamber {chamber} folds outside the half-space")]
    OutsideHalfSpace { chamber: ChamberId },

    #[error("convex hull reaches length {length}, beyond the safe radius {safe}")]
    UnsafeRadius { length: usize, safe: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
