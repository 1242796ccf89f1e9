//! Exact arithmetic in right-angled Coxeter systems.
//!
//! Elements are kept as ShortLex-least reduced words, so equality in `W` is
//! equality of words. In the right-angled case all reduced words of an
//! element differ by swaps of adjacent commuting letters, which makes the
//! canonical form a lexicographically least linear extension.

mod ball;
mod element;
mod properties;
mod system;

pub use ball::{enumerate_ball, sphere_sizes, Ball, ElemId, Limits};
pub use element::Element;
pub use properties::{property_pm1_check, property_r_check};
pub use system::{CoxeterSystem, Gen, GenSet, MAX_GENERATORS};

pub(crate) use element::canonical_order;
