//! Right-angled Coxeter groups and finite balls of semi-regular right-angled buildings.

pub mod building;
pub mod chamber;
pub mod complexes;
pub mod coxeter;
pub mod error;
pub mod finite;
pub mod halfspace;
pub mod morphism;

pub use chamber::{ChamberId, ChamberMap, ChamberSystem};
pub use coxeter::{CoxeterSystem, Element, Gen, GenSet, Limits};
pub use error::{Error, Result};
