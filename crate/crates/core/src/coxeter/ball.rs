use std::collections::{HashMap, HashSet};

use super::element::Element;
use super::system::{CoxeterSystem, Gen, GenSet};
use crate::error::{Error, Result};

/// Resource caps for enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of group elements (or chambers) one enumeration may produce.
    pub max_elements: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ELEMENTS: usize = 5_000_000;

    /// Environment variable that overrides [`Limits::DEFAULT_MAX_ELEMENTS`].
    pub const ENV_VAR: &'static str = "RAB_MAX_ELEMENTS";

    /// Defaults, with `RAB_MAX_ELEMENTS` honoured when it parses as an integer.
    pub fn from_env() -> Self {
        let max_elements =
            std::env::var(Self::ENV_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(Self::DEFAULT_MAX_ELEMENTS);
        Limits { max_elements }
    }

    pub(crate) fn check(&self, count: usize, what: &'static str) -> Result<()> {
        if count > self.max_elements {
            return Err(Error::ResourceCap { what, limit: self.max_elements });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_elements: Self::DEFAULT_MAX_ELEMENTS }
    }
}

/// All `w` with `ℓ(w) ≤ radius`, ordered by length and then ShortLex.
///
/// Every initial segment of the result is star-like with respect to `1`:
/// the elements on minimal galleries from `1` to `w` are strictly shorter.
pub fn enumerate_ball(sys: &CoxeterSystem, radius: usize, limits: Limits) -> Result<Vec<Element>> {
    let mut all = vec![Element::identity(sys)];
    let mut level = all.clone();
    for _ in 0..radius {
        let mut next: HashSet<Element> = HashSet::new();
        for w in &level {
            let desc = sys.descents_of_word(w.word());
            for s in 0..sys.rank() {
                if !desc.contains(s) {
                    next.insert(sys.normalize_unchecked(w.letters().chain([s])));
                }
            }
        }
        let mut next: Vec<Element> = next.into_iter().collect();
        next.sort();
        limits.check(all.len() + next.len(), "group elements")?;
        all.extend(next.iter().cloned());
        level = next;
        if level.is_empty() {
            break;
        }
    }
    Ok(all)
}

/// Sizes of the spheres `|{w : ℓ(w) = j}|` for `j = 0..=radius`.
pub fn sphere_sizes(sys: &CoxeterSystem, radius: usize, limits: Limits) -> Result<Vec<usize>> {
    let ball = enumerate_ball(sys, radius, limits)?;
    let mut sizes = vec![0; radius + 1];
    for w in &ball {
        sizes[w.len()] += 1;
    }
    Ok(sizes)
}

/// Index of an element inside a [`Ball`].
pub type ElemId = u32;

const NONE: ElemId = ElemId::MAX;

/// A ball of `W` with its right Cayley table, descent sets and an index.
#[derive(Clone, Debug)]
pub struct Ball {
    system: CoxeterSystem,
    radius: usize,
    elements: Vec<Element>,
    index: HashMap<Element, ElemId>,
    mul: Vec<ElemId>,
    descents: Vec<GenSet>,
}

impl Ball {
    pub fn new(sys: &CoxeterSystem, radius: usize, limits: Limits) -> Result<Self> {
        let elements = enumerate_ball(sys, radius, limits)?;
        let index: HashMap<Element, ElemId> =
            elements.iter().enumerate().map(|(i, w)| (w.clone(), i as ElemId)).collect();
        let rank = sys.rank();
        let mut mul = vec![NONE; elements.len() * rank];
        let mut descents = Vec::with_capacity(elements.len());
        for (i, w) in elements.iter().enumerate() {
            descents.push(sys.descents_of_word(w.word()));
            for s in 0..rank {
                let ws = sys.normalize_unchecked(w.letters().chain([s]));
                if let Some(&j) = index.get(&ws) {
                    mul[i * rank + s] = j;
                }
            }
        }
        Ok(Ball { system: sys.clone(), radius, elements, index, mul, descents })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &Element {
        &self.elements[id as usize]
    }

    pub fn id(&self, w: &Element) -> Option<ElemId> {
        self.index.get(w).copied()
    }

    pub fn length(&self, id: ElemId) -> usize {
        self.elements[id as usize].len()
    }

    /// `w·s`, or `None` when it leaves the ball.
    pub fn mul(&self, id: ElemId, s: Gen) -> Option<ElemId> {
        let j = self.mul[id as usize * self.system.rank() + s];
        (j != NONE).then_some(j)
    }

    pub fn descents(&self, id: ElemId) -> GenSet {
        self.descents[id as usize]
    }

    /// Index range of the elements of length exactly `len`.
    pub fn sphere(&self, len: usize) -> std::ops::Range<usize> {
        let start = self.elements.partition_point(|w| w.len() < len);
        let end = self.elements.partition_point(|w| w.len() <= len);
        start..end
    }
}
