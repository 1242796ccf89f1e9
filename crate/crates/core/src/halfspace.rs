//! Walls, half-spaces `H(w,s)`, their shortest elements and gallery-convex hulls.

use std::collections::{BTreeSet, VecDeque};

use crate::coxeter::{CoxeterSystem, Element, Gen, GenSet, Limits};
use crate::error::Result;

/// The half-space `H(w,s) = {h : d(h,ws) < d(h,w)}`.
///
/// `H(ws,s)` is the complementary half-space; both are bounded by the wall
/// of the reflection `w s w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    w: Element,
    s: Gen,
    normalized: bool,
}

impl HalfSpace {
    pub fn new(w: Element, s: Gen) -> Self {
        HalfSpace { w, s, normalized: false }
    }

    pub fn w(&self) -> &Element {
        &self.w
    }

    pub fn s(&self) -> Gen {
        self.s
    }

    /// True when `w·s` is known to be the shortest element of the half-space.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// `w·s`, the chamber of the defining pair that lies inside.
    pub fn inner(&self, sys: &CoxeterSystem) -> Result<Element> {
        sys.mul_gen(&self.w, self.s)
    }

    pub fn contains(&self, sys: &CoxeterSystem, h: &Element) -> Result<bool> {
        let ws = self.inner(sys)?;
        Ok(sys.dist(h, &ws)? < sys.dist(h, &self.w)?)
    }

    /// The complementary half-space `H(ws,s)`.
    pub fn complement(&self, sys: &CoxeterSystem) -> Result<HalfSpace> {
        Ok(HalfSpace::new(self.inner(sys)?, self.s))
    }

    /// The set `{h ∈ H(w,s) : hs ∉ H(w,s)}`, which is the coset `ws·W_{{s}'}`.
    pub fn crossing_set(&self, sys: &CoxeterSystem) -> Result<CrossingSet> {
        Ok(CrossingSet { representative: self.inner(sys)?, link: sys.link(self.s) })
    }

    /// The unique shortest element: `1` if it lies inside, otherwise the
    /// shortest element of the crossing coset.
    pub fn shortest_element(&self, sys: &CoxeterSystem) -> Result<Element> {
        if self.normalized {
            return self.inner(sys);
        }
        let one = Element::identity(sys);
        if self.contains(sys, &one)? {
            return Ok(one);
        }
        let crossing = self.crossing_set(sys)?;
        sys.coset_minimum(&crossing.representative, crossing.link)
    }

    /// The same half-space re-expressed as `H(g·s, s)` with `g` the shortest
    /// element of its crossing coset. When `1 ∉ H`, `g` is the shortest
    /// element of the half-space itself and the result is marked normalized.
    pub fn normalize(&self, sys: &CoxeterSystem) -> Result<HalfSpace> {
        let crossing = self.crossing_set(sys)?;
        let g = sys.coset_minimum(&crossing.representative, crossing.link)?;
        let normalized = !self.contains(sys, &Element::identity(sys))?;
        Ok(HalfSpace { w: sys.mul_gen(&g, self.s)?, s: self.s, normalized })
    }

    pub fn wall(&self, sys: &CoxeterSystem) -> Result<Wall> {
        Wall::new(sys, &self.w, self.s)
    }
}

/// The coset `ws·W_{{s}'}` of elements of `H(w,s)` whose `s`-neighbour leaves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSet {
    pub representative: Element,
    pub link: GenSet,
}

impl CrossingSet {
    pub fn contains(&self, sys: &CoxeterSystem, h: &Element) -> Result<bool> {
        sys.in_coset(&self.representative, self.link, h)
    }

    /// Members of the coset with length at most `max_len`, sorted.
    pub fn members_up_to(&self, sys: &CoxeterSystem, max_len: usize) -> Result<Vec<Element>> {
        let start = sys.coset_minimum(&self.representative, self.link)?;
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for t in self.link.iter() {
                let y = sys.mul_gen(&x, t)?;
                if y.len() <= max_len && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().filter(|h| h.len() <= max_len).collect())
    }
}

/// A wall, given by a defining chamber pair `{u, us}` with `ℓ(u) < ℓ(us)`.
///
/// Two walls are equal iff their reflections `u s u⁻¹` are equal elements;
/// the stored pair is just one representative.
#[derive(Clone, Debug)]
pub struct Wall {
    lower: Element,
    s: Gen,
    reflection: Element,
}

impl Wall {
    /// The wall separating `w` from `ws`.
    pub fn new(sys: &CoxeterSystem, w: &Element, s: Gen) -> Result<Self> {
        let ws = sys.mul_gen(w, s)?;
        let reflection = sys.multiply(&ws, &sys.inverse(w)?)?;
        let lower = if ws.len() < w.len() { ws } else { w.clone() };
        Ok(Wall { lower, s, reflection })
    }

    /// The shorter chamber `u` of the defining pair and the generator `s`.
    pub fn pair(&self) -> (&Element, Gen) {
        (&self.lower, self.s)
    }

    pub fn reflection(&self) -> &Element {
        &self.reflection
    }

    /// True iff the wall separates `h` from `1`.
    pub fn separates_from_identity(&self, sys: &CoxeterSystem, h: &Element) -> Result<bool> {
        // h is beyond the wall iff its mirror image is shorter
        Ok(sys.multiply(&self.reflection, h)?.len() < h.len())
    }
}

impl PartialEq for Wall {
    fn eq(&self, other: &Self) -> bool {
        self.reflection == other.reflection
    }
}

impl Eq for Wall {}

impl std::hash::Hash for Wall {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.reflection.hash(state);
    }
}

impl PartialOrd for Wall {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Wall {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.reflection.cmp(&other.reflection)
    }
}

/// Walls crossed by a minimal gallery from `a` to `b` (the walls separating them).
pub fn separating_walls(sys: &CoxeterSystem, a: &Element, b: &Element) -> Result<BTreeSet<Wall>> {
    let step = sys.multiply(&sys.inverse(a)?, b)?;
    let mut cur = a.clone();
    let mut walls = BTreeSet::new();
    for s in step.letters() {
        walls.insert(Wall::new(sys, &cur, s)?);
        cur = sys.mul_gen(&cur, s)?;
    }
    Ok(walls)
}

/// All elements on minimal galleries from `u` to `v`.
pub fn interval(sys: &CoxeterSystem, u: &Element, v: &Element) -> Result<BTreeSet<Element>> {
    let mut seen = BTreeSet::from([u.clone()]);
    let mut queue = VecDeque::from([(u.clone(), sys.dist(u, v)?)]);
    while let Some((x, remaining)) = queue.pop_front() {
        if remaining == 0 {
            continue;
        }
        for s in 0..sys.rank() {
            let y = sys.mul_gen(&x, s)?;
            let d = sys.dist(&y, v)?;
            if d + 1 == remaining && seen.insert(y.clone()) {
                queue.push_back((y, d));
            }
        }
    }
    Ok(seen)
}

/// Smallest superset of `set` closed under minimal-gallery intervals,
/// computed as a fixpoint of pairwise interval closure.
pub fn convex_hull(sys: &CoxeterSystem, set: &[Element], limits: Limits) -> Result<BTreeSet<Element>> {
    let mut hull: BTreeSet<Element> = set.iter().cloned().collect();
    let mut pending: Vec<Element> = hull.iter().cloned().collect();
    while let Some(x) = pending.pop() {
        let members: Vec<Element> = hull.iter().cloned().collect();
        for y in members {
            for z in interval(sys, &x, &y)? {
                if hull.insert(z.clone()) {
                    limits.check(hull.len(), "hull elements")?;
                    pending.push(z);
                }
            }
        }
    }
    Ok(hull)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(sys: &CoxeterSystem, w: &str) -> Element {
        sys.parse_word(w).unwrap()
    }

    #[test]
    fn contains_examples() {
        let p5 = CoxeterSystem::polygon(5);
        let h = HalfSpace::new(Element::identity(&p5), 0);
        assert!(h.contains(&p5, &el(&p5, "s1")).unwrap());
        assert!(!h.contains(&p5, &el(&p5, "1")).unwrap());
        let a1 = CoxeterSystem::infinite_dihedral();
        let h = HalfSpace::new(el(&a1, "b"), 0);
        assert!(h.contains(&a1, &el(&a1, "b a b")).unwrap());
    }

    #[test]
    fn crossing_set_examples() {
        let a1 = CoxeterSystem::infinite_dihedral();
        let c = HalfSpace::new(Element::identity(&a1), 0).crossing_set(&a1).unwrap();
        assert_eq!(c.link, GenSet::EMPTY);
        assert_eq!(c.members_up_to(&a1, 10).unwrap(), [el(&a1, "a")]);
        let d2 = CoxeterSystem::klein_four();
        let c = HalfSpace::new(Element::identity(&d2), 0).crossing_set(&d2).unwrap();
        assert_eq!(c.members_up_to(&d2, 10).unwrap(), [el(&d2, "a"), el(&d2, "a b")]);
    }

    #[test]
    fn shortest_element_examples() {
        let p5 = CoxeterSystem::polygon(5);
        for s in 0..5 {
            let h = HalfSpace::new(Element::identity(&p5), s);
            assert_eq!(h.shortest_element(&p5).unwrap(), Element::generator(&p5, s).unwrap());
        }
        let a1 = CoxeterSystem::infinite_dihedral();
        let h = HalfSpace::new(el(&a1, "b"), 0);
        assert_eq!(h.shortest_element(&a1).unwrap(), el(&a1, "b a"));
        let n = h.normalize(&a1).unwrap();
        assert!(n.is_normalized());
        assert_eq!(n.w(), &el(&a1, "b a a"));
    }

    #[test]
    fn half_space_containing_identity_has_identity_shortest() {
        let p5 = CoxeterSystem::polygon(5);
        let h = HalfSpace::new(el(&p5, "s1"), 0);
        assert!(h.contains(&p5, &Element::identity(&p5)).unwrap());
        assert!(h.shortest_element(&p5).unwrap().is_identity());
    }

    #[test]
    fn walls_identify_both_sides() {
        let p5 = CoxeterSystem::polygon(5);
        let h = HalfSpace::new(el(&p5, "s3"), 0);
        assert_eq!(h.wall(&p5).unwrap(), h.complement(&p5).unwrap().wall(&p5).unwrap());
        let walls = separating_walls(&p5, &Element::identity(&p5), &el(&p5, "s1 s3")).unwrap();
        assert_eq!(walls.len(), 2);
    }

    #[test]
    fn hull_examples() {
        let a1 = CoxeterSystem::infinite_dihedral();
        let one = Element::identity(&a1);
        let hull = convex_hull(&a1, &[one.clone(), el(&a1, "a")], Limits::default()).unwrap();
        assert_eq!(hull.len(), 2);
        let d2 = CoxeterSystem::klein_four();
        let hull = convex_hull(&d2, &[Element::identity(&d2), el(&d2, "a b")], Limits::default()).unwrap();
        assert_eq!(hull.len(), 4);
    }
}
