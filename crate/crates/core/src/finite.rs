//! Finite right-angled buildings: product buildings, their recognition, and
//! the extension of morphisms from star-like sets.

use std::borrow::Cow;
use std::collections::{BTreeMap, VecDeque};

use crate::chamber::{check_morphism, ChamberId, ChamberMap, ChamberSystem, ChoiceContext, Chooser, Panels};
use crate::coxeter::{CoxeterSystem, Element, Gen, GenSet};
use crate::error::{Error, Result};

/// Chamber count above which full axiom verification is refused.
pub const AXIOM_CHECK_CAP: usize = 4096;

/// The product `∏ Y_s` with `Y_s = {0, …, sizes[s]-1}`; two chambers are
/// `t`-adjacent iff they agree off coordinate `t`.
///
/// Chamber ids are mixed-radix numbers with coordinate 0 least significant,
/// so the base chamber `(0, …, 0)` has id 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductBuilding {
    system: CoxeterSystem,
    sizes: Vec<usize>,
    strides: Vec<usize>,
    count: usize,
}

impl ProductBuilding {
    /// A product building over a system whose generators pairwise commute.
    pub fn new(system: &CoxeterSystem, sizes: &[usize]) -> Result<Self> {
        for s in 0..system.rank() {
            for t in s + 1..system.rank() {
                if !system.commute(s, t) {
                    return Err(Error::NonCommuting(system.name(s).into(), system.name(t).into()));
                }
            }
        }
        Self::local(system, sizes)
    }

    /// The product chamber system over any right-angled system: the local
    /// building whose universal cover is the regular building with
    /// `q_s = sizes[s] - 1`.
    pub fn local(system: &CoxeterSystem, sizes: &[usize]) -> Result<Self> {
        if sizes.len() != system.rank() {
            return Err(Error::Invariant(format!(
                "{} factor sizes given for {} generators",
                sizes.len(),
                system.rank()
            )));
        }
        let mut strides = Vec::with_capacity(sizes.len());
        let mut count: usize = 1;
        for (s, &n) in sizes.iter().enumerate() {
            if n < 2 {
                return Err(Error::Thickness { generator: system.name(s).into(), got: n, min: 2 });
            }
            strides.push(count);
            count = count.checked_mul(n).ok_or(Error::ResourceCap { what: "product chambers", limit: usize::MAX })?;
        }
        Ok(ProductBuilding { system: system.clone(), sizes: sizes.to_vec(), strides, count })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn base(&self) -> ChamberId {
        0
    }

    pub fn is_thick(&self) -> bool {
        self.sizes.iter().all(|&n| n >= 3)
    }

    pub fn coordinate(&self, x: ChamberId, s: Gen) -> usize {
        (x / self.strides[s]) % self.sizes[s]
    }

    pub fn coordinates(&self, x: ChamberId) -> Vec<usize> {
        (0..self.sizes.len()).map(|s| self.coordinate(x, s)).collect()
    }

    pub fn with_coordinate(&self, x: ChamberId, s: Gen, value: usize) -> ChamberId {
        x - self.coordinate(x, s) * self.strides[s] + value * self.strides[s]
    }

    pub fn chamber(&self, coords: &[usize]) -> Option<ChamberId> {
        if coords.len() != self.sizes.len() || coords.iter().zip(&self.sizes).any(|(&c, &n)| c >= n) {
            return None;
        }
        Some(coords.iter().zip(&self.strides).map(|(&c, &st)| c * st).sum())
    }

    /// `{s : x_s ≠ y_s}`; for commuting generators this is the folding map
    /// based at `x` evaluated at `y`.
    pub fn difference(&self, x: ChamberId, y: ChamberId) -> GenSet {
        (0..self.sizes.len()).filter(|&s| self.coordinate(x, s) != self.coordinate(y, s)).collect()
    }

    pub fn to_finite(&self) -> Result<FiniteBuilding> {
        let n = self.count;
        let partitions: Vec<Vec<Vec<ChamberId>>> = (0..self.sizes.len())
            .map(|s| (0..n).filter(|&x| self.coordinate(x, s) == 0).map(|x| self.panel(x, s).into_owned()).collect())
            .collect();
        FiniteBuilding::new(&self.system, Panels::from_partitions(self.sizes.len(), n, &partitions)?, 0)
    }
}

impl ChamberSystem for ProductBuilding {
    fn rank(&self) -> usize {
        self.sizes.len()
    }

    fn chamber_count(&self) -> usize {
        self.count
    }

    fn panel(&self, x: ChamberId, s: Gen) -> Cow<'_, [ChamberId]> {
        let first = self.with_coordinate(x, s, 0);
        Cow::Owned((0..self.sizes[s]).map(|v| first + v * self.strides[s]).collect())
    }

    fn generator_name(&self, s: Gen) -> String {
        self.system.name(s).to_string()
    }

    fn adjacent(&self, x: ChamberId, y: ChamberId, s: Gen) -> bool {
        y < self.count && self.with_coordinate(x, s, 0) == self.with_coordinate(y, s, 0)
    }
}

/// A finite building over a spherical right-angled system, given by explicit
/// panels and a base chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBuilding {
    system: CoxeterSystem,
    panels: Panels,
    base: ChamberId,
    fold: Vec<GenSet>,
}

impl FiniteBuilding {
    /// Checks connectivity and that the folding map based at `base` is well
    /// defined; [`FiniteBuilding::check_axioms`] performs the full check.
    pub fn new(system: &CoxeterSystem, panels: Panels, base: ChamberId) -> Result<Self> {
        if panels.rank() != system.rank() {
            return Err(Error::Invariant("panel structure and system have different ranks".into()));
        }
        for s in 0..system.rank() {
            for t in s + 1..system.rank() {
                if !system.commute(s, t) {
                    return Err(Error::NonCommuting(system.name(s).into(), system.name(t).into()));
                }
            }
        }
        if base >= panels.chamber_count() {
            return Err(Error::Invariant(format!("base chamber {base} does not exist")));
        }
        let mut b = FiniteBuilding { system: system.clone(), panels, base, fold: Vec::new() };
        b.fold = fold_from(&b, base)?;
        Ok(b)
    }

    pub fn from_partitions(
        system: &CoxeterSystem,
        count: usize,
        partitions: &[Vec<Vec<ChamberId>>],
        base: ChamberId,
    ) -> Result<Self> {
        Self::new(system, Panels::from_partitions(system.rank(), count, partitions)?, base)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn base(&self) -> ChamberId {
        self.base
    }

    pub fn panels(&self) -> &Panels {
        &self.panels
    }

    /// `π(x)` as the set of letters of the (commuting) word.
    pub fn fold(&self, x: ChamberId) -> GenSet {
        self.fold[x]
    }

    pub fn fold_element(&self, x: ChamberId) -> Element {
        self.system.normalize_unchecked(self.fold[x].iter())
    }

    /// Same building, folded from another base chamber.
    pub fn rebased(&self, base: ChamberId) -> Result<Self> {
        Self::new(&self.system, self.panels.clone(), base)
    }

    /// Full axiom check: every panel has at least two chambers and the
    /// chamber system is isomorphic to a product building.
    pub fn check_axioms(&self) -> Result<()> {
        decompose_as_product(self).map(|_| ())
    }
}

impl ChamberSystem for FiniteBuilding {
    fn rank(&self) -> usize {
        self.panels.rank()
    }

    fn chamber_count(&self) -> usize {
        self.panels.chamber_count()
    }

    fn panel(&self, x: ChamberId, s: Gen) -> Cow<'_, [ChamberId]> {
        Cow::Borrowed(self.panels.members(x, s))
    }

    fn generator_name(&self, s: Gen) -> String {
        self.system.name(s).to_string()
    }
}

/// The folding map of a finite right-angled building based at `c`, as
/// letter sets; fails if the chamber system admits no such folding.
///
/// Each `s`-panel must fold onto a pair `{w, ws}` with exactly one chamber
/// over the shorter element.
pub fn fold_from<X: ChamberSystem + ?Sized>(x: &X, c: ChamberId) -> Result<Vec<GenSet>> {
    let n = x.chamber_count();
    let mut fold: Vec<Option<GenSet>> = vec![None; n];
    fold[c] = Some(GenSet::EMPTY);
    let mut queue = VecDeque::from([c]);
    while let Some(y) = queue.pop_front() {
        let fy = fold[y].expect("queued chambers are folded");
        for s in 0..x.rank() {
            for &z in x.panel(y, s).iter() {
                if fold[z].is_none() {
                    let mut fz = fy;
                    fz.insert(s);
                    fold[z] = Some(fz);
                    queue.push_back(z);
                }
            }
        }
    }
    let fold: Vec<GenSet> = fold
        .into_iter()
        .enumerate()
        .map(|(z, f)| f.ok_or_else(|| Error::Axiom(format!("chamber {z} is not gallery connected to {c}"))))
        .collect::<Result<_>>()?;
    for z in 0..n {
        for s in 0..x.rank() {
            let panel = x.panel(z, s);
            if panel[0] != z {
                continue;
            }
            let low: Vec<ChamberId> = panel.iter().copied().filter(|&y| !fold[y].contains(s)).collect();
            let ok = match low.as_slice() {
                &[l] => {
                    let mut up = fold[l];
                    up.insert(s);
                    panel.iter().all(|&y| y == l || fold[y] == up)
                }
                _ => false,
            };
            if !ok {
                return Err(Error::Axiom(format!(
                    "no folding based at {c}: the {}-panel of {z} does not fold onto an edge",
                    x.generator_name(s)
                )));
            }
        }
    }
    Ok(fold)
}

/// Extends `psi`, defined on a star-like set `E ∋ B`, to a morphism `X → Y`.
///
/// On `[B]_s ∖ E` the images are picked by `chooser`; everything farther
/// out is forced. When `E` is empty the base goes to `base_image`.
pub fn extend_morphism<Y: ChamberSystem + ?Sized>(
    x: &FiniteBuilding,
    psi: &BTreeMap<ChamberId, ChamberId>,
    target: &Y,
    base_image: ChamberId,
    chooser: &mut dyn Chooser,
) -> Result<ChamberMap> {
    let b = x.base();
    let dist = x.gallery_distances(b);
    if !psi.is_empty() {
        if !psi.contains_key(&b) {
            return Err(Error::NotStarLike { chamber: *psi.keys().next().expect("non-empty"), missing: b });
        }
        for &e in psi.keys() {
            if let Some(missing) = lower_neighbours(x, &dist, e).find(|y| !psi.contains_key(y)) {
                return Err(Error::NotStarLike { chamber: e, missing });
            }
        }
        for (&e, &fe) in psi {
            for s in 0..x.rank() {
                for &f in x.panel(e, s).iter() {
                    if let Some(&ff) = psi.get(&f) {
                        if !target.adjacent(fe, ff, s) {
                            return Err(Error::NotMorphism {
                                x: e,
                                y: f,
                                fx: fe,
                                fy: ff,
                                generator: x.generator_name(s),
                            });
                        }
                    }
                }
            }
        }
    }
    let c = psi.get(&b).copied().unwrap_or(base_image);
    if c >= target.chamber_count() {
        return Err(Error::Invariant(format!("base image {c} is not a chamber of the target")));
    }

    let mut order: Vec<ChamberId> = (0..x.chamber_count()).collect();
    order.sort_by_key(|&z| (dist[z], z));
    let mut phi: Vec<Option<ChamberId>> = vec![None; x.chamber_count()];
    phi[b] = Some(c);
    for &z in &order[1..] {
        let lowers: Vec<(Gen, ChamberId)> = (0..x.rank())
            .filter_map(|t| {
                let l: Vec<ChamberId> = x.panel(z, t).iter().copied().filter(|&y| dist[y] + 1 == dist[z]).collect();
                match l.len() {
                    0 => None,
                    1 => Some(Ok((t, l[0]))),
                    _ => Some(Err(Error::Axiom(format!(
                        "chamber {z} has two lower neighbours in its {}-panel",
                        x.generator_name(t)
                    )))),
                }
            })
            .collect::<Result<_>>()?;
        let image = if dist[z] == 1 {
            let &[(s, _)] = lowers.as_slice() else {
                return Err(Error::Axiom(format!("chamber {z} is adjacent to the base in two ways")));
            };
            match psi.get(&z) {
                Some(&fz) => fz,
                None => {
                    let target_panel = target.panel(c, s);
                    let ctx = ChoiceContext {
                        chamber: z,
                        generator: s,
                        lower: b,
                        lower_image: c,
                        source_panel: &x.panel(b, s),
                        target_panel: &target_panel,
                    };
                    let chosen = chooser.choose(&ctx).ok_or(Error::ChooserDeclined { chamber: z })?;
                    if target_panel.binary_search(&chosen).is_err() {
                        return Err(Error::ChooserOutside { chosen, base: c, generator: x.generator_name(s) });
                    }
                    chosen
                }
            }
        } else {
            if lowers.len() < 2 {
                return Err(Error::Axiom(format!("chamber {z} at distance {} has a single lower neighbour", dist[z])));
            }
            let forced = forced_image(target, lowers.iter().map(|&(t, y)| (t, phi[y].expect("lower chambers first"))))
                .ok_or(Error::NoForcedImage { chamber: z })?;
            if let Some(&fz) = psi.get(&z) {
                if fz != forced {
                    return Err(Error::Invariant(format!("forced image of {z} disagrees with the given map")));
                }
            }
            forced
        };
        phi[z] = Some(image);
    }
    let map = ChamberMap::new(phi.into_iter().map(|f| f.expect("every chamber visited")).collect());
    check_morphism(x, target, &map)?;
    Ok(map)
}

fn lower_neighbours<'a>(
    x: &'a FiniteBuilding,
    dist: &'a [usize],
    e: ChamberId,
) -> impl Iterator<Item = ChamberId> + 'a {
    (0..x.rank())
        .flat_map(move |s| x.panel(e, s).iter().copied().filter(move |&y| dist[y] + 1 == dist[e]).collect::<Vec<_>>())
}

/// The unique chamber `t`-adjacent to `y_t` for every given `(t, y_t)`.
pub fn forced_image<Y: ChamberSystem + ?Sized>(
    target: &Y,
    mut constraints: impl Iterator<Item = (Gen, ChamberId)>,
) -> Option<ChamberId> {
    let (t0, y0) = constraints.next()?;
    let mut candidates: Vec<ChamberId> = target.panel(y0, t0).into_owned();
    for (t, y) in constraints {
        candidates.retain(|&z| target.adjacent(y, z, t));
    }
    match candidates.as_slice() {
        &[z] => Some(z),
        _ => None,
    }
}

/// Recognizes a finite building as `∏_s [B]_s`.
///
/// Returns the product (factor `s` indexed by `[B]_s` in id order, `B` first)
/// and the isomorphism onto it. Fails with a witness if the input is not a
/// building.
pub fn decompose_as_product(b: &FiniteBuilding) -> Result<(ProductBuilding, ChamberMap)> {
    let n = b.chamber_count();
    if n > AXIOM_CHECK_CAP {
        return Err(Error::ResourceCap { what: "chambers for axiom verification", limit: AXIOM_CHECK_CAP });
    }
    let base = b.base();
    for s in 0..b.rank() {
        for panel in b.panels().panels_of(s) {
            if panel.len() < 2 {
                return Err(Error::Axiom(format!(
                    "chamber {} has a {}-panel with a single chamber",
                    panel[0],
                    b.generator_name(s)
                )));
            }
        }
    }
    let factors: Vec<Vec<ChamberId>> = (0..b.rank())
        .map(|s| {
            let mut f = vec![base];
            f.extend(b.panel(base, s).iter().copied().filter(|&y| y != base));
            f
        })
        .collect();
    let sizes: Vec<usize> = factors.iter().map(Vec::len).collect();
    let product = ProductBuilding::new(b.system(), &sizes)?;
    let mut psi = BTreeMap::from([(base, product.base())]);
    for (s, f) in factors.iter().enumerate() {
        for (i, &y) in f.iter().enumerate().skip(1) {
            psi.insert(y, product.with_coordinate(product.base(), s, i));
        }
    }
    let mut never = |_: &ChoiceContext<'_>| None;
    let map = extend_morphism(b, &psi, &product, product.base(), &mut never)?;
    if n != product.chamber_count() {
        return Err(Error::Axiom(format!(
            "{n} chambers but the product of the base panels has {}",
            product.chamber_count()
        )));
    }
    let mut inverse = vec![usize::MAX; n];
    for x in 0..n {
        let y = map.apply(x);
        if inverse[y] != usize::MAX {
            return Err(Error::Axiom(format!("chambers {} and {x} are not separated by the base panels", inverse[y])));
        }
        inverse[y] = x;
    }
    check_morphism(&product, b, &ChamberMap::new(inverse))?;
    Ok((product, map))
}

/// Checks `π_Y(φ(z)) = π_X(z)` for all `z`, with `π_X` based at `at` and
/// `π_Y` based at `φ(at)`. Returns the first violating chamber.
pub fn pi_equivariance_check<X, Y>(source: &X, at: ChamberId, target: &Y, map: &ChamberMap) -> Result<Option<ChamberId>>
where
    X: ChamberSystem + ?Sized,
    Y: ChamberSystem + ?Sized,
{
    let fx = fold_from(source, at)?;
    let fy = fold_from(target, map.apply(at))?;
    Ok((0..source.chamber_count()).find(|&z| fy[map.apply(z)] != fx[z]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::{LeastChooser, RankChooser};

    fn product(sizes: &[usize]) -> ProductBuilding {
        ProductBuilding::new(&CoxeterSystem::finite(sizes.len()), sizes).unwrap()
    }

    #[test]
    fn product_panels_and_coordinates() {
        let p = product(&[3, 2]);
        assert_eq!(p.chamber_count(), 6);
        assert_eq!(p.coordinates(5), [2, 1]);
        assert_eq!(p.panel(4, 0).as_ref(), &[3, 4, 5]);
        assert_eq!(p.panel(4, 1).as_ref(), &[1, 4]);
        assert!(p.adjacent(3, 5, 0) && !p.adjacent(3, 5, 1));
        assert!(!p.is_thick() && product(&[3, 3]).is_thick());
        assert!(ProductBuilding::new(&CoxeterSystem::infinite_dihedral(), &[2, 2]).is_err());
        assert!(ProductBuilding::local(&CoxeterSystem::infinite_dihedral(), &[2, 2]).is_ok());
        assert!(matches!(product_err(&[1, 3]), Error::Thickness { got: 1, .. }));
    }

    fn product_err(sizes: &[usize]) -> Error {
        ProductBuilding::new(&CoxeterSystem::finite(sizes.len()), sizes).unwrap_err()
    }

    #[test]
    fn decomposition_round_trip() {
        let p = product(&[3, 2]);
        let (q, map) = decompose_as_product(&p.to_finite().unwrap()).unwrap();
        assert_eq!(q.sizes(), &[3, 2]);
        assert_eq!(map, ChamberMap::identity(6));
        let single = product(&[4]).to_finite().unwrap();
        assert_eq!(decompose_as_product(&single).unwrap().0.sizes(), &[4]);
    }

    #[test]
    fn non_building_is_rejected() {
        // a hexagon with alternating labels is a thin A2-like chamber system, not (Z/2)^2
        let sys = CoxeterSystem::finite(2);
        let parts = vec![vec![vec![0, 1], vec![2, 3], vec![4, 5]], vec![vec![1, 2], vec![3, 4], vec![5, 0]]];
        let b = FiniteBuilding::from_partitions(&sys, 6, &parts, 0);
        assert!(b.is_err() || decompose_as_product(&b.unwrap()).is_err());
    }

    #[test]
    fn extension_from_empty_set() {
        let p = product(&[3, 2]);
        let x = p.to_finite().unwrap();
        let iso = extend_morphism(&x, &BTreeMap::new(), &p, 0, &mut RankChooser).unwrap();
        assert!(iso.is_injective());
        let collapsed = extend_morphism(&x, &BTreeMap::new(), &p, 0, &mut LeastChooser).unwrap();
        assert!(!collapsed.is_injective());
        let from_b = extend_morphism(&x, &BTreeMap::from([(0, 5)]), &p, 0, &mut RankChooser).unwrap();
        assert_eq!(from_b.apply(0), 5);
    }

    #[test]
    fn star_like_and_morphism_preconditions() {
        let p = product(&[2, 2]);
        let x = p.to_finite().unwrap();
        let err = extend_morphism(&x, &BTreeMap::from([(0, 0), (3, 3)]), &p, 0, &mut RankChooser).unwrap_err();
        assert!(matches!(err, Error::NotStarLike { chamber: 3, .. }));
        let err = extend_morphism(&x, &BTreeMap::from([(0, 0), (1, 2)]), &p, 0, &mut RankChooser).unwrap_err();
        assert!(matches!(err, Error::NotMorphism { .. }));
        let mut outside = |_: &ChoiceContext<'_>| Some(3);
        let err = extend_morphism(&x, &BTreeMap::new(), &p, 0, &mut outside).unwrap_err();
        assert!(matches!(err, Error::ChooserOutside { chosen: 3, .. }));
    }

    #[test]
    fn equivariance_witness() {
        let p = product(&[3, 3]);
        let x = p.to_finite().unwrap();
        assert_eq!(pi_equivariance_check(&x, 0, &x, &ChamberMap::identity(9)).unwrap(), None);
        // collapse the s1-panel of the base onto the base itself
        let mut to_base = |ctx: &ChoiceContext<'_>| Some(ctx.lower_image);
        let m = extend_morphism(&x, &BTreeMap::new(), &p, 0, &mut to_base).unwrap();
        assert_eq!(pi_equivariance_check(&x, 0, &p, &m).unwrap(), Some(1));
    }
}
