//! Chamber systems: sets of chambers with one equivalence relation `~_s` per
//! generator, and morphisms between them.

use std::borrow::Cow;
use std::collections::{BTreeSet, VecDeque};

use crate::coxeter::{Gen, GenSet};
use crate::error::{Error, Result};

pub type ChamberId = usize;

/// Read access to a chamber system with chambers `0..chamber_count()`.
pub trait ChamberSystem {
    fn rank(&self) -> usize;

    fn chamber_count(&self) -> usize;

    /// The `s`-panel `[x]_{~s}`, sorted, containing `x`.
    fn panel(&self, x: ChamberId, s: Gen) -> Cow<'_, [ChamberId]>;

    fn generator_name(&self, s: Gen) -> String {
        format!("#{s}")
    }

    fn adjacent(&self, x: ChamberId, y: ChamberId, s: Gen) -> bool {
        self.panel(x, s).binary_search(&y).is_ok()
    }

    /// Closure of `x` under `~_t` for `t ∈ set`, sorted.
    fn residue_chambers(&self, x: ChamberId, set: GenSet) -> Vec<ChamberId> {
        let mut seen = BTreeSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for t in set.iter() {
                for &z in self.panel(y, t).iter() {
                    if seen.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Gallery distance from `x` to every chamber (`usize::MAX` if unreachable).
    fn gallery_distances(&self, x: ChamberId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.chamber_count()];
        dist[x] = 0;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for s in 0..self.rank() {
                for &z in self.panel(y, s).iter() {
                    if dist[z] == usize::MAX {
                        dist[z] = dist[y] + 1;
                        queue.push_back(z);
                    }
                }
            }
        }
        dist
    }
}

/// Explicit panel partitions, one per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Panels {
    rank: usize,
    count: usize,
    /// `panel_of[x * rank + s]` is the index of `[x]_{~s}` in `members[s]`.
    panel_of: Vec<usize>,
    members: Vec<Vec<Vec<ChamberId>>>,
}

impl Panels {
    pub fn new(rank: usize) -> Self {
        Panels { rank, count: 0, panel_of: Vec::new(), members: vec![Vec::new(); rank] }
    }

    /// Builds panels from per-generator partitions given as lists of chamber lists.
    pub fn from_partitions(rank: usize, count: usize, partitions: &[Vec<Vec<ChamberId>>]) -> Result<Self> {
        let mut p = Panels::new(rank);
        p.count = count;
        p.panel_of = vec![usize::MAX; count * rank];
        for (s, classes) in partitions.iter().enumerate() {
            for class in classes {
                let idx = p.members[s].len();
                let mut sorted = class.clone();
                sorted.sort_unstable();
                for &x in &sorted {
                    if x >= count {
                        return Err(Error::Axiom(format!("panel mentions unknown chamber {x}")));
                    }
                    if p.panel_of[x * rank + s] != usize::MAX {
                        return Err(Error::Axiom(format!("chamber {x} lies in two panels of generator {s}")));
                    }
                    p.panel_of[x * rank + s] = idx;
                }
                p.members[s].push(sorted);
            }
        }
        for x in 0..count {
            for s in 0..rank {
                if p.panel_of[x * rank + s] == usize::MAX {
                    p.panel_of[x * rank + s] = p.members[s].len();
                    p.members[s].push(vec![x]);
                }
            }
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn chamber_count(&self) -> usize {
        self.count
    }

    /// Adds a chamber joining the `s`-panel of `y` for each `(s, y)` in
    /// `joins`; for the other generators it starts a singleton panel.
    pub fn push_chamber(&mut self, joins: &[(Gen, ChamberId)]) -> ChamberId {
        let x = self.chamber_count();
        for s in 0..self.rank {
            let idx = match joins.iter().find(|&&(t, _)| t == s) {
                Some(&(_, y)) => {
                    let idx = self.panel_of[y * self.rank + s];
                    self.members[s][idx].push(x);
                    idx
                }
                None => {
                    self.members[s].push(vec![x]);
                    self.members[s].len() - 1
                }
            };
            self.panel_of.push(idx);
        }
        self.count += 1;
        x
    }

    pub fn members(&self, x: ChamberId, s: Gen) -> &[ChamberId] {
        &self.members[s][self.panel_of[x * self.rank + s]]
    }

    /// All panels of generator `s` (including singletons).
    pub fn panels_of(&self, s: Gen) -> &[Vec<ChamberId>] {
        &self.members[s]
    }
}

/// A map of chambers `source → target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberMap {
    map: Vec<ChamberId>,
}

impl ChamberMap {
    pub fn new(map: Vec<ChamberId>) -> Self {
        ChamberMap { map }
    }

    pub fn identity(n: usize) -> Self {
        ChamberMap { map: (0..n).collect() }
    }

    pub fn apply(&self, x: ChamberId) -> ChamberId {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[ChamberId] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<_> = self.map.iter().collect();
        set.len() == self.map.len()
    }

    pub fn compose(&self, after: &ChamberMap) -> ChamberMap {
        ChamberMap { map: self.map.iter().map(|&y| after.map[y]).collect() }
    }
}

/// Everything a chooser may look at when a free image must be picked:
/// `chamber` lies in the `generator`-panel of `lower`, whose image is
/// already fixed, and its image must lie in `target_panel`.
#[derive(Clone, Copy, Debug)]
pub struct ChoiceContext<'a> {
    pub chamber: ChamberId,
    pub generator: Gen,
    pub lower: ChamberId,
    pub lower_image: ChamberId,
    pub source_panel: &'a [ChamberId],
    pub target_panel: &'a [ChamberId],
}

/// Resolves the free choices of a morphism construction.
///
/// Returning `None` aborts the construction. Implementations should be
/// functions of the context alone so that results do not depend on the
/// order in which panels are visited.
pub trait Chooser {
    fn choose(&mut self, ctx: &ChoiceContext<'_>) -> Option<ChamberId>;
}

impl<F: FnMut(&ChoiceContext<'_>) -> Option<ChamberId>> Chooser for F {
    fn choose(&mut self, ctx: &ChoiceContext<'_>) -> Option<ChamberId> {
        self(ctx)
    }
}

/// Sends the `i`-th chamber of `source_panel ∖ {lower}` to the `i`-th chamber
/// of `target_panel ∖ {lower_image}` (both in id order), wrapping around when
/// the target panel is smaller.
///
/// Visiting a panel in id order this is the least-unused-target rule, and it
/// is a bijection between panels of equal size.
#[derive(Clone, Copy, Debug, Default)]
pub struct RankChooser;

impl Chooser for RankChooser {
    fn choose(&mut self, ctx: &ChoiceContext<'_>) -> Option<ChamberId> {
        let rank = ctx.source_panel.iter().filter(|&&y| y != ctx.lower && y < ctx.chamber).count();
        let free: Vec<ChamberId> = ctx.target_panel.iter().copied().filter(|&y| y != ctx.lower_image).collect();
        (!free.is_empty()).then(|| free[rank % free.len()])
    }
}

/// Sends every free chamber of a panel to the least chamber of
/// `target_panel ∖ {lower_image}`; never injective on panels of size ≥ 3.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeastChooser;

impl Chooser for LeastChooser {
    fn choose(&mut self, ctx: &ChoiceContext<'_>) -> Option<ChamberId> {
        ctx.target_panel.iter().copied().find(|&y| y != ctx.lower_image)
    }
}

/// Checks that `map` preserves every `~_s`; on failure returns a witness.
pub fn check_morphism<X, Y>(source: &X, target: &Y, map: &ChamberMap) -> Result<()>
where
    X: ChamberSystem + ?Sized,
    Y: ChamberSystem + ?Sized,
{
    if map.len() != source.chamber_count() {
        return Err(Error::Invariant(format!("map has {} entries for {} chambers", map.len(), source.chamber_count())));
    }
    for x in 0..source.chamber_count() {
        let fx = map.apply(x);
        if fx >= target.chamber_count() {
            return Err(Error::Invariant(format!("chamber {x} maps outside the target")));
        }
        for s in 0..source.rank() {
            for &y in source.panel(x, s).iter() {
                let fy = map.apply(y);
                if !target.adjacent(fx, fy, s) {
                    return Err(Error::NotMorphism { x, y, fx, fy, generator: source.generator_name(s) });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_and_partition_agree() {
        let mut p = Panels::new(2);
        let a = p.push_chamber(&[]);
        let b = p.push_chamber(&[(0, a)]);
        let c = p.push_chamber(&[(1, b)]);
        assert_eq!(p.members(a, 0), &[a, b]);
        assert_eq!(p.members(c, 1), &[b, c]);
        assert_eq!(p.members(c, 0), &[c]);
        let q = Panels::from_partitions(2, 3, &[vec![vec![1, 0]], vec![vec![2, 1]]]).unwrap();
        assert_eq!(q.members(0, 0), p.members(0, 0));
        assert_eq!(q.members(2, 1), p.members(2, 1));
    }

    #[test]
    fn overlapping_partition_is_rejected() {
        assert!(Panels::from_partitions(1, 3, &[vec![vec![0, 1], vec![1, 2]]]).is_err());
    }
}
