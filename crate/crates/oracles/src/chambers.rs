//! Chamber systems given as explicit panel partitions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// `panel[s][x]` is a label of the `s`-panel containing `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberData {
    pub count: usize,
    pub panel: Vec<Vec<usize>>,
}

/// Simplex counts of a realization, by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetCounts {
    pub vertices: usize,
    pub f_vector: Vec<usize>,
}

impl ChamberData {
    /// `adjacency(x, y, s)` for `x, y < count`.
    pub fn from_fn(count: usize, rank: usize, adjacent: impl Fn(usize, usize, usize) -> bool) -> Self {
        let panel = (0..rank)
            .map(|s| {
                let mut label = vec![usize::MAX; count];
                for x in 0..count {
                    if label[x] == usize::MAX {
                        for y in x..count {
                            if adjacent(x, y, s) {
                                label[y] = x;
                            }
                        }
                        label[x] = x;
                    }
                }
                label
            })
            .collect();
        ChamberData { count, panel }
    }

    /// The product of sets of the given sizes, coordinate 0 least significant.
    pub fn product(sizes: &[usize]) -> Self {
        let count: usize = sizes.iter().product();
        let digits = |mut x: usize| {
            sizes
                .iter()
                .map(|&n| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect::<Vec<_>>()
        };
        ChamberData::from_fn(count, sizes.len(), |x, y, s| {
            let (a, b) = (digits(x), digits(y));
            (0..sizes.len()).all(|t| t == s || a[t] == b[t])
        })
    }

    pub fn rank(&self) -> usize {
        self.panel.len()
    }

    pub fn adjacent(&self, x: usize, y: usize, s: usize) -> bool {
        self.panel[s][x] == self.panel[s][y]
    }

    pub fn panel_members(&self, x: usize, s: usize) -> Vec<usize> {
        (0..self.count).filter(|&y| self.adjacent(x, y, s)).collect()
    }

    pub fn distances(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.count];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for y in 0..self.count {
                if dist[y] == usize::MAX && (0..self.rank()).any(|s| self.adjacent(x, y, s)) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Residue of `x` of type `types` (a bit mask), by closure.
    pub fn residue(&self, x: usize, types: u64) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([x]);
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            for s in (0..self.rank()).filter(|s| types >> s & 1 == 1) {
                for z in self.panel_members(y, s) {
                    if seen.insert(z) {
                        queue.push(z);
                    }
                }
            }
        }
        seen
    }

    /// Counts chains in the poset of residues of the listed types
    /// (bit masks), ordered by inclusion, keeping only residues accepted
    /// by `keep`.
    pub fn residue_poset_counts(&self, types: &[u64], keep: impl Fn(&BTreeSet<usize>, u64) -> bool) -> PosetCounts {
        let mut residues: Vec<(u64, BTreeSet<usize>)> = Vec::new();
        for &t in types {
            let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            for x in 0..self.count {
                found.insert(self.residue(x, t));
            }
            residues.extend(found.into_iter().filter(|r| keep(r, t)).map(|r| (t, r)));
        }
        let below = |i: usize, j: usize| {
            let ((ti, ri), (tj, rj)) = (&residues[i], &residues[j]);
            i != j && (ti & tj) == *ti && ri.is_subset(rj) && (ti != tj || ri != rj)
        };
        let mut f: BTreeMap<usize, usize> = BTreeMap::new();
        // depth-first over chains, each grown upwards from its least element
        let mut stack: Vec<Vec<usize>> = (0..residues.len()).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            *f.entry(chain.len() - 1).or_default() += 1;
            let top = *chain.last().expect("non-empty");
            for j in 0..residues.len() {
                if below(top, j) {
                    let mut longer = chain.clone();
                    longer.push(j);
                    stack.push(longer);
                }
            }
        }
        PosetCounts { vertices: residues.len(), f_vector: f.into_values().collect() }
    }

    /// Sets `E` such that every minimal gallery from `base` to a member lies in `E`.
    pub fn star_like_sets(&self, base: usize) -> Vec<Vec<usize>> {
        assert!(self.count <= 16, "subset enumeration is exponential");
        let dist = self.distances(base);
        let mut out = Vec::new();
        for mask in 0u32..(1 << self.count) {
            let member = |x: usize| mask >> x & 1 == 1;
            let closed = (0..self.count).filter(|&x| member(x)).all(|x| {
                (0..self.count)
                    .filter(|&y| dist[y] + 1 == dist[x] && (0..self.rank()).any(|s| self.adjacent(x, y, s)))
                    .all(member)
            });
            if closed {
                out.push((0..self.count).filter(|&x| member(x)).collect());
            }
        }
        out
    }

    /// All maps `domain → target` preserving each adjacency relation.
    pub fn partial_morphisms(&self, domain: &[usize], target: &ChamberData) -> Vec<BTreeMap<usize, usize>> {
        let mut out = Vec::new();
        let mut current: Vec<(usize, usize)> = Vec::new();
        self.extend_partial(domain, target, &mut current, &mut out);
        out
    }

    fn extend_partial(
        &self,
        domain: &[usize],
        target: &ChamberData,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<BTreeMap<usize, usize>>,
    ) {
        let Some(&x) = domain.get(current.len()) else {
            out.push(current.iter().copied().collect());
            return;
        };
        for fx in 0..target.count {
            let ok = current
                .iter()
                .all(|&(y, fy)| (0..self.rank()).all(|s| !self.adjacent(x, y, s) || target.adjacent(fx, fy, s)));
            if ok {
                current.push((x, fx));
                self.extend_partial(domain, target, current, out);
                current.pop();
            }
        }
    }

    /// Distinct images of injective morphisms from the thin product `2^n`.
    pub fn apartments(&self) -> BTreeSet<BTreeSet<usize>> {
        let thin = ChamberData::product(&vec![2; self.rank()]);
        let all: Vec<usize> = (0..thin.count).collect();
        thin.partial_morphisms(&all, self)
            .into_iter()
            .map(|m| m.into_values().collect::<BTreeSet<usize>>())
            .filter(|image| image.len() == thin.count)
            .collect()
    }
}
