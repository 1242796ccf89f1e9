//! Right-angled Coxeter groups through the Tits representation.
//!
//! `σ_s(v) = v − 2B(e_s, v) e_s` with `2B(e_s, e_t)` equal to 2, 0 or −2
//! for `s = t`, commuting and free pairs. The representation is faithful,
//! so group elements are integer matrices and the Cayley graph ball is a
//! plain breadth-first search.

use std::collections::HashMap;

type Matrix = Vec<i64>;

#[derive(Clone, Debug)]
pub struct TitsGroup {
    rank: usize,
    generators: Vec<Matrix>,
}

impl TitsGroup {
    /// `commuting` lists unordered pairs of distinct commuting generators.
    pub fn new(rank: usize, commuting: &[(usize, usize)]) -> Self {
        let form = |s: usize, t: usize| -> i64 {
            if s == t {
                2
            } else if commuting.contains(&(s, t)) || commuting.contains(&(t, s)) {
                0
            } else {
                -2
            }
        };
        let generators = (0..rank)
            .map(|s| {
                // column j of σ_s is σ_s(e_j) = e_j − 2B(e_s, e_j) e_s
                let mut m = identity(rank);
                for j in 0..rank {
                    m[s * rank + j] -= form(s, j);
                }
                m
            })
            .collect();
        TitsGroup { rank, generators }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn multiply(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let n = self.rank;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x != 0 {
                    for j in 0..n {
                        out[i * n + j] += x * b[k * n + j];
                    }
                }
            }
        }
        out
    }

    pub fn evaluate(&self, word: &[usize]) -> Matrix {
        word.iter().fold(identity(self.rank), |m, &s| self.multiply(&m, &self.generators[s]))
    }

    /// All elements of length at most `radius`, by breadth-first search,
    /// each with the first word that reached it.
    pub fn ball(&self, radius: usize) -> CayleyBall {
        let mut index: HashMap<Matrix, usize> = HashMap::new();
        let mut elements = vec![identity(self.rank)];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut lengths = vec![0];
        index.insert(elements[0].clone(), 0);
        let mut frontier = vec![0];
        for len in 1..=radius {
            let mut next = Vec::new();
            for &e in &frontier {
                for s in 0..self.rank {
                    let m = self.multiply(&elements[e], &self.generators[s]);
                    if !index.contains_key(&m) {
                        index.insert(m.clone(), elements.len());
                        let mut w = words[e].clone();
                        w.push(s);
                        next.push(elements.len());
                        elements.push(m);
                        words.push(w);
                        lengths.push(len);
                    }
                }
            }
            frontier = next;
        }
        let inverses = words.iter().map(|w| self.evaluate(&w.iter().rev().copied().collect::<Vec<_>>())).collect();
        CayleyBall { group: self.clone(), radius, index, elements, inverses, words, lengths }
    }
}

fn identity(n: usize) -> Matrix {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// A ball in the Cayley graph, elements in breadth-first order.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    group: TitsGroup,
    radius: usize,
    index: HashMap<Matrix, usize>,
    elements: Vec<Matrix>,
    inverses: Vec<Matrix>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
}

impl CayleyBall {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius + 1];
        for &l in &self.lengths {
            sizes[l] += 1;
        }
        sizes
    }

    pub fn word(&self, e: usize) -> &[usize] {
        &self.words[e]
    }

    pub fn length(&self, e: usize) -> usize {
        self.lengths[e]
    }

    /// Index of the element represented by `word`, if it lies in the ball.
    pub fn find(&self, word: &[usize]) -> Option<usize> {
        self.index.get(&self.group.evaluate(word)).copied()
    }

    /// Word length of the element `word` represents, if it lies in the ball.
    pub fn word_length(&self, word: &[usize]) -> Option<usize> {
        self.find(word).map(|e| self.lengths[e])
    }

    /// `e · s` if it lies in the ball.
    pub fn times(&self, e: usize, s: usize) -> Option<usize> {
        self.index.get(&self.group.multiply(&self.elements[e], &self.group.generators[s])).copied()
    }

    /// Distance `ℓ(u⁻¹ v)` for ball elements, if `u⁻¹ v` is in the ball.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let m = self.group.multiply(&self.inverses[u], &self.elements[v]);
        self.index.get(&m).map(|&e| self.lengths[e])
    }

    /// `{x : d(u,x) + d(x,v) = d(u,v)}` among ball elements.
    pub fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        let Some(d) = self.distance(u, v) else {
            return Vec::new();
        };
        // |ℓ(x) − ℓ(u)| ≤ d(u, x) prunes most of the ball
        (0..self.len())
            .filter(|&x| self.lengths[x] <= self.lengths[u] + d && self.lengths[u] <= self.lengths[x] + d)
            .filter(|&x| matches!((self.distance(u, x), self.distance(x, v)), (Some(a), Some(b)) if a + b == d))
            .collect()
    }

    /// Smallest interval-closed superset of `seeds` inside the ball.
    pub fn hull(&self, seeds: &[usize]) -> Vec<usize> {
        let mut set: Vec<usize> = seeds.to_vec();
        set.sort_unstable();
        set.dedup();
        loop {
            let mut grown = set.clone();
            for &a in &set {
                for &b in &set {
                    grown.extend(self.interval(a, b));
                }
            }
            grown.sort_unstable();
            grown.dedup();
            if grown == set {
                return set;
            }
            set = grown;
        }
    }

    /// Number of minimal galleries from the identity to `e`, by enumerating them.
    pub fn minimal_galleries(&self, e: usize) -> u64 {
        if self.lengths[e] == 0 {
            return 1;
        }
        (0..self.group.rank)
            .filter_map(|s| self.times(e, s))
            .filter(|&p| self.lengths[p] + 1 == self.lengths[e])
            .map(|p| self.minimal_galleries(p))
            .sum()
    }
}
