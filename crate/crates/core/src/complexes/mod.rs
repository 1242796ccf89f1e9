//! Finite simplicial complexes: realizations of residue posets, the join
//! complexes sitting inside finite products, and integer homology.

mod chain;
mod realize;
mod snf;

pub use chain::{homology, ChainComplex, Homology, HomologyGroup};
pub use realize::{antipodal_subcomplex, realize, realize_finite, ResidueVertex};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A labelled abstract simplicial complex, stored with all faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    /// `simplices[j]` holds the `j`-simplices as sorted vertex lists, sorted.
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// The downward closure of `generators` on vertices `0..labels.len()`.
    pub fn from_simplices(labels: Vec<String>, generators: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut g in generators {
            g.sort_unstable();
            g.dedup();
            if let Some(&v) = g.iter().find(|&&v| v >= labels.len()) {
                return Err(Error::Invariant(format!("simplex mentions unknown vertex {v}")));
            }
            if g.is_empty() || faces.contains(&g) {
                continue;
            }
            // every non-empty subset, as bit masks over the simplex
            if g.len() > 20 {
                return Err(Error::ResourceCap { what: "vertices in one simplex", limit: 20 });
            }
            for mask in 1u32..(1 << g.len()) {
                faces.insert(g.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        for v in 0..labels.len() {
            faces.insert(vec![v]);
        }
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in faces {
            let d = f.len() - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            simplices[d].push(f);
        }
        for level in &mut simplices {
            level.sort_unstable();
        }
        Ok(SimplicialComplex { labels, simplices })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.simplices.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Facets: simplices that are not faces of larger ones.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut covered: BTreeSet<&[usize]> = BTreeSet::new();
        let mut out = Vec::new();
        for d in (0..self.simplices.len()).rev() {
            for s in &self.simplices[d] {
                if !covered.contains(s.as_slice()) {
                    out.push(s.clone());
                }
            }
            if d > 0 {
                for s in &self.simplices[d] {
                    for i in 0..s.len() {
                        let face: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                        if let Some(f) =
                            self.simplices[d - 1].binary_search(&face).ok().map(|k| &self.simplices[d - 1][k])
                        {
                            covered.insert(f.as_slice());
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The same complex with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Invariant("relabelling is not a permutation of the vertices".into()));
        }
        let mut labels = vec![String::new(); n];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        let facets = self.maximal_simplices().into_iter().map(|s| s.iter().map(|&v| perm[v]).collect());
        SimplicialComplex::from_simplices(labels, facets)
    }

    /// Every face is present for every simplex.
    pub fn is_closed(&self) -> bool {
        (1..self.simplices.len()).all(|d| {
            self.simplices[d].iter().all(|s| {
                (0..s.len()).all(|i| {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                    self.simplices[d - 1].binary_search(&face).is_ok()
                })
            })
        })
    }

    /// One simplex per line as space-separated vertex ids, by dimension and
    /// then lexicographically, preceded by `# v label` lines.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (v, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "# {v} {l}");
        }
        for level in &self.simplices {
            for s in level {
                let ids: Vec<String> = s.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}", ids.join(" "));
            }
        }
        out
    }

    /// Reads simplex lines (faces may be omitted); `# v label` lines name vertices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut named: Vec<(usize, String)> = Vec::new();
        let mut top = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |message: String| Error::Parse { line: i + 1, message };
            if let Some(rest) = line.strip_prefix('#') {
                let (v, label) = rest.trim().split_once(' ').unwrap_or((rest.trim(), ""));
                if let Ok(v) = v.parse::<usize>() {
                    top = top.max(v + 1);
                    named.push((v, label.trim().to_string()));
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let s = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad vertex `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            top = top.max(s.iter().max().map_or(0, |m| m + 1));
            generators.push(s);
        }
        let mut labels: Vec<String> = (0..top).map(|v| v.to_string()).collect();
        for (v, l) in named {
            if !l.is_empty() {
                labels[v] = l;
            }
        }
        SimplicialComplex::from_simplices(labels, generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_simplices(
            vec!["a".into(), "b".into(), "c".into()],
            [vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap()
    }

    #[test]
    fn closure_and_counts() {
        let c = SimplicialComplex::from_simplices(vec![String::new(); 4], [vec![2, 0, 1], vec![3]]).unwrap();
        assert_eq!(c.f_vector(), [4, 3, 1]);
        assert!(c.is_closed());
        assert_eq!(c.maximal_simplices(), [vec![0, 1, 2], vec![3]]);
        assert_eq!(c.euler_characteristic(), 2);
        assert_eq!(triangle_boundary().euler_characteristic(), 0);
    }

    #[test]
    fn export_round_trip_and_relabel() {
        let c = triangle_boundary();
        assert_eq!(SimplicialComplex::parse(&c.export()).unwrap(), c);
        let r = c.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(r.label(2), "a");
        assert_eq!(r.f_vector(), c.f_vector());
        assert!(c.relabel(&[0, 0, 1]).is_err());
    }
}
