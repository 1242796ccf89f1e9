use std::collections::BTreeMap;

use crate::building::BuildingBall;
use crate::chamber::{ChamberId, ChamberSystem};
use crate::coxeter::{CoxeterSystem, GenSet};
use crate::error::{Error, Result};
use crate::finite::{FiniteBuilding, ProductBuilding};

use super::SimplicialComplex;

/// A vertex of a realization: the residue of type `types` whose
/// representative chamber is `chamber` (the shortest one in a ball, the
/// least id in a finite building).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueVertex {
    pub types: GenSet,
    pub chamber: ChamberId,
}

/// The realization of the poset of spherical residues lying entirely
/// inside the ball, with the residues as vertex list.
pub fn realize(b: &BuildingBall) -> Result<(SimplicialComplex, Vec<ResidueVertex>)> {
    realize_poset(b, b.system(), |c, set| b.residue_is_complete(c, set), |c, set| b.residue_shortest(c, set))
}

/// The realization of the poset of all residues of a finite building.
pub fn realize_finite(f: &FiniteBuilding) -> Result<(SimplicialComplex, Vec<ResidueVertex>)> {
    realize_poset(f, f.system(), |_, _| true, |c, set| f.residue_chambers(c, set)[0])
}

fn realize_poset<X: ChamberSystem + ?Sized>(
    x: &X,
    sys: &CoxeterSystem,
    complete: impl Fn(ChamberId, GenSet) -> bool,
    representative: impl Fn(ChamberId, GenSet) -> ChamberId,
) -> Result<(SimplicialComplex, Vec<ResidueVertex>)> {
    let mut sets = sys.spherical_subsets();
    sets.sort_by_key(|s| (s.len(), s.0));
    let mut vertices = Vec::new();
    for &set in &sets {
        for c in 0..x.chamber_count() {
            if complete(c, set) && representative(c, set) == c {
                vertices.push(ResidueVertex { types: set, chamber: c });
            }
        }
    }
    let index: BTreeMap<ResidueVertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // a chain is fixed by its least residue and the types above it
    let mut chains = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        let above: Vec<usize> = sets
            .iter()
            .filter(|&&t| t != v.types && v.types.is_subset(t) && complete(v.chamber, t))
            .map(|&t| index[&ResidueVertex { types: t, chamber: representative(v.chamber, t) }])
            .collect();
        // maximal chains through v starting at v
        let mut stack = vec![vec![i]];
        while let Some(chain) = stack.pop() {
            let top = vertices[*chain.last().expect("non-empty")].types;
            let next: Vec<usize> = above
                .iter()
                .copied()
                .filter(|&j| vertices[j].types != top && top.is_subset(vertices[j].types))
                .collect();
            if next.is_empty() {
                chains.push(chain);
            } else {
                for j in next {
                    let mut longer = chain.clone();
                    longer.push(j);
                    stack.push(longer);
                }
            }
        }
    }
    let labels = vertices.iter().map(|v| format!("{}@{}", sys.format_set(v.types), v.chamber)).collect();
    Ok((SimplicialComplex::from_simplices(labels, chains)?, vertices))
}

/// The join of the sets `Y_s ∖ {base_s}` over the factors of a product
/// building: one vertex per non-base coordinate value, one simplex per
/// partial tuple.
pub fn antipodal_subcomplex(p: &ProductBuilding, base: ChamberId) -> Result<SimplicialComplex> {
    if base >= p.chamber_count() {
        return Err(Error::Invariant(format!("chamber {base} is not in the product")));
    }
    let sys = p.system();
    let origin = p.coordinates(base);
    let mut labels = Vec::new();
    let mut factors: Vec<Vec<usize>> = Vec::new();
    for (s, &size) in p.sizes().iter().enumerate() {
        let mut ids = Vec::new();
        for value in (0..size).filter(|&v| v != origin[s]) {
            ids.push(labels.len());
            labels.push(format!("{}={value}", sys.name(s)));
        }
        if !ids.is_empty() {
            factors.push(ids);
        }
    }
    let mut facets: Vec<Vec<usize>> = vec![Vec::new()];
    for ids in &factors {
        facets = facets.iter().flat_map(|f| ids.iter().map(move |&v| [f.as_slice(), &[v]].concat())).collect();
    }
    SimplicialComplex::from_simplices(labels, facets)
}
