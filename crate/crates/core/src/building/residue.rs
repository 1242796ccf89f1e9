use crate::chamber::{ChamberId, ChamberSystem};
use crate::coxeter::{CoxeterSystem, ElemId, Gen, GenSet};
use crate::error::{Error, Result};
use crate::finite::FiniteBuilding;

use super::BuildingBall;

/// A spherical residue of a ball, as a finite building of type `W_T`.
#[derive(Clone, Debug)]
pub struct Residue {
    pub types: GenSet,
    /// Member chambers, sorted; chamber `i` of `building` is `chambers[i]`.
    pub chambers: Vec<ChamberId>,
    /// The unique chamber over the shortest element of `π(Res(x,T))`.
    pub shortest: ChamberId,
    /// Folded from `shortest`; generator `i` is the `i`-th member of `types`.
    pub building: FiniteBuilding,
}

impl BuildingBall {
    /// Shortest element of the coset `π(x) W_T`.
    pub fn coset_minimum_id(&self, w: ElemId, set: GenSet) -> ElemId {
        let mut w = w;
        while let Some(t) = self.ball().descents(w).intersection(set).iter().next() {
            w = self.ball().mul(w, t).expect("descents stay in the ball");
        }
        w
    }

    /// True when `Res(x,T)` lies inside the ball.
    pub fn residue_is_complete(&self, x: ChamberId, set: GenSet) -> bool {
        self.ball().length(self.coset_minimum_id(self.fold_id(x), set)) + set.len() <= self.radius()
    }

    /// Descends from `x` inside `Res(x,T)` to the chamber over the coset minimum.
    pub fn residue_shortest(&self, x: ChamberId, set: GenSet) -> ChamberId {
        let mut y = x;
        while let Some(t) = self.descents(y).intersection(set).iter().next() {
            y = self.lower(y, t).expect("(F1) holds in constructed balls");
        }
        y
    }

    /// Shortest chambers of all complete residues of type `set`, in id order.
    pub fn complete_residues(&self, set: GenSet) -> Vec<ChamberId> {
        (0..self.chamber_count())
            .filter(|&y| self.descents(y).intersection(set).is_empty() && self.length(y) + set.len() <= self.radius())
            .collect()
    }

    /// `Res(x,T)` for spherical `T`, refusing residues cut by the ball boundary.
    pub fn residue(&self, x: ChamberId, set: GenSet) -> Result<Residue> {
        let sys = self.system();
        if !sys.is_spherical(set) {
            return Err(Error::NotSpherical);
        }
        let low = self.coset_minimum_id(self.fold_id(x), set);
        let needed = self.ball().length(low) + set.len();
        if needed > self.radius() {
            return Err(Error::Truncated { chamber: x, needed, radius: self.radius() });
        }
        let chambers = self.residue_chambers(x, set);
        let shortest = self.residue_shortest(x, set);
        let types: Vec<Gen> = set.iter().collect();
        let sub = CoxeterSystem::new(
            types.iter().map(|&t| sys.name(t).to_string()),
            (0..types.len()).flat_map(|i| (i + 1..types.len()).map(move |j| (i, j))),
        )?;
        let local = |y: ChamberId| chambers.binary_search(&y).expect("residue is closed");
        let partitions: Vec<Vec<Vec<ChamberId>>> = types
            .iter()
            .map(|&t| {
                chambers
                    .iter()
                    .filter(|&&y| self.panel(y, t)[0] == y)
                    .map(|&y| self.panel(y, t).iter().map(|&z| local(z)).collect())
                    .collect()
            })
            .collect();
        let building = FiniteBuilding::from_partitions(&sub, chambers.len(), &partitions, local(shortest))?;
        Ok(Residue { types: set, chambers, shortest, building })
    }
}
