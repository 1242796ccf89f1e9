//! The ball of the universal cover of a product local building.
//!
//! A chamber over `w` is a gallery in `Y = ∏ Y_s` starting at the base
//! `(0, …, 0)` whose type is the canonical word of `w` and which moves at
//! every step. Such a gallery is recorded by its labels: the new value of
//! the coordinate changed at each step. Galleries whose types differ by
//! commuting letters are identified by permuting the labels along with the
//! letters, so labels are kept aligned with the canonical word.

use std::collections::HashMap;

use crate::chamber::{ChamberId, ChamberMap, Panels};
use crate::coxeter::{canonical_order, Ball, CoxeterSystem, ElemId, Limits};
use crate::error::Result;
use crate::finite::ProductBuilding;

use super::BuildingBall;

/// A covering-construction ball with its covering morphism.
#[derive(Clone, Debug)]
pub struct Covering {
    pub building: BuildingBall,
    pub local: ProductBuilding,
    /// Chamber of the ball to chamber of `local`.
    pub map: ChamberMap,
}

pub fn build_by_covering(sys: &CoxeterSystem, sizes: &[usize], radius: usize, limits: Limits) -> Result<Covering> {
    let local = ProductBuilding::local(sys, sizes)?;
    let ball = Ball::new(sys, radius, limits)?;
    let rank = sys.rank();

    let mut labels: Vec<Vec<usize>> = Vec::new();
    let mut fold: Vec<ElemId> = Vec::new();
    let mut ends: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<(ElemId, Vec<usize>), ChamberId> = HashMap::new();
    for w in 0..ball.len() as ElemId {
        let word: Vec<usize> = ball.element(w).letters().collect();
        let mut stack = vec![(Vec::new(), vec![0; rank])];
        let mut complete = Vec::new();
        // depth-first with choices pushed in reverse so labels come out in lex order
        while let Some((prefix, coords)) = stack.pop() {
            if prefix.len() == word.len() {
                complete.push((prefix, coords));
                continue;
            }
            let s = word[prefix.len()];
            for v in (0..sizes[s]).rev().filter(|&v| v != coords[s]) {
                let mut p = prefix.clone();
                p.push(v);
                let mut c = coords.clone();
                c[s] = v;
                stack.push((p, c));
            }
        }
        for (lab, coords) in complete {
            index.insert((w, lab.clone()), labels.len());
            labels.push(lab);
            fold.push(w);
            ends.push(coords);
            limits.check(labels.len(), "chambers")?;
        }
    }

    let mut partitions: Vec<Vec<Vec<ChamberId>>> = vec![Vec::new(); rank];
    for x in 0..labels.len() {
        let w = fold[x];
        for s in 0..rank {
            if ball.descents(w).contains(s) {
                continue;
            }
            let Some(ws) = ball.mul(w, s) else { continue };
            let mut word: Vec<u8> = ball.element(w).word().to_vec();
            word.push(s as u8);
            let order = canonical_order(sys, &word);
            let mut panel = vec![x];
            for c in (0..sizes[s]).filter(|&c| c != ends[x][s]) {
                let mut extended = labels[x].clone();
                extended.push(c);
                let key: Vec<usize> = order.iter().map(|&i| extended[i]).collect();
                panel.push(index[&(ws, key)]);
            }
            partitions[s].push(panel);
        }
    }
    let panels = Panels::from_partitions(rank, labels.len(), &partitions)?;
    let map = ChamberMap::new(ends.iter().map(|c| local.chamber(c).expect("coordinates in range")).collect());
    let q = sizes.iter().map(|&n| n - 1).collect();
    let building = BuildingBall::from_ids(ball, fold, panels, Some(q))?;
    Ok(Covering { building, local, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::{check_morphism, ChamberSystem};

    #[test]
    fn cover_examples() {
        let d2 = CoxeterSystem::klein_four();
        let c = build_by_covering(&d2, &[3, 3], 2, Limits::default()).unwrap();
        assert_eq!(c.building.chamber_count(), 9);
        assert!(c.map.is_injective());
        let p5 = CoxeterSystem::polygon(5);
        let c = build_by_covering(&p5, &[3; 5], 2, Limits::default()).unwrap();
        assert_eq!(c.building.chamber_count(), 71);
        check_morphism(&c.building, &c.local, &c.map).unwrap();
        let a1 = CoxeterSystem::infinite_dihedral();
        let c = build_by_covering(&a1, &[2, 2], 3, Limits::default()).unwrap();
        assert_eq!(c.building.chamber_count(), 7);
        assert_eq!(c.local.chamber_count(), 4);
        let image: std::collections::BTreeSet<_> = c.map.as_slice().iter().collect();
        assert_eq!(image.len(), 4);
    }
}
