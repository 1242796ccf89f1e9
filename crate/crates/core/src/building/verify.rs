//! Exhaustive checks of the standard-building axioms on a ball.

use std::fmt;
use std::str::FromStr;

use crate::chamber::{ChamberId, ChamberSystem};
use crate::coxeter::{ElemId, GenSet};
use crate::error::Error;
use crate::finite::{decompose_as_product, fold_from};

use super::{build_section, BuildingBall};

/// One family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Unique `x^t` for every `t ∈ In(π(x))`.
    F1,
    /// Minimal galleries from `B` fold to minimal galleries and lift uniquely.
    F2,
    /// Every complete spherical residue has a unique shortest chamber.
    F3,
    /// Folding is a morphism onto the ball with `π⁻¹(1) = {B}`; panels are
    /// non-trivial; top residues are product buildings folded by
    /// `(w w_T)⁻¹ π`; panel sizes are constant along complete residues.
    Axioms,
    /// Every complete `s`-panel has `q_s + 1` chambers (regular balls only).
    Thickness,
    /// An apartment through `B` and `x` exists for every chamber `x`.
    B1,
}

impl Check {
    pub const ALL: [Check; 6] = [Check::F1, Check::F2, Check::F3, Check::Axioms, Check::Thickness, Check::B1];

    pub fn name(self) -> &'static str {
        match self {
            Check::F1 => "f1",
            Check::F2 => "f2",
            Check::F3 => "f3",
            Check::Axioms => "axioms",
            Check::Thickness => "q",
            Check::B1 => "b1",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}` (expected one of f1, f2, f3, axioms, q, b1)"))
    }
}

/// Result of one check: how many instances were examined and the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn verify(b: &BuildingBall, checks: &[Check]) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|&check| {
            let mut checked = 0;
            let failure = match check {
                Check::F1 => check_f1(b, &mut checked),
                Check::F2 => check_f2(b, &mut checked),
                Check::F3 => check_f3(b, &mut checked),
                Check::Axioms => check_axioms(b, &mut checked),
                Check::Thickness => check_thickness(b, &mut checked),
                Check::B1 => check_b1(b, &mut checked),
            }
            .err();
            CheckOutcome { check, checked, failure }
        })
        .collect()
}

type Outcome = Result<(), String>;

fn check_f1(b: &BuildingBall, checked: &mut usize) -> Outcome {
    let ball = b.ball();
    for x in 0..b.chamber_count() {
        for t in b.descents(x).iter() {
            *checked += 1;
            let below = ball.mul(b.fold_id(x), t).expect("descent");
            let n = b.panel(x, t).iter().filter(|&&y| b.fold_id(y) == below).count();
            if n != 1 {
                return Err(format!(
                    "chamber {x}: {n} chambers of its {}-panel fold onto π(x){}",
                    b.generator_name(t),
                    b.generator_name(t)
                ));
            }
        }
    }
    Ok(())
}

fn check_f2(b: &BuildingBall, checked: &mut usize) -> Outcome {
    let ball = b.ball();
    let dist = b.gallery_distances(b.base());
    // number of minimal galleries from 1 to each element
    let mut in_w = vec![0u128; ball.len()];
    in_w[0] = 1;
    for w in 1..ball.len() {
        in_w[w] =
            ball.descents(w as ElemId).iter().map(|t| in_w[ball.mul(w as ElemId, t).expect("descent") as usize]).sum();
    }
    let mut order: Vec<ChamberId> = (0..b.chamber_count()).collect();
    order.sort_by_key(|&x| (dist[x], x));
    let mut in_x = vec![0u128; b.chamber_count()];
    for &x in &order {
        *checked += 1;
        if dist[x] != b.length(x) {
            return Err(format!(
                "chamber {x} is at gallery distance {} from the base but folds to length {}",
                dist[x],
                b.length(x)
            ));
        }
        if x == b.base() {
            in_x[x] = 1;
            continue;
        }
        // each lower neighbour contributes its galleries once, through the panel joining them
        let mut total = 0;
        for s in 0..b.rank() {
            for &y in b.panel(x, s).iter() {
                if dist[y] + 1 == dist[x] {
                    total += in_x[y];
                }
            }
        }
        in_x[x] = total;
        if total != in_w[b.fold_id(x) as usize] {
            return Err(format!(
                "chamber {x}: {total} minimal galleries from the base, but {} to its fold",
                in_w[b.fold_id(x) as usize]
            ));
        }
    }
    Ok(())
}

fn check_f3(b: &BuildingBall, checked: &mut usize) -> Outcome {
    for set in b.system().spherical_subsets() {
        if set.is_empty() {
            continue;
        }
        for y in b.complete_residues(set) {
            *checked += 1;
            let members = b.residue_chambers(y, set);
            let min = members.iter().map(|&z| b.length(z)).min().expect("non-empty");
            let shortest: Vec<_> = members.iter().filter(|&&z| b.length(z) == min).collect();
            if shortest.len() != 1 {
                return Err(format!(
                    "residue of type {} at {y} has {} shortest chambers",
                    b.system().format_set(set),
                    shortest.len()
                ));
            }
        }
    }
    Ok(())
}

fn check_axioms(b: &BuildingBall, checked: &mut usize) -> Outcome {
    let ball = b.ball();
    let sys = b.system();
    for w in 0..ball.len() {
        if b.fiber(w as ElemId).is_empty() {
            return Err(format!("no chamber folds onto {}", ball.element(w as ElemId).display(sys)));
        }
    }
    if b.fiber(0).len() != 1 {
        return Err(format!("{} chambers fold onto the identity", b.fiber(0).len()));
    }
    for x in 0..b.chamber_count() {
        for s in 0..b.rank() {
            *checked += 1;
            let panel = b.panel(x, s);
            let up = ball.mul(b.fold_id(x), s);
            for &y in panel.iter() {
                if y != x && Some(b.fold_id(y)) != up && b.fold_id(y) != b.fold_id(x) {
                    return Err(format!("chambers {x} ~{} {y} do not fold onto adjacent elements", sys.name(s)));
                }
            }
            if b.panel_is_complete(x, s) && panel.len() < 2 {
                return Err(format!("chamber {x} has a trivial {}-panel", sys.name(s)));
            }
        }
    }
    // the residue below each chamber, of type In(π(x)), is a product folded from its shortest chamber
    for x in 0..b.chamber_count() {
        let set = b.descents(x);
        if set.len() < 2 {
            continue;
        }
        *checked += 1;
        let r = b.residue(x, set).map_err(|e| e.to_string())?;
        decompose_as_product(&r.building).map_err(|e| format!("residue of chamber {x}: {e}"))?;
        let local = fold_from(&r.building, r.building.base()).map_err(|e| e.to_string())?;
        let low = b.fold(r.shortest).clone();
        let inv = sys.inverse(&low).map_err(|e| e.to_string())?;
        let types: Vec<_> = set.iter().collect();
        for (i, &y) in r.chambers.iter().enumerate() {
            let rel = sys.multiply(&inv, b.fold(y)).map_err(|e| e.to_string())?;
            let expect: GenSet = local[i].iter().map(|j| types[j]).collect();
            if rel.support() != expect || rel.len() != expect.len() {
                return Err(format!("residue of chamber {x}: folding disagrees at chamber {y}"));
            }
        }
    }
    // panel sizes are constant along every complete spherical residue
    for set in sys.spherical_subsets() {
        if set.len() < 2 {
            continue;
        }
        for y in b.complete_residues(set) {
            *checked += 1;
            let members = b.residue_chambers(y, set);
            for t in set.iter() {
                let n = b.panel(y, t).len();
                if let Some(&z) = members.iter().find(|&&z| b.panel(z, t).len() != n) {
                    return Err(format!("residue at {y}: {}-panels of {y} and {z} differ in size", sys.name(t)));
                }
            }
        }
    }
    Ok(())
}

fn check_thickness(b: &BuildingBall, checked: &mut usize) -> Outcome {
    let Some(q) = b.q() else {
        return Err("the ball records no uniform thickness".into());
    };
    for x in 0..b.chamber_count() {
        for s in 0..b.rank() {
            if b.panel_is_complete(x, s) {
                *checked += 1;
                let n = b.panel(x, s).len();
                if n != q[s] + 1 {
                    return Err(format!(
                        "chamber {x}: {}-panel has {n} chambers, expected {}",
                        b.generator_name(s),
                        q[s] + 1
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_b1(b: &BuildingBall, checked: &mut usize) -> Outcome {
    for x in 0..b.chamber_count() {
        *checked += 1;
        build_section(b, x).map_err(|e: Error| format!("no apartment through the base and {x}: {e}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::build_regular;
    use crate::coxeter::{CoxeterSystem, Limits};

    #[test]
    fn regular_balls_pass() {
        let p5 = CoxeterSystem::polygon(5);
        let b = build_regular(&p5, &[2; 5], 2, Limits::default()).unwrap();
        for o in verify(&b, &Check::ALL) {
            assert!(o.passed(), "{}: {:?}", o.check, o.failure);
            assert!(o.checked > 0);
        }
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("f4".parse::<Check>().is_err());
    }
}
