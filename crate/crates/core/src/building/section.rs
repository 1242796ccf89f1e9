//! Sections of the folding map through a given chamber.
//!
//! The section through `B` is built like any morphism `W → X`, choosing on
//! each root panel a chamber different from the one already placed, which
//! keeps it locally injective. For `x` over `ws` with `s ∈ In(ws)` we start
//! from a section `ξ` through `x^s`, keep `ξ` off the half-space `H(w,s)`,
//! and re-choose inside it, sending the shortest element `us` of `H(w,s)`
//! to `x^{t₁…t_k}` where `ws, wst₁, …, us` is a descending gallery with every
//! `t_i` commuting with `s`. Everything else inside is forced or chosen
//! injectively, and the section then passes through `x`.

use crate::chamber::{ChamberId, ChamberSystem};
use crate::coxeter::ElemId;
use crate::error::{Error, Result};
use crate::halfspace::HalfSpace;

use super::BuildingBall;

/// An apartment through `B`, given by a section `σ` of the folding map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Apartment {
    /// `section[w]` is `σ(w)` for the ball element with id `w`.
    pub section: Vec<ChamberId>,
    /// The image of `σ`, sorted.
    pub chambers: Vec<ChamberId>,
}

/// An apartment containing `B` and `x`, with `σ(π(x)) = x`.
pub fn build_section(b: &BuildingBall, x: ChamberId) -> Result<Apartment> {
    let section = section_through(b, x)?;
    let ball = b.ball();
    if section[b.fold_id(x) as usize] != x {
        return Err(Error::Invariant(format!("section misses chamber {x}")));
    }
    for (g, &y) in section.iter().enumerate() {
        if b.fold_id(y) as usize != g {
            return Err(Error::Invariant(format!("section is not a section of the folding map at chamber {y}")));
        }
        for s in 0..b.rank() {
            if let Some(gs) = ball.mul(g as ElemId, s) {
                let z = section[gs as usize];
                if !b.adjacent(y, z, s) {
                    return Err(Error::NotMorphism {
                        x: g,
                        y: gs as usize,
                        fx: y,
                        fy: z,
                        generator: b.generator_name(s),
                    });
                }
            }
        }
    }
    let mut chambers = section.clone();
    chambers.sort_unstable();
    Ok(Apartment { section, chambers })
}

fn section_through(b: &BuildingBall, x: ChamberId) -> Result<Vec<ChamberId>> {
    let ball = b.ball();
    if x == b.base() {
        let order: Vec<ElemId> = (0..ball.len() as ElemId).collect();
        return extend(b, &order, |_| None, None);
    }
    let sys = b.system();
    let s = b.descents(x).iter().next().expect("only the base has no descents");
    let ws = b.fold(x).clone();
    let w = ball.mul(b.fold_id(x), s).expect("descent");
    let xi = section_through(b, b.lower(x, s).expect("(F1)"))?;

    let half = HalfSpace::new(ball.element(w).clone(), s);
    let us = half.shortest_element(sys)?;
    let path = sys.multiply(&sys.inverse(&ws)?, &us)?;
    let mut target = x;
    for t in path.letters() {
        if !sys.commute(s, t) {
            return Err(Error::Invariant(format!("gallery to the shortest element leaves the crossing coset at {t}")));
        }
        target = b.lower(target, t).ok_or_else(|| {
            Error::Invariant(format!("gallery from {x} towards the shortest element is not descending"))
        })?;
    }
    let us_id = ball.id(&us).expect("shortest element is no longer than ws");

    let inside: Vec<bool> = ball.elements().iter().map(|h| half.contains(sys, h)).collect::<Result<_>>()?;
    let mut order: Vec<ElemId> = (0..ball.len() as ElemId).filter(|&g| !inside[g as usize]).collect();
    order.extend((0..ball.len() as ElemId).filter(|&g| inside[g as usize]));
    extend(b, &order, |g| (!inside[g as usize]).then(|| xi[g as usize]), Some((us_id, target)))
}

/// Defines `σ` along `order` (star-like initial segments): `fixed` values
/// first, then `special`, then forced or injective choices.
fn extend(
    b: &BuildingBall,
    order: &[ElemId],
    fixed: impl Fn(ElemId) -> Option<ChamberId>,
    special: Option<(ElemId, ChamberId)>,
) -> Result<Vec<ChamberId>> {
    let ball = b.ball();
    let mut sigma: Vec<Option<ChamberId>> = vec![None; ball.len()];
    for &g in order {
        let image = if let Some(y) = fixed(g) {
            y
        } else if g == 0 {
            b.base()
        } else {
            let desc: Vec<_> = ball.descents(g).iter().collect();
            let below = |t| sigma[ball.mul(g, t).expect("descent") as usize].expect("star-like order");
            if let [t] = desc[..] {
                let base = below(t);
                match special {
                    Some((h, y)) if h == g => {
                        if !b.adjacent(base, y, t) {
                            return Err(Error::Invariant(format!("chamber {y} is not in the rerouted panel")));
                        }
                        y
                    }
                    _ => *b.panel(base, t).iter().find(|&&y| y != base).ok_or_else(|| {
                        Error::Axiom(format!("chamber {base} has a trivial {}-panel", b.generator_name(t)))
                    })?,
                }
            } else {
                let (t0, rest) = desc.split_first().expect("non-empty");
                let mut cands: Vec<ChamberId> = b.panel(below(*t0), *t0).to_vec();
                for &t in rest {
                    let y = below(t);
                    cands.retain(|&z| b.adjacent(y, z, t));
                }
                match cands[..] {
                    [z] => z,
                    _ => return Err(Error::Invariant(format!("no forced image over element {g}"))),
                }
            }
        };
        sigma[g as usize] = Some(image);
    }
    Ok(sigma.into_iter().map(|y| y.expect("order covers the ball")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::build_regular;
    use crate::coxeter::{CoxeterSystem, Limits};

    #[test]
    fn apartments_through_every_chamber() {
        let p5 = CoxeterSystem::polygon(5);
        let b = build_regular(&p5, &[2; 5], 2, Limits::default()).unwrap();
        for x in 0..b.chamber_count() {
            let a = build_section(&b, x).unwrap();
            assert_eq!(a.chambers.len(), 21);
            assert!(a.chambers.contains(&x) && a.chambers.contains(&b.base()));
        }
    }

    #[test]
    fn base_section_is_identity_on_words() {
        let a1 = CoxeterSystem::infinite_dihedral();
        let b = build_regular(&a1, &[2, 2], 3, Limits::default()).unwrap();
        let a = build_section(&b, b.base()).unwrap();
        for (g, &y) in a.section.iter().enumerate() {
            assert_eq!(b.fold_id(y) as usize, g);
        }
        let leaf = b.chamber_count() - 1;
        assert_eq!(build_section(&b, leaf).unwrap().chambers.len(), 7);
    }
}
