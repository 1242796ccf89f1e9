//! Construction by gluing product buildings along the ball order of `W`.
//!
//! Chambers over `w` are created when `w` is reached. If `In(w) = {t}` they
//! are new members of the `t`-panels of the chambers over `wt`; this is the
//! only place where a thickness is chosen. If `|In(w)| ≥ 2` the chambers over
//! `w` are forced: each completes a product residue whose other chambers
//! already exist.

use crate::chamber::{ChamberId, Panels};
use crate::coxeter::{Ball, CoxeterSystem, ElemId, Gen, Limits};
use crate::error::{Error, Result};

use super::BuildingBall;

/// Chooses `q_{x,s}`, the number of chambers added to the `s`-panel of `x`
/// when `(x, s)` is a root pair.
pub trait Thickness {
    fn q(&mut self, x: ChamberId, s: Gen) -> usize;

    /// The uniform vector, when there is one (recorded in the `.bldg` header).
    fn uniform(&self) -> Option<Vec<usize>> {
        None
    }
}

/// `q_{x,s} = q_s` for every chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularThickness(pub Vec<usize>);

impl Thickness for RegularThickness {
    fn q(&mut self, _x: ChamberId, s: Gen) -> usize {
        self.0[s]
    }

    fn uniform(&self) -> Option<Vec<usize>> {
        Some(self.0.clone())
    }
}

/// The ball of radius `k` of the regular building `X(W, q)`.
pub fn build_regular(sys: &CoxeterSystem, q: &[usize], radius: usize, limits: Limits) -> Result<BuildingBall> {
    if q.len() != sys.rank() {
        return Err(Error::Invariant(format!("{} thickness values for {} generators", q.len(), sys.rank())));
    }
    if let Some(s) = q.iter().position(|&v| v < 1) {
        return Err(Error::Thickness { generator: sys.name(s).into(), got: q[s], min: 1 });
    }
    build(sys, radius, &mut RegularThickness(q.to_vec()), limits)
}

/// The ball of radius `k` of the standard building with thickness chosen
/// by `thickness` at each root pair.
pub fn build(
    sys: &CoxeterSystem,
    radius: usize,
    thickness: &mut dyn Thickness,
    limits: Limits,
) -> Result<BuildingBall> {
    let ball = Ball::new(sys, radius, limits)?;
    let mut panels = Panels::new(sys.rank());
    let mut fold: Vec<ElemId> = Vec::new();
    let mut fibers: Vec<Vec<ChamberId>> = vec![Vec::new(); ball.len()];
    fibers[0].push(panels.push_chamber(&[]));
    fold.push(0);

    for w in 1..ball.len() as ElemId {
        let desc = ball.descents(w);
        let letters: Vec<Gen> = desc.iter().collect();
        let mut created = Vec::new();
        if let [t] = letters[..] {
            let below = ball.mul(w, t).expect("descents stay in the ball");
            for &x in &fibers[below as usize] {
                let q = thickness.q(x, t);
                if q < 1 {
                    return Err(Error::Thickness { generator: sys.name(t).into(), got: q, min: 1 });
                }
                for _ in 0..q {
                    created.push(panels.push_chamber(&[(t, x)]));
                }
                limits.check(panels.chamber_count(), "chambers")?;
            }
        } else {
            let (t1, t2) = (letters[0], letters[1]);
            let w1 = ball.mul(w, t1).expect("descent");
            let w12 = ball.mul(w1, t2).expect("descent");
            let mut jobs: Vec<(ChamberId, ChamberId, ChamberId)> = Vec::new();
            for &m in &fibers[w12 as usize] {
                // shortest chamber of the residue of type In(w) around m
                let mut shortest = m;
                for &t in &letters[2..] {
                    let target = ball.mul(fold[shortest], t).expect("descent");
                    shortest = lower_in(&panels, &fold, shortest, t, target).ok_or_else(|| missing(shortest, t))?;
                }
                for &a in panels.members(m, t2).iter().filter(|&&a| a != m) {
                    for &b in panels.members(m, t1).iter().filter(|&&b| b != m) {
                        jobs.push((shortest, a, b));
                    }
                }
            }
            jobs.sort_unstable();
            for (_, a, b) in jobs {
                let mut joins = vec![(t1, a), (t2, b)];
                for &t in &letters[2..] {
                    let wt1 = ball.mul(fold[a], t).expect("descent");
                    let wt2 = ball.mul(fold[b], t).expect("descent");
                    let at = lower_in(&panels, &fold, a, t, wt1).ok_or_else(|| missing(a, t))?;
                    let bt = lower_in(&panels, &fold, b, t, wt2).ok_or_else(|| missing(b, t))?;
                    let pb = panels.members(bt, t2);
                    let common: Vec<ChamberId> =
                        panels.members(at, t1).iter().copied().filter(|y| pb.contains(y)).collect();
                    let &[c] = common.as_slice() else {
                        return Err(Error::Invariant(format!(
                            "gluing over {}: {} candidates for the {}-neighbour",
                            ball.element(w).display(sys),
                            common.len(),
                            sys.name(t)
                        )));
                    };
                    joins.push((t, c));
                }
                created.push(panels.push_chamber(&joins));
                limits.check(panels.chamber_count(), "chambers")?;
            }
        }
        fold.extend(std::iter::repeat_n(w, created.len()));
        fibers[w as usize] = created;
    }
    debug_assert_eq!(fold.len(), panels.chamber_count());
    BuildingBall::from_ids(ball, fold, panels, thickness.uniform())
}

fn lower_in(panels: &Panels, fold: &[ElemId], x: ChamberId, t: Gen, target: ElemId) -> Option<ChamberId> {
    panels.members(x, t).iter().copied().find(|&y| fold[y] == target)
}

fn missing(x: ChamberId, t: Gen) -> Error {
    Error::Invariant(format!("chamber {x} has no lower neighbour of type {t}"))
}
