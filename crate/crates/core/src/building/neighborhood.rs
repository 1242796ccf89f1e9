use std::collections::{BTreeSet, VecDeque};

use crate::chamber::{ChamberId, ChamberSystem};
use crate::error::{Error, Result};
use crate::halfspace::HalfSpace;

use super::BuildingBall;

/// The chamber set `Y` grown from a seed inside `π⁻¹(H(w,s))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    /// Sorted members of `Y` (cut to the ball).
    pub chambers: Vec<ChamberId>,
    /// Members of `Y` of minimal fold length.
    pub minimal: Vec<ChamberId>,
    /// Where a greedy descent from the seed that never leaves the
    /// half-space ends.
    pub descent_end: ChamberId,
}

impl Neighborhood {
    /// `a(x)`, when `Y` has exactly one shortest chamber.
    pub fn shortest(&self) -> Option<ChamberId> {
        match self.minimal.as_slice() {
            &[a] => Some(a),
            _ => None,
        }
    }
}

/// Closure of `x` under `y ~_t y'` where the panel folds into the
/// half-space, that is `π(y), π(y)t ∈ H(w,s)`.
pub fn neighborhood_chambers(b: &BuildingBall, hs: &HalfSpace, x: ChamberId) -> Result<Neighborhood> {
    let sys = b.system();
    let hs = hs.normalize(sys)?;
    let ball = b.ball();
    let inside: Vec<bool> = ball.elements().iter().map(|h| hs.contains(sys, h)).collect::<Result<_>>()?;
    if !inside[b.fold_id(x) as usize] {
        return Err(Error::OutsideHalfSpace { chamber: x });
    }
    let mut seen = BTreeSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for t in 0..b.rank() {
            let Some(yt) = ball.mul(b.fold_id(y), t) else { continue };
            if !inside[yt as usize] {
                continue;
            }
            for &z in b.panel(y, t).iter() {
                if seen.insert(z) {
                    queue.push_back(z);
                }
            }
        }
    }
    let chambers: Vec<ChamberId> = seen.into_iter().collect();
    let min_len = chambers.iter().map(|&y| b.length(y)).min().expect("seed is a member");
    let minimal = chambers.iter().copied().filter(|&y| b.length(y) == min_len).collect();

    let mut descent_end = x;
    'descend: loop {
        for t in b.descents(descent_end).iter() {
            let below = ball.mul(b.fold_id(descent_end), t).expect("descent");
            if inside[below as usize] {
                descent_end = b.lower(descent_end, t).expect("(F1)");
                continue 'descend;
            }
        }
        break;
    }
    Ok(Neighborhood { chambers, minimal, descent_end })
}
