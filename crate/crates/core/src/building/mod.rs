//! Balls of standard right-angled buildings.
//!
//! A [`BuildingBall`] holds the chambers folding into `{w : ℓ(w) ≤ k}` with
//! their panels cut to the ball. Two independent constructions produce it:
//! gluing product buildings in ball order ([`build`], [`build_regular`]) and
//! labelled galleries in a product local building ([`build_by_covering`]).

use std::borrow::Cow;

use crate::chamber::{ChamberId, ChamberSystem, Panels};
use crate::coxeter::{Ball, CoxeterSystem, ElemId, Element, Gen, GenSet, Limits};
use crate::error::{Error, Result};

mod construct;
mod cover;
mod format;
mod iso;
mod neighborhood;
mod residue;
mod section;
mod verify;

pub use construct::{build, build_regular, RegularThickness, Thickness};
pub use cover::{build_by_covering, Covering};
pub use format::{parse_bldg, write_bldg};
pub use iso::{find_isomorphism, Isomorphism};
pub use neighborhood::{neighborhood_chambers, Neighborhood};
pub use residue::Residue;
pub use section::{build_section, Apartment};
pub use verify::{verify, Check, CheckOutcome};

/// The chambers of a standard `W`-building over the ball of radius `k` in `W`.
#[derive(Clone, Debug)]
pub struct BuildingBall {
    ball: Ball,
    fold: Vec<ElemId>,
    panels: Panels,
    q: Option<Vec<usize>>,
    fibers: Vec<Vec<ChamberId>>,
}

impl BuildingBall {
    /// Assembles a ball from folds and panels without checking the
    /// building axioms (see [`verify`]).
    pub fn from_parts(
        system: &CoxeterSystem,
        radius: usize,
        fold: &[Element],
        panels: Panels,
        q: Option<Vec<usize>>,
        limits: Limits,
    ) -> Result<Self> {
        let ball = Ball::new(system, radius, limits)?;
        let ids = fold
            .iter()
            .enumerate()
            .map(|(x, w)| {
                system.check(w)?;
                ball.id(w).ok_or_else(|| {
                    Error::Invariant(format!("chamber {x} folds to {} outside the ball", w.display(system)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_ids(ball, ids, panels, q)
    }

    pub(crate) fn from_ids(ball: Ball, fold: Vec<ElemId>, panels: Panels, q: Option<Vec<usize>>) -> Result<Self> {
        if panels.chamber_count() != fold.len() || panels.rank() != ball.system().rank() {
            return Err(Error::Invariant("panel structure does not match the chamber list".into()));
        }
        if let Some(q) = &q {
            if q.len() != ball.system().rank() {
                return Err(Error::Invariant("thickness vector has the wrong length".into()));
            }
        }
        let mut fibers = vec![Vec::new(); ball.len()];
        for (x, &w) in fold.iter().enumerate() {
            fibers[w as usize].push(x);
        }
        if fibers[0].len() != 1 {
            return Err(Error::Axiom(format!("{} chambers fold onto the identity", fibers[0].len())));
        }
        Ok(BuildingBall { ball, fold, panels, q, fibers })
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.ball.system()
    }

    pub fn radius(&self) -> usize {
        self.ball.radius()
    }

    /// The ball of `W` the chambers fold into.
    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    pub fn panels(&self) -> &Panels {
        &self.panels
    }

    /// The uniform thickness `q_s` when the ball is regular.
    pub fn q(&self) -> Option<&[usize]> {
        self.q.as_deref()
    }

    /// The base chamber `B`, the only chamber over `1`.
    pub fn base(&self) -> ChamberId {
        self.fibers[0][0]
    }

    pub fn fold_id(&self, x: ChamberId) -> ElemId {
        self.fold[x]
    }

    /// `π(x)`.
    pub fn fold(&self, x: ChamberId) -> &Element {
        self.ball.element(self.fold[x])
    }

    /// `ℓ(π(x))`.
    pub fn length(&self, x: ChamberId) -> usize {
        self.ball.length(self.fold[x])
    }

    /// `In(π(x))`.
    pub fn descents(&self, x: ChamberId) -> GenSet {
        self.ball.descents(self.fold[x])
    }

    /// Chambers over the ball element `w`, in id order.
    pub fn fiber(&self, w: ElemId) -> &[ChamberId] {
        &self.fibers[w as usize]
    }

    /// `x^t`: the chamber of `[x]_t` over `π(x)t`, for `t ∈ In(π(x))`.
    pub fn lower(&self, x: ChamberId, t: Gen) -> Option<ChamberId> {
        if !self.descents(x).contains(t) {
            return None;
        }
        let target = self.ball.mul(self.fold[x], t)?;
        self.panels.members(x, t).iter().copied().find(|&y| self.fold[y] == target)
    }

    /// True when `[x]_s` lies entirely inside the ball, so its size is final.
    pub fn panel_is_complete(&self, x: ChamberId, s: Gen) -> bool {
        let l = self.length(x);
        let lower = if self.descents(x).contains(s) { l - 1 } else { l };
        lower < self.radius()
    }

    /// The root set restricted to pairs whose panel lies in the ball.
    pub fn root_set(&self) -> RootSet {
        let mut pairs = Vec::new();
        for x in 0..self.chamber_count() {
            for s in 0..self.rank() {
                if let Some(ws) = self.ball.mul(self.fold[x], s) {
                    if self.ball.descents(ws) == GenSet::singleton(s) {
                        pairs.push((x, s));
                    }
                }
            }
        }
        RootSet { pairs }
    }
}

impl ChamberSystem for BuildingBall {
    fn rank(&self) -> usize {
        self.system().rank()
    }

    fn chamber_count(&self) -> usize {
        self.fold.len()
    }

    fn panel(&self, x: ChamberId, s: Gen) -> Cow<'_, [ChamberId]> {
        Cow::Borrowed(self.panels.members(x, s))
    }

    fn generator_name(&self, s: Gen) -> String {
        self.system().name(s).to_string()
    }
}

/// Pairs `(x, s)` with `In(π(x)s) = {s}`: the panels on which a morphism
/// out of the building may be chosen freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pairs: Vec<(ChamberId, Gen)>,
}

impl RootSet {
    /// Sorted by chamber, then generator.
    pub fn pairs(&self) -> &[(ChamberId, Gen)] {
        &self.pairs
    }

    pub fn contains(&self, x: ChamberId, s: Gen) -> bool {
        self.pairs.binary_search(&(x, s)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}
