//! Isomorphisms between balls of the same system and radius.

use crate::chamber::{check_morphism, ChamberId, ChamberMap, ChamberSystem, ChoiceContext, Chooser, RankChooser};
use crate::error::{Error, Result};
use crate::morphism::construct_morphism;

use super::BuildingBall;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isomorphism {
    Found(ChamberMap),
    /// `chamber` and its image have `generator`-panels of different sizes.
    Mismatch {
        chamber: ChamberId,
        generator: String,
        source_size: usize,
        target_size: usize,
    },
    /// The balls have different radii.
    Radius {
        source: usize,
        target: usize,
    },
}

/// Finds an isomorphism `b1 → b2` fixing the base chamber, or a panel whose
/// size rules one out.
///
/// Two balls of the same radius are isomorphic exactly when a morphism
/// built with a bijective rule on every root panel can be built at all;
/// the first panel-size disagreement met on the way is reported.
pub fn find_isomorphism(b1: &BuildingBall, b2: &BuildingBall) -> Result<Isomorphism> {
    if b1.system().fingerprint() != b2.system().fingerprint() {
        return Err(Error::SystemMismatch);
    }
    if b1.radius() != b2.radius() {
        return Ok(Isomorphism::Radius { source: b1.radius(), target: b2.radius() });
    }
    let mut mismatch = None;
    let mut chooser = |ctx: &ChoiceContext<'_>| {
        if ctx.source_panel.len() != ctx.target_panel.len() {
            mismatch.get_or_insert((ctx.lower, ctx.generator, ctx.source_panel.len(), ctx.target_panel.len()));
            return None;
        }
        RankChooser.choose(ctx)
    };
    let map = match construct_morphism(b1, b2, b2.base(), &mut chooser) {
        Ok(map) => map,
        Err(Error::ChooserDeclined { .. }) => {
            let (chamber, s, source_size, target_size) = mismatch.expect("declined only on a size mismatch");
            return Ok(Isomorphism::Mismatch { chamber, generator: b1.generator_name(s), source_size, target_size });
        }
        Err(e) => return Err(e),
    };
    for x in 0..b1.chamber_count() {
        for s in 0..b1.rank() {
            let (source_size, target_size) = (b1.panel(x, s).len(), b2.panel(map.apply(x), s).len());
            if source_size != target_size {
                return Ok(Isomorphism::Mismatch {
                    chamber: x,
                    generator: b1.generator_name(s),
                    source_size,
                    target_size,
                });
            }
        }
    }
    if !map.is_injective() || map.len() != b2.chamber_count() {
        return Err(Error::Invariant("panel-preserving morphism between balls is not bijective".into()));
    }
    let mut inverse = vec![0; map.len()];
    for (x, &y) in map.as_slice().iter().enumerate() {
        inverse[y] = x;
    }
    let inverse = ChamberMap::new(inverse);
    check_morphism(b2, b1, &inverse)?;
    Ok(Isomorphism::Found(map))
}
