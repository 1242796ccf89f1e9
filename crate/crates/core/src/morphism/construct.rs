use crate::building::BuildingBall;
use crate::chamber::{check_morphism, ChamberId, ChamberMap, ChamberSystem, ChoiceContext, Chooser};
use crate::error::{Error, Result};
use crate::finite::forced_image;

/// A morphism `X → Y` with `φ(B) = base_image`, built along the ball order.
///
/// Where `In(π(x)) = {s}` the image is asked from `chooser` inside the
/// `s`-panel of `φ(x^s)`; everywhere else it is forced as the unique chamber
/// `t`-adjacent to `φ(x^t)` for all `t ∈ In(π(x))`.
pub fn construct_morphism<Y: ChamberSystem + ?Sized>(
    x: &BuildingBall,
    y: &Y,
    base_image: ChamberId,
    chooser: &mut dyn Chooser,
) -> Result<ChamberMap> {
    let order: Vec<ChamberId> = (0..x.chamber_count()).collect();
    construct_morphism_in_order(x, y, base_image, chooser, &order)
}

/// Chambers sorted by fold length; within a length by id, or by decreasing
/// id when `reverse` is set. Both orders have star-like initial segments.
pub fn length_order(x: &BuildingBall, reverse: bool) -> Vec<ChamberId> {
    let mut order: Vec<ChamberId> = (0..x.chamber_count()).collect();
    if reverse {
        order.sort_by_key(|&c| (x.length(c), std::cmp::Reverse(c)));
    } else {
        order.sort_by_key(|&c| (x.length(c), c));
    }
    order
}

/// As [`construct_morphism`], visiting chambers in `order`, which must list
/// every chamber once and place each `x^t` before `x`.
pub fn construct_morphism_in_order<Y: ChamberSystem + ?Sized>(
    x: &BuildingBall,
    y: &Y,
    base_image: ChamberId,
    chooser: &mut dyn Chooser,
    order: &[ChamberId],
) -> Result<ChamberMap> {
    if x.rank() != y.rank() {
        return Err(Error::SystemMismatch);
    }
    if base_image >= y.chamber_count() {
        return Err(Error::Invariant(format!("base image {base_image} is not a chamber of the target")));
    }
    let n = x.chamber_count();
    let mut position = vec![usize::MAX; n];
    for (i, &c) in order.iter().enumerate() {
        if c >= n || position[c] != usize::MAX {
            return Err(Error::Invariant(format!("order lists chamber {c} twice or out of range")));
        }
        position[c] = i;
    }
    if order.len() != n {
        return Err(Error::Invariant("order does not list every chamber".into()));
    }

    let mut phi: Vec<Option<ChamberId>> = vec![None; n];
    for &c in order {
        let lowers: Vec<(usize, ChamberId)> = x.descents(c).iter().map(|t| (t, x.lower(c, t).expect("(F1)"))).collect();
        for &(_, l) in &lowers {
            if phi[l].is_none() {
                return Err(Error::NotStarLike { chamber: c, missing: l });
            }
        }
        let image = match lowers[..] {
            [] => base_image,
            [(s, c0)] => {
                let f0 = phi[c0].expect("checked above");
                let target_panel = y.panel(f0, s);
                let ctx = ChoiceContext {
                    chamber: c,
                    generator: s,
                    lower: c0,
                    lower_image: f0,
                    source_panel: &x.panel(c0, s),
                    target_panel: &target_panel,
                };
                let chosen = chooser.choose(&ctx).ok_or(Error::ChooserDeclined { chamber: c })?;
                if target_panel.binary_search(&chosen).is_err() {
                    return Err(Error::ChooserOutside { chosen, base: f0, generator: x.generator_name(s) });
                }
                chosen
            }
            _ => forced_image(y, lowers.iter().map(|&(t, l)| (t, phi[l].expect("checked above"))))
                .ok_or(Error::NoForcedImage { chamber: c })?,
        };
        phi[c] = Some(image);
    }
    let map = ChamberMap::new(phi.into_iter().map(|f| f.expect("order covers every chamber")).collect());
    check_morphism(x, y, &map)?;
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{build_by_covering, build_regular};
    use crate::chamber::{LeastChooser, RankChooser};
    use crate::coxeter::{CoxeterSystem, Limits};

    #[test]
    fn identity_and_covering() {
        let p5 = CoxeterSystem::polygon(5);
        let b = build_regular(&p5, &[2; 5], 2, Limits::default()).unwrap();
        let mut same = |ctx: &ChoiceContext<'_>| Some(ctx.chamber);
        let id = construct_morphism(&b, &b, b.base(), &mut same).unwrap();
        assert_eq!(id, ChamberMap::identity(b.chamber_count()));
        let cover = build_by_covering(&p5, &[3; 5], 2, Limits::default()).unwrap();
        let m = construct_morphism(&b, &cover.local, 0, &mut RankChooser).unwrap();
        assert_eq!(m.len(), 71);
        let collapsed = construct_morphism(&b, &cover.local, 0, &mut LeastChooser).unwrap();
        assert!(!collapsed.is_injective());
    }

    #[test]
    fn order_must_be_star_like() {
        let a1 = CoxeterSystem::infinite_dihedral();
        let b = build_regular(&a1, &[1, 1], 2, Limits::default()).unwrap();
        let mut order = length_order(&b, false);
        order.swap(1, 3);
        let err = construct_morphism_in_order(&b, &b, 0, &mut RankChooser, &order).unwrap_err();
        assert!(matches!(err, Error::NotStarLike { .. }));
        let reversed = construct_morphism_in_order(&b, &b, 0, &mut RankChooser, &length_order(&b, true)).unwrap();
        assert_eq!(reversed, construct_morphism(&b, &b, 0, &mut RankChooser).unwrap());
    }

    #[test]
    fn chooser_outside_panel_is_an_error() {
        let a1 = CoxeterSystem::infinite_dihedral();
        let b = build_regular(&a1, &[2, 2], 2, Limits::default()).unwrap();
        let mut bad = |_: &ChoiceContext<'_>| Some(b.chamber_count() - 1);
        assert!(matches!(construct_morphism(&b, &b, 0, &mut bad), Err(Error::ChooserOutside { .. })));
    }
}
