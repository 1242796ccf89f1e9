//! Two self-maps of a thick ball that agree with the identity on the
//! preimage `M` of a convex set and have disjoint images off `M`.

use std::collections::BTreeSet;

use crate::building::BuildingBall;
use crate::chamber::{check_morphism, ChamberId, ChamberMap, ChamberSystem, ChoiceContext};
use crate::coxeter::{Element, GenSet, Limits};
use crate::error::{Error, Result};
use crate::halfspace::convex_hull;

use super::construct_morphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPair {
    /// `π⁻¹(conv(π(N) ∪ {1}))`, sorted.
    pub m: Vec<ChamberId>,
    pub hull: Vec<Element>,
    pub phi: ChamberMap,
    pub psi: ChamberMap,
}

/// Builds `φ, ψ : X → X` for a finite chamber set `N`.
///
/// Needs every complete panel to have at least three chambers, and the hull
/// to stay within distance `radius − 1` of the identity so that every panel
/// met by the construction outside `M` is complete.
pub fn disjoint_pair(x: &BuildingBall, n: &[ChamberId], limits: Limits) -> Result<DisjointPair> {
    let sys = x.system();
    for c in 0..x.chamber_count() {
        for s in 0..x.rank() {
            let size = x.panel(c, s).len();
            if x.panel_is_complete(c, s) && size < 3 {
                return Err(Error::Thickness { generator: sys.name(s).to_string(), got: size - 1, min: 2 });
            }
        }
    }
    let mut seeds = vec![Element::identity(sys)];
    for &c in n {
        if c >= x.chamber_count() {
            return Err(Error::Invariant(format!("chamber {c} is not in the ball")));
        }
        seeds.push(x.fold(c).clone());
    }
    let hull: Vec<Element> = convex_hull(sys, &seeds, limits)?.into_iter().collect();
    let safe = x.radius().saturating_sub(1);
    if let Some(length) = hull.iter().map(Element::len).max().filter(|&l| l > safe) {
        return Err(Error::UnsafeRadius { length, safe });
    }
    let ball = x.ball();
    let in_hull: BTreeSet<_> = hull.iter().map(|h| ball.id(h).expect("hull lies in the ball")).collect();
    let m: Vec<ChamberId> = (0..x.chamber_count()).filter(|&c| in_hull.contains(&x.fold_id(c))).collect();
    let mut member = vec![false; x.chamber_count()];
    for &c in &m {
        member[c] = true;
    }

    let pick = |rank: usize| {
        let member = &member;
        move |ctx: &ChoiceContext<'_>| {
            if member[ctx.chamber] {
                Some(ctx.chamber)
            } else {
                ctx.target_panel.iter().copied().filter(|&y| y != ctx.lower_image).nth(rank)
            }
        }
    };
    let phi = construct_morphism(x, x, x.base(), &mut pick(0))?;
    let psi = construct_morphism(x, x, x.base(), &mut pick(1))?;
    Ok(DisjointPair { m, hull, phi, psi })
}

/// One exhaustive check on a [`DisjointPair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that both maps are morphisms commuting with folding, fix `M`
/// pointwise, and have disjoint images on the complement of `M`.
pub fn audit_disjoint_pair(x: &BuildingBall, pair: &DisjointPair) -> Vec<Audit> {
    let n = x.chamber_count();
    let outside: Vec<ChamberId> = (0..n).filter(|c| pair.m.binary_search(c).is_err()).collect();
    let maps = [("phi", &pair.phi), ("psi", &pair.psi)];

    let morphism = maps.iter().find_map(|(name, f)| check_morphism(x, x, f).err().map(|e| format!("{name}: {e}")));
    let equivariant = maps.iter().find_map(|(name, f)| {
        (0..n)
            .find(|&c| x.fold_id(f.apply(c)) != x.fold_id(c))
            .map(|c| format!("{name} moves chamber {c} to a different fold"))
    });
    let identity = maps.iter().find_map(|(name, f)| {
        pair.m.iter().find(|&&c| f.apply(c) != c).map(|c| format!("{name} does not fix chamber {c} of M"))
    });
    let phi_image: BTreeSet<ChamberId> = outside.iter().map(|&c| pair.phi.apply(c)).collect();
    let disjoint = outside
        .iter()
        .find(|&&c| phi_image.contains(&pair.psi.apply(c)))
        .map(|&c| format!("psi({c}) = {} is also an image of phi off M", pair.psi.apply(c)));

    vec![
        Audit { name: "morphism", checked: 2 * n, failure: morphism },
        Audit { name: "equivariant", checked: 2 * n, failure: equivariant },
        Audit { name: "identity-on-m", checked: 2 * pair.m.len(), failure: identity },
        Audit { name: "disjoint-off-m", checked: outside.len(), failure: disjoint },
    ]
}

/// Checks that no complete spherical residue missing `M` has its `φ`-image
/// and some such residue its `ψ`-image in a common residue of the same type.
///
/// Residues are identified by type and shortest chamber; `checked` counts
/// the residues compared.
pub fn realization_disjointness_check(
    x: &BuildingBall,
    m: &[ChamberId],
    phi: &ChamberMap,
    psi: &ChamberMap,
) -> Result<Audit> {
    check_morphism(x, x, phi)?;
    check_morphism(x, x, psi)?;
    let in_m: BTreeSet<ChamberId> = m.iter().copied().collect();
    let mut phi_keys: BTreeSet<(GenSet, ChamberId)> = BTreeSet::new();
    let mut psi_keys: Vec<(GenSet, ChamberId, ChamberId)> = Vec::new();
    for set in x.system().spherical_subsets() {
        for r in x.complete_residues(set) {
            if x.residue_chambers(r, set).iter().any(|c| in_m.contains(c)) {
                continue;
            }
            phi_keys.insert((set, x.residue_shortest(phi.apply(r), set)));
            psi_keys.push((set, r, x.residue_shortest(psi.apply(r), set)));
        }
    }
    let checked = psi_keys.len();
    let failure = psi_keys.into_iter().find(|&(set, _, key)| phi_keys.contains(&(set, key))).map(|(set, r, key)| {
        format!(
            "residue of type {} at {r} maps under psi into the residue at {key}, which is also a phi-image",
            x.system().format_set(set)
        )
    });
    Ok(Audit { name: "realization-disjoint", checked, failure })
}
