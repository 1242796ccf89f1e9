//! Local injectivity and surjectivity of a morphism out of a ball.
//!
//! For morphisms built from the base chamber outwards both properties are
//! decided on the root panels alone. We check them that way and also
//! directly on every complete spherical residue; the two must agree.

use std::collections::BTreeSet;

use crate::building::BuildingBall;
use crate::chamber::{check_morphism, ChamberId, ChamberMap, ChamberSystem};
use crate::coxeter::GenSet;
use crate::error::{Error, Result};

/// A residue on which the map fails to be injective or surjective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Shortest chamber of the offending residue of the source.
    pub chamber: ChamberId,
    pub types: GenSet,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Injective on every complete residue.
    pub mono: bool,
    /// Onto the corresponding residue of the target, for every complete residue.
    pub epi: bool,
    /// Every chamber of the target is hit.
    pub surjective: bool,
    pub mono_witness: Option<Witness>,
    pub epi_witness: Option<Witness>,
    pub root_panels: usize,
    pub residues: usize,
}

impl Certificate {
    pub fn covering(&self) -> bool {
        self.mono && self.epi
    }
}

pub fn certify<Y: ChamberSystem + ?Sized>(x: &BuildingBall, y: &Y, map: &ChamberMap) -> Result<Certificate> {
    check_morphism(x, y, map)?;
    let roots = x.root_set();
    let mut root_mono: Option<Witness> = None;
    let mut root_epi: Option<Witness> = None;
    for &(c, s) in roots.pairs() {
        let single = GenSet::singleton(s);
        let members = x.panel(c, s);
        if root_mono.is_none() {
            root_mono = injectivity(map, &members).map(|d| Witness { chamber: c, types: single, detail: d });
        }
        if root_epi.is_none() {
            root_epi = surjectivity(map, &members, &y.panel(map.apply(c), s)).map(|d| Witness {
                chamber: c,
                types: single,
                detail: d,
            });
        }
    }

    let mut residues = 0;
    let mut mono_witness: Option<Witness> = None;
    let mut epi_witness: Option<Witness> = None;
    for set in x.system().spherical_subsets() {
        if set.is_empty() {
            continue;
        }
        for r in x.complete_residues(set) {
            residues += 1;
            let members = x.residue_chambers(r, set);
            if mono_witness.is_none() {
                mono_witness = injectivity(map, &members).map(|d| Witness { chamber: r, types: set, detail: d });
            }
            if epi_witness.is_none() {
                let target = y.residue_chambers(map.apply(r), set);
                epi_witness =
                    surjectivity(map, &members, &target).map(|d| Witness { chamber: r, types: set, detail: d });
            }
        }
    }

    if root_mono.is_none() != mono_witness.is_none() {
        return Err(Error::Invariant(format!(
            "root panels and complete residues disagree on local injectivity ({:?} vs {:?})",
            root_mono, mono_witness
        )));
    }
    if root_epi.is_none() != epi_witness.is_none() {
        return Err(Error::Invariant(format!(
            "root panels and complete residues disagree on local surjectivity ({:?} vs {:?})",
            root_epi, epi_witness
        )));
    }
    let hit: BTreeSet<ChamberId> = map.as_slice().iter().copied().collect();
    Ok(Certificate {
        mono: mono_witness.is_none(),
        epi: epi_witness.is_none(),
        surjective: hit.len() == y.chamber_count(),
        mono_witness,
        epi_witness,
        root_panels: roots.len(),
        residues,
    })
}

fn injectivity(map: &ChamberMap, members: &[ChamberId]) -> Option<String> {
    let mut seen = std::collections::BTreeMap::new();
    for &m in members {
        if let Some(prev) = seen.insert(map.apply(m), m) {
            return Some(format!("chambers {prev} and {m} both map to {}", map.apply(m)));
        }
    }
    None
}

fn surjectivity(map: &ChamberMap, members: &[ChamberId], target: &[ChamberId]) -> Option<String> {
    let hit: BTreeSet<ChamberId> = members.iter().map(|&m| map.apply(m)).collect();
    target.iter().find(|t| !hit.contains(t)).map(|t| format!("chamber {t} of the target residue is not hit"))
}
