//! Distance principles of right-angled Coxeter groups, used as fuzzing invariants.

use super::element::Element;
use super::system::{CoxeterSystem, Gen};
use crate::error::{Error, Result};

/// Property (±1): `d(as,b) = d(a,b) ± 1` and `d(a,bs) = d(a,b) ± 1`.
pub fn property_pm1_check(sys: &CoxeterSystem, a: &Element, b: &Element, s: Gen) -> Result<bool> {
    let d = sys.dist(a, b)? as i64;
    let left = sys.dist(&sys.mul_gen(a, s)?, b)? as i64;
    let right = sys.dist(a, &sys.mul_gen(b, s)?)? as i64;
    Ok((left - d).abs() == 1 && (right - d).abs() == 1)
}

/// Property (R) for the `{t,t'}`-residue `{g, gt, gt', gtt'}` and a point `x`:
/// the four distances are three consecutive integers, the middle one
/// attained twice, on two non-adjacent chambers of the residue.
pub fn property_r_check(sys: &CoxeterSystem, g: &Element, t: Gen, t2: Gen, x: &Element) -> Result<bool> {
    if t == t2 || !sys.commute(t, t2) {
        return Err(Error::NonCommuting(sys.name(t).to_string(), sys.name(t2).to_string()));
    }
    let gt = sys.mul_gen(g, t)?;
    let gt2 = sys.mul_gen(g, t2)?;
    let gtt2 = sys.mul_gen(&gt, t2)?;
    // residue chambers in cyclic order: g - gt - gtt' - gt' - g
    let cycle = [g, &gt, &gtt2, &gt2];
    let d: Vec<usize> = cycle.iter().map(|c| sys.dist(x, c)).collect::<Result<_>>()?;
    let min = *d.iter().min().expect("four chambers");
    let at = |v: usize| (0..4).filter(|&i| d[i] == v).collect::<Vec<_>>();
    let (lo, mid, hi) = (at(min), at(min + 1), at(min + 2));
    if lo.len() != 1 || mid.len() != 2 || hi.len() != 1 {
        return Ok(false);
    }
    // opposite corners of the square are the non-adjacent pairs
    Ok((mid[1] - mid[0]) == 2 && (hi[0] + 4 - lo[0]) % 4 == 2)
}
