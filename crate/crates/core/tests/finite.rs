use std::collections::BTreeMap;

use proptest::prelude::*;
use rab_core::chamber::{check_morphism, ChoiceContext, LeastChooser, RankChooser};
use rab_core::finite::{decompose_as_product, extend_morphism, pi_equivariance_check, FiniteBuilding, ProductBuilding};
use rab_core::{ChamberId, ChamberMap, ChamberSystem, CoxeterSystem, Error};
use rab_oracles::ChamberData;

fn product(sizes: &[usize]) -> ProductBuilding {
    ProductBuilding::new(&CoxeterSystem::finite(sizes.len()), sizes).unwrap()
}

fn decline(_: &ChoiceContext<'_>) -> Option<ChamberId> {
    None
}

fn image_of(map: &ChamberMap) -> Vec<ChamberId> {
    let mut v = map.as_slice().to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[test]
fn product_ids_match_the_oracle() {
    for sizes in [vec![2, 2], vec![3, 2], vec![2, 3, 4]] {
        let p = product(&sizes);
        let o = ChamberData::product(&sizes);
        assert_eq!(p.chamber_count(), o.count);
        for x in 0..o.count {
            for s in 0..sizes.len() {
                assert_eq!(p.panel(x, s).into_owned(), o.panel_members(x, s));
            }
        }
    }
}

/// Every star-like partial morphism into the target extends; extensions
/// are determined by the base panels; panel-injective and panel-surjective
/// extensions are injective and surjective.
fn lemma_on(source: &[usize], target: &[usize]) -> usize {
    let x = product(source).to_finite().unwrap();
    let y = product(target);
    let (xo, yo) = (ChamberData::product(source), ChamberData::product(target));
    let mut checked = 0;
    for e in xo.star_like_sets(0) {
        for psi in xo.partial_morphisms(&e, &yo) {
            let maps = [
                extend_morphism(&x, &psi, &y, 0, &mut RankChooser).unwrap(),
                extend_morphism(&x, &psi, &y, 0, &mut LeastChooser).unwrap(),
            ];
            for phi in &maps {
                check_morphism(&x, &y, phi).unwrap();
                assert!(psi.iter().all(|(&a, &b)| phi.apply(a) == b));
                let base_panels: BTreeMap<ChamberId, ChamberId> =
                    (0..x.rank()).flat_map(|s| x.panel(0, s).into_owned()).map(|z| (z, phi.apply(z))).collect();
                let again = extend_morphism(&x, &base_panels, &y, 0, &mut decline).unwrap();
                assert_eq!(&again, phi);
                let fb = phi.apply(0);
                let on_panels = |s: usize| {
                    let img: Vec<ChamberId> = x.panel(0, s).iter().map(|&z| phi.apply(z)).collect();
                    let mut sorted = img.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    (sorted.len() == img.len(), sorted == y.panel(fb, s).into_owned())
                };
                if (0..x.rank()).all(|s| on_panels(s).0) {
                    assert!(phi.is_injective(), "{psi:?}");
                }
                if (0..x.rank()).all(|s| on_panels(s).1) {
                    assert_eq!(image_of(phi).len(), y.chamber_count(), "{psi:?}");
                }
                checked += 1;
            }
        }
    }
    checked
}

#[test]
fn extension_lemma_exhaustive_on_small_products() {
    assert!(lemma_on(&[2, 2], &[2, 2]) > 0);
    assert!(lemma_on(&[3, 2], &[3, 2]) > 0);
    assert!(lemma_on(&[3, 2], &[2, 3]) > 0);
    assert!(lemma_on(&[2, 2], &[3, 3]) > 0);
}

#[test]
fn non_star_like_domain_is_rejected() {
    let x = product(&[2, 2]).to_finite().unwrap();
    let y = product(&[2, 2]);
    // chamber 3 = (1,1) without its lower neighbours
    let psi = BTreeMap::from([(0, 0), (3, 3)]);
    assert!(matches!(extend_morphism(&x, &psi, &y, 0, &mut RankChooser), Err(Error::NotStarLike { chamber: 3, .. })));
}

fn permuted(sizes: &[usize], perm: &[usize]) -> FiniteBuilding {
    let p = product(sizes);
    let partitions: Vec<Vec<Vec<ChamberId>>> = (0..sizes.len())
        .map(|s| {
            let mut panels: Vec<Vec<ChamberId>> = (0..p.chamber_count())
                .filter(|&x| p.panel(x, s)[0] == x)
                .map(|x| p.panel(x, s).iter().map(|&z| perm[z]).collect())
                .collect();
            for panel in &mut panels {
                panel.sort_unstable();
            }
            panels
        })
        .collect();
    FiniteBuilding::from_partitions(p.system(), p.chamber_count(), &partitions, perm[0]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_survives_relabeling(
        (sizes, perm) in prop::collection::vec(2usize..=4, 1..=3)
            .prop_flat_map(|sizes| {
                let n: usize = sizes.iter().product();
                (Just(sizes), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            })
    ) {
        let b = permuted(&sizes, &perm);
        b.check_axioms().unwrap();
        let (p, map) = decompose_as_product(&b).unwrap();
        prop_assert_eq!(p.sizes(), &sizes[..]);
        prop_assert!(map.is_injective());
        check_morphism(&b, &p, &map).unwrap();
        prop_assert_eq!(map.apply(b.base()), p.base());
        prop_assert_eq!(pi_equivariance_check(&b, b.base(), &p, &map).unwrap(), None);
        // every chamber may serve as base
        let other = b.rebased(perm[perm.len() - 1]).unwrap();
        prop_assert!(decompose_as_product(&other).is_ok());
    }

    #[test]
    fn extensions_from_the_base_are_pi_equivariant(sizes in prop::collection::vec(2usize..=4, 1..=3), base in 0usize..64) {
        let p = product(&sizes);
        let x = p.to_finite().unwrap();
        let c = base % p.chamber_count();
        let phi = extend_morphism(&x, &BTreeMap::new(), &p, c, &mut RankChooser).unwrap();
        prop_assert!(phi.is_injective());
        prop_assert_eq!(pi_equivariance_check(&x, 0, &p, &phi).unwrap(), None);
    }
}
