use std::collections::BTreeSet;

use proptest::prelude::*;
use rab_core::building::build_regular;
use rab_core::complexes::{antipodal_subcomplex, homology, realize, realize_finite, ChainComplex, SimplicialComplex};
use rab_core::finite::ProductBuilding;
use rab_core::{ChamberSystem, CoxeterSystem, Limits};
use rab_oracles::{join_reduced_euler, ChamberData};

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=4), 1..=6).prop_map(move |gens| {
            let labels = (0..n).map(|v| format!("v{v}")).collect();
            SimplicialComplex::from_simplices(labels, gens.into_iter().map(|g| g.into_iter().collect())).unwrap()
        })
    })
}

fn spherical_masks(sys: &CoxeterSystem) -> Vec<u64> {
    sys.spherical_subsets().into_iter().map(|t| t.0).collect()
}

#[test]
fn finite_realization_matches_poset_oracle() {
    for sizes in [vec![2, 2], vec![3, 2], vec![3, 3], vec![2, 2, 2], vec![3, 2, 2]] {
        let p = ProductBuilding::new(&CoxeterSystem::finite(sizes.len()), &sizes).unwrap();
        let (c, vertices) = realize_finite(&p.to_finite().unwrap()).unwrap();
        let o = ChamberData::product(&sizes);
        let counts = o.residue_poset_counts(&spherical_masks(p.system()), |_, _| true);
        assert_eq!(vertices.len(), counts.vertices);
        assert_eq!(c.f_vector(), counts.f_vector, "{sizes:?}");
        // a cone over the whole-building residue
        let h = homology(&c).unwrap();
        assert!(h.groups.iter().all(|g| g.is_zero()), "{sizes:?}");
    }
}

#[test]
fn ball_realization_matches_poset_oracle() {
    for (sys, radius) in [(CoxeterSystem::infinite_dihedral(), 3), (CoxeterSystem::polygon(5), 2)] {
        let q = vec![2; sys.rank()];
        let b = build_regular(&sys, &q, radius, Limits::default()).unwrap();
        let o = ChamberData::from_fn(b.chamber_count(), b.rank(), |x, y, s| b.adjacent(x, y, s));
        // complete residues are those all of whose panels are full
        let counts = o.residue_poset_counts(&spherical_masks(&sys), |r, t| {
            r.iter()
                .all(|&x| (0..sys.rank()).filter(|s| t >> s & 1 == 1).all(|s| o.panel_members(x, s).len() == q[s] + 1))
        });
        let (c, vertices) = realize(&b).unwrap();
        assert_eq!(vertices.len(), counts.vertices);
        assert_eq!(c.f_vector(), counts.f_vector);
        let h = homology(&c).unwrap();
        assert!(h.groups.iter().all(|g| g.is_zero()), "{:?}", h.groups);
    }
}

#[test]
fn antipodal_ranks() {
    // panel sizes m_i give a join of sets with m_i - 1 points
    for sizes in [vec![3, 3], vec![4, 4], vec![4, 5], vec![5, 5], vec![3, 4, 4], vec![4, 4, 4], vec![4, 4, 5]] {
        let n = sizes.len();
        let p = ProductBuilding::new(&CoxeterSystem::finite(n), &sizes).unwrap();
        let c = antipodal_subcomplex(&p, p.base()).unwrap();
        let h = homology(&c).unwrap();
        let expected: usize = sizes.iter().map(|m| m - 2).product();
        for j in -1..n as isize - 1 {
            assert!(h.group(j).is_none_or(|g| g.is_zero()), "{sizes:?} j={j}");
        }
        let top = h.group(n as isize - 1).unwrap();
        assert_eq!((top.rank, top.torsion.len()), (expected, 0), "{sizes:?}");
        let points: Vec<usize> = sizes.iter().map(|m| m - 1).collect();
        assert_eq!(c.euler_characteristic() - 1, join_reduced_euler(&points));
    }
}

#[test]
fn antipodal_subcomplex_does_not_depend_on_the_base() {
    let p = ProductBuilding::new(&CoxeterSystem::finite(2), &[3, 4]).unwrap();
    let f: BTreeSet<Vec<usize>> =
        (0..p.chamber_count()).map(|b| antipodal_subcomplex(&p, b).unwrap().f_vector()).collect();
    assert_eq!(f.len(), 1);
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(c in complex_strategy()) {
        prop_assert!(ChainComplex::from_complex(&c).check().is_ok());
    }

    #[test]
    fn euler_characteristic_matches_homology(c in complex_strategy()) {
        let h = homology(&c).unwrap();
        prop_assert_eq!(h.reduced_euler_characteristic(), c.euler_characteristic() - 1);
    }

    #[test]
    fn relabeling_preserves_homology(
        (c, perm) in complex_strategy().prop_flat_map(|c| {
            let n = c.vertex_count();
            (Just(c), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let d = c.relabel(&perm).unwrap();
        prop_assert!(d.is_closed());
        prop_assert_eq!(d.f_vector(), c.f_vector());
        prop_assert_eq!(homology(&d).unwrap(), homology(&c).unwrap());
    }

    #[test]
    fn export_round_trips(c in complex_strategy()) {
        let text = c.export();
        let back = SimplicialComplex::parse(&text).unwrap();
        prop_assert_eq!(back.export(), text);
    }
}
