use proptest::prelude::*;
use rab_core::building::{
    build, build_by_covering, build_regular, find_isomorphism, neighborhood_chambers, parse_bldg, verify, write_bldg,
    BuildingBall, Check, Isomorphism, Thickness,
};
use rab_core::coxeter::{ElemId, Limits};
use rab_core::halfspace::HalfSpace;
use rab_core::{ChamberId, ChamberSystem, CoxeterSystem, Gen};
use rab_oracles::ChamberData;

fn systems() -> Vec<CoxeterSystem> {
    vec![CoxeterSystem::infinite_dihedral(), CoxeterSystem::klein_four(), CoxeterSystem::polygon(5)]
}

fn as_data(b: &BuildingBall) -> ChamberData {
    ChamberData::from_fn(b.chamber_count(), b.rank(), |x, y, s| b.adjacent(x, y, s))
}

fn assert_all_checks_pass(b: &BuildingBall) {
    for o in verify(b, &Check::ALL) {
        assert!(o.passed(), "{}: {:?}", o.check, o.failure);
    }
}

#[test]
fn pentagon_ball_counts() {
    let p5 = CoxeterSystem::polygon(5);
    let b = build_regular(&p5, &[2; 5], 2, Limits::default()).unwrap();
    assert_eq!(b.chamber_count(), 71);
    for w in 0..b.ball().len() as ElemId {
        assert_eq!(b.fiber(w).len(), 1 << b.ball().length(w));
    }
    for x in 0..b.chamber_count() {
        for s in 0..5 {
            if b.panel_is_complete(x, s) {
                assert_eq!(b.panel(x, s).len(), 3);
            }
        }
    }
    assert_all_checks_pass(&b);
}

#[test]
fn gallery_distance_from_base_is_fold_length() {
    for sys in systems() {
        let b = build_regular(&sys, &vec![2; sys.rank()], 3, Limits::default()).unwrap();
        let dist = as_data(&b).distances(b.base());
        for x in 0..b.chamber_count() {
            assert_eq!(dist[x], b.length(x), "chamber {x}");
        }
    }
}

#[test]
fn irregular_thickness_follows_the_rule() {
    // q varies from panel to panel
    struct ByParity;
    impl Thickness for ByParity {
        fn q(&mut self, x: ChamberId, s: Gen) -> usize {
            1 + (x + s) % 2
        }
    }
    let a1 = CoxeterSystem::infinite_dihedral();
    let b = build(&a1, 3, &mut ByParity, Limits::default()).unwrap();
    assert!(b.q().is_none());
    for o in verify(&b, &[Check::F1, Check::F2, Check::F3, Check::Axioms, Check::B1]) {
        assert!(o.passed(), "{}: {:?}", o.check, o.failure);
    }
    let text = write_bldg(&b);
    assert_eq!(write_bldg(&parse_bldg(&text, Limits::default()).unwrap()), text);
}

#[test]
fn uniqueness_between_constructions() {
    for (sys, q, radius) in [
        (CoxeterSystem::polygon(5), vec![2; 5], 2),
        (CoxeterSystem::infinite_dihedral(), vec![2, 2], 3),
        (CoxeterSystem::klein_four(), vec![3, 1], 2),
    ] {
        let glued = build_regular(&sys, &q, radius, Limits::default()).unwrap();
        let sizes: Vec<usize> = q.iter().map(|q| q + 1).collect();
        let covered = build_by_covering(&sys, &sizes, radius, Limits::default()).unwrap();
        match find_isomorphism(&glued, &covered.building).unwrap() {
            Isomorphism::Found(map) => assert!(map.is_injective()),
            other => panic!("no isomorphism: {other:?}"),
        }
    }
}

#[test]
fn base_half_space_neighborhoods_have_unique_shortest_chambers() {
    let p5 = CoxeterSystem::polygon(5);
    let k = 3;
    let b = build_regular(&p5, &[2; 5], k, Limits::default()).unwrap();
    let sys = b.system();
    for s in 0..5 {
        let hs = HalfSpace::new(rab_core::Element::identity(sys), s);
        for x in 0..b.chamber_count() {
            if b.length(x) + 2 > k || !hs.contains(sys, b.fold(x)).unwrap() {
                continue;
            }
            let n = neighborhood_chambers(&b, &hs, x).unwrap();
            assert!(n.shortest().is_some(), "s={s} x={x}: {:?}", n.minimal);
        }
    }
}

fn system_strategy() -> impl Strategy<Value = CoxeterSystem> {
    (0usize..3).prop_map(|i| systems().swap_remove(i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_regular_balls(sys in system_strategy(), q in prop::collection::vec(1usize..=3, 5), radius in 1usize..=2) {
        let q = &q[..sys.rank()];
        let glued = build_regular(&sys, q, radius, Limits::default()).unwrap();
        for w in 0..glued.ball().len() as ElemId {
            let expected: usize = glued.ball().element(w).letters().map(|s| q[s]).product();
            prop_assert_eq!(glued.fiber(w).len(), expected);
        }
        for o in verify(&glued, &Check::ALL) {
            prop_assert!(o.passed(), "{}: {:?}", o.check, o.failure);
        }
        let sizes: Vec<usize> = q.iter().map(|q| q + 1).collect();
        let covered = build_by_covering(&sys, &sizes, radius, Limits::default()).unwrap();
        prop_assert_eq!(covered.building.chamber_count(), glued.chamber_count());
        prop_assert!(matches!(find_isomorphism(&glued, &covered.building).unwrap(), Isomorphism::Found(_)));
        let text = write_bldg(&glued);
        let back = parse_bldg(&text, Limits::default()).unwrap();
        prop_assert_eq!(write_bldg(&back), text);
    }
}
