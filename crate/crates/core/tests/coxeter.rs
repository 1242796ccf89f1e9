use proptest::prelude::*;
use rab_core::coxeter::{enumerate_ball, sphere_sizes, CoxeterSystem, Element, Limits};
use std::sync::OnceLock;

use rab_oracles::{CayleyBall, TitsGroup};

fn systems() -> Vec<(CoxeterSystem, TitsGroup)> {
    let p5_pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    vec![
        (CoxeterSystem::infinite_dihedral(), TitsGroup::new(2, &[])),
        (CoxeterSystem::klein_four(), TitsGroup::new(2, &[(0, 1)])),
        (CoxeterSystem::polygon(5), TitsGroup::new(5, &p5_pairs)),
    ]
}

/// Radius-8 ball of the pentagon group, shared across cases.
fn pentagon_oracle() -> &'static CayleyBall {
    static BALL: OnceLock<CayleyBall> = OnceLock::new();
    BALL.get_or_init(|| systems().pop().unwrap().1.ball(8))
}

fn letters(w: &Element) -> Vec<usize> {
    w.letters().collect()
}

#[test]
fn ball_matches_cayley_bfs() {
    for (sys, group) in systems() {
        let oracle = group.ball(6);
        let ours = enumerate_ball(&sys, 6, Limits::default()).unwrap();
        assert_eq!(sphere_sizes(&sys, 6, Limits::default()).unwrap(), oracle.sphere_sizes());
        assert_eq!(ours.len(), oracle.len());
        for w in &ours {
            assert_eq!(oracle.word_length(&letters(w)), Some(w.len()), "{}", w.display(&sys));
        }
    }
}

#[test]
fn pentagon_sphere_sizes() {
    let p5 = CoxeterSystem::polygon(5);
    assert_eq!(sphere_sizes(&p5, 2, Limits::default()).unwrap(), [1, 5, 15]);
}

fn word_strategy(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=8)
}

proptest! {
    #[test]
    fn normal_form_is_reduced(word in word_strategy(5)) {
        let sys = CoxeterSystem::polygon(5);
        let w = sys.normal_form(&word).unwrap();
        let oracle = pentagon_oracle();
        prop_assert_eq!(oracle.word_length(&word), Some(w.len()));
        prop_assert_eq!(oracle.find(&word), oracle.find(&letters(&w)));
        // canonical: normalizing the normal form changes nothing
        prop_assert_eq!(&sys.normal_form(&letters(&w)).unwrap(), &w);
    }

    #[test]
    fn group_laws(a in word_strategy(5), b in word_strategy(5), c in word_strategy(5)) {
        let sys = CoxeterSystem::polygon(5);
        let (a, b, c) = (sys.normal_form(&a).unwrap(), sys.normal_form(&b).unwrap(), sys.normal_form(&c).unwrap());
        let ab_c = sys.multiply(&sys.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = sys.multiply(&a, &sys.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let inv = sys.inverse(&a).unwrap();
        prop_assert!(sys.multiply(&a, &inv).unwrap().is_identity());
        prop_assert_eq!(sys.dist(&a, &b).unwrap(), sys.multiply(&inv, &b).unwrap().len());
    }

    #[test]
    fn descents_shorten(word in word_strategy(5)) {
        let sys = CoxeterSystem::polygon(5);
        let w = sys.normal_form(&word).unwrap();
        let desc = sys.descent_set(&w).unwrap();
        for s in 0..5 {
            let ws = sys.mul_gen(&w, s).unwrap();
            prop_assert_eq!(desc.contains(s), ws.len() < w.len());
        }
    }

    #[test]
    fn coset_minimum_is_shortest_in_coset(word in word_strategy(5), mask in 0u64..32) {
        let sys = CoxeterSystem::polygon(5);
        let w = sys.normal_form(&word).unwrap();
        let set = rab_core::GenSet(mask);
        if !sys.is_spherical(set) {
            return Ok(());
        }
        let low = sys.coset_minimum(&w, set).unwrap();
        prop_assert!(sys.in_coset(&w, set, &low).unwrap());
        for sub in set.subsets() {
            let u = sys.multiply(&low, &sys.longest_element(sub).unwrap()).unwrap();
            prop_assert_eq!(u.len(), low.len() + sub.len());
        }
    }
}
