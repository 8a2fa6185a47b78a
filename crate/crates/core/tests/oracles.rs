//! Independent oracles for the enumerators, plus property tests on lattice
//! operations and adjoints.

mod common;

use std::collections::BTreeSet;

use common::naive::{isomorphic, naive_lattices, naive_quantales, order_of};

use bousfield_core::enumerate::enumerate_lattices;
use bousfield_core::lattice::{Elem, FiniteLattice};
use bousfield_core::search::enumerate_tables;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn lattice_counts_match_naive_enumeration() {
    for n in 1..=6 {
        let naive = naive_lattices(n);
        let ours = enumerate_lattices(n).unwrap();
        assert_eq!(ours.len(), naive.len(), "n = {n}");
        for l in &ours {
            let o = order_of(l);
            assert_eq!(naive.iter().filter(|m| isomorphic(m, &o)).count(), 1, "n = {n}");
        }
    }
}

#[test]
fn lattice_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_lattices(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
}

#[test]
fn quantale_enumeration_matches_naive_tables() {
    for n in 1..=4 {
        for l in enumerate_lattices(n).unwrap() {
            let (tables, _) = enumerate_tables(&l).unwrap();
            let ours: BTreeSet<Vec<Elem>> = tables.iter().cloned().collect();
            assert_eq!(ours.len(), tables.len(), "duplicate table on a {n}-lattice");
            assert_eq!(ours, naive_quantales(&l), "n = {n}");
        }
    }
}

#[test]
fn three_chain_has_two_quantales() {
    let l = FiniteLattice::chain(3).unwrap();
    assert_eq!(naive_quantales(&l).len(), 2);
    assert_eq!(enumerate_tables(&l).unwrap().0.len(), 2);
}

fn catalog() -> Vec<FiniteLattice> {
    (1..=6).flat_map(|n| enumerate_lattices(n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lub_and_glb_are_bounds(li in 0usize..25, xs in proptest::collection::vec(0usize..6, 0..5)) {
        let cat = catalog();
        let l = &cat[li];
        let xs: Vec<Elem> = xs.into_iter().map(|x| x % l.len()).collect();
        let j = l.lub(xs.iter().copied());
        let m = l.glb(xs.iter().copied());
        for &x in &xs {
            prop_assert!(l.leq(x, j));
            prop_assert!(l.leq(m, x));
        }
        for z in l.elements() {
            if xs.iter().all(|&x| l.leq(x, z)) {
                prop_assert!(l.leq(j, z));
            }
            if xs.iter().all(|&x| l.leq(z, x)) {
                prop_assert!(l.leq(z, m));
            }
        }
    }

    #[test]
    fn binary_ops_absorb(li in 0usize..25, x in 0usize..6, y in 0usize..6) {
        let cat = catalog();
        let l = &cat[li];
        let (x, y) = (x % l.len(), y % l.len());
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.join(x, y), l.join(y, x));
        prop_assert_eq!(l.leq(x, y), l.join(x, y) == y);
    }

    #[test]
    fn right_adjoints_certify(seed in any::<u64>(), a in 0usize..25, b in 0usize..25) {
        let cat = catalog();
        let (src, dst) = (&cat[a], &cat[b]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(f) = common::random_join_preserving(&mut rng, src, dst) {
            let map = bousfield_core::lattice::MonotoneMap::new(src, dst, f.clone()).unwrap();
            let g = map.right_adjoint().unwrap();
            for x in src.elements() {
                for y in dst.elements() {
                    prop_assert_eq!(dst.leq(f[x], y), src.leq(x, g.apply(y)));
                }
            }
        }
        let f = common::random_monotone(&mut rng, src, dst);
        let map = bousfield_core::lattice::MonotoneMap::new(src, dst, f.clone()).unwrap();
        prop_assert_eq!(map.right_adjoint().is_ok(), common::preserves_joins(src, dst, &f));
    }
}
