#![allow(dead_code)]

pub mod naive;

use bousfield_core::lattice::{Elem, FiniteLattice};
use rand::seq::SliceRandom;
use rand::Rng;

/// `f(⊥) = ⊥` and `f(x ∨ y) = f(x) ∨ f(y)` by exhaustive comparison.
pub fn preserves_joins(src: &FiniteLattice, dst: &FiniteLattice, f: &[Elem]) -> bool {
    f[src.bottom()] == dst.bottom()
        && src
            .elements()
            .all(|x| src.elements().all(|y| f[src.join(x, y)] == dst.join(f[x], f[y])))
}

/// Elements in order of height, so that everything below `x` comes first.
fn by_height(l: &FiniteLattice) -> Vec<Elem> {
    let mut order: Vec<Elem> = l.elements().collect();
    order.sort_by_key(|&x| l.elements().filter(|&y| l.lt(y, x)).count());
    order
}

/// A random monotone map: each image is drawn above the images of
/// everything below.
pub fn random_monotone<R: Rng>(rng: &mut R, src: &FiniteLattice, dst: &FiniteLattice) -> Vec<Elem> {
    let mut f = vec![usize::MAX; src.len()];
    for x in by_height(src) {
        let floor = dst.lub(src.elements().filter(|&y| src.lt(y, x)).map(|y| f[y]));
        let choices: Vec<Elem> = dst.elements().filter(|&z| dst.leq(floor, z)).collect();
        f[x] = *choices.choose(rng).unwrap();
    }
    f
}

/// A random join-preserving map, built from monotone images of the
/// join-irreducibles and kept only if the join extension preserves joins.
pub fn random_join_preserving<R: Rng>(rng: &mut R, src: &FiniteLattice, dst: &FiniteLattice) -> Option<Vec<Elem>> {
    let ji: Vec<Elem> = src
        .elements()
        .filter(|&x| x != src.bottom() && src.elements().filter(|&y| src.lt(y, x)).count() > 0)
        .filter(|&x| {
            let below: Vec<Elem> = src.elements().filter(|&y| src.lt(y, x)).collect();
            src.lub(below.iter().copied()) != x
        })
        .collect();
    for _ in 0..50 {
        let mut img = vec![usize::MAX; src.len()];
        let mut order = ji.clone();
        order.sort_by_key(|&x| src.elements().filter(|&y| src.lt(y, x)).count());
        for &p in &order {
            let floor = dst.lub(order.iter().copied().filter(|&q| src.lt(q, p)).map(|q| img[q]));
            let choices: Vec<Elem> = dst.elements().filter(|&z| dst.leq(floor, z)).collect();
            img[p] = *choices.choose(rng).unwrap();
        }
        let f: Vec<Elem> = src
            .elements()
            .map(|x| dst.lub(ji.iter().copied().filter(|&p| src.leq(p, x)).map(|p| img[p])))
            .collect();
        if preserves_joins(src, dst, &f) {
            return Some(f);
        }
    }
    None
}
