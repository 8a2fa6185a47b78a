//! Exhaustive catalog of small lattices up to isomorphism.
//!
//! Inner elements (everything except bottom and top) are generated as
//! naturally labelled posets: element `t` receives a down-closed strict
//! down-set drawn from `0..t`. Every poset has such a labelling, so the
//! generation is exhaustive; duplicates are removed by a canonical code, the
//! maximum leq-matrix bit string over all linear extensions.

use std::collections::BTreeMap;

use crate::lattice::{standard_labels, Elem, FiniteLattice, LatticeError};

/// Hard cap on catalog size; downstream exhaustive quantale searches are only
/// feasible up to here.
pub const MAX_CATALOG_SIZE: usize = 7;

/// One lattice per isomorphism class on `n` elements, sorted by canonical
/// code (descending, so the chain comes first). Element labels follow
/// [`standard_labels`] in canonical order, which is a linear extension.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > MAX_CATALOG_SIZE {
        return Err(LatticeError::SizeCap {
            requested: n,
            cap: MAX_CATALOG_SIZE,
        });
    }
    if n == 1 {
        return Ok(vec![FiniteLattice::validate_poset(1, &[])?]);
    }
    let inner = n - 2;
    let mut codes: BTreeMap<u64, ()> = BTreeMap::new();
    let mut below = vec![0u32; inner];
    natural_posets(inner, 0, &mut below, &mut |below| {
        if let Ok(lattice) = bounded_lattice(n, below) {
            codes.insert(canonical_code(&lattice), ());
        }
    });
    codes.keys().rev().map(|&code| lattice_from_code(n, code)).collect()
}

fn natural_posets(inner: usize, t: usize, below: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
    if t == inner {
        visit(below);
        return;
    }
    for mask in 0u32..(1 << t) {
        let down_closed = (0..t).filter(|u| mask & (1 << u) != 0).all(|u| below[u] & !mask == 0);
        if down_closed {
            below[t] = mask;
            natural_posets(inner, t + 1, below, visit);
        }
    }
    below[t] = 0;
}

fn bounded_lattice(n: usize, below: &[u32]) -> Result<FiniteLattice, LatticeError> {
    let top = n - 1;
    let mut pairs = Vec::new();
    for (t, &mask) in below.iter().enumerate() {
        pairs.push((0, t + 1));
        pairs.push((t + 1, top));
        for u in 0..t {
            if mask & (1 << u) != 0 {
                pairs.push((u + 1, t + 1));
            }
        }
    }
    pairs.push((0, top));
    FiniteLattice::validate_poset(n, &pairs)
}

fn code_of(l: &FiniteLattice, order: &[Elem]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for &x in order {
        for &y in order {
            code = (code << 1) | u64::from(l.leq(x, y));
        }
    }
    debug_assert!(n * n <= 64);
    code
}

/// Maximum code over all linear extensions; an isomorphism invariant that
/// separates non-isomorphic lattices.
pub(crate) fn canonical_code(l: &FiniteLattice) -> u64 {
    let n = l.len();
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    linear_extensions(l, &mut order, &mut placed, &mut |order| {
        best = best.max(code_of(l, order));
    });
    best
}

fn linear_extensions(l: &FiniteLattice, order: &mut Vec<Elem>, placed: &mut [bool], visit: &mut dyn FnMut(&[Elem])) {
    if order.len() == l.len() {
        visit(order);
        return;
    }
    for x in l.elements() {
        if placed[x] {
            continue;
        }
        let minimal = l.down_set(x).ones().all(|y| y == x || placed[y]);
        if minimal {
            placed[x] = true;
            order.push(x);
            linear_extensions(l, order, placed, visit);
            order.pop();
            placed[x] = false;
        }
    }
}

fn lattice_from_code(n: usize, code: u64) -> Result<FiniteLattice, LatticeError> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let bit = n * n - 1 - (i * n + j);
            if i != j && (code >> bit) & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    FiniteLattice::new(standard_labels(n), &pairs)
}
