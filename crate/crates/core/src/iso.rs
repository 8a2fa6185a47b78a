//! Order-isomorphism search between finite lattices.

use crate::lattice::{Elem, FiniteLattice};

/// Per-element invariant used to prune candidate images.
type Signature = (usize, usize, usize);

fn signatures(l: &FiniteLattice) -> Vec<Signature> {
    let heights = l.heights();
    l.elements()
        .map(|x| (heights[x], l.down_set(x).count_ones(..), l.up_set(x).count_ones(..)))
        .collect()
}

/// Returns `phi` with `x ≤ y ⟺ phi[x] ≤ phi[y]` if the lattices are
/// isomorphic. Candidates must agree on height, down-set size and up-set
/// size before backtracking checks order consistency.
pub fn lattice_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<Elem>> {
    if a.len() != b.len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let mut order: Vec<Elem> = a.elements().collect();
    order.sort_by_key(|&x| (sig_a[x], x));
    let candidates: Vec<Vec<Elem>> = order
        .iter()
        .map(|&x| b.elements().filter(|&y| sig_b[y] == sig_a[x]).collect())
        .collect();
    let mut phi = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    if extend(a, b, &order, &candidates, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn extend(
    a: &FiniteLattice,
    b: &FiniteLattice,
    order: &[Elem],
    candidates: &[Vec<Elem>],
    depth: usize,
    phi: &mut [Elem],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &candidates[depth] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = phi[u];
            a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
        });
        if !consistent {
            continue;
        }
        phi[x] = y;
        used[y] = true;
        if extend(a, b, order, candidates, depth + 1, phi, used) {
            return true;
        }
        used[y] = false;
        phi[x] = usize::MAX;
    }
    false
}

/// Checks that `phi` is a bijection that preserves and reflects order.
pub fn is_order_isomorphism(a: &FiniteLattice, b: &FiniteLattice, phi: &[Elem]) -> bool {
    if a.len() != b.len() || phi.len() != a.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &y in phi {
        if y >= b.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    a.elements()
        .all(|x| a.elements().all(|y| a.leq(x, y) == b.leq(phi[x], phi[y])))
}
