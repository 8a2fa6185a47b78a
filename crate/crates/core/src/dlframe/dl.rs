use crate::lattice::Elem;
use crate::quantale::SmashLattice;

/// Smash-idempotent elements, in index order.
pub fn compute_dl(q: &SmashLattice) -> Vec<Elem> {
    q.lattice().elements().filter(|&x| q.smash(x, x) == x).collect()
}

/// First violation of the frame structure on `dl`: closure under joins and
/// smash, the meet of `DL` agreeing with the smash, and distribution of that
/// meet over joins.
pub fn dl_frame_violation(q: &SmashLattice, dl: &[Elem]) -> Option<Vec<Elem>> {
    let l = q.lattice();
    let n = q.len();
    let mut in_dl = vec![false; n];
    for &x in dl {
        in_dl[x] = true;
    }
    if !in_dl[l.bottom()] {
        return Some(vec![l.bottom()]);
    }
    if !in_dl[l.top()] {
        return Some(vec![l.top()]);
    }
    for &x in dl {
        for &y in dl {
            if !in_dl[l.join(x, y)] || !in_dl[q.smash(x, y)] {
                return Some(vec![x, y]);
            }
            let meet_in_dl = l.lub(dl.iter().copied().filter(|&z| l.leq(z, x) && l.leq(z, y)));
            if meet_in_dl != q.smash(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    for &x in dl {
        for &y in dl {
            for &z in dl {
                if q.smash(x, l.join(y, z)) != l.join(q.smash(x, y), q.smash(x, z)) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// `r(x) = lub { y ∈ DL | y ≤ x }`.
pub fn retraction_r(q: &SmashLattice, in_dl: &[bool]) -> Vec<Elem> {
    let l = q.lattice();
    l.elements()
        .map(|x| l.lub(l.down_set(x).ones().filter(|&y| in_dl[y])))
        .collect()
}
