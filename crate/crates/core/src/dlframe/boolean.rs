use crate::lattice::Elem;
use crate::quantale::SmashLattice;

/// Complemented elements: `a(x) ∨ x = ⊤`.
pub fn complemented_ba(q: &SmashLattice, a: &[Elem]) -> Vec<Elem> {
    let l = q.lattice();
    let top = l.top();
    l.elements().filter(|&x| l.join(a[x], x) == top).collect()
}
