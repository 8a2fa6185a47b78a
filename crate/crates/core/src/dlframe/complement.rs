//! The closed elements as a complete Boolean algebra, Glivenko certificates,
//! and the image `L_D` of smashing with `D`.

use super::Analysis;
use crate::lattice::{Elem, FiniteLattice};
use crate::quantale::SmashLattice;

/// Closed elements with join `A²(x ∨ y)`, meet the `DL` meet, and complement
/// `A`. Tables are indexed by position in `elements`; entries are base
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cba {
    pub elements: Vec<Elem>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    complement: Vec<Elem>,
    /// The closed elements under the order inherited from the model.
    pub lattice: FiniteLattice,
}

impl Cba {
    pub(super) fn new(an: &Analysis<'_>) -> Self {
        let elements = an.closed().to_vec();
        let k = elements.len();
        let l = an.lattice();
        let mut join = Vec::with_capacity(k * k);
        let mut meet = Vec::with_capacity(k * k);
        for &x in &elements {
            for &y in &elements {
                join.push(an.big_a2(l.join(x, y)));
                meet.push(an.dl_glb(x, y));
            }
        }
        let complement = elements.iter().map(|&x| an.big_a(x)).collect();
        let lattice = l.induced(&elements).expect("closed elements are closed under DL meets");
        Cba {
            elements,
            join,
            meet,
            complement,
            lattice,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, x: Elem) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    fn pos(&self, x: Elem) -> usize {
        self.position(x)
            .unwrap_or_else(|| panic!("{x} is not a closed element"))
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[self.pos(x) * self.len() + self.pos(y)]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[self.pos(x) * self.len() + self.pos(y)]
    }

    pub fn complement(&self, x: Elem) -> Elem {
        self.complement[self.pos(x)]
    }

    /// Row-major join table over `elements`.
    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }
}

/// Outcome of the Glivenko test on a `DL` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlivenkoCertificate {
    pub x: Elem,
    pub y: Elem,
    /// `A²x = A²y`.
    pub same_closure: bool,
    /// `(x ∨ Ay) ∧ (Ax ∨ y)` when `same_closure`.
    pub witness: Option<Elem>,
    pub dense: bool,
    pub equalizes: bool,
    /// A dense element equalizing `x` and `y` although their closures differ.
    pub separating_violation: Option<Elem>,
}

impl GlivenkoCertificate {
    pub(super) fn new(an: &Analysis<'_>, x: Elem, y: Elem) -> Self {
        let l = an.lattice();
        let same_closure = an.big_a2(x) == an.big_a2(y);
        if same_closure {
            // the meet is taken in DL, where it is the smash; the meet in
            // the whole lattice can leave DL
            let z = an.s(l.join(x, an.big_a(y)), l.join(an.big_a(x), y));
            GlivenkoCertificate {
                x,
                y,
                same_closure,
                witness: Some(z),
                dense: an.is_dense(z),
                equalizes: an.s(x, z) == an.s(y, z),
                separating_violation: None,
            }
        } else {
            let separating_violation = an.dense().iter().copied().find(|&z| an.s(x, z) == an.s(y, z));
            GlivenkoCertificate {
                x,
                y,
                same_closure,
                witness: None,
                dense: false,
                equalizes: false,
                separating_violation,
            }
        }
    }

    pub fn holds(&self) -> bool {
        if self.same_closure {
            self.dense && self.equalizes
        } else {
            self.separating_violation.is_none()
        }
    }
}

/// `{ x ∧ d | x ∈ L }`, sorted.
pub fn ld_elements(q: &SmashLattice, d: Elem) -> Vec<Elem> {
    let mut out: Vec<Elem> = q.lattice().elements().map(|x| q.smash(x, d)).collect();
    out.sort_unstable();
    out.dedup();
    out
}
