//! The strange ideal below a field element, quotients by principal ideals,
//! and the comparison `r′ : L/J → DL`.

use thiserror::Error;

use super::Analysis;
use crate::iso::{is_order_isomorphism, lattice_isomorphic};
use crate::lattice::{Elem, FiniteLattice, MonotoneMap};
use crate::quantale::{field_violation, SmashLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("FIELD-VIOLATION: element {element} fails the field axiom at {witness:?}")]
pub struct FieldViolation {
    pub element: Elem,
    pub witness: Vec<Elem>,
}

/// `D = a(h) ∨ h` and the principal ideal `↓a(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrangeIdeal {
    pub h: Elem,
    pub d: Elem,
    pub a_d: Elem,
    pub ideal: Vec<Elem>,
}

impl StrangeIdeal {
    pub fn new(q: &SmashLattice, a: &[Elem], h: Elem) -> Result<Self, FieldViolation> {
        if let Some(witness) = field_violation(q, h) {
            return Err(FieldViolation { element: h, witness });
        }
        let l = q.lattice();
        let d = l.join(a[h], h);
        let a_d = a[d];
        let ideal = l.down_set(a_d).ones().collect();
        Ok(StrangeIdeal { h, d, a_d, ideal })
    }

    /// Elements strictly below `h`.
    pub fn strictly_below_h(&self, l: &FiniteLattice) -> Vec<Elem> {
        l.down_set(self.h).ones().filter(|&x| x != self.h).collect()
    }
}

/// `L/↓m` under `x ≡ y ⟺ x ∨ m = y ∨ m`. The representatives `x ∨ m` are
/// exactly the elements above `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLattice {
    pub base: FiniteLattice,
    pub m: Elem,
    /// Canonical representative `x ∨ m` of each base element.
    pub classes: Vec<Elem>,
    /// Distinct representatives in index order; quotient element `i` is
    /// `representatives[i]`.
    pub representatives: Vec<Elem>,
    pub lattice: FiniteLattice,
    /// Quotient index of each base element.
    pub projection: Vec<Elem>,
}

pub fn quotient_by_ideal(l: &FiniteLattice, m: Elem) -> QuotientLattice {
    let classes: Vec<Elem> = l.elements().map(|x| l.join(x, m)).collect();
    let mut representatives = classes.clone();
    representatives.sort_unstable();
    representatives.dedup();
    let lattice = l
        .induced(&representatives)
        .expect("an upper interval of a lattice is a lattice");
    let projection = classes
        .iter()
        .map(|c| representatives.binary_search(c).expect("representative"))
        .collect();
    QuotientLattice {
        base: l.clone(),
        m,
        classes,
        representatives,
        lattice,
        projection,
    }
}

impl QuotientLattice {
    pub fn projection_map(&self) -> MonotoneMap<'_> {
        MonotoneMap::new(&self.base, &self.lattice, self.projection.clone()).expect("x ↦ x ∨ m is monotone")
    }

    /// Base elements sent to the quotient bottom.
    pub fn kernel(&self) -> Vec<Elem> {
        let bottom = self.lattice.bottom();
        self.base.elements().filter(|&x| self.projection[x] == bottom).collect()
    }
}

/// Outcome of comparing `L/↓a(D)` with `DL` through `r`. Each part carries
/// its first failure witness, or `None` when it holds.
#[derive(Debug, Clone)]
pub struct ConjR {
    pub quotient: QuotientLattice,
    /// `x ∨ a(D) = y ∨ a(D)` but `r(x) ≠ r(y)`.
    pub well_defined: Option<Vec<Elem>>,
    /// An element in exactly one of `ker r` and `↓a(D)`.
    pub kernel: Option<Vec<Elem>>,
    /// Images of the representatives under `r`, one per quotient element.
    pub r_prime: Vec<Elem>,
    /// Why `r′` is not an order-isomorphism onto `DL`.
    pub iso: Option<Vec<Elem>>,
}

impl ConjR {
    pub(super) fn new(an: &Analysis<'_>, strange: &StrangeIdeal) -> Self {
        let l = an.lattice();
        let quotient = quotient_by_ideal(l, strange.a_d);
        let well_defined = l
            .elements()
            .find(|&x| an.r(x) != an.r(quotient.classes[x]))
            .map(|x| vec![x, quotient.classes[x]]);
        let bottom = l.bottom();
        let kernel = l
            .elements()
            .find(|&x| (an.r(x) == bottom) != l.leq(x, strange.a_d))
            .map(|x| vec![x]);
        let r_prime: Vec<Elem> = quotient.representatives.iter().map(|&c| an.r(c)).collect();
        let iso = well_defined
            .clone()
            .or_else(|| r_prime_iso_failure(an, &quotient, &r_prime));
        ConjR {
            quotient,
            well_defined,
            kernel,
            r_prime,
            iso,
        }
    }

    pub fn passed(&self) -> bool {
        self.well_defined.is_none() && self.kernel.is_none() && self.iso.is_none()
    }
}

fn r_prime_iso_failure(an: &Analysis<'_>, quotient: &QuotientLattice, r_prime: &[Elem]) -> Option<Vec<Elem>> {
    let l = an.lattice();
    let reps = &quotient.representatives;
    let dl = an.dl();
    for (i, &x) in r_prime.iter().enumerate() {
        for (j, &y) in r_prime.iter().enumerate() {
            if i < j && x == y {
                return Some(vec![reps[i], reps[j]]);
            }
        }
    }
    if let Some(&missing) = dl.iter().find(|d| !r_prime.contains(d)) {
        return Some(vec![missing]);
    }
    let dl_lattice = an.dl_lattice();
    let phi: Vec<Elem> = r_prime
        .iter()
        .map(|x| dl.binary_search(x).expect("r lands in DL"))
        .collect();
    if !is_order_isomorphism(&quotient.lattice, dl_lattice, &phi) {
        for i in 0..reps.len() {
            for j in 0..reps.len() {
                if quotient.lattice.leq(i, j) != l.leq(r_prime[i], r_prime[j]) {
                    return Some(vec![reps[i], reps[j]]);
                }
            }
        }
    }
    // projection followed by r′ must reproduce r
    if let Some(x) = l.elements().find(|&x| r_prime[quotient.projection[x]] != an.r(x)) {
        return Some(vec![x]);
    }
    debug_assert!(lattice_isomorphic(&quotient.lattice, dl_lattice).is_some());
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn mi_strange_ideal() {
        let mi = models::toy_i_model();
        let s = StrangeIdeal::new(&mi, &mi.a_table(), 2).unwrap();
        assert_eq!((s.d, s.a_d), (2, 1));
        assert_eq!(s.ideal, vec![0, 1]);
        assert_eq!(s.strictly_below_h(mi.lattice()), vec![0, 1]);
    }

    #[test]
    fn boolean_has_no_strange_elements() {
        let b = models::boolean_model(2).unwrap();
        let s = StrangeIdeal::new(&b, &b.a_table(), 1).unwrap();
        assert_eq!((s.d, s.a_d), (3, 0));
        assert_eq!(s.ideal, vec![0]);
    }

    #[test]
    fn skeleton_strange_ideal_is_i() {
        let q = models::bousfield_skeleton(2).unwrap();
        let l = q.lattice();
        let h = l.index_of("H").unwrap();
        let s = StrangeIdeal::new(&q, &q.a_table(), h).unwrap();
        assert_eq!(l.label(s.a_d), "I");
        let labels: Vec<&str> = s.ideal.iter().map(|&x| l.label(x)).collect();
        assert_eq!(labels, vec!["0", "I"]);
    }

    #[test]
    fn invalid_field_element() {
        let mi = models::toy_i_model();
        let err = StrangeIdeal::new(&mi, &mi.a_table(), 1).unwrap_err();
        assert_eq!(err.element, 1);
    }

    #[test]
    fn quotient_of_mi_by_i() {
        let mi = models::toy_i_model();
        let quot = quotient_by_ideal(mi.lattice(), 1);
        assert_eq!(quot.representatives, vec![1, 2, 3]);
        assert_eq!(
            quot.lattice,
            FiniteLattice::new(["i", "h", "1"].map(String::from).to_vec(), &[(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(quot.kernel(), vec![0, 1]);
        assert_eq!(quot.projection_map().join_failure(), None);
    }

    #[test]
    fn quotient_extremes() {
        let l = FiniteLattice::pentagon();
        let by_bottom = quotient_by_ideal(&l, l.bottom());
        assert!(lattice_isomorphic(&by_bottom.lattice, &l).is_some());
        let by_top = quotient_by_ideal(&l, l.top());
        assert_eq!(by_top.lattice.len(), 1);
        assert_eq!(by_top.kernel().len(), l.len());
    }
}
