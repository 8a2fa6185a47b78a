//! Smash products on finite lattices.
//!
//! A [`SmashLattice`] is a finite lattice with a commutative, associative
//! product that has the top as unit and distributes over joins. Distribution
//! is checked on binary joins and on the empty join; on a finite carrier every
//! join is a finite iterate of binary joins, so this is distribution over all
//! joins.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::lattice::{Elem, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantaleError {
    #[error("smash table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
    #[error("smash table entry ({0}, {1}) is outside the lattice")]
    TableEntry(Elem, Elem),
    #[error("designated field element {0} is outside the lattice")]
    FieldIndex(Elem),
    #[error("axiom check failed: {0}")]
    Axioms(AxiomReport),
}

#[derive(Clone, PartialEq, Eq)]
pub struct SmashLattice {
    name: String,
    lattice: FiniteLattice,
    smash: Vec<Elem>,
    field_elements: Vec<Elem>,
}

impl fmt::Debug for SmashLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmashLattice")
            .field("name", &self.name)
            .field("lattice", &self.lattice)
            .field("field_elements", &self.field_elements)
            .finish()
    }
}

impl SmashLattice {
    /// Structural construction only. Run [`SmashLattice::validate`] (or use
    /// [`SmashLattice::checked`]) before relying on any derived operator.
    pub fn new(
        name: impl Into<String>,
        lattice: FiniteLattice,
        smash: Vec<Elem>,
        mut field_elements: Vec<Elem>,
    ) -> Result<Self, QuantaleError> {
        let n = lattice.len();
        if smash.len() != n * n {
            return Err(QuantaleError::TableSize {
                got: smash.len(),
                expected: n * n,
            });
        }
        if let Some(pos) = smash.iter().position(|&v| v >= n) {
            return Err(QuantaleError::TableEntry(pos / n, pos % n));
        }
        if let Some(&h) = field_elements.iter().find(|&&h| h >= n) {
            return Err(QuantaleError::FieldIndex(h));
        }
        field_elements.sort_unstable();
        field_elements.dedup();
        Ok(SmashLattice {
            name: name.into(),
            lattice,
            smash,
            field_elements,
        })
    }

    pub fn from_fn(
        name: impl Into<String>,
        lattice: FiniteLattice,
        f: impl Fn(Elem, Elem) -> Elem,
        field_elements: Vec<Elem>,
    ) -> Result<Self, QuantaleError> {
        let n = lattice.len();
        let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::new(name, lattice, table, field_elements)
    }

    /// Smash equal to the lattice meet; a model exactly when the lattice is
    /// distributive.
    pub fn with_meet(name: impl Into<String>, lattice: FiniteLattice) -> Self {
        let n = lattice.len();
        let table = (0..n * n).map(|i| lattice.meet(i / n, i % n)).collect();
        SmashLattice {
            name: name.into(),
            lattice,
            smash: table,
            field_elements: Vec::new(),
        }
    }

    /// Construction that also requires every axiom in the report to pass.
    pub fn checked(
        name: impl Into<String>,
        lattice: FiniteLattice,
        smash: Vec<Elem>,
        field_elements: Vec<Elem>,
    ) -> Result<Self, QuantaleError> {
        let q = Self::new(name, lattice, smash, field_elements)?;
        let report = q.validate();
        if report.all_passed() {
            Ok(q)
        } else {
            Err(QuantaleError::Axioms(report))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_field_elements(mut self, mut field_elements: Vec<Elem>) -> Self {
        field_elements.sort_unstable();
        field_elements.dedup();
        self.field_elements = field_elements;
        self
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn table(&self) -> &[Elem] {
        &self.smash
    }

    pub fn field_elements(&self) -> &[Elem] {
        &self.field_elements
    }

    #[inline]
    pub fn smash(&self, x: Elem, y: Elem) -> Elem {
        self.smash[x * self.len() + y]
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn validate(&self) -> AxiomReport {
        validate_quantale(self)
    }

    /// `a(x) = lub { y | x ∧ y = ⊥ }`.
    pub fn ann_a(&self, x: Elem) -> Elem {
        let bottom = self.bottom();
        self.lattice
            .lub(self.lattice.elements().filter(|&y| self.smash(x, y) == bottom))
    }

    pub fn a_table(&self) -> Vec<Elem> {
        self.lattice.elements().map(|x| self.ann_a(x)).collect()
    }

    /// The same construction with the meet in place of the smash. Exposed for
    /// reports only; nothing is asserted about it.
    pub fn meet_a_table(&self) -> Vec<Elem> {
        let l = &self.lattice;
        l.elements()
            .map(|x| l.lub(l.elements().filter(|&y| l.meet(x, y) == l.bottom())))
            .collect()
    }

    pub fn bousfield_axiom(&self) -> BousfieldCheck {
        let a = self.a_table();
        bousfield_check(&self.lattice, &a)
    }

    pub fn curly_meet_identity(&self, x: Elem, y: Elem) -> CurlyMeet {
        let l = &self.lattice;
        let glb = l.meet(x, y);
        let via_complement = self.ann_a(l.join(self.ann_a(x), self.ann_a(y)));
        CurlyMeet {
            glb,
            via_complement,
            agree: glb == via_complement,
        }
    }

    /// `x ⋎ y = a(a(x) ∧ a(y))`.
    pub fn curly_vee(&self, x: Elem, y: Elem) -> Elem {
        self.ann_a(self.smash(self.ann_a(x), self.ann_a(y)))
    }

    /// `x^k` with `x^1 = x` and `x^(k+1) = x ∧ x^k`. Panics on `k = 0`.
    pub fn smash_power(&self, x: Elem, k: usize) -> Elem {
        assert!(k >= 1, "smash powers start at exponent 1");
        (1..k).fold(x, |acc, _| self.smash(x, acc))
    }

    /// Smallest `m ≥ 1` with `x^m = x^(m+1)`.
    pub fn stabilization_index(&self, x: Elem) -> Result<usize, PowerCycle> {
        let mut power = x;
        for m in 1..=self.len() + 1 {
            let next = self.smash(x, power);
            if next == power {
                return Ok(m);
            }
            power = next;
        }
        Err(PowerCycle { element: x })
    }
}

/// The power sequence of `element` never repeats a value consecutively; only
/// possible when the unit or distribution axioms fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("CYCLE: smash powers of element {element} do not stabilize")]
pub struct PowerCycle {
    pub element: Elem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurlyMeet {
    pub glb: Elem,
    pub via_complement: Elem,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BousfieldCheck {
    /// `a(a(x)) = x` for every `x`.
    pub holds: bool,
    /// First `x` with `a(a(x)) ≠ x`.
    pub witness: Option<Elem>,
    /// `a(y) ≤ a(x) ⟹ x ≤ y` for every pair; equivalent to `holds`.
    pub order_reflected: bool,
}

pub(crate) fn bousfield_check(l: &FiniteLattice, a: &[Elem]) -> BousfieldCheck {
    let witness = l.elements().find(|&x| a[a[x]] != x);
    let order_reflected = l
        .elements()
        .all(|x| l.elements().all(|y| !l.leq(a[y], a[x]) || l.leq(x, y)));
    debug_assert_eq!(witness.is_none(), order_reflected);
    BousfieldCheck {
        holds: witness.is_none(),
        witness,
        order_reflected,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Comm,
    Assoc,
    UnitTop,
    Distr,
    BottomAbsorb,
    Integral,
    Field(Elem),
}

impl Axiom {
    pub fn id(&self) -> String {
        match self {
            Axiom::Comm => "COMM".into(),
            Axiom::Assoc => "ASSOC".into(),
            Axiom::UnitTop => "UNIT-TOP".into(),
            Axiom::Distr => "DISTR".into(),
            Axiom::BottomAbsorb => "BOTTOM-ABSORB".into(),
            Axiom::Integral => "INTEGRAL".into(),
            Axiom::Field(_) => "FIELD".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomEntry {
    pub axiom: Axiom,
    pub passed: bool,
    /// Minimal tuple in canonical scan order; `None` when passed.
    pub witness: Option<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> = self
            .entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| match &e.witness {
                Some(w) => format!("{} at {:?}", e.axiom.id(), w),
                None => e.axiom.id(),
            })
            .collect();
        if failed.is_empty() {
            write!(f, "all axioms pass")
        } else {
            write!(f, "{}", failed.join(", "))
        }
    }
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    /// The quantale axioms proper, ignoring field designations.
    pub fn is_quantale(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| !matches!(e.axiom, Axiom::Field(_)))
            .all(|e| e.passed)
    }

    pub fn entry(&self, axiom: Axiom) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| !e.passed)
    }
}

fn entry(axiom: Axiom, witness: Option<Vec<Elem>>) -> AxiomEntry {
    AxiomEntry {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

pub fn validate_quantale(q: &SmashLattice) -> AxiomReport {
    let l = q.lattice();
    let n = l.len();
    let s = |x, y| q.smash(x, y);

    let comm = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| s(x, y) != s(y, x))
        .map(|(x, y)| vec![x, y]);

    let assoc = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            let xy = s(x, y);
            for z in 0..n {
                if s(xy, z) != s(x, s(y, z)) {
                    return Some(vec![x, y, z]);
                }
            }
        }
        None
    });

    let top = l.top();
    let unit = (0..n).find(|&x| s(top, x) != x || s(x, top) != x).map(|x| vec![x]);

    // monotonicity first, then binary joins
    let distr = (0..n)
        .into_par_iter()
        .find_map_first(|x| {
            for y in 0..n {
                for z in l.up_set(y).ones() {
                    if !l.leq(s(x, y), s(x, z)) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
            None
        })
        .or_else(|| {
            (0..n).into_par_iter().find_map_first(|x| {
                for y in 0..n {
                    for z in 0..n {
                        if s(x, l.join(y, z)) != l.join(s(x, y), s(x, z)) {
                            return Some(vec![x, y, z]);
                        }
                    }
                }
                None
            })
        });

    let bottom = l.bottom();
    let absorb = (0..n)
        .find(|&x| s(x, bottom) != bottom || s(bottom, x) != bottom)
        .map(|x| vec![x]);

    let integral = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| !l.leq(s(x, y), x))
        .map(|(x, y)| vec![x, y]);

    let mut entries = vec![
        entry(Axiom::Comm, comm),
        entry(Axiom::Assoc, assoc),
        entry(Axiom::UnitTop, unit),
        entry(Axiom::Distr, distr),
        entry(Axiom::BottomAbsorb, absorb),
        entry(Axiom::Integral, integral),
    ];
    for &h in q.field_elements() {
        entries.push(entry(Axiom::Field(h), field_violation(q, h)));
    }
    AxiomReport { entries }
}

/// `h ≠ ⊥`, `h ∧ h = h`, and `x ∧ h ∈ {⊥, h}` for every `x`.
pub fn field_violation(q: &SmashLattice, h: Elem) -> Option<Vec<Elem>> {
    let bottom = q.bottom();
    if h == bottom || q.smash(h, h) != h {
        return Some(vec![h]);
    }
    q.lattice()
        .elements()
        .find(|&x| {
            let v = q.smash(x, h);
            v != bottom && v != h
        })
        .map(|x| vec![x, h])
}

/// Every element satisfying the field axiom.
pub fn valid_field_elements(q: &SmashLattice) -> Vec<Elem> {
    q.lattice()
        .elements()
        .filter(|&h| field_violation(q, h).is_none())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain4(labels: [&str; 4]) -> FiniteLattice {
        FiniteLattice::new(labels.map(String::from).to_vec(), &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    /// 0 < i < h < 1 with h·h = h and every other non-unit product 0.
    fn mi() -> SmashLattice {
        SmashLattice::from_fn(
            "toy-i",
            chain4(["0", "i", "h", "1"]),
            |x, y| match (x, y) {
                (3, v) | (v, 3) => v,
                (2, 2) => 2,
                _ => 0,
            },
            vec![2],
        )
        .unwrap()
    }

    /// 0 < a < b < 1 with b·b = a and every other non-unit product 0.
    fn n4() -> SmashLattice {
        SmashLattice::from_fn(
            "nilpotent-chain",
            chain4(["0", "a", "b", "1"]),
            |x, y| match (x, y) {
                (3, v) | (v, 3) => v,
                (2, 2) => 1,
                _ => 0,
            },
            vec![],
        )
        .unwrap()
    }

    fn m4_meet() -> SmashLattice {
        SmashLattice::with_meet("boolean-2", FiniteLattice::powerset(2).unwrap())
    }

    #[test]
    fn mi_axioms_pass() {
        let report = mi().validate();
        assert!(report.all_passed(), "{report}");
        assert!(report.entry(Axiom::Field(2)).unwrap().passed);
    }

    #[test]
    fn boolean_meet_axioms_pass() {
        assert!(m4_meet().validate().all_passed());
    }

    #[test]
    fn overwritten_diagonal_breaks_monotonicity() {
        let base = m4_meet();
        let mut table = base.table().to_vec();
        table[4 + 1] = 3; // p·p = top
        let q = SmashLattice::new("bad", base.lattice().clone(), table, vec![]).unwrap();
        let report = q.validate();
        let distr = report.entry(Axiom::Distr).unwrap();
        assert!(!distr.passed);
        assert_eq!(distr.witness, Some(vec![1, 1, 3]));
        assert!(!report.entry(Axiom::Integral).unwrap().passed);
    }

    #[test]
    fn asymmetric_table_fails_comm() {
        let base = m4_meet();
        let mut table = base.table().to_vec();
        table[4 + 2] = 1; // p·q = p, q·p = 0
        let q = SmashLattice::new("bad", base.lattice().clone(), table, vec![]).unwrap();
        let comm = q.validate().entry(Axiom::Comm).cloned().unwrap();
        assert_eq!(comm.witness, Some(vec![1, 2]));
    }

    #[test]
    fn field_axiom_rejects_bottom_and_non_idempotents() {
        let q = mi();
        assert_eq!(field_violation(&q, 0), Some(vec![0]));
        assert_eq!(field_violation(&q, 1), Some(vec![1]));
        assert_eq!(field_violation(&q, 2), None);
        assert_eq!(valid_field_elements(&q), vec![2]);
        // top is a field element only on the two-element chain
        assert_eq!(field_violation(&q, 3), Some(vec![1, 3]));
    }

    #[test]
    fn annihilator_values() {
        let q = mi();
        assert_eq!(q.ann_a(0), 3);
        assert_eq!(q.ann_a(3), 0);
        assert_eq!(q.ann_a(1), 2);
        assert_eq!(q.ann_a(2), 1);
        let b = m4_meet();
        assert_eq!(b.a_table(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn bousfield_axiom() {
        assert!(mi().bousfield_axiom().holds);
        assert!(m4_meet().bousfield_axiom().holds);
        let n = n4().bousfield_axiom();
        assert!(n.holds && n.order_reflected);
    }

    #[test]
    fn curly_meet() {
        let q = mi();
        assert_eq!(
            q.curly_meet_identity(1, 2),
            CurlyMeet {
                glb: 1,
                via_complement: 1,
                agree: true
            }
        );
        assert!(m4_meet().curly_meet_identity(1, 2).agree);
        let n = n4();
        assert_eq!(
            n.curly_meet_identity(1, 2),
            CurlyMeet {
                glb: 1,
                via_complement: 1,
                agree: true
            }
        );
    }

    #[test]
    fn curly_vee_can_exceed_join() {
        let q = mi();
        assert_eq!(q.curly_vee(2, 2), 3);
        assert_eq!(m4_meet().curly_vee(1, 2), 3);
        assert_eq!(q.curly_vee(3, 3), 3);
    }

    #[test]
    fn powers_and_stabilization() {
        let q = mi();
        assert_eq!(q.smash_power(1, 2), 0);
        assert_eq!(q.stabilization_index(1), Ok(2));
        assert_eq!(q.stabilization_index(2), Ok(1));
        let n = n4();
        assert_eq!(n.smash_power(2, 2), 1);
        assert_eq!(n.smash_power(2, 3), 0);
        assert_eq!(n.stabilization_index(2), Ok(3));
    }

    #[test]
    fn non_stabilizing_powers_report_cycle() {
        // not a quantale: a·a = b, a·b = a on 0 < a < b < 1
        let l = chain4(["0", "a", "b", "1"]);
        let q = SmashLattice::from_fn(
            "cyc",
            l,
            |x, y| match (x, y) {
                (3, v) | (v, 3) => v,
                (1, 1) => 2,
                (1, 2) | (2, 1) => 1,
                _ => 0,
            },
            vec![],
        )
        .unwrap();
        assert_eq!(q.stabilization_index(1), Err(PowerCycle { element: 1 }));
    }

    #[test]
    fn structural_errors() {
        let l = FiniteLattice::chain(2).unwrap();
        assert_eq!(
            SmashLattice::new("x", l.clone(), vec![0, 0, 0], vec![]).unwrap_err(),
            QuantaleError::TableSize { got: 3, expected: 4 }
        );
        assert_eq!(
            SmashLattice::new("x", l.clone(), vec![0, 0, 0, 7], vec![]).unwrap_err(),
            QuantaleError::TableEntry(1, 1)
        );
        assert_eq!(
            SmashLattice::new("x", l, vec![0, 0, 0, 1], vec![9]).unwrap_err(),
            QuantaleError::FieldIndex(9)
        );
    }
}
