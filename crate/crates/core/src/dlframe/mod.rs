//! Structure derived from a smash lattice: the idempotent frame `DL`, the
//! retraction `r`, the strange ideal and its quotient, the complemented
//! classes `BA`, the frame complement `A`, closed and dense elements, the
//! complete Boolean algebra of closed elements, and the `L_D` comparison.
//!
//! Everything hangs off [`Analysis`], which caches the tables once per model.
//! The property registry in [`registry`] evaluates laws against it.

mod boolean;
mod complement;
mod dl;
mod laws;
pub mod registry;
mod report;
mod strange;

use std::sync::OnceLock;

pub use boolean::complemented_ba;
pub use complement::{ld_elements, Cba, GlivenkoCertificate};
pub use dl::{compute_dl, dl_frame_violation, retraction_r};
pub use registry::{evaluate, PropertyCheck, PropertyDef, Status, Tier, UnknownProperty, REGISTRY};
pub use report::{DerivedReport, QuotientSummary, StrangeSummary};
pub use strange::{quotient_by_ideal, ConjR, FieldViolation, QuotientLattice, StrangeIdeal};

use crate::lattice::{Elem, FiniteLattice};
use crate::quantale::{AxiomReport, BousfieldCheck, SmashLattice};

/// Cached derived tables for one model. Construction assumes the model
/// passes its quantale axioms.
pub struct Analysis<'q> {
    q: &'q SmashLattice,
    axioms: AxiomReport,
    a: Vec<Elem>,
    bousfield: BousfieldCheck,
    dl: Vec<Elem>,
    in_dl: Vec<bool>,
    r: Vec<Elem>,
    ba: Vec<Elem>,
    in_ba: Vec<bool>,
    big_a: Vec<Option<Elem>>,
    closed: Vec<Elem>,
    dense: Vec<Elem>,
    fields: Vec<(Elem, Result<FieldContext, FieldViolation>)>,
    dl_lattice: OnceLock<FiniteLattice>,
    cba: OnceLock<Cba>,
}

/// Strange-ideal data for one designated field element plus the lazily
/// built quotient comparison.
pub struct FieldContext {
    pub strange: StrangeIdeal,
    conj: OnceLock<ConjR>,
}

impl<'q> Analysis<'q> {
    pub fn new(q: &'q SmashLattice) -> Self {
        let axioms = q.validate();
        let l = q.lattice();
        let a = q.a_table();
        let bousfield = crate::quantale::bousfield_check(l, &a);
        let dl = compute_dl(q);
        let mut in_dl = vec![false; q.len()];
        for &x in &dl {
            in_dl[x] = true;
        }
        let r = retraction_r(q, &in_dl);
        let ba = complemented_ba(q, &a);
        let mut in_ba = vec![false; q.len()];
        for &x in &ba {
            in_ba[x] = true;
        }
        let big_a: Vec<Option<Elem>> = l.elements().map(|x| in_dl[x].then(|| r[a[x]])).collect();
        let top = l.top();
        // A lands in DL whenever DL is closed under joins; off-axiom models
        // simply get fewer closed and dense elements.
        let a2 = |x: Elem| big_a[x].and_then(|y| big_a[y]);
        let closed = dl.iter().copied().filter(|&x| a2(x) == Some(x)).collect();
        let dense = dl.iter().copied().filter(|&x| a2(x) == Some(top)).collect();
        let fields = q
            .field_elements()
            .iter()
            .map(|&h| {
                let ctx = StrangeIdeal::new(q, &a, h).map(|strange| FieldContext {
                    strange,
                    conj: OnceLock::new(),
                });
                (h, ctx)
            })
            .collect();
        Analysis {
            q,
            axioms,
            a,
            bousfield,
            dl,
            in_dl,
            r,
            ba,
            in_ba,
            big_a,
            closed,
            dense,
            fields,
            dl_lattice: OnceLock::new(),
            cba: OnceLock::new(),
        }
    }

    pub fn model(&self) -> &'q SmashLattice {
        self.q
    }

    pub fn lattice(&self) -> &'q FiniteLattice {
        self.q.lattice()
    }

    pub fn axioms(&self) -> &AxiomReport {
        &self.axioms
    }

    pub fn bousfield(&self) -> BousfieldCheck {
        self.bousfield
    }

    pub fn is_bousfield_type(&self) -> bool {
        self.axioms.is_quantale() && self.bousfield.holds
    }

    #[inline]
    pub fn s(&self, x: Elem, y: Elem) -> Elem {
        self.q.smash(x, y)
    }

    #[inline]
    pub fn a(&self, x: Elem) -> Elem {
        self.a[x]
    }

    pub fn a_table(&self) -> &[Elem] {
        &self.a
    }

    pub fn dl(&self) -> &[Elem] {
        &self.dl
    }

    #[inline]
    pub fn in_dl(&self, x: Elem) -> bool {
        self.in_dl[x]
    }

    #[inline]
    pub fn r(&self, x: Elem) -> Elem {
        self.r[x]
    }

    pub fn r_table(&self) -> &[Elem] {
        &self.r
    }

    pub fn ba(&self) -> &[Elem] {
        &self.ba
    }

    pub fn in_ba(&self, x: Elem) -> bool {
        self.in_ba[x]
    }

    /// `A(x) = r(a(x))`, defined on `DL` only. Panics elsewhere.
    #[inline]
    pub fn big_a(&self, x: Elem) -> Elem {
        self.big_a[x].unwrap_or_else(|| panic!("A is defined on DL only; {x} is not idempotent"))
    }

    #[inline]
    pub fn big_a2(&self, x: Elem) -> Elem {
        self.big_a(self.big_a(x))
    }

    /// `(x, A(x))` for every `x ∈ DL`.
    pub fn big_a_table(&self) -> Vec<(Elem, Elem)> {
        self.dl.iter().map(|&x| (x, self.big_a(x))).collect()
    }

    pub fn closed(&self) -> &[Elem] {
        &self.closed
    }

    pub fn dense(&self) -> &[Elem] {
        &self.dense
    }

    pub fn is_closed(&self, x: Elem) -> bool {
        self.in_dl(x) && self.big_a2(x) == x
    }

    pub fn is_dense(&self, x: Elem) -> bool {
        self.in_dl(x) && self.big_a2(x) == self.lattice().top()
    }

    /// Meet inside `DL`: the join of the idempotents below both arguments.
    pub fn dl_glb(&self, x: Elem, y: Elem) -> Elem {
        // an idempotent lies below both exactly when it lies below their meet
        self.r[self.lattice().meet(x, y)]
    }

    /// `DL` as a lattice in its own right; element `i` is `dl()[i]`.
    pub fn dl_lattice(&self) -> &FiniteLattice {
        self.dl_lattice.get_or_init(|| {
            self.lattice()
                .induced(&self.dl)
                .expect("idempotents form a complete sublattice for joins")
        })
    }

    /// The closed elements with their Boolean structure.
    pub fn cba(&self) -> &Cba {
        self.cba.get_or_init(|| Cba::new(self))
    }

    pub fn glivenko(&self, x: Elem, y: Elem) -> GlivenkoCertificate {
        GlivenkoCertificate::new(self, x, y)
    }

    pub fn fields(&self) -> &[(Elem, Result<FieldContext, FieldViolation>)] {
        &self.fields
    }

    pub fn conj_r<'c>(&self, ctx: &'c FieldContext) -> &'c ConjR {
        ctx.conj.get_or_init(|| ConjR::new(self, &ctx.strange))
    }
}
