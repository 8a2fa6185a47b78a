use super::registry::{self, PropertyCheck, Status, UnknownProperty};
use super::Analysis;
use crate::lattice::Elem;
use crate::quantale::AxiomReport;

/// Everything computed about one model, in element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedReport {
    pub model: String,
    pub axioms: AxiomReport,
    pub bousfield_type: bool,
    pub bousfield_witness: Option<Elem>,
    pub distributivity_witness: Option<(Elem, Elem, Elem)>,
    pub a_table: Vec<Elem>,
    /// `a` built from the meet instead of the smash; reported, never checked.
    pub meet_a_table: Vec<Elem>,
    pub dl: Vec<Elem>,
    pub r_table: Vec<Elem>,
    pub ba: Vec<Elem>,
    /// `(x, A(x))` for `x ∈ DL`.
    pub big_a_table: Vec<(Elem, Elem)>,
    pub closed: Vec<Elem>,
    pub dense: Vec<Elem>,
    pub cba: Vec<Elem>,
    /// Row-major over `cba`.
    pub cba_join: Vec<Elem>,
    pub cba_complement: Vec<(Elem, Elem)>,
    /// First pair of idempotents whose meet in the model is not their meet
    /// in `DL`.
    pub dl_meet_gap: Option<(Elem, Elem)>,
    pub strange: Vec<StrangeSummary>,
    pub property_results: Vec<PropertyCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrangeSummary {
    pub h: Elem,
    pub d: Elem,
    pub a_d: Elem,
    pub ideal: Vec<Elem>,
    pub quotient: QuotientSummary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSummary {
    pub m: Elem,
    pub representatives: Vec<Elem>,
    /// `x ∨ m` per element.
    pub classes: Vec<Elem>,
    /// `r′` per representative.
    pub r_prime: Vec<Elem>,
    pub conj_r: Status,
}

impl DerivedReport {
    pub fn new(an: &Analysis<'_>, ids: Option<&[String]>) -> Result<Self, UnknownProperty> {
        let property_results = registry::evaluate(an, ids)?;
        let l = an.lattice();
        let q = an.model();
        let cba = an.cba();
        let dl = an.dl();
        let dl_meet_gap = dl
            .iter()
            .find_map(|&x| dl.iter().find(|&&y| l.meet(x, y) != an.dl_glb(x, y)).map(|&y| (x, y)));
        let strange = an
            .fields()
            .iter()
            .filter_map(|(_, ctx)| ctx.as_ref().ok())
            .map(|ctx| {
                let conj = an.conj_r(ctx);
                StrangeSummary {
                    h: ctx.strange.h,
                    d: ctx.strange.d,
                    a_d: ctx.strange.a_d,
                    ideal: ctx.strange.ideal.clone(),
                    quotient: QuotientSummary {
                        m: conj.quotient.m,
                        representatives: conj.quotient.representatives.clone(),
                        classes: conj.quotient.classes.clone(),
                        r_prime: conj.r_prime.clone(),
                        conj_r: if conj.passed() { Status::Pass } else { Status::Fail },
                    },
                }
            })
            .collect();
        Ok(DerivedReport {
            model: q.name().to_string(),
            axioms: an.axioms().clone(),
            bousfield_type: an.is_bousfield_type(),
            bousfield_witness: an.bousfield().witness,
            distributivity_witness: l.distributivity_witness(),
            a_table: an.a_table().to_vec(),
            meet_a_table: q.meet_a_table(),
            dl: dl.to_vec(),
            r_table: an.r_table().to_vec(),
            ba: an.ba().to_vec(),
            big_a_table: an.big_a_table(),
            closed: an.closed().to_vec(),
            dense: an.dense().to_vec(),
            cba: cba.elements.clone(),
            cba_join: cba.join_table().to_vec(),
            cba_complement: cba.elements.iter().map(|&x| (x, cba.complement(x))).collect(),
            dl_meet_gap,
            strange,
            property_results,
        })
    }

    pub fn asserted_failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.property_results.iter().filter(|c| c.is_asserted_failure())
    }
}
