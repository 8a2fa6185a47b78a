//! The property registry.
//!
//! Every law carries the tier it needs. Quantale-tier laws are asserted on
//! every model. Bousfield-tier laws are asserted on Bousfield-type models and
//! evaluated informationally elsewhere. Field-tier laws run once per valid
//! designated field element and are not applicable without one.
//! Conditional laws run per field element as well, but are asserted only
//! when `CONJ-R` passes for that element and `STRANGE-IDEAL` holds, since
//! their derivation identifies the strange elements with `↓a(D)`. Otherwise
//! the result is reported with `asserted = false`.
//!
//! Field-tier and conditional laws only ask for a quantale with a valid
//! field element. Nothing further is required of the model, so a search for
//! `CONJ-R` failures ranges over more than Bousfield-type structures unless
//! the Bousfield-only filter is set. The finite-class structure of the
//! skeleton is not required either.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::laws::{self, Witness};
use super::{Analysis, FieldContext};
use crate::lattice::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tier {
    Quantale,
    Bousfield,
    Field,
    ConditionalOnConjR,
}

impl Tier {
    /// Display form; field-relative tiers name their field element.
    pub fn render(&self, field_label: Option<&str>) -> String {
        match self {
            Tier::Quantale => "QUANTALE".into(),
            Tier::Bousfield => "BOUSFIELD".into(),
            Tier::Field => match field_label {
                Some(h) => format!("FIELD({h})"),
                None => "FIELD".into(),
            },
            Tier::ConditionalOnConjR => "CONDITIONAL-ON(conj-r)".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub id: &'static str,
    pub tier: Tier,
    /// Field element the check is relative to.
    pub field: Option<Elem>,
    pub status: Status,
    /// Whether a failure counts against the model. Informational results are
    /// evaluated but never asserted.
    pub asserted: bool,
    pub witness: Option<Vec<Elem>>,
}

impl PropertyCheck {
    pub fn is_asserted_failure(&self) -> bool {
        self.asserted && self.status == Status::Fail
    }
}

#[derive(Clone, Copy)]
enum Eval {
    Global(fn(&Analysis<'_>) -> Witness),
    PerField(fn(&Analysis<'_>, &FieldContext) -> Witness),
}

#[derive(Clone, Copy)]
pub struct PropertyDef {
    pub id: &'static str,
    pub tier: Tier,
    pub summary: &'static str,
    eval: Eval,
}

impl fmt::Debug for PropertyDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyDef")
            .field("id", &self.id)
            .field("tier", &self.tier)
            .finish()
    }
}

const fn global(id: &'static str, tier: Tier, summary: &'static str, f: fn(&Analysis<'_>) -> Witness) -> PropertyDef {
    PropertyDef {
        id,
        tier,
        summary,
        eval: Eval::Global(f),
    }
}

const fn per_field(
    id: &'static str,
    tier: Tier,
    summary: &'static str,
    f: fn(&Analysis<'_>, &FieldContext) -> Witness,
) -> PropertyDef {
    PropertyDef {
        id,
        tier,
        summary,
        eval: Eval::PerField(f),
    }
}

use Tier::{Bousfield, ConditionalOnConjR as Cond, Field, Quantale};

pub static REGISTRY: &[PropertyDef] = &[
    global(
        "AX-QUANTALE",
        Quantale,
        "commutative, associative, unit top, join-distributive",
        laws::ax_quantale,
    ),
    global(
        "AX-BOUSFIELD",
        Quantale,
        "a(a(x)) = x, equivalently a reflects order",
        laws::ax_bousfield,
    ),
    global("A-ANNIHILATOR", Quantale, "y ≤ a(x) iff x∧y = 0", laws::a_annihilator),
    global("A-ANTITONE", Quantale, "x ≤ y implies a(y) ≤ a(x)", laws::a_antitone),
    global("A-CUBE", Quantale, "a³ = a and x ≤ a²(x)", laws::a_cube),
    global(
        "POWER-DECREASING",
        Quantale,
        "smash powers are nonincreasing and stabilize",
        laws::power_decreasing,
    ),
    global("SQ-STAB", Quantale, "x∧x = x∧x∧x", laws::sq_stab),
    global(
        "DL-FRAME",
        Quantale,
        "idempotents form a frame with meet the smash",
        laws::dl_frame,
    ),
    global(
        "R-RETRACTION",
        Quantale,
        "r is a retraction onto DL, right adjoint to the inclusion",
        laws::r_retraction,
    ),
    global("R-MEETS", Quantale, "r preserves meets", laws::r_meets),
    global("R-SMASH", Quantale, "r preserves the smash product", laws::r_smash),
    global("BA-SPLIT", Quantale, "e = (e∧x) ∨ (e∧a(x)) for x in BA", laws::ba_split),
    global("BA-ORDER", Quantale, "e ≤ x iff e = e∧x for x in BA", laws::ba_order),
    global("BA-MEET", Quantale, "meet equals smash on BA", laws::ba_meet),
    global("BA-IN-DL", Quantale, "BA is contained in DL", laws::ba_in_dl),
    global(
        "BA-CLOSURE",
        Quantale,
        "BA closed under smash, join and a, with de Morgan laws",
        laws::ba_closure,
    ),
    global(
        "BA-BOOLEAN",
        Quantale,
        "BA is a Boolean algebra with complement a",
        laws::ba_boolean,
    ),
    global(
        "BA-MEET-COMPLEMENTED",
        Quantale,
        "meet-complemented iff complemented",
        laws::ba_meet_complemented,
    ),
    global(
        "BA-IN-CBA",
        Quantale,
        "complemented elements are closed",
        laws::ba_in_cba,
    ),
    global(
        "ACOMP-LAWS",
        Quantale,
        "A = r∘a: annihilator form, antitone, A³ = A, joins to meets",
        laws::acomp_laws,
    ),
    global("ACOMP-MEETS", Quantale, "A and A² on finite meets", laws::acomp_meets),
    global(
        "CBA-BOOLEAN",
        Quantale,
        "closed elements form a Boolean algebra, join A²(∨), complement A",
        laws::cba_boolean,
    ),
    global(
        "CBA-ADJOINT",
        Quantale,
        "A² : DL → cBA is left adjoint to the inclusion",
        laws::cba_adjoint,
    ),
    global(
        "GLIVENKO",
        Quantale,
        "A²x = A²y iff some dense z equalizes x and y",
        laws::glivenko,
    ),
    global(
        "A-REFLECTS-ORDER",
        Bousfield,
        "a(y) ≤ a(x) implies x ≤ y",
        laws::a_reflects_order,
    ),
    global(
        "A-MEET-FORMULA",
        Bousfield,
        "x ⋏ y = a(a(x) ∨ a(y))",
        laws::a_meet_formula,
    ),
    global("A-CONVERTS", Bousfield, "a exchanges joins and meets", laws::a_converts),
    global(
        "CURLY-VEE-BOUND",
        Bousfield,
        "x ∨ y ≤ a(a(x) ∧ a(y))",
        laws::curly_vee_bound,
    ),
    per_field(
        "STRANGE-IDEAL",
        Field,
        "↓a(D) is the set of elements strictly below h",
        laws::strange_ideal,
    ),
    per_field(
        "QUOTIENT-LAWS",
        Field,
        "quotient by ↓a(D): join-preserving projection, kernel ↓a(D)",
        laws::quotient_laws,
    ),
    per_field(
        "DENSE-ABOVE-D",
        Field,
        "z in DL with z ≥ D is dense",
        laws::dense_above_d,
    ),
    per_field(
        "CONJ-R-WELLDEF",
        Field,
        "x ∨ a(D) = y ∨ a(D) implies r(x) = r(y)",
        laws::conj_r_welldef,
    ),
    per_field("CONJ-R-KERNEL", Field, "the kernel of r is ↓a(D)", laws::conj_r_kernel),
    per_field(
        "CONJ-R-ISO",
        Field,
        "r′ : L/↓a(D) → DL is an order-isomorphism",
        laws::conj_r_iso,
    ),
    per_field(
        "CONJ-R",
        Field,
        "well-definedness, kernel and isomorphism together",
        laws::conj_r,
    ),
    per_field("DESC-R-STRANGE", Cond, "r(x) = 0 iff x < h", laws::desc_r_strange),
    per_field("DESC-R-JOINS", Cond, "r preserves joins", laws::desc_r_joins),
    per_field(
        "DESC-R-FIELD-DL",
        Cond,
        "x∧h ≠ 0 implies x in DL",
        laws::desc_r_field_dl,
    ),
    per_field("DESC-R-SQUARE", Cond, "r(x) = x∧x", laws::desc_r_square),
    per_field("DESC-R-STAB", Cond, "x∧x = x∧x∧x", laws::desc_r_stab),
    per_field("MEET-SMASH", Cond, "(x ⋏ y) ∨ a(D) = (x∧y) ∨ a(D)", laws::meet_smash),
    per_field("DENSE-CHAR", Cond, "z is dense iff z ≥ D", laws::dense_char),
    per_field("A2-CRITERION", Cond, "A²x = A²y iff x∧D = y∧D", laws::a2_criterion),
    per_field("LD-IN-DL", Cond, "every x∧D is idempotent", laws::ld_in_dl),
    per_field("LD-ISO", Cond, "F(x∧D) = A²x is an isomorphism L_D → cBA", laws::ld_iso),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("UNKNOWN-PROPERTY: {id} (available: {})", available_ids().join(", "))]
pub struct UnknownProperty {
    pub id: String,
}

pub fn available_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|p| p.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static PropertyDef, UnknownProperty> {
    REGISTRY
        .iter()
        .find(|p| p.id == id)
        .ok_or_else(|| UnknownProperty { id: id.to_string() })
}

fn check(def: &PropertyDef, field: Option<Elem>, asserted: bool, witness: Witness) -> PropertyCheck {
    PropertyCheck {
        id: def.id,
        tier: def.tier,
        field,
        status: if witness.is_some() { Status::Fail } else { Status::Pass },
        asserted,
        witness,
    }
}

fn not_applicable(def: &PropertyDef, field: Option<Elem>) -> PropertyCheck {
    PropertyCheck {
        id: def.id,
        tier: def.tier,
        field,
        status: Status::NotApplicable,
        asserted: false,
        witness: None,
    }
}

impl PropertyDef {
    /// One check per applicable context: a single result for global laws,
    /// one per designated field element for field and conditional laws.
    pub fn evaluate(&self, an: &Analysis<'_>) -> Vec<PropertyCheck> {
        if !an.axioms().is_quantale() && self.id != "AX-QUANTALE" {
            return vec![not_applicable(self, None)];
        }
        match self.eval {
            Eval::Global(f) => {
                let asserted = self.tier != Tier::Bousfield || an.is_bousfield_type();
                vec![check(self, None, asserted, f(an))]
            }
            Eval::PerField(f) => {
                if an.fields().is_empty() {
                    return vec![not_applicable(self, None)];
                }
                an.fields()
                    .iter()
                    .map(|(h, ctx)| match ctx {
                        Err(violation) if self.id == "STRANGE-IDEAL" => {
                            check(self, Some(*h), true, Some(violation.witness.clone()))
                        }
                        Err(_) => not_applicable(self, Some(*h)),
                        Ok(ctx) => {
                            let asserted = match self.tier {
                                Tier::ConditionalOnConjR => {
                                    an.conj_r(ctx).passed() && laws::strange_ideal(an, ctx).is_none()
                                }
                                _ => true,
                            };
                            check(self, Some(*h), asserted, f(an, ctx))
                        }
                    })
                    .collect()
            }
        }
    }
}

/// Runs the requested properties (all when `ids` is `None`) in registry
/// order. The result order does not depend on scheduling.
pub fn evaluate(an: &Analysis<'_>, ids: Option<&[String]>) -> Result<Vec<PropertyCheck>, UnknownProperty> {
    let defs: Vec<&PropertyDef> = match ids {
        None => REGISTRY.iter().collect(),
        Some(ids) => {
            let mut defs = Vec::with_capacity(ids.len());
            for id in ids {
                defs.push(lookup(id)?);
            }
            defs
        }
    };
    Ok(defs
        .par_iter()
        .map(|def| def.evaluate(an))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}
