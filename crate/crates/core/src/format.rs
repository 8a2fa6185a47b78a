//! On-disk formats. Every external file names elements by label.
//!
//! Model files are written in a canonical layout (fixed key order, two-space
//! indentation, one smash row per line) so that saving a loaded model
//! reproduces the file byte for byte. Report and findings files are written
//! by `serde_json`'s pretty printer with insertion-ordered maps.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dlframe::{DerivedReport, PropertyCheck, Status};
use crate::lattice::{Elem, FiniteLattice, LatticeError};
use crate::quantale::{Axiom, AxiomReport, QuantaleError, SmashLattice};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("smash matrix must be {n}×{n}; row {row} has {got} entries")]
    SmashShape { n: usize, row: usize, got: usize },
    #[error("smash matrix has {got} rows for {n} elements")]
    SmashRows { n: usize, got: usize },
    #[error("{0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Quantale(#[from] QuantaleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    pub elements: Vec<String>,
    /// Generating pairs `[below, above]`; the order is their closure.
    pub leq: Vec<[String; 2]>,
    pub smash: Vec<Vec<String>>,
    #[serde(default)]
    pub field_elements: Vec<String>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Labels throughout; `leq` lists the covering pairs.
    pub fn from_structure(q: &SmashLattice) -> Self {
        let l = q.lattice();
        let label = |x: Elem| l.label(x).to_string();
        ModelFile {
            name: q.name().to_string(),
            elements: l.labels().to_vec(),
            leq: l.covers().into_iter().map(|(x, y)| [label(x), label(y)]).collect(),
            smash: l
                .elements()
                .map(|x| l.elements().map(|y| label(q.smash(x, y))).collect())
                .collect(),
            field_elements: q.field_elements().iter().map(|&h| label(h)).collect(),
        }
    }

    /// Builds the lattice and smash table. Axioms are not checked here.
    pub fn to_structure(&self) -> Result<SmashLattice, StructureError> {
        let n = self.elements.len();
        let index: IndexMap<&str, Elem> = self.elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if index.len() != n {
            // duplicate labels are reported by the lattice constructor
            FiniteLattice::new(self.elements.clone(), &[])?;
        }
        let find = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| StructureError::UnknownLabel(s.to_string()))
        };
        let mut pairs = Vec::with_capacity(self.leq.len());
        for [x, y] in &self.leq {
            pairs.push((find(x)?, find(y)?));
        }
        let lattice = FiniteLattice::new(self.elements.clone(), &pairs)?;
        if self.smash.len() != n {
            return Err(StructureError::SmashRows {
                n,
                got: self.smash.len(),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in self.smash.iter().enumerate() {
            if entries.len() != n {
                return Err(StructureError::SmashShape {
                    n,
                    row,
                    got: entries.len(),
                });
            }
            for s in entries {
                table.push(find(s)?);
            }
        }
        let fields = self
            .field_elements
            .iter()
            .map(|s| find(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SmashLattice::new(self.name.clone(), lattice, table, fields)?)
    }

    /// Canonical text: keys in declaration order, two-space indentation,
    /// one `leq` pair and one smash row per line, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let list = |items: &[String]| {
            let inner: Vec<String> = items.iter().map(|s| q(s)).collect();
            format!("[{}]", inner.join(", "))
        };
        let block = |rows: Vec<String>| {
            if rows.is_empty() {
                "[]".to_string()
            } else {
                format!("[\n    {}\n  ]", rows.join(",\n    "))
            }
        };
        let leq = block(self.leq.iter().map(|[x, y]| format!("[{}, {}]", q(x), q(y))).collect());
        let smash = block(self.smash.iter().map(|row| list(row)).collect());
        format!(
            "{{\n  \"name\": {},\n  \"elements\": {},\n  \"leq\": {},\n  \"smash\": {},\n  \"field_elements\": {}\n}}\n",
            q(&self.name),
            list(&self.elements),
            leq,
            smash,
            list(&self.field_elements),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLine {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyLine {
    pub id: String,
    pub tier: String,
    pub status: Status,
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CbaFile {
    pub elements: Vec<String>,
    pub join: IndexMap<String, IndexMap<String, String>>,
    pub complement: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFile {
    pub m: String,
    pub representatives: Vec<String>,
    pub classes: IndexMap<String, String>,
    pub r_prime: IndexMap<String, String>,
    pub conj_r: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrangeFile {
    pub h: String,
    #[serde(rename = "D")]
    pub d: String,
    #[serde(rename = "aD")]
    pub a_d: String,
    pub ideal: Vec<String>,
    pub quotient: QuotientFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedFile {
    pub a_table: IndexMap<String, String>,
    pub meet_a_table: IndexMap<String, String>,
    pub dl: Vec<String>,
    pub r_table: IndexMap<String, String>,
    pub ba: Vec<String>,
    #[serde(rename = "A_table")]
    pub big_a_table: IndexMap<String, String>,
    pub closed: Vec<String>,
    pub dense: Vec<String>,
    pub cba: CbaFile,
    pub strange: Vec<StrangeFile>,
    pub distributivity_witness: Option<Vec<String>>,
    pub dl_meet_gap: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub model: String,
    pub axioms: IndexMap<String, AxiomLine>,
    pub bousfield_type: bool,
    pub derived: DerivedFile,
    pub property_results: Vec<PropertyLine>,
}

/// Axiom ids as they appear in files; field axioms name their element.
pub fn axiom_key(axiom: Axiom, l: &FiniteLattice) -> String {
    match axiom {
        Axiom::Field(h) => format!("FIELD({})", l.label(h)),
        other => other.id(),
    }
}

pub fn axiom_lines(report: &AxiomReport, l: &FiniteLattice) -> IndexMap<String, AxiomLine> {
    report
        .entries
        .iter()
        .map(|e| {
            (
                axiom_key(e.axiom, l),
                AxiomLine {
                    passed: e.passed,
                    witness: e.witness.as_ref().map(|w| labels_of(l, w)),
                },
            )
        })
        .collect()
}

pub fn labels_of(l: &FiniteLattice, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| l.label(x).to_string()).collect()
}

pub fn property_line(c: &PropertyCheck, l: &FiniteLattice) -> PropertyLine {
    PropertyLine {
        id: c.id.to_string(),
        tier: c.tier.render(c.field.map(|h| l.label(h))),
        status: c.status,
        asserted: c.asserted,
        witness: c.witness.as_ref().map(|w| labels_of(l, w)),
    }
}

impl ReportFile {
    pub fn from_report(rep: &DerivedReport, l: &FiniteLattice) -> Self {
        let lab = |x: Elem| l.label(x).to_string();
        let table =
            |t: &[Elem]| -> IndexMap<String, String> { t.iter().enumerate().map(|(x, &v)| (lab(x), lab(v))).collect() };
        let k = rep.cba.len();
        let cba = CbaFile {
            elements: labels_of(l, &rep.cba),
            join: rep
                .cba
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let row = rep
                        .cba
                        .iter()
                        .enumerate()
                        .map(|(j, &y)| (lab(y), lab(rep.cba_join[i * k + j])))
                        .collect();
                    (lab(x), row)
                })
                .collect(),
            complement: rep.cba_complement.iter().map(|&(x, c)| (lab(x), lab(c))).collect(),
        };
        let strange = rep
            .strange
            .iter()
            .map(|s| StrangeFile {
                h: lab(s.h),
                d: lab(s.d),
                a_d: lab(s.a_d),
                ideal: labels_of(l, &s.ideal),
                quotient: QuotientFile {
                    m: lab(s.quotient.m),
                    representatives: labels_of(l, &s.quotient.representatives),
                    classes: table(&s.quotient.classes),
                    r_prime: s
                        .quotient
                        .representatives
                        .iter()
                        .zip(&s.quotient.r_prime)
                        .map(|(&c, &v)| (lab(c), lab(v)))
                        .collect(),
                    conj_r: s.quotient.conj_r,
                },
            })
            .collect();
        ReportFile {
            model: rep.model.clone(),
            axioms: axiom_lines(&rep.axioms, l),
            bousfield_type: rep.bousfield_type,
            derived: DerivedFile {
                a_table: table(&rep.a_table),
                meet_a_table: table(&rep.meet_a_table),
                dl: labels_of(l, &rep.dl),
                r_table: table(&rep.r_table),
                ba: labels_of(l, &rep.ba),
                big_a_table: rep.big_a_table.iter().map(|&(x, v)| (lab(x), lab(v))).collect(),
                closed: labels_of(l, &rep.closed),
                dense: labels_of(l, &rep.dense),
                cba,
                strange,
                distributivity_witness: rep.distributivity_witness.map(|(x, y, z)| labels_of(l, &[x, y, z])),
                dl_meet_gap: rep.dl_meet_gap.map(|(x, y)| labels_of(l, &[x, y])),
            },
            property_results: rep.property_results.iter().map(|c| property_line(c, l)).collect(),
        }
    }

    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}
