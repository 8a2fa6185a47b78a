//! Built-in models.
//!
//! * `boolean(k)`: the powerset of `k` atoms with smash the meet.
//! * `toy-i`: the chain `0 < i < h < 1` where `h` is a field element and `i`
//!   is a smash-nilpotent element strictly below it.
//! * `nilpotent-chain`: `0 < a < b < 1` with `b·b = a`; Bousfield-type but
//!   `b² ≠ b³`.
//! * `skeleton(k)`: orthogonal field atoms `K0..Kk`, `A2..Ak`, `H`, an
//!   `I`-flag below `H` and below the wedge of the `K` atoms, and a top
//!   strictly above the full wedge `D`.

use std::path::Path;

use thiserror::Error;

use crate::format::{FormatError, ModelFile};
use crate::lattice::{Elem, FiniteLattice};
use crate::quantale::{AxiomReport, QuantaleError, SmashLattice};

pub const BOOLEAN_MAX_ATOMS: usize = 10;
/// Element cap for `skeleton(k)`; admits `k ≤ 4`.
pub const SKELETON_MAX_ELEMENTS: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("SIZE-CAP: {builder} with k = {k} exceeds the cap ({cap})")]
    SizeCap {
        builder: &'static str,
        k: usize,
        cap: String,
    },
    #[error("{builder} needs k ≥ {min}, got {k}")]
    TooSmall {
        builder: &'static str,
        k: usize,
        min: usize,
    },
    #[error("unknown model {0:?} (available: boolean, toy-i, nilpotent-chain, skeleton)")]
    UnknownBuilder(String),
}

/// A built model together with how it was made and what each smash-table
/// choice encodes.
#[derive(Debug, Clone)]
pub struct ModelSpec {
    pub builder: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub model: SmashLattice,
    pub provenance: Vec<&'static str>,
}

pub const BUILDERS: &[&str] = &["boolean", "toy-i", "nilpotent-chain", "skeleton"];

/// Builds a named model. `k` defaults to 2 for the parameterized builders.
pub fn build(name: &str, k: Option<usize>) -> Result<ModelSpec, ModelError> {
    match name {
        "boolean" => boolean_spec(k.unwrap_or(2)),
        "toy-i" => Ok(toy_i_spec()),
        "nilpotent-chain" => Ok(nilpotent_chain_spec()),
        "skeleton" => skeleton_spec(k.unwrap_or(2)),
        other => Err(ModelError::UnknownBuilder(other.to_string())),
    }
}

fn chain4(labels: [&str; 4]) -> FiniteLattice {
    FiniteLattice::new(labels.map(String::from).to_vec(), &[(0, 1), (1, 2), (2, 3)]).expect("a chain is a lattice")
}

pub fn boolean_spec(k: usize) -> Result<ModelSpec, ModelError> {
    if k == 0 {
        return Err(ModelError::TooSmall {
            builder: "boolean",
            k,
            min: 1,
        });
    }
    if k > BOOLEAN_MAX_ATOMS {
        return Err(ModelError::SizeCap {
            builder: "boolean",
            k,
            cap: format!("k ≤ {BOOLEAN_MAX_ATOMS}"),
        });
    }
    let lattice = FiniteLattice::powerset(k).expect("powerset is a lattice");
    let singletons = (0..k).map(|b| 1 << b).collect();
    let model = SmashLattice::with_meet(format!("boolean-{k}"), lattice).with_field_elements(singletons);
    Ok(ModelSpec {
        builder: "boolean",
        params: vec![("k", k)],
        model,
        provenance: vec![
            "smash is the meet; every element is idempotent and complemented",
            "each atom is a field element: x·h is h or 0",
        ],
    })
}

pub fn boolean_model(k: usize) -> Result<SmashLattice, ModelError> {
    boolean_spec(k).map(|s| s.model)
}

pub fn toy_i_spec() -> ModelSpec {
    let model = SmashLattice::from_fn(
        "toy-i",
        chain4(["0", "i", "h", "1"]),
        |x, y| match (x, y) {
            (3, v) | (v, 3) => v,
            (2, 2) => 2,
            _ => 0,
        },
        vec![2],
    )
    .expect("toy-i table is well formed");
    ModelSpec {
        builder: "toy-i",
        params: Vec::new(),
        model,
        provenance: vec![
            "h is idempotent and a field element",
            "i < h and i·i = 0: i is a nonzero smash-nilpotent element strictly below h",
            "i·h = 0: an element strictly below a field element is annihilated by it",
        ],
    }
}

pub fn toy_i_model() -> SmashLattice {
    toy_i_spec().model
}

pub fn nilpotent_chain_spec() -> ModelSpec {
    let model = SmashLattice::from_fn(
        "nilpotent-chain",
        chain4(["0", "a", "b", "1"]),
        |x, y| match (x, y) {
            (3, v) | (v, 3) => v,
            (2, 2) => 1,
            _ => 0,
        },
        Vec::new(),
    )
    .expect("nilpotent-chain table is well formed");
    ModelSpec {
        builder: "nilpotent-chain",
        params: Vec::new(),
        model,
        provenance: vec![
            "b·b = a and a·b = 0: the powers of b descend b > a > 0",
            "a² = id holds, so the model is Bousfield-type although b² ≠ b³",
            "no element satisfies the field axiom",
        ],
    }
}

pub fn nilpotent_chain_model() -> SmashLattice {
    nilpotent_chain_spec().model
}

/// Element layout of `skeleton(k)`.
struct Skeleton {
    atoms: usize,
    all_k: usize,
    h_bit: usize,
    /// Flagged masks in index order; element `2^atoms + i` is `flagged[i]`.
    flagged: Vec<usize>,
}

impl Skeleton {
    fn new(k: usize) -> Self {
        let atoms = 2 * k + 1;
        let all_k = (1 << (k + 1)) - 1;
        let h_bit = 1 << (2 * k);
        let flagged = (0..1usize << atoms)
            .filter(|&s| s & h_bit == 0 && s & all_k != all_k)
            .collect();
        Skeleton {
            atoms,
            all_k,
            h_bit,
            flagged,
        }
    }

    fn unflagged(&self) -> usize {
        1 << self.atoms
    }

    fn len(&self) -> usize {
        self.unflagged() + self.flagged.len() + 1
    }

    fn top(&self) -> Elem {
        self.len() - 1
    }

    /// `(mask, flag)`; `None` for the top.
    fn decode(&self, x: Elem) -> Option<(usize, bool)> {
        let u = self.unflagged();
        if x < u {
            Some((x, false))
        } else if x < u + self.flagged.len() {
            Some((self.flagged[x - u], true))
        } else {
            None
        }
    }

    fn leq(&self, x: Elem, y: Elem) -> bool {
        match (self.decode(x), self.decode(y)) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some((s, e)), Some((t, d))) => {
                s & t == s && (!e || d || t & self.h_bit != 0 || t & self.all_k == self.all_k)
            }
        }
    }
}

fn skeleton_label(k: usize, mask: usize, flag: bool, full: usize) -> String {
    if !flag && mask == 0 {
        return "0".into();
    }
    if !flag && mask == full {
        return "D".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for b in 0..=k {
        if mask & (1 << b) != 0 {
            parts.push(format!("K{b}"));
        }
    }
    for n in 2..=k {
        if mask & (1 << (k + n - 1)) != 0 {
            parts.push(format!("A{n}"));
        }
    }
    if mask & (1 << (2 * k)) != 0 {
        parts.push("H".into());
    }
    if flag {
        parts.push("I".into());
    }
    parts.join("|")
}

pub fn skeleton_spec(k: usize) -> Result<ModelSpec, ModelError> {
    if k < 2 {
        return Err(ModelError::TooSmall {
            builder: "skeleton",
            k,
            min: 2,
        });
    }
    // the 2^(2k+1) unflagged elements alone exceed the cap past k = 4
    if (1usize << (2 * k + 1).min(20)) > SKELETON_MAX_ELEMENTS || Skeleton::new(k).len() > SKELETON_MAX_ELEMENTS {
        return Err(ModelError::SizeCap {
            builder: "skeleton",
            k,
            cap: format!("{SKELETON_MAX_ELEMENTS} elements"),
        });
    }
    let sk = Skeleton::new(k);
    let n = sk.len();
    let full = sk.unflagged() - 1;
    let mut labels = Vec::with_capacity(n);
    for x in 0..n {
        labels.push(match sk.decode(x) {
            Some((mask, flag)) => skeleton_label(k, mask, flag, full),
            None => "S".into(),
        });
    }
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && sk.leq(x, y) {
                pairs.push((x, y));
            }
        }
    }
    let lattice = FiniteLattice::new(labels, &pairs).expect("skeleton order is a lattice");
    let top = sk.top();
    let model = SmashLattice::from_fn(
        format!("skeleton-{k}"),
        lattice,
        |x, y| match (sk.decode(x), sk.decode(y)) {
            (None, _) => y,
            (_, None) => x,
            (Some((s, _)), Some((t, _))) => s & t,
        },
        vec![sk.h_bit],
    )
    .expect("skeleton table is well formed");
    debug_assert_eq!(model.top(), top);
    Ok(ModelSpec {
        builder: "skeleton",
        params: vec![("k", k)],
        model,
        provenance: vec![
            "atoms K0..Kk, A2..Ak and H are idempotent and pairwise orthogonal",
            "H is the designated field element",
            "I lies strictly below H and strictly below the wedge of the K atoms",
            "I·I = 0 and every atom annihilates I: the flag dies under any smash below the top",
            "an extra top above the full wedge D leaves room for a nonzero a(D) = I",
            "no finite or telescope classes are modelled, so a² = id fails at K0 and only 0 and the top are complemented",
        ],
    })
}

pub fn bousfield_skeleton(k: usize) -> Result<SmashLattice, ModelError> {
    skeleton_spec(k).map(|s| s.model)
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("PARSE: {0}")]
    Parse(#[from] FormatError),
    #[error("VALIDATION: {reason}")]
    Validation {
        reason: String,
        report: Option<AxiomReport>,
    },
}

impl LoadError {
    pub fn report(&self) -> Option<&AxiomReport> {
        match self {
            LoadError::Validation { report, .. } => report.as_ref(),
            LoadError::Parse(_) => None,
        }
    }
}

/// Parses, closes and validates a model file. Designated field elements are
/// checked along with the quantale axioms.
pub fn load_model(path: &Path) -> Result<SmashLattice, LoadError> {
    let text = std::fs::read_to_string(path).map_err(FormatError::from)?;
    parse_model(&text)
}

pub fn parse_model(text: &str) -> Result<SmashLattice, LoadError> {
    let file = ModelFile::parse(text)?;
    let q = file.to_structure().map_err(|e| LoadError::Validation {
        reason: e.to_string(),
        report: match &e {
            crate::format::StructureError::Quantale(QuantaleError::Axioms(r)) => Some(r.clone()),
            _ => None,
        },
    })?;
    let report = q.validate();
    if report.all_passed() {
        Ok(q)
    } else {
        Err(LoadError::Validation {
            reason: report.to_string(),
            report: Some(report),
        })
    }
}
