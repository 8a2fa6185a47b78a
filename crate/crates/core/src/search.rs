//! Enumeration of smash structures on small lattices and searches for
//! registry properties over them.
//!
//! Distribution over joins forces
//! `x·y = lub { p·q | p ≤ x, q ≤ y, p and q join-irreducible }`, so a table
//! is determined by its values on pairs of join-irreducibles. The enumerator
//! assigns those pairs in a fixed order, propagating monotonicity,
//! `p·q ≤ p ⋏ q`, the unit law where the top is join-irreducible, and
//! associativity on triples whose intermediate products are again
//! join-irreducible (or zero). Completed tables are extended and checked
//! against the full axiom set, since generator-level associativity does not
//! obviously imply associativity everywhere.
//!
//! Tables are enumerated on a fixed labelled lattice; isomorphic quantales
//! on the same lattice are not merged.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dlframe::registry::{lookup, UnknownProperty};
use crate::dlframe::{Analysis, Status, Tier};
use crate::enumerate::{enumerate_lattices, MAX_CATALOG_SIZE};
use crate::format::{labels_of, ModelFile};
use crate::lattice::{Elem, FiniteLattice, LatticeError};
use crate::quantale::{valid_field_elements, SmashLattice};

/// Exhaustive size cap for properties that sub-enumerate field elements.
pub const FIELD_EXHAUSTIVE_CAP: usize = 5;

/// Node budget for one randomized descent in sample mode.
const SAMPLE_NODE_BUDGET: u64 = 20_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    UnknownProperty(#[from] UnknownProperty),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("invalid task: {0}")]
    Task(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    /// Consistent partial assignments reached, complete ones included.
    pub visited: u64,
    /// Candidate values rejected by propagation.
    pub pruned: u64,
    /// Complete assignments handed to the full axiom check.
    pub completed: u64,
    pub quantales: u64,
}

impl EnumStats {
    fn add(&mut self, o: &EnumStats) {
        self.visited += o.visited;
        self.pruned += o.pruned;
        self.completed += o.completed;
        self.quantales += o.quantales;
    }
}

struct Enumerator<'l> {
    l: &'l FiniteLattice,
    ji: Vec<Elem>,
    /// Join-irreducible index of each element, if any.
    ji_index: Vec<Option<usize>>,
    ji_below: Vec<Vec<usize>>,
    /// Unordered pairs `(i, j)`, `i ≤ j`, of join-irreducible indices.
    pairs: Vec<(usize, usize)>,
    pair_of: Vec<usize>,
    candidates: Vec<Vec<Elem>>,
}

const UNSET: Elem = Elem::MAX;

impl<'l> Enumerator<'l> {
    fn new(l: &'l FiniteLattice) -> Self {
        let ji = l.join_irreducibles();
        let m = ji.len();
        let mut ji_index = vec![None; l.len()];
        for (i, &p) in ji.iter().enumerate() {
            ji_index[p] = Some(i);
        }
        let ji_below = l
            .elements()
            .map(|x| (0..m).filter(|&i| l.leq(ji[i], x)).collect())
            .collect();
        let mut pairs = Vec::new();
        let mut pair_of = vec![usize::MAX; m * m];
        for i in 0..m {
            for j in i..m {
                pair_of[i * m + j] = pairs.len();
                pair_of[j * m + i] = pairs.len();
                pairs.push((i, j));
            }
        }
        let top = l.top();
        let candidates = pairs
            .iter()
            .map(|&(i, j)| {
                let (p, q) = (ji[i], ji[j]);
                if p == top {
                    vec![q]
                } else if q == top {
                    vec![p]
                } else {
                    let bound = l.meet(p, q);
                    l.down_set(bound).ones().collect()
                }
            })
            .collect();
        Enumerator {
            l,
            ji,
            ji_index,
            ji_below,
            pairs,
            pair_of,
            candidates,
        }
    }

    fn m(&self) -> usize {
        self.ji.len()
    }

    #[inline]
    fn get(&self, vals: &[Elem], i: usize, j: usize) -> Elem {
        vals[self.pair_of[i * self.m() + j]]
    }

    /// Whether the latest assignment, to pair `k`, is consistent with every
    /// earlier one.
    fn consistent(&self, vals: &[Elem], k: usize) -> bool {
        let l = self.l;
        let (i, j) = self.pairs[k];
        let v = vals[k];
        let (p, q) = (self.ji[i], self.ji[j]);
        for (k2, &(i2, j2)) in self.pairs.iter().enumerate().take(k) {
            let w = vals[k2];
            let (p2, q2) = (self.ji[i2], self.ji[j2]);
            for (a, b) in [(p2, q2), (q2, p2)] {
                if l.leq(a, p) && l.leq(b, q) && !l.leq(w, v) {
                    return false;
                }
                if l.leq(p, a) && l.leq(q, b) && !l.leq(v, w) {
                    return false;
                }
            }
        }
        // (a·b)·c = a·(b·c) where both inner products are generators or 0
        let bottom = l.bottom();
        let m = self.m();
        let mul = |x: Elem, c: usize| -> Elem {
            if x == bottom {
                bottom
            } else {
                match self.ji_index[x] {
                    Some(xi) => self.get(vals, xi, c),
                    None => UNSET,
                }
            }
        };
        for a in 0..m {
            for b in 0..m {
                let ab = self.get(vals, a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..m {
                    let bc = self.get(vals, b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let lhs = mul(ab, c);
                    let rhs = if bc == bottom {
                        bottom
                    } else {
                        match self.ji_index[bc] {
                            Some(bci) => self.get(vals, a, bci),
                            None => UNSET,
                        }
                    };
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&self, vals: &[Elem]) -> Vec<Elem> {
        let l = self.l;
        let n = l.len();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = l.lub(
                    self.ji_below[x]
                        .iter()
                        .flat_map(|&i| self.ji_below[y].iter().map(move |&j| (i, j)))
                        .map(|(i, j)| self.get(vals, i, j)),
                );
                table.push(v);
            }
        }
        table
    }

    fn complete(&self, vals: &[Elem], stats: &mut EnumStats) -> Option<Vec<Elem>> {
        stats.completed += 1;
        let table = self.extend(vals);
        let q = SmashLattice::new("", self.l.clone(), table, Vec::new()).ok()?;
        if q.validate().is_quantale() {
            stats.quantales += 1;
            Some(q.table().to_vec())
        } else {
            None
        }
    }

    fn dfs(&self, vals: &mut Vec<Elem>, k: usize, stats: &mut EnumStats, out: &mut Vec<Vec<Elem>>) {
        stats.visited += 1;
        if k == self.pairs.len() {
            if let Some(t) = self.complete(vals, stats) {
                out.push(t);
            }
            return;
        }
        for &v in &self.candidates[k] {
            vals[k] = v;
            if self.consistent(vals, k) {
                self.dfs(vals, k + 1, stats, out);
            } else {
                stats.pruned += 1;
            }
        }
        vals[k] = UNSET;
    }

    /// Consistent assignments of the first `depth` pairs, in search order.
    fn prefixes(&self, depth: usize, stats: &mut EnumStats) -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        let mut vals = vec![UNSET; self.pairs.len()];
        self.prefix_rec(&mut vals, 0, depth.min(self.pairs.len()), stats, &mut out);
        out
    }

    fn prefix_rec(
        &self,
        vals: &mut Vec<Elem>,
        k: usize,
        depth: usize,
        stats: &mut EnumStats,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if k == depth {
            out.push(vals.clone());
            return;
        }
        stats.visited += 1;
        for &v in &self.candidates[k] {
            vals[k] = v;
            if self.consistent(vals, k) {
                self.prefix_rec(vals, k + 1, depth, stats, out);
            } else {
                stats.pruned += 1;
            }
        }
        vals[k] = UNSET;
    }

    fn random_descent(&self, rng: &mut ChaCha8Rng, stats: &mut EnumStats) -> Option<Vec<Elem>> {
        let mut vals = vec![UNSET; self.pairs.len()];
        let mut budget = SAMPLE_NODE_BUDGET;
        self.random_rec(&mut vals, 0, rng, stats, &mut budget)
    }

    fn random_rec(
        &self,
        vals: &mut Vec<Elem>,
        k: usize,
        rng: &mut ChaCha8Rng,
        stats: &mut EnumStats,
        budget: &mut u64,
    ) -> Option<Vec<Elem>> {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        stats.visited += 1;
        if k == self.pairs.len() {
            return self.complete(vals, stats);
        }
        let mut order = self.candidates[k].clone();
        order.shuffle(rng);
        for v in order {
            vals[k] = v;
            if self.consistent(vals, k) {
                if let Some(t) = self.random_rec(vals, k + 1, rng, stats, budget) {
                    return Some(t);
                }
            } else {
                stats.pruned += 1;
            }
        }
        vals[k] = UNSET;
        None
    }
}

fn check_size(l: &FiniteLattice) -> Result<(), LatticeError> {
    if l.len() > MAX_CATALOG_SIZE {
        return Err(LatticeError::SizeCap {
            requested: l.len(),
            cap: MAX_CATALOG_SIZE,
        });
    }
    Ok(())
}

/// Every quantale table on `l`, each exactly once, in search order.
pub fn enumerate_quantales(l: &FiniteLattice) -> Result<(Vec<SmashLattice>, EnumStats), LatticeError> {
    let (tables, stats) = enumerate_tables(l)?;
    let models = tables
        .into_iter()
        .enumerate()
        .map(|(rank, t)| SmashLattice::new(format!("t{rank}"), l.clone(), t, Vec::new()).expect("enumerated table"))
        .collect();
    Ok((models, stats))
}

/// Raw row-major tables; parallel over the first two decisions, merged in
/// search order.
pub fn enumerate_tables(l: &FiniteLattice) -> Result<(Vec<Vec<Elem>>, EnumStats), LatticeError> {
    check_size(l)?;
    let e = Enumerator::new(l);
    let mut stats = EnumStats::default();
    let depth = 2;
    let prefixes = e.prefixes(depth, &mut stats);
    let start = depth.min(e.pairs.len());
    let parts: Vec<(Vec<Vec<Elem>>, EnumStats)> = prefixes
        .into_par_iter()
        .map(|mut vals| {
            let mut s = EnumStats::default();
            let mut out = Vec::new();
            e.dfs(&mut vals, start, &mut s, &mut out);
            (out, s)
        })
        .collect();
    let mut tables = Vec::new();
    for (t, s) in parts {
        stats.add(&s);
        tables.extend(t);
    }
    Ok((tables, stats))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSource {
    /// Catalog lattices with sizes in `min..=max`.
    Sizes { min: usize, max: usize },
    /// Explicit models, evaluated as given.
    Models(Vec<SmashLattice>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Only {
    #[default]
    All,
    Fail,
    Pass,
}

impl Only {
    fn keeps(&self, status: Status) -> bool {
        match self {
            Only::All => true,
            Only::Fail => status == Status::Fail,
            Only::Pass => status == Status::Pass,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchTask {
    pub source: LatticeSource,
    pub property: String,
    pub mode: Mode,
    pub bousfield_only: bool,
    pub require_field: bool,
    pub only: Only,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub lattice_size: usize,
    /// Catalog position within its size, or file position for explicit models.
    pub lattice_index: usize,
    /// Enumeration rank of the table, or sample number in sample mode.
    pub table: usize,
    pub field: Option<Elem>,
    pub status: Status,
    pub asserted: bool,
    pub witness: Option<Vec<Elem>>,
    pub model: SmashLattice,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub lattices: u64,
    pub candidates_visited: u64,
    pub pruned: u64,
    pub tables_completed: u64,
    pub quantales: u64,
    /// Quantales dropped by the tier filters.
    pub filtered: u64,
    /// Samples whose randomized descent found no quantale within budget.
    pub samples_without_model: u64,
    pub evaluations: u64,
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.lattices += o.lattices;
        self.candidates_visited += o.candidates_visited;
        self.pruned += o.pruned;
        self.tables_completed += o.tables_completed;
        self.quantales += o.quantales;
        self.filtered += o.filtered;
        self.samples_without_model += o.samples_without_model;
        self.evaluations += o.evaluations;
        self.pass += o.pass;
        self.fail += o.fail;
        self.not_applicable += o.not_applicable;
    }

    fn enum_stats(&mut self, e: &EnumStats) {
        self.candidates_visited += e.visited;
        self.pruned += e.pruned;
        self.tables_completed += e.completed;
        self.quantales += e.quantales;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub findings: Vec<Finding>,
    pub stats: SearchStats,
}

struct Candidate {
    size: usize,
    index: usize,
    table: usize,
    model: SmashLattice,
}

/// Evaluates the task's property on one model, once per field context.
fn evaluate_candidate(task: &SearchTask, tier: Tier, c: Candidate, explicit: bool) -> (Vec<Finding>, SearchStats) {
    let mut stats = SearchStats::default();
    let def = lookup(&task.property).expect("checked by caller");
    let (an_bousfield, valid) = {
        let an = Analysis::new(&c.model);
        (an.is_bousfield_type(), valid_field_elements(&c.model))
    };
    if (task.bousfield_only && !an_bousfield) || (task.require_field && valid.is_empty()) {
        stats.filtered += 1;
        return (Vec::new(), stats);
    }
    let per_field = matches!(tier, Tier::Field | Tier::ConditionalOnConjR);
    let variants: Vec<SmashLattice> = if explicit {
        vec![c.model.clone()]
    } else if per_field && !valid.is_empty() {
        valid
            .iter()
            .map(|&h| {
                let name = format!("{}-{}", c.model.name(), c.model.lattice().label(h));
                c.model.clone().with_field_elements(vec![h]).with_name(name)
            })
            .collect()
    } else {
        vec![c.model.clone()]
    };
    let mut findings = Vec::new();
    for model in variants {
        let an = Analysis::new(&model);
        for check in def.evaluate(&an) {
            stats.evaluations += 1;
            match check.status {
                Status::Pass => stats.pass += 1,
                Status::Fail => stats.fail += 1,
                Status::NotApplicable => stats.not_applicable += 1,
            }
            if task.only.keeps(check.status) {
                findings.push(Finding {
                    lattice_size: c.size,
                    lattice_index: c.index,
                    table: c.table,
                    field: check.field,
                    status: check.status,
                    asserted: check.asserted,
                    witness: check.witness,
                    model: model.clone(),
                });
            }
        }
    }
    (findings, stats)
}

fn model_name(size: usize, index: usize, table: usize) -> String {
    format!("n{size}-l{index}-t{table}")
}

fn run(task: &SearchTask, tier: Tier) -> Result<SearchOutcome, SearchError> {
    let mut stats = SearchStats::default();
    let mut findings = Vec::new();
    match &task.source {
        LatticeSource::Models(models) => {
            let parts: Vec<_> = models
                .par_iter()
                .enumerate()
                .map(|(index, m)| {
                    let c = Candidate {
                        size: m.len(),
                        index,
                        table: 0,
                        model: m.clone(),
                    };
                    evaluate_candidate(task, tier, c, true)
                })
                .collect();
            stats.lattices = models.len() as u64;
            for (f, s) in parts {
                findings.extend(f);
                stats.absorb(&s);
            }
        }
        LatticeSource::Sizes { min, max } => {
            let mut catalog = Vec::new();
            for n in *min..=*max {
                for (index, l) in enumerate_lattices(n)?.into_iter().enumerate() {
                    catalog.push((n, index, l));
                }
            }
            stats.lattices = catalog.len() as u64;
            match task.mode {
                Mode::Exhaustive => {
                    for (n, index, l) in &catalog {
                        let (tables, es) = enumerate_tables(l)?;
                        stats.enum_stats(&es);
                        let parts: Vec<_> = tables
                            .into_par_iter()
                            .enumerate()
                            .map(|(rank, t)| {
                                let model = SmashLattice::new(model_name(*n, *index, rank), l.clone(), t, Vec::new())
                                    .expect("enumerated table");
                                let c = Candidate {
                                    size: *n,
                                    index: *index,
                                    table: rank,
                                    model,
                                };
                                evaluate_candidate(task, tier, c, false)
                            })
                            .collect();
                        for (f, s) in parts {
                            findings.extend(f);
                            stats.absorb(&s);
                        }
                    }
                }
                Mode::Sample { count, seed } => {
                    if catalog.is_empty() {
                        return Err(SearchError::Task("empty lattice catalog".into()));
                    }
                    let parts: Vec<_> = (0..count)
                        .into_par_iter()
                        .map(|i| {
                            let mut rng = ChaCha8Rng::seed_from_u64(seed);
                            rng.set_stream(i as u64);
                            let pick = rand::Rng::gen_range(&mut rng, 0..catalog.len());
                            let (n, index, l) = &catalog[pick];
                            let e = Enumerator::new(l);
                            let mut es = EnumStats::default();
                            let table = e.random_descent(&mut rng, &mut es);
                            let mut s = SearchStats::default();
                            s.enum_stats(&es);
                            match table {
                                None => {
                                    s.samples_without_model += 1;
                                    (Vec::new(), s)
                                }
                                Some(t) => {
                                    let model = SmashLattice::new(model_name(*n, *index, i), l.clone(), t, Vec::new())
                                        .expect("sampled table");
                                    let c = Candidate {
                                        size: *n,
                                        index: *index,
                                        table: i,
                                        model,
                                    };
                                    let (f, s2) = evaluate_candidate(task, tier, c, false);
                                    s.absorb(&s2);
                                    (f, s)
                                }
                            }
                        })
                        .collect();
                    for (f, s) in parts {
                        findings.extend(f);
                        stats.absorb(&s);
                    }
                }
            }
        }
    }
    findings.sort_by(|a, b| {
        (a.lattice_size, a.lattice_index, a.table, a.field).cmp(&(b.lattice_size, b.lattice_index, b.table, b.field))
    });
    Ok(SearchOutcome { findings, stats })
}

pub fn search_property(task: &SearchTask) -> Result<SearchOutcome, SearchError> {
    let def = lookup(&task.property)?;
    if let LatticeSource::Sizes { min, max } = task.source {
        if min == 0 || min > max {
            return Err(SearchError::Task(format!("bad size range {min}..{max}")));
        }
        let per_field = matches!(def.tier, Tier::Field | Tier::ConditionalOnConjR);
        if per_field && task.mode == Mode::Exhaustive && max > FIELD_EXHAUSTIVE_CAP {
            return Err(LatticeError::SizeCap {
                requested: max,
                cap: FIELD_EXHAUSTIVE_CAP,
            }
            .into());
        }
        if max > MAX_CATALOG_SIZE {
            return Err(LatticeError::SizeCap {
                requested: max,
                cap: MAX_CATALOG_SIZE,
            }
            .into());
        }
    }
    if let Mode::Sample { count: 0, .. } = task.mode {
        return Err(SearchError::Task("sample count must be positive".into()));
    }
    let jobs = task.jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SearchError::Task(e.to_string()))?;
    pool.install(|| run(task, def.tier))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingFile {
    pub lattice_size: usize,
    pub lattice_index: usize,
    pub table: usize,
    pub field: Option<String>,
    pub status: Status,
    pub asserted: bool,
    pub witness: Option<Vec<String>>,
    pub model: ModelFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskFile {
    pub lattices: String,
    pub mode: Mode,
    pub bousfield_only: bool,
    pub require_field: bool,
    pub only: Only,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingsFile {
    pub property: String,
    pub task: TaskFile,
    pub statistics: SearchStats,
    pub findings: Vec<FindingFile>,
}

impl FindingFile {
    pub fn from_finding(f: &Finding) -> Self {
        let l = f.model.lattice();
        FindingFile {
            lattice_size: f.lattice_size,
            lattice_index: f.lattice_index,
            table: f.table,
            field: f.field.map(|h| l.label(h).to_string()),
            status: f.status,
            asserted: f.asserted,
            witness: f.witness.as_ref().map(|w| labels_of(l, w)),
            model: ModelFile::from_structure(&f.model),
        }
    }

    /// Reloads the embedded model, re-runs the property, and compares status
    /// and witness for this finding's field context.
    pub fn reverify(&self, property: &str) -> Result<bool, String> {
        let q = self.model.to_structure().map_err(|e| e.to_string())?;
        let def = lookup(property).map_err(|e| e.to_string())?;
        let an = Analysis::new(&q);
        let l = q.lattice();
        let field = match &self.field {
            Some(h) => Some(l.index_of(h).ok_or_else(|| format!("unknown field label {h}"))?),
            None => None,
        };
        let check = def
            .evaluate(&an)
            .into_iter()
            .find(|c| c.field == field)
            .ok_or("no matching check")?;
        let witness = check.witness.as_ref().map(|w| labels_of(l, w));
        Ok(check.status == self.status && check.asserted == self.asserted && witness == self.witness)
    }
}

impl FindingsFile {
    pub fn new(task: &SearchTask, lattices: String, outcome: &SearchOutcome) -> Self {
        FindingsFile {
            property: task.property.clone(),
            task: TaskFile {
                lattices,
                mode: task.mode,
                bousfield_only: task.bousfield_only,
                require_field: task.require_field,
                only: task.only,
            },
            statistics: outcome.stats,
            findings: outcome.findings.iter().map(FindingFile::from_finding).collect(),
        }
    }

    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("findings serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    #[test]
    fn chain_counts() {
        let two = FiniteLattice::chain(2).unwrap();
        assert_eq!(enumerate_tables(&two).unwrap().0.len(), 1);
        let three = FiniteLattice::chain(3).unwrap();
        assert_eq!(enumerate_tables(&three).unwrap().0.len(), 2);
        let one = FiniteLattice::chain(1).unwrap();
        assert_eq!(enumerate_tables(&one).unwrap().0.len(), 1);
    }

    #[test]
    fn size_cap() {
        let big = FiniteLattice::chain(8).unwrap();
        assert!(matches!(enumerate_tables(&big), Err(LatticeError::SizeCap { .. })));
    }

    #[test]
    fn n4_table_is_enumerated() {
        let n4 = models::nilpotent_chain_model();
        let l = FiniteLattice::chain(4).unwrap();
        let (tables, _) = enumerate_tables(&l).unwrap();
        assert!(tables.iter().any(|t| t == n4.table()));
    }

    #[test]
    fn boolean_meet_is_enumerated() {
        let b = models::boolean_model(2).unwrap();
        let (tables, _) = enumerate_tables(b.lattice()).unwrap();
        assert!(tables.iter().any(|t| t == b.table()));
    }

    fn task(property: &str, source: LatticeSource, mode: Mode) -> SearchTask {
        SearchTask {
            source,
            property: property.into(),
            mode,
            bousfield_only: false,
            require_field: false,
            only: Only::All,
            jobs: 2,
        }
    }

    #[test]
    fn unknown_property() {
        let t = task("NOPE", LatticeSource::Sizes { min: 2, max: 2 }, Mode::Exhaustive);
        assert!(matches!(search_property(&t), Err(SearchError::UnknownProperty(_))));
    }

    #[test]
    fn sample_mode_is_reproducible() {
        let t = task(
            "SQ-STAB",
            LatticeSource::Sizes { min: 3, max: 5 },
            Mode::Sample { count: 20, seed: 7 },
        );
        let a = search_property(&t).unwrap();
        let b = search_property(&SearchTask { jobs: 1, ..t }).unwrap();
        assert_eq!(a, b);
        assert!(!a.findings.is_empty());
    }
}
