//! Finite complete lattices.
//!
//! A [`FiniteLattice`] is built from generating order relations. The
//! reflexive-transitive closure is computed once and every binary join and
//! meet is cached, so downstream operators are table lookups. Meets are never
//! taken from the order directly: each one is the join of the common lower
//! bounds.

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Index of a lattice element.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{labels} labels given for {n} elements")]
    LabelCount { labels: usize, n: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("relation ({0}, {1}) references an element outside the lattice")]
    OutOfRange(Elem, Elem),
    #[error("CYCLE: elements {0} and {1} lie below each other")]
    Cycle(Elem, Elem),
    #[error("NO-JOIN: elements {0} and {1} have no least upper bound")]
    NoJoin(Elem, Elem),
    #[error("NO-BOTTOM: no element lies below every other element")]
    NoBottom,
    #[error("SIZE-CAP: size {requested} exceeds the cap of {cap}")]
    SizeCap { requested: usize, cap: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("labels", &self.labels)
            .field("covers", &self.covers())
            .finish()
    }
}

/// Default display labels: `0`, then `a`, `b`, ... for inner elements, then `1`.
pub fn standard_labels(n: usize) -> Vec<String> {
    match n {
        0 => Vec::new(),
        1 => vec!["0".to_string()],
        _ => {
            let mut labels = Vec::with_capacity(n);
            labels.push("0".to_string());
            for i in 0..n - 2 {
                if i < 26 {
                    labels.push(((b'a' + i as u8) as char).to_string());
                } else {
                    labels.push(format!("e{i}"));
                }
            }
            labels.push("1".to_string());
            labels
        }
    }
}

impl FiniteLattice {
    /// Closes `pairs` (read as `x ≤ y` generators) and validates the result
    /// as a lattice on `n` elements with [`standard_labels`].
    pub fn validate_poset(n: usize, pairs: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        Self::new(standard_labels(n), pairs)
    }

    /// Closes the generating relations and checks antisymmetry, existence of
    /// all binary joins, and existence of a bottom. Together these give a
    /// complete lattice on a finite carrier.
    pub fn new(labels: Vec<String>, pairs: &[(Elem, Elem)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    return Err(LatticeError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(i);
                row
            })
            .collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(LatticeError::OutOfRange(x, y));
            }
            up[x].insert(y);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for (i, row) in up.iter_mut().enumerate() {
                if i != k && row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j > i && up[j].contains(i) {
                    return Err(LatticeError::Cycle(i, j));
                }
            }
        }
        let mut down: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        let up_count: Vec<usize> = up.iter().map(|r| r.count_ones(..)).collect();
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let bounds = &up[i] & &up[j];
                let size = bounds.count_ones(..);
                let least = bounds
                    .ones()
                    .find(|&u| up_count[u] == size)
                    .ok_or(LatticeError::NoJoin(i, j))?;
                join[i * n + j] = least;
                join[j * n + i] = least;
            }
        }
        let bottom = (0..n).find(|&i| up_count[i] == n).ok_or(LatticeError::NoBottom)?;
        let top = (0..n)
            .find(|&i| down[i].count_ones(..) == n)
            .expect("binary joins and a bottom give a top");
        let mut lattice = FiniteLattice {
            labels,
            up,
            down,
            join,
            meet: Vec::new(),
            bottom,
            top,
        };
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let lower = &lattice.down[i] & &lattice.down[j];
                let m = lattice.lub(lower.ones());
                meet[i * n + j] = m;
                meet[j * n + i] = m;
            }
        }
        lattice.meet = meet;
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: validation rejects empty carriers.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.len() + y]
    }

    /// Binary meet, cached from the join of all common lower bounds.
    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.len() + y]
    }

    /// Least upper bound; the empty join is the bottom.
    pub fn lub<I: IntoIterator<Item = Elem>>(&self, set: I) -> Elem {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Greatest lower bound, computed as the join of the common lower bounds.
    /// The empty meet is the top.
    pub fn glb<I: IntoIterator<Item = Elem>>(&self, set: I) -> Elem {
        let mut lower = FixedBitSet::with_capacity(self.len());
        lower.insert_range(..);
        for s in set {
            lower.intersect_with(&self.down[s]);
        }
        self.lub(lower.ones())
    }

    /// `{ y | x ≤ y }`.
    pub fn up_set(&self, x: Elem) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{ y | y ≤ x }`.
    pub fn down_set(&self, x: Elem) -> &FixedBitSet {
        &self.down[x]
    }

    /// Hasse diagram edges `(x, y)` with `x ⋖ y`, in lexicographic order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut edges = Vec::new();
        for x in self.elements() {
            for y in self.up[x].ones() {
                if y != x && self.is_cover(x, y) {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    fn is_cover(&self, x: Elem, y: Elem) -> bool {
        let between = &self.up[x] & &self.down[y];
        between.count_ones(..) == 2
    }

    pub fn lower_covers(&self, x: Elem) -> Vec<Elem> {
        self.down[x].ones().filter(|&y| y != x && self.is_cover(y, x)).collect()
    }

    /// Elements other than the bottom with exactly one lower cover. Every
    /// element is the join of the join-irreducibles below it.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| x != self.bottom && self.lower_covers(x).len() == 1)
            .collect()
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].count_ones(..));
        let mut height = vec![0; self.len()];
        for &x in &order {
            height[x] = self.down[x]
                .ones()
                .filter(|&y| y != x)
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// First triple `(x, y, z)` with `x ∨ (y ⋏ z) ≠ (x ∨ y) ⋏ (x ∨ z)`.
    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.join(x, self.meet(y, z));
                    let rhs = self.meet(self.join(x, y), self.join(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// The sub-poset on `elems` (sorted, deduplicated) under the induced
    /// order, validated as a lattice in its own right. Element `i` of the
    /// result is `elems[i]`.
    pub fn induced(&self, elems: &[Elem]) -> Result<FiniteLattice, LatticeError> {
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let mut pairs = Vec::new();
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if i != j && self.leq(x, y) {
                    pairs.push((i, j));
                }
            }
        }
        FiniteLattice::new(labels, &pairs)
    }

    pub fn chain(n: usize) -> Result<FiniteLattice, LatticeError> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteLattice::validate_poset(n, &pairs)
    }

    /// Pentagon `N5`: `0 < a < b < 1` and `0 < c < 1`.
    pub fn pentagon() -> FiniteLattice {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FiniteLattice::new(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("pentagon is a lattice")
    }

    /// Powerset of `k` atoms ordered by inclusion; element index is the
    /// subset bitmask.
    pub fn powerset(k: usize) -> Result<FiniteLattice, LatticeError> {
        let n = 1usize << k;
        let labels = (0..n).map(|m| subset_label(m, k)).collect();
        let mut pairs = Vec::new();
        for m in 0..n {
            for b in 0..k {
                if m & (1 << b) == 0 {
                    pairs.push((m, m | (1 << b)));
                }
            }
        }
        FiniteLattice::new(labels, &pairs)
    }

    /// Cartesian product; element `(i, j)` has index `i * other.len() + j`.
    pub fn product(&self, other: &FiniteLattice) -> FiniteLattice {
        let m = other.len();
        let mut labels = Vec::with_capacity(self.len() * m);
        for i in self.elements() {
            for j in other.elements() {
                labels.push(format!("({},{})", self.label(i), other.label(j)));
            }
        }
        let mut pairs = Vec::new();
        for (x, y) in self.covers() {
            for j in other.elements() {
                pairs.push((x * m + j, y * m + j));
            }
        }
        for (x, y) in other.covers() {
            for i in self.elements() {
                pairs.push((i * m + x, i * m + y));
            }
        }
        FiniteLattice::new(labels, &pairs).expect("product of lattices is a lattice")
    }
}

fn subset_label(mask: usize, k: usize) -> String {
    if mask == 0 {
        return "0".to_string();
    }
    if mask == (1 << k) - 1 {
        return "1".to_string();
    }
    (0..k)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| format!("x{}", b + 1))
        .collect::<Vec<_>>()
        .join("+")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map table has {got} entries, source has {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("image of {0} is outside the target lattice")]
    OutOfRange(Elem),
    #[error("map is not monotone: {0} ≤ {1} but their images are not ordered")]
    NotMonotone(Elem, Elem),
}

/// How a map fails to preserve joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinFailure {
    /// `f(⊥) ≠ ⊥`; carries the image of the bottom.
    Bottom { image: Elem },
    /// `f(x ∨ y) ≠ f(x) ∨ f(y)`.
    Pair { x: Elem, y: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjointError {
    #[error("NOT-JOIN-PRESERVING: {0:?}")]
    NotJoinPreserving(JoinFailure),
    #[error("adjunction fails at ({x}, {y})")]
    AdjunctionBroken { x: Elem, y: Elem },
}

/// An order-preserving map between two finite lattices.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMap<'a> {
    source: &'a FiniteLattice,
    target: &'a FiniteLattice,
    table: Vec<Elem>,
}

impl fmt::Debug for MonotoneMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.table
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| (self.source.label(x), self.target.label(y))),
            )
            .finish()
    }
}

impl<'a> MonotoneMap<'a> {
    pub fn new(source: &'a FiniteLattice, target: &'a FiniteLattice, table: Vec<Elem>) -> Result<Self, MapError> {
        if table.len() != source.len() {
            return Err(MapError::WrongLength {
                got: table.len(),
                expected: source.len(),
            });
        }
        if let Some(x) = table.iter().position(|&y| y >= target.len()) {
            return Err(MapError::OutOfRange(x));
        }
        for x in source.elements() {
            for y in source.up_set(x).ones() {
                if !target.leq(table[x], table[y]) {
                    return Err(MapError::NotMonotone(x, y));
                }
            }
        }
        Ok(MonotoneMap { source, target, table })
    }

    pub fn identity(lattice: &'a FiniteLattice) -> Self {
        MonotoneMap {
            source: lattice,
            target: lattice,
            table: lattice.elements().collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteLattice {
        self.source
    }

    pub fn target(&self) -> &'a FiniteLattice {
        self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    /// Binary joins plus the empty join; on a finite lattice this is
    /// preservation of arbitrary joins.
    pub fn join_failure(&self) -> Option<JoinFailure> {
        let image = self.apply(self.source.bottom());
        if image != self.target.bottom() {
            return Some(JoinFailure::Bottom { image });
        }
        for x in self.source.elements() {
            for y in x + 1..self.source.len() {
                let lhs = self.apply(self.source.join(x, y));
                let rhs = self.target.join(self.apply(x), self.apply(y));
                if lhs != rhs {
                    return Some(JoinFailure::Pair { x, y });
                }
            }
        }
        None
    }

    /// The right adjoint `g(y) = lub { x | f(x) ≤ y }`, certified against
    /// `f(x) ≤ y ⟺ x ≤ g(y)` on every pair.
    pub fn right_adjoint(&self) -> Result<MonotoneMap<'a>, AdjointError> {
        if let Some(failure) = self.join_failure() {
            return Err(AdjointError::NotJoinPreserving(failure));
        }
        let table: Vec<Elem> = self
            .target
            .elements()
            .map(|y| {
                self.source
                    .lub(self.source.elements().filter(|&x| self.target.leq(self.apply(x), y)))
            })
            .collect();
        for x in self.source.elements() {
            for y in self.target.elements() {
                if self.target.leq(self.apply(x), y) != self.source.leq(x, table[y]) {
                    return Err(AdjointError::AdjunctionBroken { x, y });
                }
            }
        }
        MonotoneMap::new(self.target, self.source, table).map_err(|e| match e {
            MapError::NotMonotone(x, y) => AdjointError::AdjunctionBroken { x, y },
            _ => unreachable!("adjoint table is total and in range"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m4() -> FiniteLattice {
        FiniteLattice::validate_poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn one_point_lattice() {
        let l = FiniteLattice::validate_poset(1, &[]).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.lub([]), 0);
        assert_eq!(l.glb([]), 0);
    }

    #[test]
    fn antisymmetry_violation_is_a_cycle() {
        assert_eq!(
            FiniteLattice::validate_poset(2, &[(0, 1), (1, 0)]),
            Err(LatticeError::Cycle(0, 1))
        );
    }

    #[test]
    fn longer_cycle_detected_after_closure() {
        let err = FiniteLattice::validate_poset(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::Cycle(_, _)));
    }

    #[test]
    fn antichain_has_no_join() {
        assert_eq!(FiniteLattice::validate_poset(2, &[]), Err(LatticeError::NoJoin(0, 1)));
    }

    #[test]
    fn missing_bottom() {
        // two minimal elements under a common top
        assert_eq!(
            FiniteLattice::validate_poset(3, &[(0, 2), (1, 2)]),
            Err(LatticeError::NoBottom)
        );
    }

    #[test]
    fn two_tops_have_no_join() {
        // bottom below two maximal elements
        assert_eq!(
            FiniteLattice::validate_poset(3, &[(0, 1), (0, 2)]),
            Err(LatticeError::NoJoin(1, 2))
        );
    }

    #[test]
    fn out_of_range_and_labels() {
        assert_eq!(
            FiniteLattice::validate_poset(2, &[(0, 5)]),
            Err(LatticeError::OutOfRange(0, 5))
        );
        assert_eq!(
            FiniteLattice::new(vec!["x".into(), "x".into()], &[(0, 1)]),
            Err(LatticeError::DuplicateLabel("x".into()))
        );
        assert_eq!(FiniteLattice::new(vec![], &[]), Err(LatticeError::Empty));
    }

    #[test]
    fn diamond_closure() {
        let l = m4();
        // closure adds 0 ≤ 3
        assert!(l.leq(0, 3));
        assert!(!l.leq(1, 2) && !l.leq(2, 1));
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert_eq!(l.lub([1, 2]), 3);
        assert_eq!(l.glb([1, 2]), 0);
        assert_eq!(l.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(l.join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn chain_joins_and_meets() {
        // MI's lattice: 0 < i < h < 1
        let l = FiniteLattice::chain(4).unwrap();
        assert_eq!(l.lub([1, 2]), 2);
        assert_eq!(l.glb([1, 2]), 1);
        assert_eq!(l.lub(std::iter::empty()), l.bottom());
        assert_eq!(l.glb(std::iter::empty()), l.top());
        assert_eq!(l.join_irreducibles(), vec![1, 2, 3]);
        assert_eq!(l.heights(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn distributivity() {
        assert!(m4().is_distributive());
        assert!(FiniteLattice::chain(5).unwrap().is_distributive());
        let n5 = FiniteLattice::pentagon();
        let (x, y, z) = n5.distributivity_witness().unwrap();
        assert_ne!(n5.join(x, n5.meet(y, z)), n5.meet(n5.join(x, y), n5.join(x, z)));
        // first violation in scan order: a ∨ (b ⋏ c) = a but (a ∨ b) ⋏ (a ∨ c) = b
        assert_eq!((x, y, z), (1, 2, 3));
    }

    #[test]
    fn identity_is_self_adjoint() {
        let l = m4();
        let id = MonotoneMap::identity(&l);
        assert_eq!(id.right_adjoint().unwrap().table(), &[0, 1, 2, 3]);
    }

    #[test]
    fn inclusion_of_idempotents_has_retraction_adjoint() {
        // DL(MI) = {0, h, 1} included into 0 < i < h < 1
        let mi = FiniteLattice::new(
            ["0", "i", "h", "1"].map(String::from).to_vec(),
            &[(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        let dl = mi.induced(&[0, 2, 3]).unwrap();
        let inclusion = MonotoneMap::new(&dl, &mi, vec![0, 2, 3]).unwrap();
        let r = inclusion.right_adjoint().unwrap();
        let labels: Vec<&str> = r.table().iter().map(|&y| dl.label(y)).collect();
        assert_eq!(labels, vec!["0", "0", "h", "1"]);
    }

    #[test]
    fn bottom_not_preserved() {
        let two = FiniteLattice::chain(2).unwrap();
        let f = MonotoneMap::new(&two, &two, vec![1, 1]).unwrap();
        assert_eq!(
            f.right_adjoint(),
            Err(AdjointError::NotJoinPreserving(JoinFailure::Bottom { image: 1 }))
        );
    }

    #[test]
    fn binary_join_not_preserved() {
        // M4 → 2-chain sending both atoms to 0 but top to 1
        let l = m4();
        let two = FiniteLattice::chain(2).unwrap();
        let f = MonotoneMap::new(&l, &two, vec![0, 0, 0, 1]).unwrap();
        assert_eq!(
            f.right_adjoint(),
            Err(AdjointError::NotJoinPreserving(JoinFailure::Pair { x: 1, y: 2 }))
        );
    }

    #[test]
    fn non_monotone_table_rejected() {
        let two = FiniteLattice::chain(2).unwrap();
        assert_eq!(
            MonotoneMap::new(&two, &two, vec![1, 0]).unwrap_err(),
            MapError::NotMonotone(0, 1)
        );
    }

    #[test]
    fn product_of_two_chains_is_diamond_shaped() {
        let two = FiniteLattice::chain(2).unwrap();
        let sq = two.product(&two);
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.covers().len(), 4);
        assert!(sq.is_distributive());
    }

    #[test]
    fn powerset_labels() {
        let b2 = FiniteLattice::powerset(2).unwrap();
        assert_eq!(b2.labels(), &["0", "x1", "x2", "1"]);
        assert_eq!(FiniteLattice::powerset(1).unwrap().labels(), &["0", "1"]);
    }
}
