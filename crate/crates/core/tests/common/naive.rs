//! Brute-force oracles that share no code with the library enumerators.

use std::collections::BTreeSet;

use bousfield_core::lattice::{Elem, FiniteLattice};

/// A poset as a full `leq` matrix, with 0 the bottom and n-1 the top.
pub type Order = Vec<Vec<bool>>;

/// All lattices on `n` points, by brute force: every transitive relation on
/// the middle points that is compatible with index order, kept if every pair
/// has a least upper bound, then deduplicated by trying all permutations.
pub fn naive_lattices(n: usize) -> Vec<Order> {
    if n == 1 {
        return vec![vec![vec![true]]];
    }
    let mid: Vec<usize> = (1..n - 1).collect();
    let slots: Vec<(usize, usize)> = mid
        .iter()
        .flat_map(|&i| mid.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let mut found: Vec<Order> = Vec::new();
    for bits in 0u32..(1 << slots.len()) {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
            row[n - 1] = true;
        }
        le[0].fill(true);
        for (k, &(i, j)) in slots.iter().enumerate() {
            if bits & (1 << k) != 0 {
                le[i][j] = true;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(le[i][j] && le[j][k]) || le[i][k])));
        if !transitive || !has_all_joins(&le) {
            continue;
        }
        if !found.iter().any(|o| isomorphic(o, &le)) {
            found.push(le);
        }
    }
    found
}

fn has_all_joins(le: &Order) -> bool {
    let n = le.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ub: Vec<usize> = (0..n).filter(|&z| le[x][z] && le[y][z]).collect();
            ub.iter().any(|&z| ub.iter().all(|&w| le[z][w]))
        })
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn isomorphic(a: &Order, b: &Order) -> bool {
    let n = a.len();
    n == b.len()
        && permutations(n)
            .iter()
            .any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
}

pub fn order_of(l: &FiniteLattice) -> Order {
    l.elements()
        .map(|x| l.elements().map(|y| l.leq(x, y)).collect())
        .collect()
}

/// Every commutative table with the top as unit, checked naively for
/// associativity and distribution over binary joins and the empty join.
pub fn naive_quantales(l: &FiniteLattice) -> BTreeSet<Vec<Elem>> {
    let n = l.len();
    let top = l.top();
    let free: Vec<(usize, usize)> = (0..n)
        .filter(|&x| x != top)
        .flat_map(|x| (x..n).filter(move |&y| y != top).map(move |y| (x, y)))
        .collect();
    let mut out = BTreeSet::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t = vec![0; n * n];
        for x in 0..n {
            t[top * n + x] = x;
            t[x * n + top] = x;
        }
        let mut c = code;
        for &(x, y) in &free {
            t[x * n + y] = c % n;
            t[y * n + x] = c % n;
            c /= n;
        }
        let s = |x: usize, y: usize| t[x * n + y];
        let ok = (0..n).all(|x| s(x, l.bottom()) == l.bottom())
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| s(s(x, y), z) == s(x, s(y, z)))))
            && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| s(x, l.join(y, z)) == l.join(s(x, y), s(x, z)))));
        if ok {
            out.insert(t);
        }
    }
    out
}
