//! Brute-force oracles shared by the integration tests.
//!
//! Everything in here is computed straight from definitions — relation
//! scans, odometer enumeration, permutation canonicalization — without
//! calling the library's deciders, searches, or enumerator, so that those
//! fast paths are checked against something that cannot share their bugs.

#![allow(dead_code)]

use std::collections::HashSet;

use latnorm::{FiniteLattice, OpTable};

/// Greatest lower bound by definition: collect common lower bounds, demand a
/// unique maximal one.
pub fn naive_meet(l: &FiniteLattice, x: usize, y: usize) -> Option<usize> {
    let lowers: Vec<usize> = l
        .elements()
        .filter(|&z| l.le(z, x) && l.le(z, y))
        .collect();
    let maximal: Vec<usize> = lowers
        .iter()
        .copied()
        .filter(|&z| !lowers.iter().any(|&w| w != z && l.le(z, w)))
        .collect();
    match maximal[..] {
        [m] => Some(m),
        _ => None,
    }
}

/// Least upper bound by definition.
pub fn naive_join(l: &FiniteLattice, x: usize, y: usize) -> Option<usize> {
    let uppers: Vec<usize> = l
        .elements()
        .filter(|&z| l.le(x, z) && l.le(y, z))
        .collect();
    let minimal: Vec<usize> = uppers
        .iter()
        .copied()
        .filter(|&z| !uppers.iter().any(|&w| w != z && l.le(w, z)))
        .collect();
    match minimal[..] {
        [m] => Some(m),
        _ => None,
    }
}

/// The relation stored in the lattice really is a partial order with a
/// bottom and a top.
pub fn order_is_valid(l: &FiniteLattice) -> bool {
    let n = l.n();
    for x in 0..n {
        if !l.le(x, x) {
            return false;
        }
        for y in 0..n {
            if x != y && l.le(x, y) && l.le(y, x) {
                return false;
            }
            for z in 0..n {
                if l.le(x, y) && l.le(y, z) && !l.le(x, z) {
                    return false;
                }
            }
        }
    }
    let bottoms = (0..n).filter(|&b| (0..n).all(|x| l.le(b, x))).count();
    let tops = (0..n).filter(|&t| (0..n).all(|x| l.le(x, t))).count();
    bottoms == 1 && tops == 1
}

/// Cover pairs by definition: x < y with nothing strictly between.
pub fn naive_covers(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in l.elements() {
        for y in l.elements() {
            if l.lt(x, y) && !l.elements().any(|z| l.lt(x, z) && l.lt(z, y)) {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Definition-level law scans, independent of the analysis module.
pub fn naive_modular(l: &FiniteLattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements().all(|c| {
                !l.le(b, a) || l.meet(a, l.join(b, c)) == l.join(b, l.meet(a, c))
            })
        })
    })
}

pub fn naive_distributive(l: &FiniteLattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|b| {
            l.elements()
                .all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))
        })
    })
}

pub fn naive_one_distributive(l: &FiniteLattice) -> bool {
    let top = l.top();
    l.elements().all(|c| {
        l.elements().all(|a| {
            l.elements().all(|b| {
                l.join(a, b) != top || l.join(l.meet(c, a), l.meet(c, b)) == c
            })
        })
    })
}

pub fn naive_atomistic(l: &FiniteLattice) -> bool {
    let atoms: Vec<usize> = l
        .elements()
        .filter(|&a| a != l.bottom() && l.lower_covers(a) == vec![l.bottom()])
        .collect();
    l.elements()
        .all(|x| l.join_all(atoms.iter().copied().filter(|&a| l.le(a, x))) == x)
}

/// Number of lattices on `n` unlabeled elements, counted by brute force:
/// every transitive up-directed bitmask relation on indices 0..n is tested
/// for lattice-hood, and survivors are deduplicated by the minimum of the
/// order matrix over all label permutations. Practical for n ≤ 6.
pub fn count_lattices_brute_force(n: usize) -> usize {
    assert!((1..=6).contains(&n), "oracle is sized for n <= 6");
    if n == 1 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut canon: HashSet<u64> = HashSet::new();
    'mask: for mask in 0u32..(1 << pairs.len()) {
        let mut le = [[false; 6]; 6];
        for i in 0..n {
            le[i][i] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                le[i][j] = true;
            }
        }
        // The mask must already be its own transitive closure.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        continue 'mask;
                    }
                }
            }
        }
        // Every pair needs a unique least upper and greatest lower bound.
        for x in 0..n {
            for y in 0..n {
                let uppers: Vec<usize> =
                    (0..n).filter(|&z| le[x][z] && le[y][z]).collect();
                let least = uppers
                    .iter()
                    .filter(|&&z| uppers.iter().all(|&w| le[z][w]))
                    .count();
                if least != 1 {
                    continue 'mask;
                }
                let lowers: Vec<usize> =
                    (0..n).filter(|&z| le[z][x] && le[z][y]).collect();
                let greatest = lowers
                    .iter()
                    .filter(|&&z| lowers.iter().all(|&w| le[w][z]))
                    .count();
                if greatest != 1 {
                    continue 'mask;
                }
            }
        }
        canon.insert(canonical_matrix_key(n, &le));
    }
    canon.len()
}

fn canonical_matrix_key(n: usize, le: &[[bool; 6]; 6]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut key = 0u64;
        for i in 0..n {
            for j in 0..n {
                key = (key << 1) | u64::from(le[p[i]][p[j]]);
            }
        }
        best = best.min(key);
    });
    best
}

fn permute(xs: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

/// Generate-and-test existence oracle: odometer over all commutative tables
/// that fix the boundary rows and stay below the meet, filtered by
/// definition-level law scans. `require_tnorm` adds associativity (the
/// neutral element already holds by the boundary rows). Practical for
/// lattices of at most 6 elements.
pub fn naive_exists(l: &FiniteLattice, require_tnorm: bool) -> bool {
    assert!(l.n() <= 6, "oracle is sized for n <= 6");
    let n = l.n();
    let (bot, top) = (l.bottom(), l.top());
    let inner: Vec<usize> = l.elements().filter(|&x| x != bot && x != top).collect();
    let cells: Vec<(usize, usize)> = inner
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| inner[i..].iter().map(move |&y| (x, y)))
        .collect();
    let domains: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(x, y)| l.down_set(l.meet(x, y)))
        .collect();

    let mut choice = vec![0usize; cells.len()];
    loop {
        let mut t = vec![vec![0usize; n]; n];
        for y in 0..n {
            t[top][y] = y;
            t[y][top] = y;
            t[bot][y] = bot;
            t[y][bot] = bot;
        }
        for (ci, &(x, y)) in cells.iter().enumerate() {
            let v = domains[ci][choice[ci]];
            t[x][y] = v;
            t[y][x] = v;
        }
        if table_is_valid(l, &t, require_tnorm) {
            return true;
        }
        // Advance the odometer.
        let mut ci = 0;
        loop {
            if ci == cells.len() {
                return false;
            }
            choice[ci] += 1;
            if choice[ci] < domains[ci].len() {
                break;
            }
            choice[ci] = 0;
            ci += 1;
        }
    }
}

/// Every defining law of a commutative join-distributive pseudo-t-norm (plus
/// associativity and the neutral top when `require_tnorm`), checked by raw
/// scans against an [`OpTable`] — used to vet solutions the search returns.
pub fn table_obeys_all_laws(l: &FiniteLattice, t: &OpTable, require_tnorm: bool) -> bool {
    let (bot, top) = (l.bottom(), l.top());
    for x in l.elements() {
        if t.get(top, x) != x || t.get(x, top) != x {
            return false;
        }
        if t.get(bot, x) != bot || t.get(x, bot) != bot {
            return false;
        }
        for y in l.elements() {
            if t.get(x, y) != t.get(y, x) || !l.le(t.get(x, y), l.meet(x, y)) {
                return false;
            }
            for z in l.elements() {
                if l.le(y, z) && !l.le(t.get(x, y), t.get(x, z))  {
                    return false;
                }
                if t.get(x, l.join(y, z)) != l.join(t.get(x, y), t.get(x, z)) {
                    return false;
                }
                if require_tnorm && t.get(t.get(x, y), z) != t.get(x, t.get(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical 64-bit key of a lattice's order matrix, minimized over all
/// label permutations. Sized for n ≤ 7 (49 bits); used to compare
/// enumeration outputs across runs without trusting their ordering.
pub fn order_matrix_key(l: &FiniteLattice) -> u64 {
    let n = l.n();
    assert!(n * n <= 64, "key is sized for n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut key = 0u64;
        for i in 0..n {
            for j in 0..n {
                key = (key << 1) | u64::from(l.le(p[i], p[j]));
            }
        }
        best = best.min(key);
    });
    best
}

fn table_is_valid(l: &FiniteLattice, t: &[Vec<usize>], require_tnorm: bool) -> bool {
    let n = l.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if l.le(y, z) && !l.le(t[x][y], t[x][z]) {
                    return false;
                }
                if t[x][l.join(y, z)] != l.join(t[x][y], t[x][z]) {
                    return false;
                }
                if require_tnorm && t[t[x][y]][z] != t[x][t[y][z]] {
                    return false;
                }
            }
        }
    }
    true
}
