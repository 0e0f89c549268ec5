//! Exhaustive searches: backtracking for commutative join-distributive
//! pseudo-t-norms (and full t-norms), a budgeted exploratory search for
//! non-commutative tables, enumeration of all small lattices up to
//! isomorphism, and a law suite that cross-checks the structural theory
//! against the searches.
//!
//! A commutative join-distributive table is determined by its values on
//! pairs of nonbottom join-irreducible elements, so the backtracking runs
//! over those pairs only; every completed assignment is expanded to a full
//! table and re-verified with the independent law checkers before being
//! reported. An exhausted search with no solutions is therefore a proof of
//! nonexistence.

use std::collections::HashSet;

use thiserror::Error;

use crate::analysis::{
    find_forbidden_1_sublattice, is_atomistic, is_boolean, is_distributive, is_modular,
    is_one_distributive, proper_join_irreducibles, rectangular_pair,
};
use crate::corpus;
use crate::lattice::FiniteLattice;
use crate::tnorm::{
    check_associative, check_boundary, check_below_meet, check_commutative,
    check_join_distributive, check_monotone, check_neutral, OpTable,
};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Emergency valve for the law suite: its searches are expected to finish
/// far earlier, and an undecided row is reported as `None` rather than
/// stalling the whole run.
const LAW_SUITE_NODE_BUDGET: u64 = 100_000;

/// What to search for and how hard to try.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Additionally require associativity and a two-sided neutral top
    /// (i.e. search for full t-norms).
    pub require_associative: bool,
    /// Search the commutative space (complete, prunable). Switching this
    /// off enters a much larger exploratory space that is rarely
    /// exhaustible within budget.
    pub require_commutative: bool,
    /// Stop after this many solutions.
    pub solution_limit: usize,
    /// Upper bound on candidate placements tried.
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            require_associative: false,
            require_commutative: true,
            solution_limit: 1,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// At least one verified solution was found.
    Found,
    /// The space was fully explored and holds no solution.
    ExhaustedNone,
    /// The node budget ran out before the space was covered.
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub solutions: Vec<OpTable>,
    pub nodes_explored: u64,
}

/// Searches for tables that are join-distributive pseudo-t-norms (or full
/// t-norms) on `l` according to `config`.
pub fn search_tables(l: &FiniteLattice, config: &SearchConfig) -> SearchOutcome {
    if config.require_commutative {
        CommutativeSearch::new(l, config).run()
    } else {
        noncommutative_search(l, config)
    }
}

/// Is there a commutative join-distributive pseudo-t-norm on `l`?
pub fn exists_join_distributive_pseudo_tnorm(l: &FiniteLattice, node_budget: u64) -> SearchOutcome {
    search_tables(
        l,
        &SearchConfig {
            node_budget,
            ..SearchConfig::default()
        },
    )
}

/// Is there a left-continuous (join-distributive) t-norm on `l`?
pub fn exists_left_continuous_tnorm(l: &FiniteLattice, node_budget: u64) -> SearchOutcome {
    search_tables(
        l,
        &SearchConfig {
            require_associative: true,
            node_budget,
            ..SearchConfig::default()
        },
    )
}

/// Backtracking over values of unordered pairs of nonbottom
/// join-irreducibles.
struct CommutativeSearch<'a> {
    l: &'a FiniteLattice,
    config: SearchConfig,
    /// Nonbottom join-irreducibles, ascending.
    irr: Vec<usize>,
    /// All unordered position pairs (i <= j) over `irr`.
    pairs: Vec<(usize, usize)>,
    /// Variable pairs (not forced), in assignment order: descending by
    /// height sum, so every pair componentwise above a variable is
    /// assigned before it.
    order: Vec<usize>,
    /// Candidate values per pair: the down-set of the pair's meet,
    /// ascending.
    domains: Vec<Vec<usize>>,
    /// For each variable (by order position), the already-ordered variables
    /// componentwise above it.
    above: Vec<Vec<usize>>,
    /// contrib[ji][y]: pairs that feed the expansion value at
    /// (irr[ji], y).
    contrib: Vec<Vec<Vec<usize>>>,
    /// column[j]: pairs that feed T(top, irr[j]).
    column: Vec<Vec<usize>>,
    /// irr_mask[x]: bitmask of irr positions below-or-equal x.
    irr_mask: Vec<u64>,

    values: Vec<usize>,
    assigned: Vec<bool>,
    nodes: u64,
    truncated: bool,
    solutions: Vec<OpTable>,
}

impl<'a> CommutativeSearch<'a> {
    fn new(l: &'a FiniteLattice, config: &SearchConfig) -> Self {
        let irr = proper_join_irreducibles(l);
        let k = irr.len();
        assert!(k <= 64, "join-irreducible count exceeds the supported 64");
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                pairs.push((i, j));
            }
        }
        let top = l.top();
        let mut forced = vec![usize::MAX; pairs.len()];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if irr[i] == top || irr[j] == top {
                // T(1, y) = y pins every pair that involves the top.
                forced[p] = if irr[i] == top { irr[j] } else { irr[i] };
            }
        }
        let mut order: Vec<usize> = (0..pairs.len())
            .filter(|&p| forced[p] == usize::MAX)
            .collect();
        order.sort_by_key(|&p| {
            let (i, j) = pairs[p];
            (
                usize::MAX - (l.height(irr[i]) + l.height(irr[j])),
                i,
                j,
            )
        });
        let domains: Vec<Vec<usize>> = pairs
            .iter()
            .map(|&(i, j)| l.down_set(l.meet(irr[i], irr[j])))
            .collect();
        // t must be monotone on irreducible pairs; the descending height
        // order guarantees the dominating pairs are assigned first.
        let pair_le = |p: usize, q: usize| {
            let (pi, pj) = pairs[p];
            let (qi, qj) = pairs[q];
            (l.le(irr[pi], irr[qi]) && l.le(irr[pj], irr[qj]))
                || (l.le(irr[pi], irr[qj]) && l.le(irr[pj], irr[qi]))
        };
        let above: Vec<Vec<usize>> = order
            .iter()
            .map(|&p| {
                (0..pairs.len())
                    .filter(|&q| q != p && forced[q] == usize::MAX && pair_le(p, q))
                    .collect()
            })
            .collect();
        let mut contrib = vec![vec![Vec::new(); l.n()]; k];
        for ji in 0..k {
            for y in l.elements() {
                for (p, &(i, j)) in pairs.iter().enumerate() {
                    let hit = (l.le(irr[i], irr[ji]) && l.le(irr[j], y))
                        || (l.le(irr[j], irr[ji]) && l.le(irr[i], y));
                    if hit {
                        contrib[ji][y].push(p);
                    }
                }
            }
        }
        let column: Vec<Vec<usize>> = (0..k)
            .map(|j| {
                (0..pairs.len())
                    .filter(|&p| {
                        let (a, b) = pairs[p];
                        l.le(irr[a], irr[j]) || l.le(irr[b], irr[j])
                    })
                    .collect()
            })
            .collect();
        let irr_mask: Vec<u64> = l
            .elements()
            .map(|x| {
                irr.iter()
                    .enumerate()
                    .filter(|&(_, &e)| l.le(e, x))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let values: Vec<usize> = forced
            .iter()
            .map(|&f| if f == usize::MAX { usize::MAX } else { f })
            .collect();
        let assigned: Vec<bool> = forced.iter().map(|&f| f != usize::MAX).collect();
        CommutativeSearch {
            l,
            config: *config,
            irr,
            pairs,
            order,
            domains,
            above,
            contrib,
            column,
            irr_mask,
            values,
            assigned,
            nodes: 0,
            truncated: false,
            solutions: Vec::new(),
        }
    }

    fn run(mut self) -> SearchOutcome {
        if self.feasible() {
            self.descend(0);
        }
        let status = if !self.solutions.is_empty() {
            SearchStatus::Found
        } else if !self.truncated {
            SearchStatus::ExhaustedNone
        } else {
            SearchStatus::BudgetExceeded
        };
        SearchOutcome {
            status,
            solutions: self.solutions,
            nodes_explored: self.nodes,
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.try_leaf();
            return self.solutions.len() >= self.config.solution_limit;
        }
        let p = self.order[depth];
        for ci in 0..self.domains[p].len() {
            let v = self.domains[p][ci];
            if self.nodes >= self.config.node_budget {
                self.truncated = true;
                return true;
            }
            self.nodes += 1;
            // Monotonicity against every dominating assigned pair.
            if !self.above[depth]
                .iter()
                .all(|&q| !self.assigned[q] || self.l.le(v, self.values[q]))
            {
                continue;
            }
            self.values[p] = v;
            self.assigned[p] = true;
            if self.feasible() && self.descend(depth + 1) {
                return true;
            }
            self.assigned[p] = false;
            self.values[p] = usize::MAX;
        }
        false
    }

    /// Bound-based pruning on the partial assignment: every top column must
    /// still be able to reach its value, and every join-distributivity
    /// instance must still admit a common value for both sides.
    fn feasible(&self) -> bool {
        let l = self.l;
        let k = self.irr.len();
        // Top column: T(1, j) = ∨ of the column's cells must reach j.
        for j in 0..k {
            let mut best = l.bottom();
            for &p in &self.column[j] {
                let cap = if self.assigned[p] {
                    self.values[p]
                } else {
                    let (a, b) = self.pairs[p];
                    l.meet(self.irr[a], self.irr[b])
                };
                best = l.join(best, cap);
            }
            if best != self.irr[j] {
                return false;
            }
        }
        // Interval bounds for T(irr[ji], y) under the partial assignment.
        let n = l.n();
        let mut tmin = vec![l.bottom(); k * n];
        let mut tmax = vec![l.bottom(); k * n];
        for ji in 0..k {
            for y in l.elements() {
                let mut lo = l.bottom();
                let mut hi = l.bottom();
                for &p in &self.contrib[ji][y] {
                    if self.assigned[p] {
                        lo = l.join(lo, self.values[p]);
                        hi = l.join(hi, self.values[p]);
                    } else {
                        let (a, b) = self.pairs[p];
                        hi = l.join(hi, l.meet(self.irr[a], self.irr[b]));
                    }
                }
                tmin[ji * n + y] = lo;
                tmax[ji * n + y] = hi;
            }
        }
        // T(j, y ∨ z) = T(j, y) ∨ T(j, z) needs the two interval ranges to
        // overlap in order.
        for ji in 0..k {
            for y in l.elements() {
                for z in y..n {
                    let w = l.join(y, z);
                    let lmin = tmin[ji * n + w];
                    let lmax = tmax[ji * n + w];
                    let rmin = l.join(tmin[ji * n + y], tmin[ji * n + z]);
                    let rmax = l.join(tmax[ji * n + y], tmax[ji * n + z]);
                    if !l.le(lmin, rmax) || !l.le(rmin, lmax) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Expands the finished assignment to a full table and keeps it only if
    /// the independent law checkers all pass.
    fn try_leaf(&mut self) {
        let l = self.l;
        let table = OpTable::from_fn(l.n(), |x, y| {
            let mx = self.irr_mask[x];
            let my = self.irr_mask[y];
            let mut acc = l.bottom();
            for (p, &(i, j)) in self.pairs.iter().enumerate() {
                let hit = (mx >> i & 1 == 1 && my >> j & 1 == 1)
                    || (mx >> j & 1 == 1 && my >> i & 1 == 1);
                if hit {
                    acc = l.join(acc, self.values[p]);
                }
            }
            acc
        });
        let ok = check_boundary(l, &table).holds
            && check_monotone(l, &table).holds
            && check_commutative(l, &table).holds
            && check_below_meet(l, &table).holds
            && check_join_distributive(l, &table).holds
            && (!self.config.require_associative
                || (check_neutral(l, &table).holds && check_associative(l, &table).holds));
        if ok {
            self.solutions.push(table);
        }
    }
}

/// Budgeted exploratory search over tables that are join-distributive in
/// the second argument but need not be commutative. Each such table is
/// determined by rows over the nonbottom join-irreducibles; the rows of the
/// bottom and the top are forced, everything else ranges over the whole
/// lattice. Rarely exhaustible — expect a budget verdict on nontrivial
/// inputs.
fn noncommutative_search(l: &FiniteLattice, config: &SearchConfig) -> SearchOutcome {
    let irr = proper_join_irreducibles(l);
    let k = irr.len();
    let rows: Vec<usize> = l
        .elements()
        .filter(|&x| x != l.bottom() && x != l.top())
        .collect();
    let vars: Vec<(usize, usize)> = rows
        .iter()
        .flat_map(|&x| (0..k).map(move |j| (x, j)))
        .collect();
    let mut values = vec![0usize; vars.len()];
    let mut nodes: u64 = 0;
    let mut truncated = false;
    let mut solutions = Vec::new();

    // Expansion from row values: T(x, y) = ∨ {row[x][j] : irr[j] <= y},
    // with the bottom row all-bottom and the top row the identity.
    let expand = |values: &[usize]| -> OpTable {
        OpTable::from_fn(l.n(), |x, y| {
            if x == l.bottom() {
                l.bottom()
            } else if x == l.top() {
                y
            } else {
                let base = rows.iter().position(|&r| r == x).unwrap() * k;
                let mut acc = l.bottom();
                for j in 0..k {
                    if l.le(irr[j], y) {
                        acc = l.join(acc, values[base + j]);
                    }
                }
                acc
            }
        })
    };

    let check_and_store =
        |values: &[usize], solutions: &mut Vec<OpTable>| {
            let table = expand(values);
            let ok = check_boundary(l, &table).holds
                && check_monotone(l, &table).holds
                && check_join_distributive(l, &table).holds
                && (!config.require_associative
                    || (check_neutral(l, &table).holds && check_associative(l, &table).holds));
            if ok {
                solutions.push(table);
            }
        };

    if vars.is_empty() {
        nodes += 1;
        check_and_store(&values, &mut solutions);
    } else {
        // Odometer over all assignments, low variable fastest.
        'outer: loop {
            if nodes >= config.node_budget {
                truncated = true;
                break;
            }
            nodes += 1;
            check_and_store(&values, &mut solutions);
            if solutions.len() >= config.solution_limit {
                break;
            }
            let mut i = 0;
            loop {
                values[i] += 1;
                if values[i] < l.n() {
                    break;
                }
                values[i] = 0;
                i += 1;
                if i == vars.len() {
                    break 'outer;
                }
            }
        }
    }
    let status = if !solutions.is_empty() {
        SearchStatus::Found
    } else if !truncated {
        SearchStatus::ExhaustedNone
    } else {
        SearchStatus::BudgetExceeded
    };
    SearchOutcome {
        status,
        solutions,
        nodes_explored: nodes,
    }
}

pub const MAX_ENUMERATION: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration supports at most {MAX_ENUMERATION} elements, got {0}")]
    TooLarge(usize),
}

/// Which lattices to keep; a set flag restricts to lattices with that
/// property.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilters {
    pub modular: bool,
    pub atomistic: bool,
    pub distributive: bool,
}

/// A growing poset: `down[i]` is the bitmask of elements at or below i.
#[derive(Clone)]
struct Grow {
    c: usize,
    down: [u16; MAX_ENUMERATION],
}

impl Grow {
    fn le(&self, i: usize, j: usize) -> bool {
        self.down[j] >> i & 1 == 1
    }

    fn up_mask(&self, i: usize) -> u16 {
        let mut m = 0u16;
        for j in 0..self.c {
            if self.le(i, j) {
                m |= 1 << j;
            }
        }
        m
    }

    /// Every present pair must already have a greatest common lower bound
    /// (lower bounds never change under maximal additions), and any pair
    /// with a common upper bound must have a unique minimal one (extra
    /// minimal upper bounds can never be removed later).
    fn feasible(&self) -> bool {
        for x in 0..self.c {
            for y in x + 1..self.c {
                let lows = self.down[x] & self.down[y];
                if !has_unique_greatest(self, lows) {
                    return false;
                }
                let ups = self.up_mask(x) & self.up_mask(y);
                if ups != 0 && !has_unique_least(self, ups) {
                    return false;
                }
            }
        }
        true
    }
}

fn has_unique_greatest(g: &Grow, set: u16) -> bool {
    (0..g.c).any(|m| set >> m & 1 == 1 && set & !g.down[m] == 0)
}

fn has_unique_least(g: &Grow, set: u16) -> bool {
    (0..g.c).any(|m| set >> m & 1 == 1 && set & !g.up_mask(m) == 0)
}

/// Canonical 64-bit key of the order matrix, minimized over permutations
/// that respect a structural refinement of the elements.
fn canonical_key(g: &Grow) -> u64 {
    let c = g.c;
    // Signature refinement: start from degree counts, then twice fold in
    // the sorted signatures of strict down- and up-neighbours.
    let mut sig: Vec<Vec<u64>> = (0..c)
        .map(|i| {
            vec![
                g.down[i].count_ones() as u64,
                g.up_mask(i).count_ones() as u64,
            ]
        })
        .collect();
    for _ in 0..2 {
        let mut ranks: Vec<Vec<u64>> = sig.clone();
        ranks.sort();
        ranks.dedup();
        let rank_of = |s: &Vec<u64>| ranks.binary_search(s).unwrap() as u64;
        let mut next = Vec::with_capacity(c);
        for i in 0..c {
            let mut entry = vec![rank_of(&sig[i])];
            let mut downs: Vec<u64> = (0..c)
                .filter(|&j| j != i && g.le(j, i))
                .map(|j| rank_of(&sig[j]))
                .collect();
            downs.sort_unstable();
            let mut ups: Vec<u64> = (0..c)
                .filter(|&j| j != i && g.le(i, j))
                .map(|j| rank_of(&sig[j]))
                .collect();
            ups.sort_unstable();
            entry.push(u64::MAX); // separator
            entry.extend(downs);
            entry.push(u64::MAX);
            entry.extend(ups);
            next.push(entry);
        }
        sig = next;
    }
    // Position blocks: elements sorted by signature; permutations may only
    // rearrange elements with equal signatures.
    let mut order: Vec<usize> = (0..c).collect();
    order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &e in &order {
        match blocks.last_mut() {
            Some(b) if sig[b[0]] == sig[e] => b.push(e),
            _ => blocks.push(vec![e]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = vec![0usize; c];
    fill_blocks(g, &blocks, 0, 0, &mut perm, &mut best);
    best
}

fn fill_blocks(
    g: &Grow,
    blocks: &[Vec<usize>],
    bi: usize,
    base: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if bi == blocks.len() {
        let c = g.c;
        let mut key = 0u64;
        for i in 0..c {
            for j in 0..c {
                if g.le(perm[i], perm[j]) {
                    key |= 1 << (i * c + j);
                }
            }
        }
        if key < *best {
            *best = key;
        }
        return;
    }
    let block = &blocks[bi];
    permute_into(g, blocks, bi, base, 0, &mut block.clone(), perm, best);
}

fn permute_into(
    g: &Grow,
    blocks: &[Vec<usize>],
    bi: usize,
    base: usize,
    depth: usize,
    pool: &mut Vec<usize>,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if depth == blocks[bi].len() {
        fill_blocks(g, blocks, bi + 1, base + depth, perm, best);
        return;
    }
    for i in 0..pool.len() {
        perm[base + depth] = pool[i];
        let saved = pool.remove(i);
        permute_into(g, blocks, bi, base, depth + 1, pool, perm, best);
        pool.insert(i, saved);
    }
}

/// All lattices with exactly `n` elements, one per isomorphism class,
/// filtered by `filters`. Posets are grown one maximal element at a time
/// with feasibility pruning and canonical deduplication per level.
pub fn enumerate_lattices(
    n: usize,
    filters: EnumFilters,
    threads: usize,
) -> Result<Vec<FiniteLattice>, EnumError> {
    if n > MAX_ENUMERATION {
        return Err(EnumError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Grow {
        c: 1,
        down: [1, 0, 0, 0, 0, 0, 0, 0],
    }];
    for _ in 1..n {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for g in &level {
            let c = g.c;
            for d in 1u16..1 << c {
                // The new element's strict down-set must be down-closed.
                if (0..c).any(|x| d >> x & 1 == 1 && g.down[x] & !d != 0) {
                    continue;
                }
                let mut gg = g.clone();
                gg.down[c] = d | 1 << c;
                gg.c = c + 1;
                if !gg.feasible() {
                    continue;
                }
                if seen.insert(canonical_key(&gg)) {
                    next.push(gg);
                }
            }
        }
        level = next;
    }
    let finished: Vec<&Grow> = level
        .iter()
        .filter(|g| {
            let maximal = (0..g.c).filter(|&x| g.up_mask(x) == 1 << x).count();
            maximal == 1
        })
        .collect();
    let built: Vec<FiniteLattice> = finished
        .iter()
        .filter_map(|g| {
            let labels: Vec<String> = (0..g.c)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect();
            let mut pairs = Vec::new();
            for x in 0..g.c {
                for y in 0..g.c {
                    if x != y && g.le(x, y) {
                        pairs.push((labels[x].clone(), labels[y].clone()));
                    }
                }
            }
            FiniteLattice::build_from_covers(&labels, &pairs).ok()
        })
        .collect();
    let keep = |l: &FiniteLattice| {
        (!filters.modular || is_modular(l).holds)
            && (!filters.atomistic || is_atomistic(l).holds)
            && (!filters.distributive || is_distributive(l).holds)
    };
    let flags = run_indexed(threads, built.len(), |i| keep(&built[i]));
    Ok(built
        .into_iter()
        .zip(flags)
        .filter_map(|(l, f)| f.then_some(l))
        .collect())
}

/// Runs `f` over 0..count on up to `threads` workers, returning results in
/// index order regardless of scheduling.
fn run_indexed<T: Send>(threads: usize, count: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let threads = threads.max(1).min(count.max(1));
    if threads == 1 {
        return (0..count).map(f).collect();
    }
    let mut chunks: Vec<Vec<(usize, T)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let f = &f;
                scope.spawn(move || {
                    (t..count)
                        .step_by(threads)
                        .map(|i| (i, f(i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut out: Vec<Option<T>> = (0..count).map(|_| None).collect();
    for chunk in chunks.drain(..) {
        for (i, v) in chunk {
            out[i] = Some(v);
        }
    }
    out.into_iter().map(|v| v.unwrap()).collect()
}

/// Which lattices the law suite runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawScope {
    /// The named corpus.
    Corpus,
    /// All lattices with exactly this many elements.
    Enumerated(usize),
}

/// Per-lattice facts gathered by the law suite. Search outcomes are `None`
/// when the budget ran out.
#[derive(Debug, Clone)]
pub struct LawRow {
    pub name: String,
    pub n: usize,
    pub modular: bool,
    pub distributive: bool,
    pub one_distributive: bool,
    pub atomistic: bool,
    pub boolean: bool,
    /// The lattice has exactly two complementary inner bi-irreducibles.
    pub rectangular: bool,
    /// Display name of a forbidden pattern through the top, if any.
    pub forbidden: Option<String>,
    pub pseudo_found: Option<bool>,
    pub tnorm_found: Option<bool>,
}

/// Sum-transfer facts for one ordered pair of lattices: left-continuous
/// t-norm existence moves across the ordinal sum exactly when the upper part
/// has one, and 1-distributivity of either kind of sum tracks the upper part.
#[derive(Debug, Clone)]
pub struct PairCheck {
    pub lower: String,
    pub upper: String,
    pub ordinal_has_lc_tnorm: Option<bool>,
    pub upper_has_lc_tnorm: Option<bool>,
    pub glued_one_distributive: bool,
    pub ordinal_one_distributive: bool,
    pub upper_one_distributive: bool,
}

#[derive(Debug, Clone)]
pub struct LawSuiteReport {
    pub rows: Vec<LawRow>,
    pub pair_checks: Vec<PairCheck>,
    /// Violated cross-implications; empty when the theory holds.
    pub counterexamples: Vec<String>,
    /// First lattice that is 1-distributive yet provably admits no
    /// commutative join-distributive pseudo-t-norm.
    pub converse_witness: Option<String>,
}

fn found_flag(outcome: &SearchOutcome) -> Option<bool> {
    match outcome.status {
        SearchStatus::Found => Some(true),
        SearchStatus::ExhaustedNone => Some(false),
        SearchStatus::BudgetExceeded => None,
    }
}

/// Classifies every lattice in scope, runs both searches on each, checks
/// sum transfer over a fixed pair set, and audits the expected implications
/// between all the answers.
pub fn run_law_suite(scope: LawScope, threads: usize) -> Result<LawSuiteReport, EnumError> {
    let lattices: Vec<(String, FiniteLattice)> = match scope {
        LawScope::Corpus => corpus::entries()
            .iter()
            .map(|e| (e.name.to_string(), e.build()))
            .collect(),
        LawScope::Enumerated(n) => enumerate_lattices(n, EnumFilters::default(), threads)?
            .into_iter()
            .enumerate()
            .map(|(i, l)| (format!("{n}#{i}"), l))
            .collect(),
    };
    let rows = run_indexed(threads, lattices.len(), |i| {
        let (name, l) = &lattices[i];
        let pseudo = exists_join_distributive_pseudo_tnorm(l, LAW_SUITE_NODE_BUDGET);
        let tnorm = exists_left_continuous_tnorm(l, LAW_SUITE_NODE_BUDGET);
        LawRow {
            name: name.clone(),
            n: l.n(),
            modular: is_modular(l).holds,
            distributive: is_distributive(l).holds,
            one_distributive: is_one_distributive(l).holds,
            atomistic: is_atomistic(l).holds,
            boolean: is_boolean(l).holds,
            rectangular: rectangular_pair(l).is_some(),
            forbidden: find_forbidden_1_sublattice(l).map(|w| w.law.to_string()),
            pseudo_found: found_flag(&pseudo),
            tnorm_found: found_flag(&tnorm),
        }
    });

    let pair_names = ["c2", "c3", "b2", "m3", "n5"];
    let pair_lattices: Vec<(&str, FiniteLattice)> = pair_names
        .iter()
        .map(|&n| (n, corpus::by_name(n).unwrap().build()))
        .collect();
    let pair_inputs: Vec<(usize, usize)> = (0..pair_lattices.len())
        .flat_map(|i| (0..pair_lattices.len()).map(move |j| (i, j)))
        .collect();
    let pair_checks = run_indexed(threads, pair_inputs.len(), |idx| {
        let (i, j) = pair_inputs[idx];
        let (lower_name, lower) = &pair_lattices[i];
        let (upper_name, upper) = &pair_lattices[j];
        let ordinal = lower.ordinal_sum(upper);
        let glued = lower.glued_sum(upper);
        PairCheck {
            lower: lower_name.to_string(),
            upper: upper_name.to_string(),
            ordinal_has_lc_tnorm: found_flag(&exists_left_continuous_tnorm(
                &ordinal,
                LAW_SUITE_NODE_BUDGET,
            )),
            upper_has_lc_tnorm: found_flag(&exists_left_continuous_tnorm(
                upper,
                LAW_SUITE_NODE_BUDGET,
            )),
            glued_one_distributive: is_one_distributive(&glued).holds,
            ordinal_one_distributive: is_one_distributive(&ordinal).holds,
            upper_one_distributive: is_one_distributive(upper).holds,
        }
    });

    let mut counterexamples = Vec::new();
    for r in &rows {
        if r.pseudo_found == Some(true) && !r.one_distributive {
            counterexamples.push(format!(
                "{}: a join-distributive pseudo-t-norm exists on a lattice that is not 1-distributive",
                r.name
            ));
        }
        if r.modular && (r.forbidden.is_none() != r.one_distributive) {
            counterexamples.push(format!(
                "{}: modular, but forbidden-pattern absence and 1-distributivity disagree",
                r.name
            ));
        }
        if r.distributive && r.pseudo_found == Some(false) {
            counterexamples.push(format!(
                "{}: distributive yet no join-distributive pseudo-t-norm found",
                r.name
            ));
        }
        if r.atomistic {
            let mut facts = vec![r.one_distributive, r.boolean];
            facts.extend(r.pseudo_found);
            facts.extend(r.tnorm_found);
            if facts.iter().any(|&f| f != facts[0]) {
                counterexamples.push(format!(
                    "{}: atomistic, but 1-distributivity, boolean structure and the searches disagree",
                    r.name
                ));
            }
        }
        if r.rectangular && r.modular {
            let mut facts = vec![r.one_distributive, r.distributive];
            facts.extend(r.pseudo_found);
            facts.extend(r.tnorm_found);
            if facts.iter().any(|&f| f != facts[0]) {
                counterexamples.push(format!(
                    "{}: rectangular modular, but 1-distributivity, distributivity and the searches disagree",
                    r.name
                ));
            }
        }
    }
    for p in &pair_checks {
        if let (Some(a), Some(b)) = (p.ordinal_has_lc_tnorm, p.upper_has_lc_tnorm) {
            if a != b {
                counterexamples.push(format!(
                    "{} atop {}: ordinal sum and upper part disagree on left-continuous t-norm existence",
                    p.upper, p.lower
                ));
            }
        }
        if p.glued_one_distributive != p.upper_one_distributive {
            counterexamples.push(format!(
                "{} atop {}: glued sum and upper part disagree on 1-distributivity",
                p.upper, p.lower
            ));
        }
        if p.ordinal_one_distributive != p.upper_one_distributive {
            counterexamples.push(format!(
                "{} atop {}: ordinal sum and upper part disagree on 1-distributivity",
                p.upper, p.lower
            ));
        }
    }
    let converse_witness = rows
        .iter()
        .find(|r| r.one_distributive && r.pseudo_found == Some(false))
        .map(|r| r.name.clone());

    Ok(LawSuiteReport {
        rows,
        pair_checks,
        counterexamples,
        converse_witness,
    })
}
