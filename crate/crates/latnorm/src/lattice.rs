//! Finite bounded lattices as immutable, index-based values.
//!
//! Elements are `usize` indices into a label list; the order relation is a
//! dense `n x n` boolean matrix and meet/join are dense `n x n` index tables,
//! all computed and validated eagerly at construction time. Every public
//! constructor either returns a genuine lattice or an error — there is no
//! partially-valid state.

use std::fmt;
use thiserror::Error;

/// Which bound was missing when a poset failed lattice validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Join => write!(f, "least upper bound"),
            BoundKind::Meet => write!(f, "greatest lower bound"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty element list")]
    Empty,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`: labels must be non-empty, free of whitespace, and not start with `#`")]
    InvalidLabel(String),
    #[error("unknown label `{0}` in cover list")]
    UnknownLabel(String),
    #[error("order relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("not a lattice: `{x}` and `{y}` have no unique {kind}")]
    NotALattice { kind: BoundKind, x: String, y: String },
    #[error("empty interval: `{lo}` is not below `{hi}`")]
    IntervalEmpty { lo: String, hi: String },
    #[error("({lo}, {x}, {y}, {hi}) is not a covering square")]
    NotACoveringSquare {
        lo: String,
        x: String,
        y: String,
        hi: String,
    },
}

/// A finite bounded lattice. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    /// `leq[x * n + y]` iff x <= y. Reflexive, antisymmetric, transitive.
    leq: Vec<bool>,
    /// Transitive reduction of the strict order, sorted by (lower, upper).
    covers: Vec<(usize, usize)>,
    /// `meet[x * n + y]` = greatest lower bound of x and y.
    meet: Vec<usize>,
    /// `join[x * n + y]` = least upper bound of x and y.
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    /// Longest-chain length from bottom, per element.
    height: Vec<usize>,
}

impl FiniteLattice {
    /// Builds a lattice from labels and generating pairs `x < y`.
    ///
    /// The pair list generates the order; the stored cover set is the
    /// transitive reduction of the generated relation, so redundant pairs are
    /// normalized away. Element indices follow label order.
    pub fn build_from_covers<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
    ) -> Result<FiniteLattice, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for l in &labels {
            if l.is_empty() || l.contains(char::is_whitespace) || l.starts_with('#') {
                return Err(LatticeError::InvalidLabel(l.clone()));
            }
        }
        let mut index = std::collections::HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }

        // Strict relation from the generators, then transitive closure.
        let mut strict = vec![false; n * n];
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let &x = index
                .get(a)
                .ok_or_else(|| LatticeError::UnknownLabel(a.to_string()))?;
            let &y = index
                .get(b)
                .ok_or_else(|| LatticeError::UnknownLabel(b.to_string()))?;
            strict[x * n + y] = true;
        }
        for k in 0..n {
            for x in 0..n {
                if strict[x * n + k] {
                    for y in 0..n {
                        if strict[k * n + y] {
                            strict[x * n + y] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            if strict[x * n + x] {
                return Err(LatticeError::CycleDetected(labels[x].clone()));
            }
        }
        let mut leq = strict;
        for x in 0..n {
            leq[x * n + x] = true;
        }

        Self::from_leq(labels, leq)
    }

    /// Builds from a full (already reflexive-transitive, acyclic) order matrix.
    fn from_leq(labels: Vec<String>, leq: Vec<bool>) -> Result<FiniteLattice, LatticeError> {
        let n = labels.len();
        let le = |x: usize, y: usize| leq[x * n + y];

        // Pairwise bounds; a finite poset with all pairwise bounds is a
        // bounded lattice.
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let j = Self::least_of(n, &leq, |z| le(x, z) && le(y, z)).ok_or_else(|| {
                    LatticeError::NotALattice {
                        kind: BoundKind::Join,
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                    }
                })?;
                let m = Self::greatest_of(n, &leq, |z| le(z, x) && le(z, y)).ok_or_else(|| {
                    LatticeError::NotALattice {
                        kind: BoundKind::Meet,
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                    }
                })?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..n {
            bottom = meet[bottom * n + x];
            top = join[top * n + x];
        }

        // Transitive reduction: x ≺ y iff x < y with nothing strictly between.
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && le(x, y) {
                    let direct = (0..n).all(|z| z == x || z == y || !(le(x, z) && le(z, y)));
                    if direct {
                        covers.push((x, y));
                    }
                }
            }
        }
        covers.sort_unstable();

        // Longest chain from bottom; relax in ascending down-set-size order.
        let mut order: Vec<usize> = (0..n).collect();
        let dsize: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&z| le(z, x)).count())
            .collect();
        order.sort_by_key(|&x| dsize[x]);
        let mut height = vec![0usize; n];
        for &y in &order {
            for &(x, y2) in &covers {
                if y2 == y {
                    height[y] = height[y].max(height[x] + 1);
                }
            }
        }

        Ok(FiniteLattice {
            labels,
            leq,
            covers,
            meet,
            join,
            bottom,
            top,
            height,
        })
    }

    fn least_of(n: usize, leq: &[bool], pred: impl Fn(usize) -> bool) -> Option<usize> {
        let members: Vec<usize> = (0..n).filter(|&z| pred(z)).collect();
        members
            .iter()
            .copied()
            .find(|&c| members.iter().all(|&w| leq[c * n + w]))
    }

    fn greatest_of(n: usize, leq: &[bool], pred: impl Fn(usize) -> bool) -> Option<usize> {
        let members: Vec<usize> = (0..n).filter(|&z| pred(z)).collect();
        members
            .iter()
            .copied()
            .find(|&c| members.iter().all(|&w| leq[w * n + c]))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Renders an element tuple as `(a, b, c)` for messages.
    pub fn tuple(&self, xs: &[usize]) -> String {
        let parts: Vec<&str> = xs.iter().map(|&x| self.label(x)).collect();
        format!("({})", parts.join(", "))
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n() + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n() + y]
    }

    /// Join over any element iterator; the empty join is bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    /// Meet over any element iterator; the empty meet is top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, u)| u == x)
            .map(|&(l, _)| l)
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(l, _)| l == x)
            .map(|&(_, u)| u)
            .collect()
    }

    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&z| self.le(z, x)).collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&z| self.le(x, z)).collect()
    }

    /// The n-element chain with labels "0".."n-1".
    pub fn chain(n: usize) -> FiniteLattice {
        assert!(n >= 1, "chain requires at least one element");
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        FiniteLattice::build_from_covers(&labels, &covers)
            .expect("a chain is a lattice")
    }

    /// The boolean lattice 2^k with k-digit binary labels ("00".."11" for k=2)
    /// ordered by bitwise inclusion. k = 0 gives the one-element lattice.
    pub fn boolean_lattice(k: u32) -> FiniteLattice {
        assert!(k <= 16, "boolean_lattice supports k <= 16");
        let n = 1usize << k;
        let fmt_bits = |m: usize| -> String {
            if k == 0 {
                "1".to_string()
            } else {
                (0..k).rev().map(|b| if m >> b & 1 == 1 { '1' } else { '0' }).collect()
            }
        };
        let labels: Vec<String> = (0..n).map(fmt_bits).collect();
        let mut covers = Vec::new();
        for m in 0..n {
            for b in 0..k {
                if m >> b & 1 == 0 {
                    covers.push((labels[m].clone(), labels[m | 1 << b].clone()));
                }
            }
        }
        FiniteLattice::build_from_covers(&labels, &covers)
            .expect("a boolean cube is a lattice")
    }

    /// Ordinal sum: every element of `self` below every element of `other`.
    /// Labels are prefixed "l." / "r.".
    pub fn ordinal_sum(&self, other: &FiniteLattice) -> FiniteLattice {
        self.ordinal_sum_parts(other).0
    }

    /// Ordinal sum together with the index embeddings of both summands.
    pub fn ordinal_sum_parts(
        &self,
        other: &FiniteLattice,
    ) -> (FiniteLattice, Vec<usize>, Vec<usize>) {
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("l.{l}")).collect();
        labels.extend(other.labels.iter().map(|l| format!("r.{l}")));
        let mut covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(x, y)| (format!("l.{}", self.label(x)), format!("l.{}", self.label(y))))
            .collect();
        covers.extend(other.covers.iter().map(|&(x, y)| {
            (
                format!("r.{}", other.label(x)),
                format!("r.{}", other.label(y)),
            )
        }));
        covers.push((
            format!("l.{}", self.label(self.top)),
            format!("r.{}", other.label(other.bottom)),
        ));
        let sum = FiniteLattice::build_from_covers(&labels, &covers)
            .expect("an ordinal sum of lattices is a lattice");
        let from_left: Vec<usize> = self
            .labels
            .iter()
            .map(|l| sum.index_of(&format!("l.{l}")).unwrap())
            .collect();
        let from_right: Vec<usize> = other
            .labels
            .iter()
            .map(|l| sum.index_of(&format!("r.{l}")).unwrap())
            .collect();
        (sum, from_left, from_right)
    }

    /// Glued sum: the top of `self` is identified with the bottom of `other`
    /// (keeping the left label), sizes |L1| + |L2| - 1.
    pub fn glued_sum(&self, other: &FiniteLattice) -> FiniteLattice {
        self.glued_sum_parts(other).0
    }

    /// Glued sum together with the index embeddings of both summands.
    pub fn glued_sum_parts(
        &self,
        other: &FiniteLattice,
    ) -> (FiniteLattice, Vec<usize>, Vec<usize>) {
        let shared = format!("l.{}", self.label(self.top));
        let right_label = |x: usize| -> String {
            if x == other.bottom {
                shared.clone()
            } else {
                format!("r.{}", other.label(x))
            }
        };
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("l.{l}")).collect();
        labels.extend(
            other
                .elements()
                .filter(|&x| x != other.bottom)
                .map(|x| right_label(x)),
        );
        let mut covers: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(x, y)| (format!("l.{}", self.label(x)), format!("l.{}", self.label(y))))
            .collect();
        covers.extend(
            other
                .covers
                .iter()
                .map(|&(x, y)| (right_label(x), right_label(y))),
        );
        let sum = FiniteLattice::build_from_covers(&labels, &covers)
            .expect("a glued sum of lattices is a lattice");
        let from_left: Vec<usize> = self
            .labels
            .iter()
            .map(|l| sum.index_of(&format!("l.{l}")).unwrap())
            .collect();
        let from_right: Vec<usize> = other
            .elements()
            .map(|x| sum.index_of(&right_label(x)).unwrap())
            .collect();
        (sum, from_left, from_right)
    }

    /// Direct product with componentwise order; labels "(a,b)".
    pub fn direct_product(&self, other: &FiniteLattice) -> FiniteLattice {
        let n2 = other.n();
        let label = |i: usize, j: usize| format!("({},{})", self.label(i), other.label(j));
        let mut labels = Vec::with_capacity(self.n() * n2);
        for i in self.elements() {
            for j in other.elements() {
                labels.push(label(i, j));
            }
        }
        // Component covers generate the product order.
        let mut covers = Vec::new();
        for &(x, y) in &self.covers {
            for j in other.elements() {
                covers.push((label(x, j), label(y, j)));
            }
        }
        for &(x, y) in &other.covers {
            for i in self.elements() {
                covers.push((label(i, x), label(i, y)));
            }
        }
        FiniteLattice::build_from_covers(&labels, &covers)
            .expect("a direct product of lattices is a lattice")
    }

    /// Order dual: same labels, reversed order, meet and join swapped.
    pub fn dual(&self) -> FiniteLattice {
        let n = self.n();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.leq[y * n + x];
            }
        }
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        covers.sort_unstable();
        let mut height = vec![0usize; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&z| leq[z * n + x]).count());
        for &y in &order {
            for &(x, y2) in &covers {
                if y2 == y {
                    height[y] = height[y].max(height[x] + 1);
                }
            }
        }
        FiniteLattice {
            labels: self.labels.clone(),
            leq,
            covers,
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
            height,
        }
    }

    /// The interval [lo, hi] as an induced sublattice.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<Interval, LatticeError> {
        if !self.le(lo, hi) {
            return Err(LatticeError::IntervalEmpty {
                lo: self.label(lo).to_string(),
                hi: self.label(hi).to_string(),
            });
        }
        let members: Vec<usize> = self
            .elements()
            .filter(|&z| self.le(lo, z) && self.le(z, hi))
            .collect();
        let labels: Vec<String> = members.iter().map(|&m| self.labels[m].clone()).collect();
        let mut pairs = Vec::new();
        for &x in &members {
            for &y in &members {
                if self.lt(x, y) {
                    pairs.push((self.labels[x].clone(), self.labels[y].clone()));
                }
            }
        }
        let lattice = FiniteLattice::build_from_covers(&labels, &pairs)
            .expect("an interval of a lattice is a lattice");
        Ok(Interval {
            lo,
            hi,
            members,
            lattice,
        })
    }

    /// Adds a doubly irreducible element ("eye") inside the covering square
    /// (lo, x, y, hi): requires lo ≺ x ≺ hi, lo ≺ y ≺ hi, x∧y = lo, x∨y = hi.
    pub fn add_eye(&self, square: (usize, usize, usize, usize)) -> Result<FiniteLattice, LatticeError> {
        let (lo, x, y, hi) = square;
        let is_cover = |a: usize, b: usize| self.covers.binary_search(&(a, b)).is_ok();
        let ok = x != y
            && is_cover(lo, x)
            && is_cover(x, hi)
            && is_cover(lo, y)
            && is_cover(y, hi)
            && self.meet(x, y) == lo
            && self.join(x, y) == hi;
        if !ok {
            return Err(LatticeError::NotACoveringSquare {
                lo: self.label(lo).to_string(),
                x: self.label(x).to_string(),
                y: self.label(y).to_string(),
                hi: self.label(hi).to_string(),
            });
        }
        let mut eye = String::new();
        for k in 0.. {
            eye = format!("eye{k}");
            if self.index_of(&eye).is_none() {
                break;
            }
        }
        let mut labels = self.labels.clone();
        labels.push(eye.clone());
        let mut pairs: Vec<(String, String)> = self
            .covers
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect();
        pairs.push((self.labels[lo].clone(), eye.clone()));
        pairs.push((eye, self.labels[hi].clone()));
        Ok(FiniteLattice::build_from_covers(&labels, &pairs)
            .expect("adding an eye to a covering square keeps the poset a lattice"))
    }
}

/// An interval [lo, hi] of a parent lattice: parent indices plus the induced
/// sublattice (which keeps the parent's labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    /// Ascending parent indices; `members[i]` is interval element `i`.
    pub members: Vec<usize>,
    pub lattice: FiniteLattice,
}

impl Interval {
    /// Interval index of a parent element, if it lies in the interval.
    pub fn position_of(&self, parent_index: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == parent_index)
    }
}
