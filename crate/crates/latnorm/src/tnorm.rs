//! Binary operation tables over a finite lattice and the laws that make a
//! table a (pseudo-)t-norm: boundary behaviour, monotonicity, commutativity,
//! associativity, distributivity over joins/meets, and continuity with
//! respect to arbitrary subset joins/meets.
//!
//! Continuity is deliberately checked by two independent routes — a pairwise
//! scan and a full subset sweep — and the two are asserted to agree in tests
//! rather than one being defined in terms of the other.

use thiserror::Error;

use crate::analysis::{is_join_irreducible, is_meet_irreducible, is_modular, is_one_distributive};
use crate::analysis::{LawKind, Verdict, Witness};
use crate::iso::is_isomorphic;
use crate::lattice::{FiniteLattice, Interval};

/// Largest lattice size for which the exhaustive subset sweep is attempted
/// (the sweep enumerates all 2^n - 1 nonempty subsets).
pub const MAX_SUBSET_SWEEP: usize = 20;

/// A total binary operation on {0, .., n-1}, stored row-major. The table is
/// a bare value: it pairs with a lattice only at verification time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    n: usize,
    cells: Vec<usize>,
}

impl OpTable {
    pub fn filled(n: usize, value: usize) -> OpTable {
        OpTable {
            n,
            cells: vec![value; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> OpTable {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        OpTable { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[x * self.n + y] = v;
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TnormError {
    #[error("table is {table_n}x{table_n} but the lattice has {lattice_n} elements")]
    LatticeMismatch { table_n: usize, lattice_n: usize },
    #[error("subset sweep over {n} elements exceeds the limit of {max}")]
    SubsetSweepTooLarge { n: usize, max: usize },
    #[error("the up-set of `{at}` is not an upper summand: `{offender}` is incomparable to `{at}`")]
    NotAnOrdinalCut { at: String, offender: String },
    #[error("precondition failed: {clause}")]
    PreconditionFailed { clause: String },
    #[error("construction broke {law}: {detail}")]
    PostVerificationFailed { law: LawKind, detail: String },
}

fn ensure_match(l: &FiniteLattice, t: &OpTable) -> Result<(), TnormError> {
    if l.n() != t.n() {
        return Err(TnormError::LatticeMismatch {
            table_n: t.n(),
            lattice_n: l.n(),
        });
    }
    Ok(())
}

fn assert_match(l: &FiniteLattice, t: &OpTable) {
    assert_eq!(
        l.n(),
        t.n(),
        "operation table size does not match the lattice"
    );
}

/// Top is a left identity and bottom a left annihilator:
/// T(1, x) = x and T(0, x) = 0.
pub fn check_boundary(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    let (top, bot) = (l.top(), l.bottom());
    for x in l.elements() {
        if t.get(top, x) != x {
            return Verdict::fail(Witness {
                law: LawKind::Boundary,
                elements: vec![top, x],
                note: format!(
                    "T({}, {}) = {}, expected {}",
                    l.label(top),
                    l.label(x),
                    l.label(t.get(top, x)),
                    l.label(x),
                ),
            });
        }
        if t.get(bot, x) != bot {
            return Verdict::fail(Witness {
                law: LawKind::Boundary,
                elements: vec![bot, x],
                note: format!(
                    "T({}, {}) = {}, expected {}",
                    l.label(bot),
                    l.label(x),
                    l.label(t.get(bot, x)),
                    l.label(bot),
                ),
            });
        }
    }
    Verdict::pass()
}

/// Monotone in the second argument: y <= y' implies T(x, y) <= T(x, y').
pub fn check_monotone(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    for x in l.elements() {
        for y in l.elements() {
            for y2 in l.elements() {
                if l.le(y, y2) && !l.le(t.get(x, y), t.get(x, y2)) {
                    return Verdict::fail(Witness {
                        law: LawKind::Monotone,
                        elements: vec![x, y, y2],
                        note: format!(
                            "{} <= {} but T({}, {}) = {} is not below T({}, {}) = {}",
                            l.label(y),
                            l.label(y2),
                            l.label(x),
                            l.label(y),
                            l.label(t.get(x, y)),
                            l.label(x),
                            l.label(y2),
                            l.label(t.get(x, y2)),
                        ),
                    });
                }
            }
        }
    }
    Verdict::pass()
}

pub fn check_commutative(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    for x in l.elements() {
        for y in x + 1..l.n() {
            if t.get(x, y) != t.get(y, x) {
                return Verdict::fail(Witness {
                    law: LawKind::Commutative,
                    elements: vec![x, y],
                    note: format!(
                        "T({}, {}) = {} but T({}, {}) = {}",
                        l.label(x),
                        l.label(y),
                        l.label(t.get(x, y)),
                        l.label(y),
                        l.label(x),
                        l.label(t.get(y, x)),
                    ),
                });
            }
        }
    }
    Verdict::pass()
}

/// T(x, y) <= x ∧ y everywhere.
pub fn check_below_meet(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    for x in l.elements() {
        for y in l.elements() {
            if !l.le(t.get(x, y), l.meet(x, y)) {
                return Verdict::fail(Witness {
                    law: LawKind::BelowMeet,
                    elements: vec![x, y],
                    note: format!(
                        "T({}, {}) = {} is not below {} ∧ {} = {}",
                        l.label(x),
                        l.label(y),
                        l.label(t.get(x, y)),
                        l.label(x),
                        l.label(y),
                        l.label(l.meet(x, y)),
                    ),
                });
            }
        }
    }
    Verdict::pass()
}

/// Top is a right identity: T(x, 1) = x.
pub fn check_neutral(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    let top = l.top();
    for x in l.elements() {
        if t.get(x, top) != x {
            return Verdict::fail(Witness {
                law: LawKind::Neutral,
                elements: vec![x],
                note: format!(
                    "T({}, {}) = {}, expected {}",
                    l.label(x),
                    l.label(top),
                    l.label(t.get(x, top)),
                    l.label(x),
                ),
            });
        }
    }
    Verdict::pass()
}

pub fn check_associative(l: &FiniteLattice, t: &OpTable) -> Verdict {
    assert_match(l, t);
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let lhs = t.get(t.get(x, y), z);
                let rhs = t.get(x, t.get(y, z));
                if lhs != rhs {
                    return Verdict::fail(Witness {
                        law: LawKind::Associative,
                        elements: vec![x, y, z],
                        note: format!(
                            "T(T({x}, {y}), {z}) = {lhs} but T({x}, T({y}, {z})) = {rhs}",
                            x = l.label(x),
                            y = l.label(y),
                            z = l.label(z),
                            lhs = l.label(lhs),
                            rhs = l.label(rhs),
                        ),
                    });
                }
            }
        }
    }
    Verdict::pass()
}

fn check_pair_distributive(l: &FiniteLattice, t: &OpTable, law: LawKind) -> Verdict {
    assert_match(l, t);
    let over_join = matches!(law, LawKind::JoinDistributive | LawKind::LeftContinuous);
    let (word, combine): (&str, fn(&FiniteLattice, usize, usize) -> usize) = if over_join {
        ("∨", |l, x, y| l.join(x, y))
    } else {
        ("∧", |l, x, y| l.meet(x, y))
    };
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let lhs = t.get(x, combine(l, y, z));
                let rhs = combine(l, t.get(x, y), t.get(x, z));
                if lhs != rhs {
                    return Verdict::fail(Witness {
                        law,
                        elements: vec![x, y, z],
                        note: format!(
                            "T({x}, {y} {word} {z}) = {lhs} but T({x}, {y}) {word} T({x}, {z}) = {rhs}",
                            x = l.label(x),
                            y = l.label(y),
                            z = l.label(z),
                            lhs = l.label(lhs),
                            rhs = l.label(rhs),
                        ),
                    });
                }
            }
        }
    }
    Verdict::pass()
}

/// T(x, y ∨ z) = T(x, y) ∨ T(x, z) for all x, y, z.
pub fn check_join_distributive(l: &FiniteLattice, t: &OpTable) -> Verdict {
    check_pair_distributive(l, t, LawKind::JoinDistributive)
}

/// T(x, y ∧ z) = T(x, y) ∧ T(x, z) for all x, y, z.
pub fn check_meet_distributive(l: &FiniteLattice, t: &OpTable) -> Verdict {
    check_pair_distributive(l, t, LawKind::MeetDistributive)
}

/// Left-continuity probed on two-element subsets only.
pub fn check_left_continuous_pairwise(l: &FiniteLattice, t: &OpTable) -> Verdict {
    check_pair_distributive(l, t, LawKind::LeftContinuous)
}

/// Right-continuity probed on two-element subsets only.
pub fn check_right_continuous_pairwise(l: &FiniteLattice, t: &OpTable) -> Verdict {
    check_pair_distributive(l, t, LawKind::RightContinuous)
}

fn check_subset_sweep(l: &FiniteLattice, t: &OpTable, law: LawKind) -> Result<Verdict, TnormError> {
    ensure_match(l, t)?;
    let n = l.n();
    if n > MAX_SUBSET_SWEEP {
        return Err(TnormError::SubsetSweepTooLarge {
            n,
            max: MAX_SUBSET_SWEEP,
        });
    }
    let over_join = matches!(law, LawKind::LeftContinuous);
    let combine = |x: usize, y: usize| {
        if over_join {
            l.join(x, y)
        } else {
            l.meet(x, y)
        }
    };
    let word = if over_join { "∨" } else { "∧" };
    let masks = 1usize << n;
    // bound[m] = fold of the subset encoded by mask m (join or meet).
    let mut bound = vec![0usize; masks];
    for m in 1..masks {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        bound[m] = if rest == 0 {
            low
        } else {
            combine(bound[rest], low)
        };
    }
    let mut folded = vec![0usize; masks];
    for x in l.elements() {
        for m in 1..masks {
            let low = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            let tv = t.get(x, low);
            folded[m] = if rest == 0 {
                tv
            } else {
                combine(folded[rest], tv)
            };
            let lhs = t.get(x, bound[m]);
            if lhs != folded[m] {
                let subset: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                let mut elements = vec![x];
                elements.extend_from_slice(&subset);
                let listing: Vec<&str> = subset.iter().map(|&s| l.label(s)).collect();
                return Ok(Verdict::fail(Witness {
                    law,
                    elements,
                    note: format!(
                        "for S = {{{}}}: T({}, {}S) = {} but {}ᵢ T({}, sᵢ) = {}",
                        listing.join(", "),
                        l.label(x),
                        word,
                        l.label(lhs),
                        word,
                        l.label(x),
                        l.label(folded[m]),
                    ),
                }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Left-continuity over every nonempty subset: T(x, ∨S) = ∨ {T(x, s)}.
/// Refuses lattices larger than [`MAX_SUBSET_SWEEP`].
pub fn check_left_continuous_subsets(
    l: &FiniteLattice,
    t: &OpTable,
) -> Result<Verdict, TnormError> {
    check_subset_sweep(l, t, LawKind::LeftContinuous)
}

/// Right-continuity over every nonempty subset: T(x, ∧S) = ∧ {T(x, s)}.
pub fn check_right_continuous_subsets(
    l: &FiniteLattice,
    t: &OpTable,
) -> Result<Verdict, TnormError> {
    check_subset_sweep(l, t, LawKind::RightContinuous)
}

/// Continuity verdicts from the two independent routes. `subset` is `None`
/// when the lattice is too large for the exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityReport {
    pub pairwise: Verdict,
    pub subset: Option<Verdict>,
}

impl ContinuityReport {
    /// Overall verdict; on swept lattices both routes must agree anyway.
    pub fn holds(&self) -> bool {
        self.pairwise.holds && self.subset.as_ref().is_none_or(|v| v.holds)
    }
}

pub fn verify_left_continuous(
    l: &FiniteLattice,
    t: &OpTable,
) -> Result<ContinuityReport, TnormError> {
    ensure_match(l, t)?;
    let subset = if l.n() <= MAX_SUBSET_SWEEP {
        Some(check_left_continuous_subsets(l, t)?)
    } else {
        None
    };
    Ok(ContinuityReport {
        pairwise: check_left_continuous_pairwise(l, t),
        subset,
    })
}

pub fn verify_right_continuous(
    l: &FiniteLattice,
    t: &OpTable,
) -> Result<ContinuityReport, TnormError> {
    ensure_match(l, t)?;
    let subset = if l.n() <= MAX_SUBSET_SWEEP {
        Some(check_right_continuous_subsets(l, t)?)
    } else {
        None
    };
    Ok(ContinuityReport {
        pairwise: check_right_continuous_pairwise(l, t),
        subset,
    })
}

/// Law-by-law verdicts for one table. `neutral` and `associative` are filled
/// only by the full t-norm check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub boundary: Verdict,
    pub monotone: Verdict,
    pub commutative: Verdict,
    pub below_meet: Verdict,
    pub neutral: Option<Verdict>,
    pub associative: Option<Verdict>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.boundary.holds
            && self.monotone.holds
            && self.commutative.holds
            && self.below_meet.holds
            && self.neutral.as_ref().is_none_or(|v| v.holds)
            && self.associative.as_ref().is_none_or(|v| v.holds)
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        let slots = [
            Some(&self.boundary),
            Some(&self.monotone),
            Some(&self.commutative),
            Some(&self.below_meet),
            self.neutral.as_ref(),
            self.associative.as_ref(),
        ];
        slots
            .into_iter()
            .flatten()
            .find(|v| !v.holds)
            .and_then(|v| v.witness.as_ref())
    }
}

/// Checks the pseudo-t-norm laws: boundary, second-argument monotonicity,
/// commutativity, and (redundantly, as a safety net) domination by the meet.
pub fn verify_pseudo_tnorm(
    l: &FiniteLattice,
    t: &OpTable,
) -> Result<VerificationReport, TnormError> {
    ensure_match(l, t)?;
    Ok(VerificationReport {
        boundary: check_boundary(l, t),
        monotone: check_monotone(l, t),
        commutative: check_commutative(l, t),
        below_meet: check_below_meet(l, t),
        neutral: None,
        associative: None,
    })
}

/// Checks the full t-norm laws: the pseudo-t-norm laws plus a two-sided
/// neutral top and associativity.
pub fn verify_tnorm(l: &FiniteLattice, t: &OpTable) -> Result<VerificationReport, TnormError> {
    let mut report = verify_pseudo_tnorm(l, t)?;
    report.neutral = Some(check_neutral(l, t));
    report.associative = Some(check_associative(l, t));
    Ok(report)
}

/// The meet itself, the strongest t-norm.
pub fn t_meet(l: &FiniteLattice) -> OpTable {
    OpTable::from_fn(l.n(), |x, y| l.meet(x, y))
}

/// The weakest t-norm: x ∧ y when the top is involved, bottom otherwise.
pub fn t_weakest(l: &FiniteLattice) -> OpTable {
    let (top, bot) = (l.top(), l.bottom());
    OpTable::from_fn(l.n(), |x, y| {
        if x == top {
            y
        } else if y == top {
            x
        } else {
            bot
        }
    })
}

/// Combines tables on two lattices into a table on their glued sum (top of
/// the first identified with the bottom of the second): pairs inside either
/// summand use that summand's table, mixed pairs take the meet. The result
/// is returned unverified.
pub fn glued_combine(
    l1: &FiniteLattice,
    l2: &FiniteLattice,
    t1: &OpTable,
    t2: &OpTable,
) -> Result<(FiniteLattice, OpTable), TnormError> {
    ensure_match(l1, t1)?;
    ensure_match(l2, t2)?;
    let (sum, from_left, from_right) = l1.glued_sum_parts(l2);
    let mut in_left = vec![None; sum.n()];
    let mut in_right = vec![None; sum.n()];
    for (i, &s) in from_left.iter().enumerate() {
        in_left[s] = Some(i);
    }
    for (i, &s) in from_right.iter().enumerate() {
        in_right[s] = Some(i);
    }
    let table = OpTable::from_fn(sum.n(), |x, y| {
        if let (Some(a), Some(b)) = (in_left[x], in_left[y]) {
            from_left[t1.get(a, b)]
        } else if let (Some(a), Some(b)) = (in_right[x], in_right[y]) {
            from_right[t2.get(a, b)]
        } else {
            sum.meet(x, y)
        }
    });
    Ok((sum, table))
}

/// Restricts a table to the up-set of `b`, clamping values that fall outside
/// back to `b`. Requires the up-set of `b` to be an upper summand of the
/// lattice (every element is comparable to `b`). The projected table is
/// returned unverified.
pub fn project_tstar(
    l: &FiniteLattice,
    b: usize,
    t: &OpTable,
) -> Result<(Interval, OpTable), TnormError> {
    ensure_match(l, t)?;
    if let Some(offender) = l.elements().find(|&x| !l.comparable(x, b)) {
        return Err(TnormError::NotAnOrdinalCut {
            at: l.label(b).to_string(),
            offender: l.label(offender).to_string(),
        });
    }
    let interval = l
        .interval(b, l.top())
        .expect("b is below the top, so the interval is nonempty");
    let bpos = interval
        .position_of(b)
        .expect("the cut element belongs to its own up-set");
    let table = OpTable::from_fn(interval.members.len(), |xi, yi| {
        let v = t.get(interval.members[xi], interval.members[yi]);
        interval.position_of(v).unwrap_or(bpos)
    });
    Ok((interval, table))
}

/// Builds a commutative join-distributive pseudo-t-norm from two anchor
/// elements a and b of a suitable lattice.
///
/// Requirements: a and b are doubly irreducible and join to the top, the
/// interval from a ∧ b to the top splits as the product of the two anchor
/// intervals, and the lattice is modular and 1-distributive.
///
/// With H the complement of the up-set of b and H' the part of H not below
/// b, the table is: bottom when one argument is strictly below b and the
/// other lies in H; a ∧ x ∧ y when both arguments lie in H'; x ∧ y
/// otherwise. The result is re-verified law by law before being returned.
pub fn construct_planar(
    l: &FiniteLattice,
    a: usize,
    b: usize,
) -> Result<OpTable, TnormError> {
    for (anchor, name) in [(a, "first"), (b, "second")] {
        if !(is_join_irreducible(l, anchor) && is_meet_irreducible(l, anchor)) {
            return Err(TnormError::PreconditionFailed {
                clause: format!(
                    "the {name} anchor `{}` is not doubly irreducible",
                    l.label(anchor)
                ),
            });
        }
    }
    if l.join(a, b) != l.top() {
        return Err(TnormError::PreconditionFailed {
            clause: format!(
                "the anchors `{}` and `{}` do not join to the top",
                l.label(a),
                l.label(b)
            ),
        });
    }
    let z = l.meet(a, b);
    let full = l.interval(z, l.top()).expect("z is below the top");
    let ia = l.interval(z, a).expect("z = a ∧ b is below a");
    let ib = l.interval(z, b).expect("z = a ∧ b is below b");
    let product = ia.lattice.direct_product(&ib.lattice);
    if is_isomorphic(&full.lattice, &product).is_none() {
        return Err(TnormError::PreconditionFailed {
            clause: format!(
                "the interval [{} ∧ {}, top] does not split as the product of the anchor intervals",
                l.label(a),
                l.label(b)
            ),
        });
    }
    if !is_modular(l).holds {
        return Err(TnormError::PreconditionFailed {
            clause: "the lattice is not modular".to_string(),
        });
    }
    if !is_one_distributive(l).holds {
        return Err(TnormError::PreconditionFailed {
            clause: "the lattice is not 1-distributive".to_string(),
        });
    }

    let bot = l.bottom();
    let outside: Vec<bool> = l.elements().map(|x| !l.le(b, x)).collect();
    let below_b: Vec<bool> = l.elements().map(|x| l.lt(x, b)).collect();
    let side: Vec<bool> = l
        .elements()
        .map(|x| outside[x] && !below_b[x])
        .collect();
    let table = OpTable::from_fn(l.n(), |x, y| {
        if (below_b[x] && outside[y]) || (outside[x] && below_b[y]) {
            bot
        } else if side[x] && side[y] {
            l.meet(a, l.meet(x, y))
        } else {
            l.meet(x, y)
        }
    });

    for (law, verdict) in [
        (LawKind::Boundary, check_boundary(l, &table)),
        (LawKind::Monotone, check_monotone(l, &table)),
        (LawKind::Commutative, check_commutative(l, &table)),
        (
            LawKind::JoinDistributive,
            check_join_distributive(l, &table),
        ),
        (LawKind::BelowMeet, check_below_meet(l, &table)),
    ] {
        if let Some(w) = verdict.witness {
            return Err(TnormError::PostVerificationFailed {
                law,
                detail: format!("{} at {}", w.note, l.tuple(&w.elements)),
            });
        }
    }
    Ok(table)
}

/// Re-evaluates a table-law witness from scratch. Returns true when the
/// witness still demonstrates a genuine violation of its law.
pub fn reverify_table(l: &FiniteLattice, t: &OpTable, w: &Witness) -> bool {
    if l.n() != t.n() {
        return false;
    }
    let e = &w.elements;
    match &w.law {
        LawKind::Boundary => {
            e.len() == 2
                && ((e[0] == l.top() && t.get(e[0], e[1]) != e[1])
                    || (e[0] == l.bottom() && t.get(e[0], e[1]) != l.bottom()))
        }
        LawKind::Monotone => {
            e.len() == 3 && l.le(e[1], e[2]) && !l.le(t.get(e[0], e[1]), t.get(e[0], e[2]))
        }
        LawKind::Commutative => e.len() == 2 && t.get(e[0], e[1]) != t.get(e[1], e[0]),
        LawKind::BelowMeet => e.len() == 2 && !l.le(t.get(e[0], e[1]), l.meet(e[0], e[1])),
        LawKind::Neutral => e.len() == 1 && t.get(e[0], l.top()) != e[0],
        LawKind::Associative => {
            e.len() == 3
                && t.get(t.get(e[0], e[1]), e[2]) != t.get(e[0], t.get(e[1], e[2]))
        }
        LawKind::JoinDistributive => {
            e.len() == 3
                && t.get(e[0], l.join(e[1], e[2]))
                    != l.join(t.get(e[0], e[1]), t.get(e[0], e[2]))
        }
        LawKind::MeetDistributive => {
            e.len() == 3
                && t.get(e[0], l.meet(e[1], e[2]))
                    != l.meet(t.get(e[0], e[1]), t.get(e[0], e[2]))
        }
        // The witness carries x followed by the subset S; both the pairwise
        // and the sweep routes produce witnesses of this shape.
        LawKind::LeftContinuous => {
            e.len() >= 2 && {
                let x = e[0];
                let s = &e[1..];
                t.get(x, l.join_all(s.iter().copied()))
                    != l.join_all(s.iter().map(|&si| t.get(x, si)))
            }
        }
        LawKind::RightContinuous => {
            e.len() >= 2 && {
                let x = e[0];
                let s = &e[1..];
                t.get(x, l.meet_all(s.iter().copied()))
                    != l.meet_all(s.iter().map(|&si| t.get(x, si)))
            }
        }
        _ => false,
    }
}
