//! A small corpus of named example lattices used by the CLI, the law suite,
//! and the test fixtures. Each entry is stored as static cover data and
//! rebuilt on demand.

use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// What the lattice is, in one sentence.
    pub provenance: &'static str,
    labels: &'static [&'static str],
    covers: &'static [(&'static str, &'static str)],
}

impl CorpusEntry {
    pub fn build(&self) -> FiniteLattice {
        FiniteLattice::build_from_covers(self.labels, self.covers)
            .expect("corpus entries are lattices")
    }
}

static ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "c2",
        provenance: "two-element chain",
        labels: &["0", "1"],
        covers: &[("0", "1")],
    },
    CorpusEntry {
        name: "c3",
        provenance: "three-element chain",
        labels: &["0", "1", "2"],
        covers: &[("0", "1"), ("1", "2")],
    },
    CorpusEntry {
        name: "c4",
        provenance: "four-element chain",
        labels: &["0", "1", "2", "3"],
        covers: &[("0", "1"), ("1", "2"), ("2", "3")],
    },
    CorpusEntry {
        name: "c5",
        provenance: "five-element chain",
        labels: &["0", "1", "2", "3", "4"],
        covers: &[("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")],
    },
    CorpusEntry {
        name: "b2",
        provenance: "four-element boolean lattice (two atoms)",
        labels: &["0", "p", "q", "1"],
        covers: &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
    },
    CorpusEntry {
        name: "b3",
        provenance: "eight-element boolean lattice (three atoms)",
        labels: &["0", "a", "b", "c", "ab", "ac", "bc", "1"],
        covers: &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "ab"),
            ("a", "ac"),
            ("b", "ab"),
            ("b", "bc"),
            ("c", "ac"),
            ("c", "bc"),
            ("ab", "1"),
            ("ac", "1"),
            ("bc", "1"),
        ],
    },
    CorpusEntry {
        name: "n5",
        provenance: "pentagon, the smallest non-modular lattice",
        labels: &["0", "a", "b", "c", "1"],
        covers: &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    },
    CorpusEntry {
        name: "m3",
        provenance: "diamond: three incomparable elements between bottom and top",
        labels: &["0", "a", "b", "c", "1"],
        covers: &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    },
    CorpusEntry {
        name: "m3_2",
        provenance: "seven-element modular obstruction to 1-distributivity \
                     containing no diamond through the top",
        labels: &["0", "p", "q", "r", "t", "w", "1"],
        covers: &[
            ("0", "p"),
            ("0", "q"),
            ("0", "r"),
            ("p", "w"),
            ("p", "t"),
            ("q", "t"),
            ("r", "t"),
            ("w", "1"),
            ("t", "1"),
        ],
    },
    CorpusEntry {
        name: "m3_4",
        provenance: "ten-element modular obstruction to 1-distributivity \
                     containing neither smaller obstruction through the top",
        labels: &["0", "p", "q", "r", "t", "wl", "wr", "sl", "sr", "1"],
        covers: &[
            ("0", "p"),
            ("0", "q"),
            ("0", "r"),
            ("p", "wl"),
            ("p", "t"),
            ("q", "t"),
            ("r", "t"),
            ("r", "wr"),
            ("wl", "sl"),
            ("t", "sl"),
            ("t", "sr"),
            ("wr", "sr"),
            ("sl", "1"),
            ("sr", "1"),
        ],
    },
    CorpusEntry {
        name: "s72",
        provenance: "nine-element non-modular lattice admitting no commutative \
                     join-distributive pseudo-t-norm; element d fails \
                     1-distributivity against the pair (m, v)",
        labels: &["0", "m", "n", "d", "b", "c", "u", "v", "1"],
        covers: &[
            ("0", "m"),
            ("0", "n"),
            ("m", "d"),
            ("m", "b"),
            ("n", "b"),
            ("n", "c"),
            ("b", "u"),
            ("d", "u"),
            ("c", "u"),
            ("c", "v"),
            ("u", "1"),
            ("v", "1"),
        ],
    },
    CorpusEntry {
        name: "s72_star",
        provenance: "nine-element companion of s72 with three atoms, \
                     non-modular and non-atomistic",
        labels: &["0", "b", "m", "n", "d", "c", "u", "v", "1"],
        covers: &[
            ("0", "b"),
            ("0", "m"),
            ("0", "n"),
            ("m", "d"),
            ("b", "d"),
            ("b", "c"),
            ("n", "c"),
            ("d", "u"),
            ("c", "u"),
            ("c", "v"),
            ("u", "1"),
            ("v", "1"),
        ],
    },
    CorpusEntry {
        name: "s72_fix",
        provenance: "s72 with the chain below d dropped to the bottom, making \
                     d an atom: 1-distributive and non-modular, yet still \
                     admitting no commutative join-distributive pseudo-t-norm",
        labels: &["0", "m", "n", "d", "b", "c", "u", "v", "1"],
        covers: &[
            ("0", "m"),
            ("0", "n"),
            ("0", "d"),
            ("m", "b"),
            ("n", "b"),
            ("b", "c"),
            ("c", "u"),
            ("c", "v"),
            ("d", "u"),
            ("u", "1"),
            ("v", "1"),
        ],
    },
    CorpusEntry {
        name: "pd10",
        provenance: "ten-element planar distributive lattice with four \
                     doubly irreducible elements strictly between the bounds",
        labels: &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
        covers: &[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "d"),
            ("c", "e"),
            ("d", "e"),
            ("d", "f"),
            ("e", "g"),
            ("e", "h"),
            ("f", "h"),
            ("g", "1"),
            ("h", "1"),
        ],
    },
    CorpusEntry {
        name: "pm13",
        provenance: "pd10 with three eyes added (two in the bottom square, \
                     one in the top square): modular but not 1-distributive",
        labels: &[
            "0", "a", "b", "c", "d", "e", "f", "g", "h", "1", "e1", "e2", "e3",
        ],
        covers: &[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "d"),
            ("c", "e"),
            ("d", "e"),
            ("d", "f"),
            ("e", "g"),
            ("e", "h"),
            ("f", "h"),
            ("g", "1"),
            ("h", "1"),
            ("0", "e1"),
            ("e1", "d"),
            ("0", "e2"),
            ("e2", "d"),
            ("e", "e3"),
            ("e3", "1"),
        ],
    },
    CorpusEntry {
        name: "pm10",
        provenance: "ten-element planar modular lattice whose anchored upper \
                     interval is a two-by-three grid; the worked example for \
                     the planar pseudo-t-norm construction",
        labels: &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
        covers: &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "f"),
            ("a", "e"),
            ("b", "e"),
            ("c", "e"),
            ("d", "e"),
            ("f", "g"),
            ("e", "g"),
            ("e", "h"),
            ("g", "1"),
            ("h", "1"),
        ],
    },
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn by_name(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{
        find_forbidden_1_sublattice, is_atomistic, is_distributive, is_modular,
        is_one_distributive, LawKind, PatternTag,
    };

    #[test]
    fn all_entries_build() {
        for e in entries() {
            let l = e.build();
            assert!(l.n() >= 2, "{} unexpectedly tiny", e.name);
        }
        assert_eq!(entries().len(), 16);
        assert!(by_name("pm10").is_some());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn s72_household_facts() {
        let l = by_name("s72").unwrap().build();
        assert_eq!(l.n(), 9);
        let ix = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.join(ix("d"), ix("v")), l.top());
        assert_eq!(l.meet(ix("c"), ix("d")), l.bottom());
        assert_eq!(l.meet(ix("u"), ix("v")), ix("c"));
        assert_eq!(l.join(ix("d"), ix("n")), ix("u"));
        assert!(!is_modular(&l).holds);
        assert!(!is_distributive(&l).holds);
        // d meets v at the bottom while m ∨ v already reaches the top, so d
        // cannot be rebuilt from its meets with m and v.
        let verdict = is_one_distributive(&l);
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        let names: Vec<&str> = w.elements.iter().map(|&x| l.label(x)).collect();
        assert_eq!(names, vec!["d", "m", "v"]);
        let rest: Vec<&str> = crate::analysis::one_distributive_elements(&l)
            .iter()
            .map(|&x| l.label(x))
            .collect();
        assert_eq!(rest, vec!["0", "m", "n", "b", "c", "u", "v", "1"]);
    }

    #[test]
    fn s72_fix_restores_one_distributivity() {
        let l = by_name("s72_fix").unwrap().build();
        assert_eq!(l.n(), 9);
        let ix = |s: &str| l.index_of(s).unwrap();
        // The same relations that drive the empty search on s72 ...
        assert_eq!(l.join(ix("d"), ix("v")), l.top());
        assert_eq!(l.meet(ix("c"), ix("d")), l.bottom());
        assert_eq!(l.meet(ix("d"), ix("v")), l.bottom());
        assert_eq!(l.meet(ix("u"), ix("v")), ix("c"));
        assert_eq!(l.join(ix("d"), ix("n")), ix("u"));
        assert!(l.lt(ix("n"), ix("c")));
        // ... but with every element 1-distributive this time.
        assert!(is_one_distributive(&l).holds);
        assert!(!is_modular(&l).holds);
        assert!(!is_distributive(&l).holds);
    }

    #[test]
    fn s72_star_household_facts() {
        let l = by_name("s72_star").unwrap().build();
        assert_eq!(l.n(), 9);
        assert!(!is_modular(&l).holds);
        assert!(!is_atomistic(&l).holds);
        assert_eq!(crate::analysis::atoms(&l).len(), 3);
    }

    #[test]
    fn planar_pair_facts() {
        let pd = by_name("pd10").unwrap().build();
        assert!(is_distributive(&pd).holds);
        let cls = crate::analysis::element_classes(&pd);
        let bi: Vec<&str> = cls.bi_irr.iter().map(|&x| pd.label(x)).collect();
        assert_eq!(bi, vec!["b", "c", "f", "g"]);
        assert!(crate::analysis::rectangular_pair(&pd).is_none());

        let pm = by_name("pm13").unwrap().build();
        assert_eq!(pm.n(), 13);
        assert!(is_modular(&pm).holds);
        assert!(!is_one_distributive(&pm).holds);
        let w = find_forbidden_1_sublattice(&pm).unwrap();
        assert_eq!(w.law, LawKind::Pattern(PatternTag::M3));
    }

    #[test]
    fn pm10_anchor_geometry() {
        let l = by_name("pm10").unwrap().build();
        let ix = |s: &str| l.index_of(s).unwrap();
        assert!(is_modular(&l).holds);
        assert!(is_one_distributive(&l).holds);
        assert!(!is_distributive(&l).holds);
        let cls = crate::analysis::element_classes(&l);
        let bi: Vec<&str> = cls.bi_irr.iter().map(|&x| l.label(x)).collect();
        assert_eq!(bi, vec!["b", "c", "d", "f", "h"]);
        assert_eq!(l.join(ix("f"), ix("h")), l.top());
        assert_eq!(l.meet(ix("f"), ix("h")), ix("a"));
        let upper = l.interval(ix("a"), l.top()).unwrap();
        assert_eq!(upper.members.len(), 6);
        let grid = FiniteLattice::chain(2).direct_product(&FiniteLattice::chain(3));
        assert!(crate::iso::is_isomorphic(&upper.lattice, &grid).is_some());
    }
}
