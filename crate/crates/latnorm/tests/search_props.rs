//! The backtracking searches and the lattice enumerator, cross-checked
//! against generate-and-test and brute-force oracles.

mod support;

use std::collections::BTreeMap;

use latnorm::corpus;
use latnorm::search::{
    enumerate_lattices, exists_join_distributive_pseudo_tnorm, exists_left_continuous_tnorm,
    search_tables, EnumError, EnumFilters, SearchConfig, SearchStatus, DEFAULT_NODE_BUDGET,
    MAX_ENUMERATION,
};
use latnorm::tnorm::{check_boundary, check_join_distributive, check_monotone, verify_tnorm};
use latnorm::FiniteLattice;
use latnorm::analysis::{is_atomistic, is_distributive, is_modular};

/// Corpus lattices small enough for the generate-and-test oracle.
fn small_pool() -> Vec<(String, FiniteLattice)> {
    let mut v: Vec<(String, FiniteLattice)> = corpus::entries()
        .iter()
        .map(|e| (e.name.to_string(), e.build()))
        .filter(|(_, l)| l.n() <= 6)
        .collect();
    for n in 1..=6 {
        let all = enumerate_lattices(n, EnumFilters::default(), 1).unwrap();
        for (i, l) in all.into_iter().enumerate() {
            v.push((format!("enum{n}_{i}"), l));
        }
    }
    v
}

#[test]
fn search_existence_agrees_with_the_generate_and_test_oracle() {
    for (name, l) in small_pool() {
        let pseudo = exists_join_distributive_pseudo_tnorm(&l, DEFAULT_NODE_BUDGET);
        assert_ne!(
            pseudo.status,
            SearchStatus::BudgetExceeded,
            "{name}: pseudo search should finish"
        );
        assert_eq!(
            pseudo.status == SearchStatus::Found,
            support::naive_exists(&l, false),
            "{name}: pseudo existence"
        );
        let tnorm = exists_left_continuous_tnorm(&l, DEFAULT_NODE_BUDGET);
        assert_ne!(
            tnorm.status,
            SearchStatus::BudgetExceeded,
            "{name}: t-norm search should finish"
        );
        assert_eq!(
            tnorm.status == SearchStatus::Found,
            support::naive_exists(&l, true),
            "{name}: t-norm existence"
        );
    }
}

#[test]
fn found_solutions_survive_definition_level_scans() {
    for (name, l) in small_pool() {
        let pseudo = exists_join_distributive_pseudo_tnorm(&l, DEFAULT_NODE_BUDGET);
        for t in &pseudo.solutions {
            assert!(
                support::table_obeys_all_laws(&l, t, false),
                "{name}: pseudo solution breaks a law"
            );
        }
        let tnorm = exists_left_continuous_tnorm(&l, DEFAULT_NODE_BUDGET);
        for t in &tnorm.solutions {
            assert!(
                support::table_obeys_all_laws(&l, t, true),
                "{name}: t-norm solution breaks a law"
            );
            assert!(verify_tnorm(&l, t).unwrap().all_pass(), "{name}");
        }
    }
}

#[test]
fn exhausted_runs_certify_nonexistence_on_the_counterexamples() {
    for name in ["m3", "n5", "s72", "s72_star", "s72_fix"] {
        let l = corpus::by_name(name).unwrap().build();
        let out = exists_join_distributive_pseudo_tnorm(&l, DEFAULT_NODE_BUDGET);
        assert_eq!(out.status, SearchStatus::ExhaustedNone, "{name}");
        assert!(out.solutions.is_empty(), "{name}");
        assert!(out.nodes_explored > 0, "{name}");
        // A fortiori no left-continuous t-norm exists either.
        let out = exists_left_continuous_tnorm(&l, DEFAULT_NODE_BUDGET);
        assert_eq!(out.status, SearchStatus::ExhaustedNone, "{name}");
    }
}

#[test]
fn starved_budgets_are_reported_as_exceeded() {
    let l = corpus::by_name("b3").unwrap().build();
    let out = exists_join_distributive_pseudo_tnorm(&l, 1);
    assert_eq!(out.status, SearchStatus::BudgetExceeded);
    assert!(out.solutions.is_empty());
    assert!(out.nodes_explored <= 1);
}

#[test]
fn the_solution_limit_caps_how_many_tables_come_back() {
    let l = FiniteLattice::chain(4);
    let out = search_tables(
        &l,
        &SearchConfig {
            require_associative: true,
            solution_limit: 2,
            ..SearchConfig::default()
        },
    );
    assert_eq!(out.status, SearchStatus::Found);
    assert_eq!(out.solutions.len(), 2);
    let a = &out.solutions[0];
    let b = &out.solutions[1];
    assert_ne!(a, b);
    for t in [a, b] {
        assert!(verify_tnorm(&l, t).unwrap().all_pass());
    }
}

#[test]
fn the_noncommutative_route_still_finds_and_verifies() {
    let l = FiniteLattice::chain(3);
    let out = search_tables(
        &l,
        &SearchConfig {
            require_commutative: false,
            ..SearchConfig::default()
        },
    );
    assert_eq!(out.status, SearchStatus::Found);
    let t = &out.solutions[0];
    assert!(check_boundary(&l, t).holds);
    assert!(check_monotone(&l, t).holds);
    assert!(check_join_distributive(&l, t).holds);
}

#[test]
fn enumeration_counts_match_the_brute_force_oracle() {
    let expected = [1usize, 1, 1, 2, 5, 15];
    for n in 1..=6 {
        let fast = enumerate_lattices(n, EnumFilters::default(), 1).unwrap();
        let slow = support::count_lattices_brute_force(n);
        assert_eq!(fast.len(), slow, "n = {n}: fast vs brute force");
        assert_eq!(fast.len(), expected[n - 1], "n = {n}: external count");
    }
}

#[test]
fn enumerated_lattices_are_pairwise_nonisomorphic_and_valid() {
    for n in 1..=6 {
        let all = enumerate_lattices(n, EnumFilters::default(), 1).unwrap();
        let mut keys = BTreeMap::new();
        for l in &all {
            assert_eq!(l.n(), n);
            assert!(support::order_is_valid(l));
            *keys.entry(support::order_matrix_key(l)).or_insert(0usize) += 1;
        }
        assert!(
            keys.values().all(|&c| c == 1),
            "n = {n}: duplicate isomorphism class"
        );
    }
}

#[test]
fn enumeration_is_stable_across_thread_counts() {
    for threads in [1usize, 2, 3] {
        let one = enumerate_lattices(6, EnumFilters::default(), 1).unwrap();
        let many = enumerate_lattices(6, EnumFilters::default(), threads).unwrap();
        let key = |ls: &[FiniteLattice]| {
            let mut ks: Vec<u64> = ls.iter().map(support::order_matrix_key).collect();
            ks.sort_unstable();
            ks
        };
        assert_eq!(key(&one), key(&many), "threads = {threads}");
    }
}

#[test]
fn enumeration_filters_agree_with_post_filtering() {
    for n in 4..=6 {
        let all = enumerate_lattices(n, EnumFilters::default(), 1).unwrap();
        for (filters, pred) in [
            (
                EnumFilters {
                    modular: true,
                    ..EnumFilters::default()
                },
                (|l: &FiniteLattice| is_modular(l).holds) as fn(&FiniteLattice) -> bool,
            ),
            (
                EnumFilters {
                    distributive: true,
                    ..EnumFilters::default()
                },
                |l: &FiniteLattice| is_distributive(l).holds,
            ),
            (
                EnumFilters {
                    atomistic: true,
                    ..EnumFilters::default()
                },
                |l: &FiniteLattice| is_atomistic(l).holds,
            ),
        ] {
            let filtered = enumerate_lattices(n, filters, 1).unwrap();
            let expected = all.iter().filter(|l| pred(l)).count();
            assert_eq!(filtered.len(), expected, "n = {n}, {filters:?}");
            assert!(filtered.iter().all(|l| pred(l)), "n = {n}, {filters:?}");
        }
    }
}

#[test]
fn oversized_enumeration_requests_are_refused() {
    let err = enumerate_lattices(MAX_ENUMERATION + 1, EnumFilters::default(), 1).unwrap_err();
    assert!(matches!(err, EnumError::TooLarge(n) if n == MAX_ENUMERATION + 1));
    assert!(enumerate_lattices(0, EnumFilters::default(), 1)
        .unwrap()
        .is_empty());
}
