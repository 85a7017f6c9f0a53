//! Cross-module invariants on seeded random graphs, checked against
//! independent recomputations (and, where feasible, exhaustive search).

mod common;

use hypham_core::combin::binom_big;
use hypham_core::paths::EllCycle;
use hypham_core::rng::SplitMix64;
use hypham_core::shadows::{iterated_cleanup, kk_bound, robust_shadow};
use hypham_core::solver::{find_hamilton_cycle, HamiltonOutcome};
use hypham_core::reachability::reachability_matrix;
use hypham_core::tilings::{max_fractional_y_tiling, max_y_tiling};
use hypham_core::{Rational, VertexSet};
use itertools::Itertools;
use num::{BigInt, ToPrimitive, Zero};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn rational(n: u64, d: u64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// All (k-drop)-subsets of edges, i.e. the plain shadow, recomputed
/// the obvious way.
fn shadow_by_hand(h: &hypham_core::hypergraph::Hypergraph, drop: usize) -> BTreeSet<VertexSet> {
    h.edges()
        .iter()
        .flat_map(|e| {
            let members = e.members();
            let take = members.len() - drop;
            members
                .into_iter()
                .combinations(take)
                .map(VertexSet::from_members)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Unordered pairs of edges sharing exactly b vertices, as spans.
fn y_spans_by_hand(h: &hypham_core::hypergraph::Hypergraph, b: usize) -> BTreeSet<VertexSet> {
    let edges = h.edges();
    let mut spans = BTreeSet::new();
    for (i, e1) in edges.iter().enumerate() {
        for e2 in &edges[i + 1..] {
            if e1.intersection(e2).len() == b {
                spans.insert(e1.union(e2));
            }
        }
    }
    spans
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Every edge is counted binom(k, d) times across the d-set census,
    /// and the census agrees with min_degree once absent sets count as 0.
    #[test]
    fn degree_census_accounts_for_every_edge(
        k in 3usize..=5, extra in 1usize..=5, num in 1u64..=9, seed in any::<u64>(),
    ) {
        let h = common::seeded_graph(k, k + extra, num, seed);
        let m = h.edge_count() as u64;
        for d in 1..k {
            let census = h.degree_census(d);
            let total: u64 = census.values().sum();
            prop_assert_eq!(total, binom_big(k as u64, d as u64).to_u64().unwrap() * m);
            let all_sets = binom_big(h.n() as u64, d as u64);
            let census_min = if BigInt::from(census.len()) < all_sets {
                0
            } else {
                census.values().copied().min().unwrap_or(0)
            };
            prop_assert_eq!(h.min_degree(d), census_min);
        }
    }

    /// The degree of a set is the number of edges in its link.
    #[test]
    fn link_size_is_degree(
        k in 3usize..=5, extra in 1usize..=5, num in 1u64..=9, seed in any::<u64>(),
    ) {
        let h = common::seeded_graph(k, k + extra, num, seed);
        let mut rng = SplitMix64::new(seed ^ 0x5e7);
        for d in 1..=(k - 2) {
            let set = VertexSet::from_members(
                rng.sample_indices(h.n(), d).into_iter().map(|v| v as u32),
            );
            let link = h.link(&set).unwrap();
            prop_assert_eq!(h.degree(&set), link.edge_count() as u64);
            prop_assert_eq!(link.k(), k - d);
        }
    }

    /// Raising eps can only shrink the robust shadow, and at eps = 0 it
    /// is exactly the set of subsets of edges.
    #[test]
    fn robust_shadow_is_antitone_in_eps(
        k in 3usize..=5, extra in 1usize..=5, num in 1u64..=9, seed in any::<u64>(),
        lo in 0u64..=20, hi_gap in 0u64..=30,
    ) {
        let h = common::seeded_graph(k, k + extra, num, seed);
        for drop in 1..k {
            let wide = robust_shadow(&h, drop, &rational(lo, 100)).unwrap();
            let narrow = robust_shadow(&h, drop, &rational(lo + hi_gap, 100)).unwrap();
            prop_assert!(narrow.iter().all(|s| wide.contains(s)));

            let exact = robust_shadow(&h, drop, &Rational::zero()).unwrap();
            prop_assert!(exact.windows(2).all(|w| w[0] < w[1]), "shadow not ascending");
            let exact: BTreeSet<VertexSet> = exact.into_iter().collect();
            prop_assert_eq!(exact, shadow_by_hand(&h, drop));
        }
    }

    /// Kruskal-Katona style lower bound never exceeds the true shadow.
    #[test]
    fn shadow_meets_its_lower_bound(
        k in 3usize..=5, extra in 1usize..=5, num in 1u64..=9, seed in any::<u64>(),
    ) {
        let h = common::seeded_graph(k, k + extra, num, seed);
        for drop in 1..k {
            let exact = robust_shadow(&h, drop, &Rational::zero()).unwrap();
            let bound = kk_bound(h.edge_count() as u64, k, drop).unwrap();
            prop_assert!(exact.len() as u64 >= bound, "shadow {} < bound {}", exact.len(), bound);
        }
    }

    /// A second cleanup pass finds nothing left to delete.
    #[test]
    fn cleanup_is_idempotent(
        k in 3usize..=5, extra in 1usize..=5, num in 1u64..=9, seed in any::<u64>(),
        ell_pick in 0usize..4, eps_num in 1u64..=10,
    ) {
        let h = common::seeded_graph(k, k + extra, num, seed);
        let ell = 1 + ell_pick % (k - 1);
        let eps = rational(eps_num, 20);
        let (once, _) = iterated_cleanup(&h, ell, &eps).unwrap();
        let (twice, report) = iterated_cleanup(&once, ell, &eps).unwrap();
        prop_assert_eq!(report.deleted, 0);
        prop_assert_eq!(once, twice);
    }

    /// beta is literally count over n^(2k-l-1), and chunking the pair
    /// list over threads changes nothing.
    #[test]
    fn reachability_is_normalized_and_thread_invariant(
        extra in 3usize..=6, num in 3u64..=9, seed in any::<u64>(),
    ) {
        let h = common::seeded_graph(3, 3 + extra, num, seed);
        let serial = reachability_matrix(&h, 1, 1).unwrap();
        let parallel = reachability_matrix(&h, 1, 3).unwrap();
        prop_assert_eq!(&serial, &parallel);
        let m = 2 * h.k() - 1 - 1;
        let norm = num::pow(BigInt::from(h.n()), m);
        for p in &serial {
            prop_assert_eq!(&p.normalization, &norm);
            prop_assert_eq!(&p.beta, &Rational::new(BigInt::from(p.count), norm.clone()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    /// The LP relaxation dominates any integral tiling the search finds.
    #[test]
    fn fractional_tiling_dominates_integral(
        extra in 2usize..=6, num in 2u64..=9, seed in any::<u64>(), b in 1usize..=2,
    ) {
        let h = common::seeded_graph(3, 3 + extra, num, seed);
        let frac = max_fractional_y_tiling(&h, b).unwrap();
        let tiling = max_y_tiling(&h, b, 200_000).unwrap();
        let tiles = Rational::from_integer(BigInt::from(tiling.tiles.len()));
        prop_assert!(frac.value >= tiles);
        // tiles must really be disjoint copies
        let spans = y_spans_by_hand(&h, b);
        let mut seen = VertexSet::empty();
        for t in &tiling.tiles {
            prop_assert!(spans.contains(t));
            prop_assert!(seen.is_disjoint(t));
            seen = seen.union(t);
        }
    }

    /// The returned dual is a feasible cover certificate of equal value,
    /// and the column set is exactly the pairwise-enumerated copies.
    #[test]
    fn lp_dual_certifies_optimality(
        extra in 2usize..=6, num in 2u64..=9, seed in any::<u64>(), b in 1usize..=2,
    ) {
        let h = common::seeded_graph(3, 3 + extra, num, seed);
        let sol = max_fractional_y_tiling(&h, b).unwrap();
        let listed: BTreeSet<VertexSet> = sol.copies.iter().cloned().collect();
        prop_assert_eq!(listed, y_spans_by_hand(&h, b));

        let primal_total: Rational = sol.weights.iter().sum();
        prop_assert_eq!(&primal_total, &sol.value);
        prop_assert!(sol.weights.iter().all(|w| w >= &Rational::zero()));
        for v in 0..h.n() as u32 {
            let load: Rational = sol
                .copies
                .iter()
                .zip(&sol.weights)
                .filter(|(c, _)| c.contains(v))
                .map(|(_, w)| w.clone())
                .sum();
            prop_assert!(load <= Rational::from_integer(1.into()));
        }

        let dual_total: Rational = sol.dual.iter().sum();
        prop_assert_eq!(&dual_total, &sol.value);
        prop_assert!(sol.dual.iter().all(|y| y >= &Rational::zero()));
        for copy in &sol.copies {
            let cover: Rational = copy.iter().map(|v| sol.dual[v as usize].clone()).sum();
            prop_assert!(cover >= Rational::from_integer(1.into()));
        }
    }

    /// Positive answers carry a checkable witness; negative answers are
    /// confirmed by trying every ordering.
    #[test]
    fn solver_agrees_with_exhaustive_search(
        shape in prop_oneof![Just((3usize, 6usize)), Just((3, 8)), Just((4, 6))],
        num in 2u64..=9, seed in any::<u64>(),
    ) {
        let (k, n) = shape;
        let h = common::seeded_graph(k, n, num, seed);
        match find_hamilton_cycle(&h, 1, 100_000_000).unwrap() {
            HamiltonOutcome::Found(c) => prop_assert!(c.is_hamilton(&h)),
            HamiltonOutcome::NoneProven { .. } => {
                prop_assert!(common::oracle_hamilton(&h, 1).is_none())
            }
            HamiltonOutcome::BudgetExhausted { .. } => {
                prop_assert!(false, "budget too small for exhaustive run")
            }
        }
    }

    /// connect's yes/no answer matches interior enumeration, and its
    /// witnesses respect ends and the forbidden set.
    #[test]
    fn connect_matches_enumeration(
        extra in 3usize..=5, num in 4u64..=9, seed in any::<u64>(),
        forbid_len in 0usize..3,
    ) {
        let h = common::seeded_graph(3, 3 + extra, num, seed);
        let mut rng = SplitMix64::new(seed ^ 0xc0);
        let picks = rng.sample_indices(h.n(), 2 + forbid_len);
        let (from, to) = (vec![picks[0] as u32], vec![picks[1] as u32]);
        let forbidden = VertexSet::from_members(picks[2..].iter().map(|&v| v as u32));
        let got = hypham_core::paths::connect(&h, &from, &to, &forbidden, 2).unwrap();
        let expected = common::oracle_connectable(&h, &from, &to, &forbidden, 2);
        prop_assert_eq!(got.is_some(), expected);
        if let Some(p) = got {
            prop_assert!(p.validate_in(&h).valid);
            prop_assert_eq!(p.begin(), from.as_slice());
            prop_assert_eq!(p.end(), to.as_slice());
            prop_assert!(p.interior().iter().all(|&v| !forbidden.contains(v)));
        }
    }

    /// Canonical forms identify a cycle with its rotations and reversal.
    #[test]
    fn canonical_form_is_orbit_invariant(
        shape in prop_oneof![Just((3usize, 1usize)), Just((4, 1)), Just((5, 2))],
        q in 2usize..=3, seed in any::<u64>(),
    ) {
        let (k, ell) = shape;
        let s = k - ell;
        let n = (q * s).max(k).next_multiple_of(s);
        let mut order: Vec<u32> = (0..n as u32).collect();
        SplitMix64::new(seed).shuffle(&mut order);
        let cycle = EllCycle::new(k, ell, order.clone()).unwrap();
        let canon = cycle.canonical_form();

        let mut rotated = order.clone();
        rotated.rotate_left(s);
        let rotated = EllCycle::new(k, ell, rotated).unwrap();
        prop_assert_eq!(&rotated.canonical_form(), &canon);

        // reversal needs realigning so windows start at multiples of s
        let mut reversed = order.clone();
        reversed.reverse();
        reversed.rotate_left((s - k % s) % s);
        let reversed = EllCycle::new(k, ell, reversed).unwrap();
        prop_assert_eq!(&reversed.canonical_form(), &canon);

        let replay = EllCycle::new(k, ell, canon.clone()).unwrap();
        prop_assert_eq!(&replay.canonical_form(), &canon);

        let mut sorted = canon;
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..n as u32).collect::<Vec<_>>());
    }
}
