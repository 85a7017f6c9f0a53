//! Acceptance suite. One test per criterion; each prints a single
//! PASS line with its measured time, and every numeric tolerance and
//! time limit is pinned as a constant next to the test that uses it.

use hypham_core::combin::binom_big;
use hypham_core::constructions::{space_barrier, space_barrier_min_degree};
use hypham_core::hypergraph::Hypergraph;
use hypham_core::paths::{connect, EllCycle, EllPath};
use hypham_core::pipeline::{absorb_leftover, build_absorbing_path, run_pipeline, Outcome, PipelineParams};
use hypham_core::rng::SplitMix64;
use hypham_core::shadows::{kk_bound, robust_shadow};
use hypham_core::solver::{find_hamilton_cycle, HamiltonOutcome};
use hypham_core::thresholds::{divisibility_threshold, space_barrier_limit};
use hypham_core::tilings::{max_fractional_y_tiling, y_tiling_degree_bound, y_tiling_degree_limit};
use hypham_core::{Rational, VertexSet};
use itertools::Itertools;
use num::{BigInt, One, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn seeded(k: usize, n: usize, num: u64, seed: u64) -> Hypergraph {
    let mut rng = SplitMix64::new(seed);
    Hypergraph::random(k, n, num, 10, &mut rng).unwrap()
}

fn finish(label: &str, started: Instant, limit: Option<Duration>) {
    let dt = started.elapsed();
    if let Some(l) = limit {
        assert!(dt <= l, "{label} took {dt:?}, over the {l:?} limit");
        println!("{label}: PASS in {dt:?} (limit {l:?})");
    } else {
        println!("{label}: PASS in {dt:?}");
    }
}

/// Exact rational thresholds for the three pinned triples, under 1 ms
/// per evaluation.
#[test]
fn criterion_1_threshold_identity() {
    const PER_CALL: Duration = Duration::from_millis(1);
    let t = Instant::now();

    let cases: [(&str, Box<dyn Fn() -> Rational>, Rational); 3] = [
        ("barrier(5,2,2)", Box::new(|| space_barrier_limit(5, 2, 2).unwrap()), rational(91, 216)),
        ("divisibility(3,1)", Box::new(|| divisibility_threshold(3, 1).unwrap()), rational(1, 4)),
        ("divisibility(4,2)", Box::new(|| divisibility_threshold(4, 2).unwrap()), rational(1, 2)),
    ];
    for (name, eval, want) in &cases {
        let call = Instant::now();
        let got = eval();
        let dt = call.elapsed();
        assert_eq!(&got, want, "{name}");
        assert!(dt <= PER_CALL, "{name} took {dt:?}, over {PER_CALL:?}");
    }

    // same values through the CLI table
    let (out, code) = cli(&["threshold", "--formula", "barrier", "-k", "5", "-d", "2", "-l", "2"]);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().contains("91/216"));

    finish("criterion 1 (threshold identity)", t, None);
}

/// Barrier graphs match the closed-form minimum degree at every d and
/// are proved Hamilton-free by exhaustive search.
#[test]
fn criterion_2_space_barrier_soundness() {
    const LIMIT: Duration = Duration::from_secs(300);
    let t = Instant::now();

    let cases: [(usize, usize, &[usize]); 3] = [
        (3, 1, &[6, 8, 10, 12, 14, 16]),
        (4, 1, &[6, 9, 12]),
        (5, 2, &[6, 9, 12]),
    ];
    for (k, ell, ns) in cases {
        for &n in ns {
            let h = space_barrier(k, ell, n).unwrap();
            for d in 1..k {
                let closed = space_barrier_min_degree(k, ell, n, d).unwrap();
                assert_eq!(
                    BigInt::from(h.min_degree(d)),
                    closed,
                    "min {d}-degree of barrier k={k} l={ell} n={n}"
                );
            }
            let outcome = find_hamilton_cycle(&h, ell, u64::MAX / 2).unwrap();
            assert!(
                matches!(outcome, HamiltonOutcome::NoneProven { .. }),
                "barrier k={k} l={ell} n={n} must be proved Hamilton-free"
            );
        }
    }

    finish("criterion 2 (space-barrier soundness)", t, Some(LIMIT));
}

/// Shadow sizes never undercut the bound on 1000 seeded graphs, and
/// colex prefixes of size C(m,k) hit it exactly.
#[test]
fn criterion_3_kruskal_katona_suite() {
    const LIMIT: Duration = Duration::from_secs(120);
    const GRAPHS: u64 = 1000;
    let t = Instant::now();

    let mut violations = 0usize;
    for seed in 0..GRAPHS {
        let k = 3 + (seed % 3) as usize;
        let span = 12 - (k + 1);
        let n = k + 1 + ((seed / 3) as usize) % (span + 1);
        let num = 1 + seed % 9;
        let h = seeded(k, n, num, seed);
        for drop in 1..k {
            let shadow = robust_shadow(&h, drop, &Rational::zero()).unwrap();
            let bound = kk_bound(h.edge_count() as u64, k, drop).unwrap();
            if (shadow.len() as u64) < bound {
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0, "shadow fell below the bound");

    for k in 3..=5usize {
        for m in k..=10 {
            let family = Hypergraph::complete(k, m).unwrap(); // first C(m,k) colex k-sets
            let edges = binom_big(m as u64, k as u64).to_u64().unwrap();
            assert_eq!(family.edge_count() as u64, edges);
            for drop in 1..k {
                let shadow = robust_shadow(&family, drop, &Rational::zero()).unwrap();
                let exact = binom_big(m as u64, (k - drop) as u64).to_u64().unwrap();
                assert_eq!(shadow.len() as u64, exact, "colex shadow k={k} m={m} drop={drop}");
                assert_eq!(
                    kk_bound(edges, k, drop).unwrap(),
                    exact,
                    "colex equality k={k} m={m} drop={drop}"
                );
            }
        }
    }

    finish("criterion 3 (Kruskal-Katona suite)", t, Some(LIMIT));
}

/// connect finds a two-edge path exactly when interior enumeration does,
/// over 200 seeded instances.
#[test]
fn criterion_4_connecting_mechanics() {
    const LIMIT: Duration = Duration::from_secs(120);
    const INSTANCES: u64 = 200;
    let t = Instant::now();

    let mut discrepancies = 0usize;
    for seed in 0..INSTANCES {
        let (k, ell) = if seed % 2 == 0 { (4, 1) } else { (5, 2) };
        let n = 10 + ((seed % 3) as usize) * 2;
        let num = 5 + seed % 5;
        let h = seeded(k, n, num, seed * 31 + 7);
        let mut rng = SplitMix64::new(seed ^ 0x51ce);
        let mut picks: Vec<u32> = rng
            .sample_indices(n, 2 * ell)
            .into_iter()
            .map(|v| v as u32)
            .collect();
        rng.shuffle(&mut picks);
        let (from, to) = (picks[..ell].to_vec(), picks[ell..].to_vec());
        let forbidden = VertexSet::empty();

        let got = connect(&h, &from, &to, &forbidden, 2).unwrap();
        let expected = oracle_connectable(&h, &from, &to, 2);
        if got.is_some() != expected {
            discrepancies += 1;
            continue;
        }
        if let Some(p) = got {
            assert!(p.validate_in(&h).valid);
            assert_eq!(p.begin(), from.as_slice());
            assert_eq!(p.end(), to.as_slice());
        }
    }
    assert_eq!(discrepancies, 0);

    finish("criterion 4 (connecting mechanics)", t, Some(LIMIT));
}

/// LP value n/4 with verified dual certificates on complete 3-graphs,
/// plus the degree-bound evaluator at its pinned points.
#[test]
fn criterion_5_fractional_tiling_exactness() {
    const LIMIT: Duration = Duration::from_secs(60);
    let t = Instant::now();

    for n in [8usize, 12, 16] {
        let h = Hypergraph::complete(3, n).unwrap();
        let sol = max_fractional_y_tiling(&h, 2).unwrap();
        assert_eq!(sol.value, rational(n as i64, 4), "perfect fractional tiling at n={n}");

        let primal: Rational = sol.weights.iter().sum();
        assert_eq!(primal, sol.value);
        for v in 0..n as u32 {
            let load: Rational = sol
                .copies
                .iter()
                .zip(&sol.weights)
                .filter(|(c, _)| c.contains(v))
                .map(|(_, w)| w.clone())
                .sum();
            assert!(load <= Rational::one());
        }
        let dual: Rational = sol.dual.iter().sum();
        assert_eq!(dual, sol.value);
        assert!(sol.dual.iter().all(|y| y >= &Rational::zero()));
        for span in y_spans(&h, 2) {
            let cover: Rational = span.iter().map(|v| sol.dual[v as usize].clone()).sum();
            assert!(cover >= Rational::one(), "dual misses a copy at n={n}");
        }
    }

    let sixth = rational(1, 6);
    let bound = y_tiling_degree_bound(60, &sixth, &Rational::zero());
    assert_eq!(bound, Rational::from_integer(14620.into()));
    assert_eq!(y_tiling_degree_limit(&sixth), rational(91, 216));

    finish("criterion 5 (fractional tiling exactness)", t, Some(LIMIT));
}

/// Absorption preserves every swapper's ordered ends (the swap check)
/// and pipeline successes are genuine Hamilton cycles.
#[test]
fn criterion_6_absorber_soundness() {
    let t = Instant::now();

    let corpus: Vec<Hypergraph> = vec![
        Hypergraph::complete(3, 40).unwrap(),
        Hypergraph::complete(3, 60).unwrap(),
        seeded(3, 50, 9, 101),
        seeded(3, 60, 9, 202),
    ];
    let params = PipelineParams::default();
    let mut swap_violations = 0usize;

    for h in &corpus {
        let base = build_absorbing_path(h, 1, &params, &VertexSet::empty()).unwrap();
        let ell = base.ell;
        let s = base.k - base.ell;
        let outside: Vec<u32> = {
            let used = base.vertex_set();
            (0..h.n() as u32).filter(|&v| !used.contains(v)).collect()
        };

        for blocks in 0..=params.capacity {
            let mut path = base.clone();
            let leftover = VertexSet::from_members(outside[..blocks * s].iter().copied());
            absorb_leftover(h, &mut path, &leftover, params.hop_budget).unwrap();

            for (station, before) in path.stations.iter().zip(&base.stations) {
                let mut pieces = station.swapper_pieces.clone();
                pieces.push(station.gadget_piece);
                let mut ends = before.swapper_ends.clone();
                let g = &base.pieces[before.gadget_piece].order;
                ends.push((g[..ell].to_vec(), g[g.len() - ell..].to_vec()));
                for (&pi, (b, e)) in pieces.iter().zip(&ends) {
                    let order = &path.pieces[pi].order;
                    let same_ends =
                        &order[..ell] == b.as_slice() && &order[order.len() - ell..] == e.as_slice();
                    let valid = EllPath::new(path.k, ell, order.clone())
                        .map(|p| p.validate_in(h).valid)
                        .unwrap_or(false);
                    if !same_ends || !valid {
                        swap_violations += 1;
                    }
                }
            }

            let whole = path.to_path().expect("absorbing path stays an l-path");
            assert!(whole.validate_in(h).valid);
            assert_eq!(path.vertex_set(), base.vertex_set().union(&leftover));
        }
    }
    assert_eq!(swap_violations, 0, "a swapper changed its ends or broke");

    for (i, h) in corpus.iter().enumerate() {
        let report = run_pipeline(h, 1, &params, i as u64).unwrap();
        match report.outcome {
            Outcome::Hamilton { order, edges } => {
                let cycle = EllCycle::new(h.k(), 1, order).unwrap();
                assert!(cycle.is_hamilton(h));
                assert_eq!(edges, h.n() / (h.k() - 1));
            }
            Outcome::Failed { stage, detail } => {
                panic!("pipeline failed on corpus graph {i}: {stage} ({detail})")
            }
        }
    }

    finish("criterion 6 (absorber soundness)", t, None);
}

/// At least 18 of 20 seeded dense random graphs round-trip to a
/// validated Hamilton loose cycle.
#[test]
fn criterion_7_pipeline_empirical_target() {
    const LIMIT: Duration = Duration::from_secs(600);
    const SEEDS: u64 = 20;
    const NEEDED: usize = 18;
    let t = Instant::now();

    let params = PipelineParams::default();
    let mut successes = 0usize;
    for seed in 0..SEEDS {
        let mut rng = SplitMix64::new(seed ^ 0xabcd);
        let h = Hypergraph::random(3, 60, 9, 10, &mut rng).unwrap();
        let report = run_pipeline(&h, 1, &params, seed).unwrap();
        if let Outcome::Hamilton { order, .. } = report.outcome {
            let cycle = EllCycle::new(3, 1, order).unwrap();
            assert!(cycle.is_hamilton(&h), "seed {seed} emitted an invalid cycle");
            assert_eq!(cycle.edge_len(), 30);
            successes += 1;
        }
    }
    assert!(successes >= NEEDED, "only {successes}/{SEEDS} seeds succeeded");

    println!("criterion 7: {successes}/{SEEDS} seeds produced validated cycles");
    finish("criterion 7 (pipeline empirical target)", t, Some(LIMIT));
}

/// Every CLI example is byte-identical across repeated runs, and the
/// emitted witness survives the validate round trip.
#[test]
fn criterion_8_cli_determinism() {
    let t = Instant::now();

    let dir = std::env::temp_dir().join(format!("hypham-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = |name: &str| dir.join(name).to_str().unwrap().to_string();
    let (c12, c60, witness) = (path("c12.hg"), path("c60.hg"), path("witness.json"));
    let missing = path("missing.hg");

    let (_, code) = cli(&["gen", "complete", "-k", "3", "-n", "12", "--out", &c12]);
    assert_eq!(code, 0);
    let (_, code) = cli(&["gen", "complete", "-k", "3", "-n", "60", "--out", &c60]);
    assert_eq!(code, 0);

    // pinned contract examples
    let (out, code) = cli(&["gen", "space-barrier", "-k", "5", "-l", "2", "-n", "12"]);
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().next().unwrap(), "5 12 330");
    assert_eq!(text.lines().count(), 331);
    let (_, code) = cli(&["hamilton", "-l", "1", &missing]);
    assert_eq!(code, 3);

    let examples: Vec<Vec<&str>> = vec![
        vec!["gen", "space-barrier", "-k", "5", "-l", "2", "-n", "12"],
        vec!["threshold", "--formula", "barrier", "-k", "5", "-d", "2", "-l", "2"],
        vec!["gen", "random", "-k", "3", "-n", "20", "--density", "9/10", "--seed", "5"],
        vec!["degree", &c12, "-d", "1"],
        vec!["hamilton", &c12, "-l", "1"],
        vec!["connect", &c12, "--from", "0", "--to", "5"],
        vec!["shadow", &c12, "--drop", "1", "--eps", "1/100", "--sets"],
        vec!["reach", &c12, "-l", "1", "--view", "matrix", "--jobs", "2"],
        vec!["tile", &c12, "-b", "2"],
        vec!["frac-tile", &c12, "-b", "2"],
        vec!["threshold", "--formula", "convergence", "-k", "5", "-d", "2", "-l", "2", "--ns", "12,24,48"],
        vec!["absorb-run", &c60, "-l", "1", "--seed", "7", "--witness-out", &witness],
    ];
    for argv in &examples {
        let (first, code1) = cli(argv);
        let witness_first = std::fs::read(&witness).ok();
        let (second, code2) = cli(argv);
        assert_eq!(code1, code2, "{argv:?}");
        assert_eq!(first, second, "output of {argv:?} changed between runs");
        if argv[0] == "absorb-run" {
            assert_eq!(witness_first, std::fs::read(&witness).ok());
        }
    }

    let (out, code) = cli(&["validate", &c60, "--witness", &witness]);
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("\"status\": \"ok\""));
    assert!(text.contains("\"hamilton\": true"));

    std::fs::remove_dir_all(&dir).ok();
    finish("criterion 8 (CLI determinism)", t, None);
}

fn cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(PathBuf::from(env!("CARGO_BIN_EXE_hypham")))
        .args(args)
        .output()
        .expect("CLI binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

/// Interior enumeration for paths of up to max_len edges; exponential,
/// so only used at small n.
fn oracle_connectable(h: &Hypergraph, from: &[u32], to: &[u32], max_len: usize) -> bool {
    let k = h.k();
    let ell = from.len();
    let s = k - ell;
    let pool: Vec<u32> = (0..h.n() as u32)
        .filter(|v| !from.contains(v) && !to.contains(v))
        .collect();
    for len in 1..=max_len {
        let interior_len = k + (len - 1) * s - 2 * ell;
        for mid in pool.iter().permutations(interior_len) {
            let order: Vec<u32> = from.iter().chain(mid).chain(to.iter()).copied().collect();
            let Ok(p) = EllPath::new(k, ell, order) else { continue };
            if p.validate_in(h).valid {
                return true;
            }
        }
    }
    false
}

fn y_spans(h: &Hypergraph, b: usize) -> BTreeSet<VertexSet> {
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
