//! Brute-force reference implementations. Everything here enumerates
//! outright, so callers must keep n small.

#![allow(dead_code)]

use hypham_core::hypergraph::Hypergraph;
use hypham_core::paths::{EllCycle, EllPath};
use hypham_core::rng::SplitMix64;
use hypham_core::VertexSet;
use itertools::Itertools;

/// Hamilton l-cycle by trying every vertex ordering. Factorial in n.
pub fn oracle_hamilton(h: &Hypergraph, ell: usize) -> Option<EllCycle> {
    let n = h.n();
    assert!(n <= 9, "oracle enumerates all {n}! orderings");
    let s = h.k() - ell;
    if n < h.k() || n % s != 0 {
        return None;
    }
    (0..n as u32).permutations(n).find_map(|order| {
        let c = EllCycle::new(h.k(), ell, order).ok()?;
        c.validate_in(h).valid.then_some(c)
    })
}

/// Whether any l-path of at most max_len edges joins the ordered ends,
/// interior avoiding `forbidden`, by enumerating interiors.
pub fn oracle_connectable(
    h: &Hypergraph,
    from: &[u32],
    to: &[u32],
    forbidden: &VertexSet,
    max_len: usize,
) -> bool {
    let k = h.k();
    let ell = from.len();
    let s = k - ell;
    let pool: Vec<u32> = (0..h.n() as u32)
        .filter(|v| !forbidden.contains(*v) && !from.contains(v) && !to.contains(v))
        .collect();
    for len in 1..=max_len {
        let interior_len = k + (len - 1) * s - 2 * ell;
        for mid in pool.iter().permutations(interior_len) {
            let order: Vec<u32> = from
                .iter()
                .chain(mid)
                .chain(to.iter())
                .copied()
                .collect();
            let Ok(p) = EllPath::new(k, ell, order) else { continue };
            if p.validate_in(h).valid {
                return true;
            }
        }
    }
    false
}

pub fn seeded_graph(k: usize, n: usize, num: u64, seed: u64) -> Hypergraph {
    let mut rng = SplitMix64::new(seed);
    Hypergraph::random(k, n, num, 10, &mut rng).unwrap()
}
