//! Robust shadows, the Lovász shadow lower bound, shadow-intersection
//! connection witnesses, and low-degree cleanup.

use crate::bitset::VertexSet;
use crate::combin::{binom_big, gen_binom, rational_int, Rational};
use crate::hypergraph::Hypergraph;
use num::{BigInt, Signed, ToPrimitive};
use std::collections::HashMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShadowError {
    #[error("drop count {drop} out of range for uniformity {k}")]
    BadDrop { k: usize, drop: usize },
    #[error("end tuples must be disjoint l-tuples of distinct vertices")]
    BadEnds,
    #[error("overlap l={ell} above k/2 is not supported for witnesses (k={k})")]
    WideOverlap { k: usize, ell: usize },
}

/// deg(D) > eps * n^drop, exact comparison
fn above_threshold(deg: u64, eps: &Rational, n: usize, drop: usize) -> bool {
    let lhs = BigInt::from(deg) * eps.denom();
    let rhs = eps.numer() * BigInt::from(n).pow(drop as u32);
    lhs > rhs
}

/// (k-drop)-sets whose degree exceeds eps * n^drop, ascending.
///
/// drop = 0 returns the edges themselves for eps < 1 and nothing for
/// eps >= 1, consistent with reading degree as edge multiplicity.
pub fn robust_shadow(
    h: &Hypergraph,
    drop: usize,
    eps: &Rational,
) -> Result<Vec<VertexSet>, ShadowError> {
    if drop > h.k() {
        return Err(ShadowError::BadDrop { k: h.k(), drop });
    }
    if drop == 0 {
        // each edge sees itself once
        return Ok(if above_threshold(1, eps, h.n(), 0) {
            h.edges().to_vec()
        } else {
            Vec::new()
        });
    }
    if drop == h.k() {
        return Err(ShadowError::BadDrop { k: h.k(), drop });
    }
    let census = h.degree_census(h.k() - drop);
    let mut out: Vec<VertexSet> = census
        .into_iter()
        .filter(|(_, deg)| above_threshold(*deg as u64, eps, h.n(), drop))
        .map(|(s, _)| s)
        .collect();
    out.sort();
    Ok(out)
}

/// Lower bound on the drop-fold shadow of any family of `edges` k-sets:
/// solve C(x,k) = edges over the reals and take floor(C(x, k-drop)).
/// Exact when the family is a colex prefix with integral x.
pub fn kk_bound(edges: u64, k: usize, drop: usize) -> Result<u64, ShadowError> {
    if drop > k || k == 0 {
        return Err(ShadowError::BadDrop { k, drop });
    }
    if edges == 0 {
        return Ok(0);
    }
    if drop == 0 {
        return Ok(edges);
    }
    let e = BigInt::from(edges);
    // integer bracket: largest x_lo with C(x_lo, k) <= edges.
    // hi must end strictly above the root or the bisection can leave
    // lo below an exactly-binomial edge count.
    let mut hi = k as u64 + 1;
    while binom_big(hi, k as u64) <= e {
        hi *= 2;
    }
    let mut lo = k as u64;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binom_big(mid, k as u64) <= e {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if binom_big(lo, k as u64) == e {
        return Ok(binom_big(lo, (k - drop) as u64)
            .to_u64()
            .expect("shadow bound fits u64 when edge count does"));
    }
    // fractional root in (lo, lo+1); keep the lower end so the final
    // value stays a valid bound after 40 halvings
    let mut xlo = rational_int(lo as i64);
    let mut xhi = rational_int(lo as i64 + 1);
    let target = Rational::from(e);
    for _ in 0..40 {
        let mid = (&xlo + &xhi) / rational_int(2);
        if gen_binom(&mid, k as u64) <= target {
            xlo = mid;
        } else {
            xhi = mid;
        }
    }
    let bound = gen_binom(&xlo, (k - drop) as u64);
    debug_assert!(!bound.is_negative());
    Ok(bound.floor().to_integer().to_u64().unwrap_or(0))
}

/// Connection witness: an l-set D seen robustly from both ends,
/// together with edges realizing a two-window splice.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ShadowWitness {
    /// D, the overlap of the two middle windows
    pub common: VertexSet,
    /// S1 with S union S1 an edge
    pub via_s: VertexSet,
    /// T1 with T1 union T an edge
    pub via_t: VertexSet,
}

/// Neighborhood of the l-set `s` avoiding every vertex of `avoid`:
/// {e \ s : e edge, e contains s, e disjoint from avoid}, as a
/// (k-l)-uniform graph on the same vertex range.
fn restricted_link(h: &Hypergraph, s: &VertexSet, avoid: &VertexSet) -> Hypergraph {
    let mut edges: Vec<VertexSet> = h
        .edges()
        .iter()
        .filter(|e| s.is_subset_of(e) && e.is_disjoint(avoid))
        .map(|e| e.difference(s))
        .collect();
    edges.sort();
    edges.dedup();
    Hypergraph::new(h.k() - s.len(), h.n(), edges).expect("link edges valid")
}

/// For disjoint ordered l-tuples S, T: finds the lexicographically first
/// l-set D with D in the robust (k-2l)-shadow of both restricted
/// neighborhoods, realizable as two disjoint-overlap edges. At eps = 0
/// existence is equivalent to a two-window connection existing.
pub fn shadow_intersection_witness(
    h: &Hypergraph,
    end_s: &[u32],
    end_t: &[u32],
    eps: &Rational,
) -> Result<Option<ShadowWitness>, ShadowError> {
    let k = h.k();
    let ell = end_s.len();
    if ell == 0 || end_t.len() != ell {
        return Err(ShadowError::BadEnds);
    }
    if 2 * ell > k {
        return Err(ShadowError::WideOverlap { k, ell });
    }
    let s: VertexSet = end_s.iter().copied().collect();
    let t: VertexSet = end_t.iter().copied().collect();
    if s.len() != ell || t.len() != ell || !s.is_disjoint(&t) {
        return Err(ShadowError::BadEnds);
    }
    let link_s = restricted_link(h, &s, &t);
    let link_t = restricted_link(h, &t, &s);
    let drop = k - 2 * ell;
    let shade_s = robust_shadow(&link_s, drop, eps)?;
    let shade_t: std::collections::BTreeSet<VertexSet> =
        robust_shadow(&link_t, drop, eps)?.into_iter().collect();
    for d in shade_s {
        if !shade_t.contains(&d) {
            continue;
        }
        for s1 in link_s.edges().iter().filter(|e| d.is_subset_of(e)) {
            for t1 in link_t.edges().iter().filter(|e| d.is_subset_of(e)) {
                if s1.intersection(t1) == d {
                    return Ok(Some(ShadowWitness {
                        common: d,
                        via_s: s1.clone(),
                        via_t: t1.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CleanupReport {
    pub rounds: usize,
    pub deleted: usize,
}

/// Repeatedly deletes every edge through an l-set of positive degree
/// below eps * n^{k-l}, until every l-set has degree zero or at least
/// the threshold. All qualifying sets are processed per round, so the
/// result is schedule-free; by closure under union it is the unique
/// maximal such subgraph.
pub fn iterated_cleanup(
    h: &Hypergraph,
    ell: usize,
    eps: &Rational,
) -> Result<(Hypergraph, CleanupReport), ShadowError> {
    let k = h.k();
    if ell == 0 || ell >= k {
        return Err(ShadowError::BadDrop { k, drop: ell });
    }
    let mut edges: Vec<VertexSet> = h.edges().to_vec();
    let mut rounds = 0;
    let mut deleted = 0;
    loop {
        let mut census: HashMap<VertexSet, u64> = HashMap::new();
        for e in &edges {
            for s in ell_subsets_of(e, ell) {
                *census.entry(s).or_insert(0) += 1;
            }
        }
        let bad: Vec<VertexSet> = census
            .into_iter()
            .filter(|(_, deg)| *deg > 0 && !above_eq_threshold(*deg, eps, h.n(), k - ell))
            .map(|(s, _)| s)
            .collect();
        if bad.is_empty() {
            break;
        }
        rounds += 1;
        let before = edges.len();
        edges.retain(|e| !bad.iter().any(|b| b.is_subset_of(e)));
        deleted += before - edges.len();
    }
    // every trigger wipes an l-set for good, so the loss stays below
    // C(n,l) * eps * n^{k-l}
    let cap = Rational::from(binom_big(h.n() as u64, ell as u64))
        * eps
        * Rational::from(BigInt::from(h.n()).pow((k - ell) as u32));
    assert!(
        Rational::from(BigInt::from(deleted)) <= cap,
        "cleanup deleted more than the threshold budget allows"
    );
    let result = Hypergraph::new(k, h.n(), edges).expect("subgraph of valid graph");
    Ok((result, CleanupReport { rounds, deleted }))
}

/// deg >= eps * n^pow
fn above_eq_threshold(deg: u64, eps: &Rational, n: usize, pow: usize) -> bool {
    let lhs = BigInt::from(deg) * eps.denom();
    let rhs = eps.numer() * BigInt::from(n).pow(pow as u32);
    lhs >= rhs
}

fn ell_subsets_of(set: &VertexSet, ell: usize) -> Vec<VertexSet> {
    use itertools::Itertools;
    set.members()
        .into_iter()
        .combinations(ell)
        .map(VertexSet::from_members)
        .collect()
}
