//! Pairwise reachability counts and the partition they induce.
//!
//! A pair (u, v) is reachable through a witness set T of 2k-l-1 further
//! vertices when T+u and T+v each span an l-path of length two and the
//! two paths have the same ordered ends. Counting witness sets exactly
//! gives beta = count / n^(2k-l-1); parts of the partition are connected
//! components of the graph keeping pairs with beta at or above a cutoff,
//! so multi-step reachability is realized by transitive closure instead
//! of by counting longer witness tuples.

use crate::bitset::VertexSet;
use crate::combin::Rational;
use crate::hypergraph::Hypergraph;
use itertools::Itertools;
use num::BigInt;
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ReachabilityError {
    #[error("need two distinct vertices, got {v} twice")]
    SamePair { v: u32 },
    #[error("vertex {v} out of range for n={n}")]
    VertexRange { v: u32, n: usize },
    #[error("need 1 <= ell < k, got k={k} ell={ell}")]
    EllRange { k: usize, ell: usize },
    #[error("vertex tuple needs at least two distinct entries")]
    TupleTooSmall,
    #[error("vertex {v} repeated in tuple")]
    DuplicateVertex { v: u32 },
}

/// Exact witness count for one pair, with its normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityProfile {
    pub u: u32,
    pub v: u32,
    pub count: u64,
    /// n^(2k-l-1)
    pub normalization: BigInt,
    /// count / normalization
    pub beta: Rational,
}

fn check_pair(h: &Hypergraph, u: u32, v: u32, ell: usize) -> Result<(), ReachabilityError> {
    if ell < 1 || ell >= h.k() {
        return Err(ReachabilityError::EllRange { k: h.k(), ell });
    }
    for w in [u, v] {
        if w as usize >= h.n() {
            return Err(ReachabilityError::VertexRange { v: w, n: h.n() });
        }
    }
    if u == v {
        return Err(ReachabilityError::SamePair { v: u });
    }
    Ok(())
}

/// Ordered end pairs (begin tuple, end tuple) over all length-two l-paths
/// spanning exactly the vertices of `span`, keeping only ends avoiding
/// `skip`. Edges are scanned from `edges`, already restricted to `span`.
fn end_pairs(
    edges: &[VertexSet],
    span: &VertexSet,
    k: usize,
    ell: usize,
    skip: u32,
) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let s = k - ell;
    let inside: Vec<&VertexSet> = edges.iter().filter(|e| e.is_subset_of(span)).collect();
    let mut out = BTreeSet::new();
    for e1 in &inside {
        for e2 in &inside {
            if e1 == e2 || e1.intersect_len(e2) != ell {
                continue;
            }
            let p1 = e1.difference(e2).members();
            let p2 = e1.intersection(e2).members();
            let p3 = e2.difference(e1).members();
            if ell <= s {
                // ends live entirely in the private halves
                for b in p1.iter().permutations(ell) {
                    if b.iter().any(|&&x| x == skip) {
                        continue;
                    }
                    let b: Vec<u32> = b.into_iter().copied().collect();
                    for e in p3.iter().permutations(ell) {
                        if e.iter().any(|&&x| x == skip) {
                            continue;
                        }
                        out.insert((b.clone(), e.into_iter().copied().collect()));
                    }
                }
            } else {
                // wide overlap: both ends reach into the shared middle
                for pb in p1.iter().permutations(s) {
                    for mid in p2.iter().permutations(ell) {
                        let b: Vec<u32> = pb.iter().map(|&&x| x).chain(mid[..ell - s].iter().map(|&&x| x)).collect();
                        if b.contains(&skip) {
                            continue;
                        }
                        for pe in p3.iter().permutations(s) {
                            let e: Vec<u32> = mid[s..].iter().map(|&&x| x).chain(pe.iter().map(|&&x| x)).collect();
                            if e.contains(&skip) {
                                continue;
                            }
                            out.insert((b.clone(), e));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Exact number of (2k-l-1)-sets T, disjoint from {u, v}, such that T+u
/// and T+v each span a length-two l-path and the paths share their
/// ordered ends.
pub fn reachable_count(
    h: &Hypergraph,
    u: u32,
    v: u32,
    ell: usize,
) -> Result<ReachabilityProfile, ReachabilityError> {
    check_pair(h, u, v, ell)?;
    let k = h.k();
    let m = 2 * k - ell - 1;
    let ground: Vec<u32> = (0..h.n() as u32).filter(|&w| w != u && w != v).collect();
    let mut count = 0u64;
    if ground.len() >= m {
        for t in ground.iter().combinations(m) {
            let base: Vec<u32> = t.into_iter().copied().collect();
            let mut span_u = VertexSet::from_members(base.iter().copied());
            let mut span_v = span_u.clone();
            span_u.insert(u);
            span_v.insert(v);
            let ends_u = end_pairs(h.edges(), &span_u, k, ell, u);
            if ends_u.is_empty() {
                continue;
            }
            let ends_v = end_pairs(h.edges(), &span_v, k, ell, v);
            if ends_u.iter().any(|p| ends_v.contains(p)) {
                count += 1;
            }
        }
    }
    let normalization = num::pow(BigInt::from(h.n()), m);
    let beta = Rational::new(BigInt::from(count), normalization.clone());
    Ok(ReachabilityProfile {
        u,
        v,
        count,
        normalization,
        beta,
    })
}

/// Profiles for every unordered pair, in lexicographic pair order.
/// Counts are independent per pair, so with jobs > 1 the pair list is
/// chunked across that many threads; the output order is unchanged.
pub fn reachability_matrix(
    h: &Hypergraph,
    ell: usize,
    jobs: usize,
) -> Result<Vec<ReachabilityProfile>, ReachabilityError> {
    if ell < 1 || ell >= h.k() {
        return Err(ReachabilityError::EllRange { k: h.k(), ell });
    }
    let n = h.n() as u32;
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let jobs = jobs.max(1).min(pairs.len().max(1));
    if jobs <= 1 {
        return pairs
            .into_iter()
            .map(|(u, v)| reachable_count(h, u, v, ell))
            .collect();
    }
    let chunk = pairs.len().div_ceil(jobs);
    let results: Vec<Result<Vec<ReachabilityProfile>, ReachabilityError>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = pairs
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter()
                            .map(|&(u, v)| reachable_count(h, u, v, ell))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            handles.into_iter().map(|j| j.join().unwrap()).collect()
        });
    let mut out = Vec::with_capacity(pairs.len());
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Vertex partition induced by thresholded reachability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPartition {
    /// components of size >= 2, each sorted, ordered by smallest vertex
    pub parts: Vec<Vec<u32>>,
    /// minimal pairwise beta inside each part (same indexing as parts)
    pub part_min_beta: Vec<Rational>,
    /// vertices in no part
    pub leftover: Vec<u32>,
}

/// Connected components of the auxiliary graph that joins u and v when
/// beta(u, v) >= beta_min. Singleton components become leftover.
pub fn reachability_partition(
    h: &Hypergraph,
    ell: usize,
    beta_min: &Rational,
    jobs: usize,
) -> Result<ClosedPartition, ReachabilityError> {
    let profiles = reachability_matrix(h, ell, jobs)?;
    let n = h.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in &profiles {
        if &p.beta >= beta_min {
            let (a, b) = (root(&mut parent, p.u as usize), root(&mut parent, p.v as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n {
        groups[root(&mut parent, v)].push(v as u32);
    }
    let mut parts = Vec::new();
    let mut leftover = Vec::new();
    for g in groups {
        match g.len() {
            0 => {}
            1 => leftover.push(g[0]),
            _ => parts.push(g),
        }
    }
    let mut part_min_beta = Vec::with_capacity(parts.len());
    for part in &parts {
        let members: BTreeSet<u32> = part.iter().copied().collect();
        let min = profiles
            .iter()
            .filter(|p| members.contains(&p.u) && members.contains(&p.v))
            .map(|p| p.beta.clone())
            .min()
            .expect("part has at least one pair");
        part_min_beta.push(min);
    }
    Ok(ClosedPartition {
        parts,
        part_min_beta,
        leftover,
    })
}

/// Among the given vertices, the pair whose links overlap the most,
/// together with that overlap size and the pair's full profile. Ties go
/// to the earliest pair in tuple order.
pub fn pigeonhole_pair(
    h: &Hypergraph,
    ell: usize,
    vertices: &[u32],
) -> Result<((u32, u32), u64, ReachabilityProfile), ReachabilityError> {
    if vertices.len() < 2 {
        return Err(ReachabilityError::TupleTooSmall);
    }
    let mut seen = BTreeSet::new();
    for &v in vertices {
        if v as usize >= h.n() {
            return Err(ReachabilityError::VertexRange { v, n: h.n() });
        }
        if !seen.insert(v) {
            return Err(ReachabilityError::DuplicateVertex { v });
        }
    }
    let mut best: Option<((u32, u32), u64)> = None;
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let overlap = h
                .edges()
                .iter()
                .filter(|e| e.contains(a))
                .filter(|e| {
                    let mut shifted = (*e).clone();
                    shifted.remove(a);
                    shifted.insert(b);
                    h.contains_edge(&shifted)
                })
                .count() as u64;
            if best.as_ref().is_none_or(|&(_, c)| overlap > c) {
                best = Some(((a, b), overlap));
            }
        }
    }
    let ((a, b), overlap) = best.unwrap();
    let profile = reachable_count(h, a, b, ell)?;
    Ok(((a, b), overlap, profile))
}
