//! S-absorbers: ordered tuples spanning two interchangeable path families.
//!
//! An absorber for a (k-l)-set S is a family of vertex-disjoint l-paths
//! together with an alternative family covering the same vertices plus S,
//! where paths match up pairwise with equal ordered ends. Swapping the
//! families inside a longer path therefore swallows S without disturbing
//! anything outside the absorber.
//!
//! The shape used here: one embedded copy of the abstract (k, l) gadget
//! whose special vertices w_1..w_{k-l} can leave its spanning path, plus
//! one swapper per target vertex, a witness set T_i spanning a length-two
//! path through w_i and another through v_i with identical ends. The
//! without-S state routes w_i through the swapper and runs the gadget
//! path over the rest; the with-S state puts v_i into the swapper and
//! returns w_i into the full gadget path.

use crate::bitset::VertexSet;
use crate::constructions::{search_gadget, GadgetCertificate, GadgetError};
use crate::hypergraph::Hypergraph;
use crate::paths::EllPath;
use itertools::Itertools;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AbsorberError {
    #[error("absorbers need 2*ell < k, got k={k} ell={ell}")]
    WideOverlap { k: usize, ell: usize },
    #[error("target must have k-ell={expected} vertices, got {got}")]
    TargetSize { expected: usize, got: usize },
    #[error("vertex {v} out of range for n={n}")]
    VertexRange { v: u32, n: usize },
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbsorberViolation {
    FamilySizeMismatch { with: usize, without: usize },
    WrongShape { family: &'static str, index: usize },
    InvalidPath { family: &'static str, index: usize },
    OverlappingPaths { family: &'static str, index: usize },
    EndMismatch { index: usize },
    BadVertexBalance,
}

/// Both states of one absorber. `tuple` lists the gadget image followed
/// by each witness set; `with_target` covers tuple plus target,
/// `without_target` covers exactly tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Absorber {
    pub target: VertexSet,
    pub tuple: Vec<u32>,
    pub with_target: Vec<EllPath>,
    pub without_target: Vec<EllPath>,
}

/// All ordered-end realizations of length-two l-paths spanning exactly
/// `span`, keyed by (begin, end) tuple pair, each mapped to one full
/// vertex order realizing it. Ends containing `skip` are dropped.
pub fn spanning_orders(
    h: &Hypergraph,
    span: &VertexSet,
    ell: usize,
    skip: Option<u32>,
) -> BTreeMap<(Vec<u32>, Vec<u32>), Vec<u32>> {
    let inside: Vec<&VertexSet> = h.edges().iter().filter(|e| e.is_subset_of(span)).collect();
    let mut out: BTreeMap<(Vec<u32>, Vec<u32>), Vec<u32>> = BTreeMap::new();
    for e1 in &inside {
        for e2 in &inside {
            pair_spanning_orders(e1, e2, ell, skip, &mut out);
        }
    }
    out
}

/// Realizations of e1, e2 as the first and second window of a length-two
/// l-path, merged into `out` keyed by ordered (begin, end); existing
/// keys are kept. No-op unless the edges overlap in exactly l vertices.
pub fn pair_spanning_orders(
    e1: &VertexSet,
    e2: &VertexSet,
    ell: usize,
    skip: Option<u32>,
    out: &mut BTreeMap<(Vec<u32>, Vec<u32>), Vec<u32>>,
) {
    let k = e1.len();
    let s = k - ell;
    if e1 == e2 || e1.intersect_len(e2) != ell {
        return;
    }
    let hit = |t: &[u32]| skip.is_some_and(|x| t.contains(&x));
    let p1 = e1.difference(e2).members();
    let p2 = e1.intersection(e2).members();
    let p3 = e2.difference(e1).members();
    if ell <= s {
        for b in p1.iter().copied().permutations(ell) {
            if hit(&b) {
                continue;
            }
            let rest1: Vec<u32> = p1.iter().copied().filter(|x| !b.contains(x)).collect();
            for e in p3.iter().copied().permutations(ell) {
                if hit(&e) {
                    continue;
                }
                let rest3: Vec<u32> = p3.iter().copied().filter(|x| !e.contains(x)).collect();
                out.entry((b.clone(), e.clone())).or_insert_with(|| {
                    let mut order = b.clone();
                    order.extend(rest1.iter());
                    order.extend(p2.iter());
                    order.extend(rest3.iter());
                    order.extend(e.iter());
                    order
                });
            }
        }
    } else {
        // ends reach into the shared middle zone
        for pb in p1.iter().copied().permutations(s) {
            for mid in p2.iter().copied().permutations(ell) {
                let b: Vec<u32> = pb.iter().chain(mid[..ell - s].iter()).copied().collect();
                if hit(&b) {
                    continue;
                }
                for pe in p3.iter().copied().permutations(s) {
                    let e: Vec<u32> = mid[s..].iter().chain(pe.iter()).copied().collect();
                    if hit(&e) {
                        continue;
                    }
                    out.entry((b.clone(), e)).or_insert_with(|| {
                        pb.iter().chain(mid.iter()).chain(pe.iter()).copied().collect()
                    });
                }
            }
        }
    }
}

/// A length-two path spanning `span` with the given ordered ends, if any.
pub fn end_matched_order(
    h: &Hypergraph,
    span: &VertexSet,
    ell: usize,
    begin: &[u32],
    end: &[u32],
) -> Option<Vec<u32>> {
    spanning_orders(h, span, ell, None)
        .remove(&(begin.to_vec(), end.to_vec()))
}

/// One direct swap witness: T spans a length-two path through v and
/// another through w with identical ordered ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapWitness {
    pub t: VertexSet,
    pub order_v: Vec<u32>,
    pub order_w: Vec<u32>,
}

/// First swap witness for (v, w) whose witness set avoids `banned`,
/// scanning witness sets in lexicographic order.
pub fn swap_witness(
    h: &Hypergraph,
    ell: usize,
    v: u32,
    w: u32,
    banned: &VertexSet,
) -> Option<SwapWitness> {
    let k = h.k();
    let m = 2 * k - ell - 1;
    let ground: Vec<u32> = (0..h.n() as u32)
        .filter(|&x| x != v && x != w && !banned.contains(x))
        .collect();
    if ground.len() < m {
        return None;
    }
    for t in ground.iter().copied().combinations(m) {
        let mut span_v = VertexSet::from_members(t.iter().copied());
        let mut span_w = span_v.clone();
        span_v.insert(v);
        span_w.insert(w);
        let orders_v = spanning_orders(h, &span_v, ell, Some(v));
        if orders_v.is_empty() {
            continue;
        }
        let orders_w = spanning_orders(h, &span_w, ell, Some(w));
        for (key, order_v) in &orders_v {
            if let Some(order_w) = orders_w.get(key) {
                return Some(SwapWitness {
                    t: VertexSet::from_members(t),
                    order_v: order_v.clone(),
                    order_w: order_w.clone(),
                });
            }
        }
    }
    None
}

/// Runs `visit` on every injective embedding of the gadget into `h`
/// avoiding `banned`, in lexicographic image order, until it returns
/// true. Embeddings map gadget vertex j to image phi[j] and must send
/// every gadget edge to an edge of `h`.
pub fn for_each_gadget_embedding(
    h: &Hypergraph,
    gadget: &GadgetCertificate,
    banned: &VertexSet,
    visit: &mut impl FnMut(&[u32]) -> bool,
) {
    let ascending: Vec<u32> = (0..h.n() as u32).collect();
    for_each_gadget_embedding_in_order(h, gadget, banned, &ascending, visit);
}

/// As `for_each_gadget_embedding`, but images are tried in the order
/// given by `candidates` (entries outside it are never used).
pub fn for_each_gadget_embedding_in_order(
    h: &Hypergraph,
    gadget: &GadgetCertificate,
    banned: &VertexSet,
    candidates: &[u32],
    visit: &mut impl FnMut(&[u32]) -> bool,
) {
    let r = gadget.graph.n();
    // abstract edges grouped by their largest vertex, checked as soon
    // as that vertex is assigned
    let mut edges_by_max: Vec<Vec<&VertexSet>> = vec![Vec::new(); r];
    for e in gadget.graph.edges() {
        let hi = e.iter().max().expect("nonempty edge") as usize;
        edges_by_max[hi].push(e);
    }
    let mut phi = vec![0u32; r];
    let mut used = banned.clone();
    fn rec(
        h: &Hypergraph,
        edges_by_max: &[Vec<&VertexSet>],
        candidates: &[u32],
        phi: &mut Vec<u32>,
        used: &mut VertexSet,
        depth: usize,
        visit: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if depth == phi.len() {
            return visit(phi);
        }
        for &cand in candidates {
            if used.contains(cand) {
                continue;
            }
            phi[depth] = cand;
            let ok = edges_by_max[depth].iter().all(|e| {
                let image = VertexSet::from_members(e.iter().map(|a| phi[a as usize]));
                h.contains_edge(&image)
            });
            if ok {
                used.insert(cand);
                let stop = rec(h, edges_by_max, candidates, phi, used, depth + 1, visit);
                used.remove(cand);
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(h, &edges_by_max, candidates, &mut phi, &mut used, 0, visit);
}

/// Checks the swap contract: equal family sizes, every path a valid
/// l-path in `h` with the family vertex-disjoint, per-index ordered
/// ends equal, and with-vertices = without-vertices plus target exactly.
pub fn validate_absorber(
    h: &Hypergraph,
    ell: usize,
    a: &Absorber,
) -> Result<(), AbsorberViolation> {
    if a.with_target.len() != a.without_target.len() || a.with_target.is_empty() {
        return Err(AbsorberViolation::FamilySizeMismatch {
            with: a.with_target.len(),
            without: a.without_target.len(),
        });
    }
    for (name, family) in [("with", &a.with_target), ("without", &a.without_target)] {
        let mut seen = VertexSet::empty();
        for (i, p) in family.iter().enumerate() {
            if p.k != h.k() || p.ell != ell {
                return Err(AbsorberViolation::WrongShape { family: name, index: i });
            }
            if !p.validate_in(h).valid {
                return Err(AbsorberViolation::InvalidPath { family: name, index: i });
            }
            let vs = p.vertex_set();
            if !seen.is_disjoint(&vs) {
                return Err(AbsorberViolation::OverlappingPaths { family: name, index: i });
            }
            seen = seen.union(&vs);
        }
    }
    for (i, (p, q)) in a.with_target.iter().zip(&a.without_target).enumerate() {
        if p.begin() != q.begin() || p.end() != q.end() {
            return Err(AbsorberViolation::EndMismatch { index: i });
        }
    }
    let with_set = a
        .with_target
        .iter()
        .fold(VertexSet::empty(), |acc, p| acc.union(&p.vertex_set()));
    let without_set = a
        .without_target
        .iter()
        .fold(VertexSet::empty(), |acc, p| acc.union(&p.vertex_set()));
    let balanced = without_set.is_disjoint(&a.target)
        && without_set.union(&a.target) == with_set
        && with_set.len() == without_set.len() + a.target.len();
    if !balanced {
        return Err(AbsorberViolation::BadVertexBalance);
    }
    Ok(())
}

/// Enumerates absorbers for `target`: one per (gadget embedding, target
/// assignment) that admits greedy swap witnesses, in deterministic
/// order, stopping at `limit`.
pub fn find_absorbers(
    h: &Hypergraph,
    ell: usize,
    target: &VertexSet,
    limit: usize,
) -> Result<Vec<Absorber>, AbsorberError> {
    let k = h.k();
    if 2 * ell >= k {
        return Err(AbsorberError::WideOverlap { k, ell });
    }
    if target.len() != k - ell {
        return Err(AbsorberError::TargetSize {
            expected: k - ell,
            got: target.len(),
        });
    }
    if let Some(v) = target.iter().find(|&v| v as usize >= h.n()) {
        return Err(AbsorberError::VertexRange { v, n: h.n() });
    }
    let gadget = search_gadget(k, ell)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let targets = target.members();
    for_each_gadget_embedding(h, &gadget, target, &mut |phi| {
        if let Some(a) = absorber_at(h, ell, &gadget, phi, target, &targets) {
            debug_assert!(validate_absorber(h, ell, &a).is_ok());
            out.push(a);
        }
        out.len() >= limit
    });
    Ok(out)
}

/// Tries every assignment of target vertices to the embedded special
/// vertices, taking greedy swap witnesses; first success wins.
fn absorber_at(
    h: &Hypergraph,
    ell: usize,
    gadget: &GadgetCertificate,
    phi: &[u32],
    target: &VertexSet,
    targets: &[u32],
) -> Option<Absorber> {
    let k = h.k();
    let image = VertexSet::from_members(phi.iter().copied());
    let w: Vec<u32> = gadget
        .absorbed
        .iter()
        .map(|a| phi[a as usize])
        .collect();
    'assignment: for vs in targets.iter().copied().permutations(targets.len()) {
        let mut banned = image.union(target);
        let mut witnesses = Vec::with_capacity(vs.len());
        for (&wi, &vi) in w.iter().zip(&vs) {
            match swap_witness(h, ell, vi, wi, &banned) {
                Some(sw) => {
                    banned = banned.union(&sw.t);
                    witnesses.push(sw);
                }
                None => continue 'assignment,
            }
        }
        let map = |p: &EllPath| -> EllPath {
            let order = p.order.iter().map(|&a| phi[a as usize]).collect();
            EllPath::new(k, ell, order).expect("mapped gadget path keeps its shape")
        };
        let mut tuple = phi.to_vec();
        let mut with_target = Vec::with_capacity(witnesses.len() + 1);
        let mut without_target = Vec::with_capacity(witnesses.len() + 1);
        for sw in witnesses {
            tuple.extend(sw.t.iter());
            with_target.push(EllPath::new(k, ell, sw.order_v).expect("witness path shape"));
            without_target.push(EllPath::new(k, ell, sw.order_w).expect("witness path shape"));
        }
        with_target.push(map(&gadget.path_q));
        without_target.push(map(&gadget.path_p));
        return Some(Absorber {
            target: target.clone(),
            tuple,
            with_target,
            without_target,
        });
    }
    None
}
