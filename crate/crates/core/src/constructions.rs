//! Extremal constructions: the space barrier, two-edge intersection
//! patterns, and the parity absorber gadget with its certificate checks.

use crate::bitset::VertexSet;
use crate::combin::{binom_big, colex_subsets};
use crate::hypergraph::{GraphError, Hypergraph};
use crate::paths::EllPath;
use num::BigInt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("overlap must satisfy 1 <= l < k, got l={ell} k={k}")]
    BadOverlap { k: usize, ell: usize },
    #[error("intersection size must satisfy 0 <= b < k, got b={b} k={k}")]
    BadIntersection { k: usize, b: usize },
    #[error("need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Barrier graph: fix A = first a vertices with a = ceil(n/(2(k-l))) - 1
/// and take every k-set meeting A. Any l-cycle window chain spends
/// vertices of A too fast to span, so no Hamilton l-cycle exists, yet
/// the minimum d-degree stays within O(n^{k-d-1}) of the Dirac bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceBarrierSpec {
    pub k: usize,
    pub ell: usize,
    pub n: usize,
    /// |A|
    pub a: usize,
}

impl SpaceBarrierSpec {
    pub fn new(k: usize, ell: usize, n: usize) -> Result<Self, ConstructionError> {
        if ell < 1 || ell >= k {
            return Err(ConstructionError::BadOverlap { k, ell });
        }
        if n < k {
            return Err(ConstructionError::TooSmall { need: k, got: n });
        }
        let a = n.div_ceil(2 * (k - ell)) - 1;
        Ok(SpaceBarrierSpec { k, ell, n, a })
    }

    pub fn part_a(&self) -> VertexSet {
        VertexSet::from_members(0..self.a as u32)
    }
}

pub fn space_barrier(k: usize, ell: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    let spec = SpaceBarrierSpec::new(k, ell, n)?;
    let a = spec.a as u32;
    let edges: Vec<VertexSet> = colex_subsets(n as u32, k)
        .filter(|s| s.iter().any(|v| v < a))
        .collect();
    Ok(Hypergraph::new(k, n, edges)?)
}

/// Minimum d-degree of the space barrier, closed form: a d-set disjoint
/// from A realizes it, with C(n-d, k-d) - C(n-a-d, k-d) completions.
pub fn space_barrier_min_degree(
    k: usize,
    ell: usize,
    n: usize,
    d: usize,
) -> Result<BigInt, ConstructionError> {
    let spec = SpaceBarrierSpec::new(k, ell, n)?;
    if d >= k {
        return Err(ConstructionError::BadOverlap { k, ell: d });
    }
    if n - spec.a < d {
        // every d-set meets A; minimum is attained meeting A exactly once
        // (cannot happen for n >= 2(k-l) >= 2a + 2; keep the guard honest)
        return Ok(binom_big((n - d) as u64, (k - d) as u64));
    }
    Ok(binom_big((n - d) as u64, (k - d) as u64)
        - binom_big((n - spec.a - d) as u64, (k - d) as u64))
}

/// Two k-edges sharing exactly b vertices, on vertices 0..2k-b-1,
/// embedded in an n-vertex graph (remaining vertices isolated).
pub fn pattern_y(k: usize, b: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    if b >= k {
        return Err(ConstructionError::BadIntersection { k, b });
    }
    let need = 2 * k - b;
    if n < need {
        return Err(ConstructionError::TooSmall { need, got: n });
    }
    let e1: Vec<u32> = (0..k as u32).collect();
    let e2: Vec<u32> = ((k - b) as u32..(2 * k - b) as u32).collect();
    Ok(Hypergraph::from_edge_lists(k, n, vec![e1, e2])?)
}

// ---------------------------------------------------------------------
// Absorber gadget

/// Two l-paths with identical ordered ends where the longer one covers
/// exactly k-l extra vertices. Splicing Q in place of P inside a cycle
/// absorbs those vertices; splicing P back releases them. The rainbow
/// coloring certifies the gadget embeds into any k-partite host with a
/// class-respecting map, one absorbed vertex per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub k: usize,
    pub ell: usize,
    /// edges: the windows of both paths
    pub graph: Hypergraph,
    pub path_p: EllPath,
    pub path_q: EllPath,
    /// S = V(Q) \ V(P), the vertices a splice absorbs
    pub absorbed: VertexSet,
    /// vertex -> class in 0..k
    pub coloring: Vec<u8>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("overlap must satisfy 1 <= l < k, got l={ell} k={k}")]
    BadOverlap { k: usize, ell: usize },
    #[error("k-l divides k; splices cannot shift the vertex count off the lattice")]
    DivisibleCase,
    #[error("no gadget in the searched family for k={k} l={ell}")]
    NotFound { k: usize, ell: usize },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GadgetViolation {
    #[error("path {which} is not a valid l-path in the gadget graph")]
    InvalidPath { which: char },
    #[error("paths have different ordered ends")]
    EndMismatch,
    #[error("V(Q) does not equal V(P) plus exactly k-l absorbed vertices")]
    BadAbsorbedSet,
    #[error("coloring is not a proper k-coloring with rainbow edges")]
    NotRainbow,
    #[error("color class {class} holds more than one absorbed vertex")]
    CrowdedClass { class: u8 },
    #[error("gadget has {got} vertices, above the k^4 cap of {cap}")]
    TooLarge { got: usize, cap: usize },
}

pub fn validate_gadget(g: &GadgetCertificate) -> Result<(), GadgetViolation> {
    let k = g.k;
    for (path, which) in [(&g.path_p, 'P'), (&g.path_q, 'Q')] {
        if path.k != k || path.ell != g.ell || !path.validate_in(&g.graph).valid {
            return Err(GadgetViolation::InvalidPath { which });
        }
    }
    if g.path_p.begin() != g.path_q.begin() || g.path_p.end() != g.path_q.end() {
        return Err(GadgetViolation::EndMismatch);
    }
    let vp = g.path_p.vertex_set();
    let vq = g.path_q.vertex_set();
    if g.absorbed.len() != k - g.ell
        || !vp.is_disjoint(&g.absorbed)
        || vp.union(&g.absorbed) != vq
    {
        return Err(GadgetViolation::BadAbsorbedSet);
    }
    if g.coloring.len() != g.graph.n() {
        return Err(GadgetViolation::NotRainbow);
    }
    for e in g.graph.edges() {
        let classes: std::collections::BTreeSet<u8> =
            e.iter().map(|v| g.coloring[v as usize]).collect();
        if classes.len() != k || classes.iter().any(|&c| c as usize >= k) {
            return Err(GadgetViolation::NotRainbow);
        }
    }
    let mut absorbed_per_class = vec![0usize; k];
    for v in g.absorbed.iter() {
        let c = g.coloring[v as usize];
        absorbed_per_class[c as usize] += 1;
        if absorbed_per_class[c as usize] > 1 {
            return Err(GadgetViolation::CrowdedClass { class: c });
        }
    }
    let cap = k * k * k * k;
    if g.graph.n() > cap {
        return Err(GadgetViolation::TooLarge { got: g.graph.n(), cap });
    }
    Ok(())
}

/// Searches a parametric family: P is the l-path on x_1..x_m with L
/// edges, Q widens it by one edge and routes each absorbed vertex into
/// the private slot of a chosen window (the slot at offset l, seen by
/// that window alone). L grows from k-l-1 and window choices run in
/// lexicographic order, so the first certificate that validates is the
/// smallest the family offers. Only 2l < k leaves private slots; wider
/// overlaps exhaust the family and report NotFound.
pub fn search_gadget(k: usize, ell: usize) -> Result<GadgetCertificate, GadgetError> {
    use itertools::Itertools;
    if ell < 1 || ell >= k {
        return Err(GadgetError::BadOverlap { k, ell });
    }
    let stride = k - ell;
    if k % stride == 0 {
        return Err(GadgetError::DivisibleCase);
    }
    if 2 * ell > k {
        return Err(GadgetError::NotFound { k, ell });
    }
    let cap = k * k * k * k;
    let mut p_edges = stride - 1;
    loop {
        let m = k + (p_edges - 1) * stride;
        let t = m + stride;
        if t > cap {
            return Err(GadgetError::NotFound { k, ell });
        }
        // Q has p_edges + 1 windows; pick which ones host a special.
        for choice in (0..=p_edges).combinations(stride) {
            if let Some(cert) = try_gadget(k, ell, m, &choice) {
                return Ok(cert);
            }
        }
        p_edges += 1;
    }
}

fn try_gadget(k: usize, ell: usize, m: usize, windows: &[usize]) -> Option<GadgetCertificate> {
    let stride = k - ell;
    let t = m + stride;
    let special_at: std::collections::BTreeMap<usize, u32> = windows
        .iter()
        .enumerate()
        .map(|(i, &w)| (w * stride + ell, (m + i) as u32))
        .collect();
    let mut q_order: Vec<u32> = Vec::with_capacity(t);
    let mut next_x = 0u32;
    for pos in 0..t {
        if let Some(&s) = special_at.get(&pos) {
            q_order.push(s);
        } else {
            q_order.push(next_x);
            next_x += 1;
        }
    }
    let x: Vec<u32> = (0..m as u32).collect();
    let s = VertexSet::from_members(m as u32..(m + stride) as u32);
    let path_p = EllPath::new(k, ell, x).ok()?;
    let path_q = EllPath::new(k, ell, q_order).ok()?;
    let mut edges: Vec<VertexSet> = path_p.windows().collect();
    for w in path_q.windows() {
        if !edges.contains(&w) {
            edges.push(w);
        }
    }
    let graph = Hypergraph::new(k, t, edges).ok()?;
    let coloring = rainbow_coloring(&graph, &s)?;
    let cert = GadgetCertificate {
        k,
        ell,
        graph,
        path_p,
        path_q,
        absorbed: s,
        coloring,
    };
    validate_gadget(&cert).ok()?;
    Some(cert)
}

/// Backtracking proper coloring with rainbow edges and at most one
/// special vertex per class; first solution in lexicographic order.
fn rainbow_coloring(h: &Hypergraph, special: &VertexSet) -> Option<Vec<u8>> {
    let k = h.k();
    let n = h.n();
    let mut colors: Vec<Option<u8>> = vec![None; n];
    let mut special_in_class = vec![false; k];
    fn rec(
        h: &Hypergraph,
        special: &VertexSet,
        colors: &mut Vec<Option<u8>>,
        special_in_class: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = h.n();
        if v == n {
            return true;
        }
        'next: for c in 0..h.k() as u8 {
            if special.contains(v as u32) && special_in_class[c as usize] {
                continue;
            }
            for e in h.edges() {
                if !e.contains(v as u32) {
                    continue;
                }
                for u in e.iter() {
                    if (u as usize) != v {
                        if let Some(cu) = colors[u as usize] {
                            if cu == c {
                                continue 'next;
                            }
                        }
                    }
                }
            }
            colors[v] = Some(c);
            if special.contains(v as u32) {
                special_in_class[c as usize] = true;
            }
            if rec(h, special, colors, special_in_class, v + 1) {
                return true;
            }
            colors[v] = None;
            if special.contains(v as u32) {
                special_in_class[c as usize] = false;
            }
        }
        false
    }
    if rec(h, special, &mut colors, &mut special_in_class, 0) {
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}
