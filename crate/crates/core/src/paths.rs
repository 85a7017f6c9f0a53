//! Loose paths and cycles.
//!
//! An `l`-path in a k-graph is a vertex sequence in which the edges are
//! the k-windows starting every k-l positions, so consecutive edges
//! overlap in exactly l vertices. An `l`-cycle is the cyclic analogue.
//! Ends of a path are its first and last l vertices, kept as ordered
//! tuples: two paths joined end to begin stay a path precisely when the
//! tuples agree elementwise, and all joining code relies on that.

use crate::bitset::VertexSet;
use crate::hypergraph::Hypergraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("overlap must satisfy 1 <= l < k, got l={ell} k={k}")]
    BadOverlap { k: usize, ell: usize },
    #[error("sequence of {got} vertices cannot be split into k-windows at stride {stride}")]
    BadLength { got: usize, stride: usize },
    #[error("vertex {0} repeats in the sequence")]
    Repeat(u32),
}

/// First reason a candidate fails against a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    UniformityMismatch { graph_k: usize, witness_k: usize },
    VertexRange { v: u32, n: usize },
    /// window at this edge index is not an edge of the graph
    MissingEdge { index: usize, window: VertexSet },
    /// cyclic neighbours overlap in the wrong number of vertices
    OverlapSize { index: usize, got: usize, expected: usize },
    /// a window revisits a vertex (cycle shorter than one window)
    WindowRepeat { index: usize },
    /// some vertex sits in more than two edges although l < k/2
    Crowded { v: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violation: Option<Violation>,
    pub edges_checked: usize,
}

impl ValidationReport {
    fn ok(edges: usize) -> Self {
        ValidationReport { valid: true, violation: None, edges_checked: edges }
    }

    fn fail(edges: usize, v: Violation) -> Self {
        ValidationReport { valid: false, violation: Some(v), edges_checked: edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename = "ell_path")]
pub struct EllPath {
    pub k: usize,
    pub ell: usize,
    pub order: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename = "ell_cycle")]
pub struct EllCycle {
    pub k: usize,
    pub ell: usize,
    pub order: Vec<u32>,
}

fn check_overlap(k: usize, ell: usize) -> Result<(), ShapeError> {
    if ell < 1 || ell >= k {
        return Err(ShapeError::BadOverlap { k, ell });
    }
    Ok(())
}

fn check_distinct(order: &[u32]) -> Result<(), ShapeError> {
    let mut seen = VertexSet::empty();
    for &v in order {
        if seen.contains(v) {
            return Err(ShapeError::Repeat(v));
        }
        seen.insert(v);
    }
    Ok(())
}

impl EllPath {
    pub fn new(k: usize, ell: usize, order: Vec<u32>) -> Result<Self, ShapeError> {
        check_overlap(k, ell)?;
        let stride = k - ell;
        if order.len() < k || (order.len() - k) % stride != 0 {
            return Err(ShapeError::BadLength { got: order.len(), stride });
        }
        check_distinct(&order)?;
        Ok(EllPath { k, ell, order })
    }

    /// Number of edges spanned.
    pub fn edge_len(&self) -> usize {
        (self.order.len() - self.k) / (self.k - self.ell) + 1
    }

    pub fn begin(&self) -> &[u32] {
        &self.order[..self.ell]
    }

    pub fn end(&self) -> &[u32] {
        &self.order[self.order.len() - self.ell..]
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_members(self.order.iter().copied())
    }

    /// Interior: everything but the two end tuples.
    pub fn interior(&self) -> &[u32] {
        &self.order[self.ell..self.order.len() - self.ell]
    }

    pub fn windows(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let stride = self.k - self.ell;
        (0..self.edge_len()).map(move |j| {
            VertexSet::from_members(self.order[j * stride..j * stride + self.k].iter().copied())
        })
    }

    /// Same path walked backwards; begin and end swap and each tuple
    /// reverses internally.
    pub fn reversed(&self) -> EllPath {
        let mut order = self.order.clone();
        order.reverse();
        EllPath { k: self.k, ell: self.ell, order }
    }

    pub fn validate_in(&self, h: &Hypergraph) -> ValidationReport {
        let total = self.edge_len();
        if h.k() != self.k {
            return ValidationReport::fail(
                0,
                Violation::UniformityMismatch { graph_k: h.k(), witness_k: self.k },
            );
        }
        if let Some(&v) = self.order.iter().find(|&&v| v as usize >= h.n()) {
            return ValidationReport::fail(0, Violation::VertexRange { v, n: h.n() });
        }
        for (i, w) in self.windows().enumerate() {
            if !h.contains_edge(&w) {
                return ValidationReport::fail(i, Violation::MissingEdge { index: i, window: w });
            }
        }
        ValidationReport::ok(total)
    }

    /// Join `self.end()` to `other.begin()`, which must agree as ordered
    /// tuples; the shared tuple is kept once. Every window of the result
    /// is a window of one of the inputs.
    pub fn concat(&self, other: &EllPath) -> Result<EllPath, ShapeError> {
        assert_eq!((self.k, self.ell), (other.k, other.ell), "incompatible paths");
        if self.end() != other.begin() {
            return Err(ShapeError::BadLength { got: other.order.len(), stride: self.k - self.ell });
        }
        let mut order = self.order.clone();
        order.extend_from_slice(&other.order[self.ell..]);
        EllPath::new(self.k, self.ell, order)
    }
}

impl EllCycle {
    pub fn new(k: usize, ell: usize, order: Vec<u32>) -> Result<Self, ShapeError> {
        check_overlap(k, ell)?;
        let stride = k - ell;
        if order.is_empty() || order.len() % stride != 0 {
            return Err(ShapeError::BadLength { got: order.len(), stride });
        }
        check_distinct(&order)?;
        Ok(EllCycle { k, ell, order })
    }

    pub fn edge_len(&self) -> usize {
        self.order.len() / (self.k - self.ell)
    }

    pub fn window(&self, j: usize) -> VertexSet {
        let m = self.order.len();
        let start = j * (self.k - self.ell);
        (0..self.k).map(|t| self.order[(start + t) % m]).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_members(self.order.iter().copied())
    }

    pub fn validate_in(&self, h: &Hypergraph) -> ValidationReport {
        if h.k() != self.k {
            return ValidationReport::fail(
                0,
                Violation::UniformityMismatch { graph_k: h.k(), witness_k: self.k },
            );
        }
        if let Some(&v) = self.order.iter().find(|&&v| v as usize >= h.n()) {
            return ValidationReport::fail(0, Violation::VertexRange { v, n: h.n() });
        }
        let q = self.edge_len();
        let mut windows = Vec::with_capacity(q);
        for j in 0..q {
            let w = self.window(j);
            if w.len() != self.k {
                // the sequence is so short the window lapped itself
                return ValidationReport::fail(j, Violation::WindowRepeat { index: j });
            }
            windows.push(w);
        }
        for (j, w) in windows.iter().enumerate() {
            if !h.contains_edge(w) {
                return ValidationReport::fail(
                    j,
                    Violation::MissingEdge { index: j, window: w.clone() },
                );
            }
        }
        for j in 0..q {
            let got = windows[j].intersect_len(&windows[(j + 1) % q]);
            if got != self.ell {
                return ValidationReport::fail(
                    j,
                    Violation::OverlapSize { index: j, got, expected: self.ell },
                );
            }
        }
        if 2 * self.ell < self.k {
            // each vertex lies in at most two edges here; count directly
            let mut hits = vec![0u8; h.n()];
            for w in &windows {
                for v in w.iter() {
                    hits[v as usize] += 1;
                    if hits[v as usize] > 2 {
                        return ValidationReport::fail(q, Violation::Crowded { v });
                    }
                }
            }
        }
        ValidationReport::ok(q)
    }

    /// Hamilton means spanning: every vertex of the graph used.
    pub fn is_hamilton(&self, h: &Hypergraph) -> bool {
        self.order.len() == h.n() && self.validate_in(h).valid
    }

    /// Lexicographically least sequence over all window-preserving
    /// rotations of the cycle and of its reversal. Equality of cycles
    /// means equal canonical forms.
    pub fn canonical_form(&self) -> Vec<u32> {
        let m = self.order.len();
        let stride = self.k - self.ell;
        let mut best: Option<Vec<u32>> = None;
        let mut consider = |seq: &[u32]| {
            let mut rot = Vec::with_capacity(m);
            for start in (0..m).step_by(stride) {
                rot.clear();
                rot.extend((0..m).map(|i| seq[(start + i) % m]));
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot.clone());
                }
            }
        };
        consider(&self.order);
        // Reversal moves window starts to positions = -k mod stride;
        // rotating left by (-k mod stride) realigns them to 0.
        let mut rev = self.order.clone();
        rev.reverse();
        let shift = (stride - self.k % stride) % stride;
        rev.rotate_left(shift);
        consider(&rev);
        best.unwrap()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConnectError {
    #[error("ends must be equal-length tuples of distinct vertices")]
    BadEnds,
    #[error("ends share a vertex")]
    Overlap,
    #[error("end tuples of length {ell} need 2*ell <= k, got k={k}")]
    WideEnds { k: usize, ell: usize },
    #[error("vertex {v} out of range for n={n}")]
    VertexRange { v: u32, n: usize },
}

/// Shortest l-path from `from` to `to` (as ordered ends, elementwise)
/// using at most `max_len` edges, interior avoiding `forbidden`; the
/// search per length is exhaustive, so None means no such path exists.
/// End vertices may appear in `forbidden` without effect.
pub fn connect(
    h: &Hypergraph,
    from: &[u32],
    to: &[u32],
    forbidden: &VertexSet,
    max_len: usize,
) -> Result<Option<EllPath>, ConnectError> {
    let k = h.k();
    let ell = from.len();
    if ell == 0 || to.len() != ell {
        return Err(ConnectError::BadEnds);
    }
    let s_set = VertexSet::from_members(from.iter().copied());
    let t_set = VertexSet::from_members(to.iter().copied());
    if s_set.len() != ell || t_set.len() != ell {
        return Err(ConnectError::BadEnds);
    }
    if !s_set.is_disjoint(&t_set) {
        return Err(ConnectError::Overlap);
    }
    if 2 * ell > k {
        return Err(ConnectError::WideEnds { k, ell });
    }
    if let Some(&v) = from.iter().chain(to).find(|&&v| v as usize >= h.n()) {
        return Err(ConnectError::VertexRange { v, n: h.n() });
    }
    let blocked = s_set.union(&t_set);
    for len in 1..=max_len {
        let total = ell + len * (k - ell);
        let mut order = Vec::with_capacity(total);
        order.extend_from_slice(from);
        if connect_dfs(h, to, forbidden, &mut blocked.clone(), &mut order, total) {
            let p = EllPath::new(k, ell, order).expect("search keeps path shape");
            debug_assert!(p.validate_in(h).valid);
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Fills `order` up to `total` vertices, last |to| forced to `to`,
/// interior ascending and window-pruned; true once complete.
fn connect_dfs(
    h: &Hypergraph,
    to: &[u32],
    forbidden: &VertexSet,
    used: &mut VertexSet,
    order: &mut Vec<u32>,
    total: usize,
) -> bool {
    let k = h.k();
    let stride = k - to.len();
    let pos = order.len();
    if pos == total {
        return true;
    }
    let window_done = |len: usize| len >= k && (len - k) % stride == 0;
    let place = |v: u32, used: &mut VertexSet, order: &mut Vec<u32>| -> bool {
        order.push(v);
        if window_done(order.len()) {
            let start = order.len() - k;
            let w = VertexSet::from_members(order[start..].iter().copied());
            if !h.contains_edge(&w) {
                order.pop();
                return false;
            }
        }
        used.insert(v);
        if connect_dfs(h, to, forbidden, used, order, total) {
            return true;
        }
        used.remove(v);
        order.pop();
        false
    };
    if pos >= total - to.len() {
        let v = to[pos - (total - to.len())];
        let mut scratch = used.clone();
        scratch.remove(v);
        return place(v, &mut scratch, order);
    }
    for v in 0..h.n() as u32 {
        if used.contains(v) || forbidden.contains(v) {
            continue;
        }
        if place(v, used, order) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(k: usize, n: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::from_edge_lists(k, n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn path_shape_arithmetic() {
        // k=3, l=1: lengths 3, 5, 7, ...
        assert!(EllPath::new(3, 1, vec![0, 1, 2]).is_ok());
        assert!(EllPath::new(3, 1, vec![0, 1, 2, 3, 4]).is_ok());
        assert!(matches!(
            EllPath::new(3, 1, vec![0, 1, 2, 3]),
            Err(ShapeError::BadLength { .. })
        ));
        assert!(matches!(
            EllPath::new(3, 1, vec![0, 1, 0, 3, 4]),
            Err(ShapeError::Repeat(0))
        ));
        assert!(EllPath::new(3, 3, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn single_edge_is_a_path_with_tuple_ends() {
        let p = EllPath::new(5, 2, vec![3, 1, 4, 0, 2]).unwrap();
        assert_eq!(p.edge_len(), 1);
        assert_eq!(p.begin(), &[3, 1]);
        assert_eq!(p.end(), &[0, 2]);
        let h = Hypergraph::complete(5, 6).unwrap();
        assert!(p.validate_in(&h).valid);
    }

    #[test]
    fn path_window_check_reports_first_missing_edge() {
        let h = graph(3, 7, &[&[0, 1, 2], &[2, 3, 4]]);
        let good = EllPath::new(3, 1, vec![0, 1, 2, 3, 4]).unwrap();
        assert!(good.validate_in(&h).valid);
        let bad = EllPath::new(3, 1, vec![0, 1, 2, 3, 5]).unwrap();
        let rep = bad.validate_in(&h);
        assert!(!rep.valid);
        assert_eq!(
            rep.violation,
            Some(Violation::MissingEdge {
                index: 1,
                window: VertexSet::from_members([2, 3, 5])
            })
        );
    }

    #[test]
    fn reversal_swaps_and_reverses_ends() {
        let p = EllPath::new(5, 2, vec![0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let r = p.reversed();
        assert_eq!(r.begin(), &[7, 6]);
        assert_eq!(r.end(), &[1, 0]);
        let h = Hypergraph::complete(5, 8).unwrap();
        assert!(r.validate_in(&h).valid);
    }

    #[test]
    fn concat_requires_exact_tuple_match() {
        let a = EllPath::new(3, 1, vec![0, 1, 2]).unwrap();
        let b = EllPath::new(3, 1, vec![2, 3, 4]).unwrap();
        let joined = a.concat(&b).unwrap();
        assert_eq!(joined.order, vec![0, 1, 2, 3, 4]);
        let c = EllPath::new(3, 1, vec![3, 2, 4]).unwrap();
        assert!(a.concat(&c).is_err());
    }

    #[test]
    fn two_edge_cycle_fails_overlap_check() {
        // k=5, l=2, six vertices: the two cyclic windows share 4 != 2.
        let h = Hypergraph::complete(5, 6).unwrap();
        let c = EllCycle::new(5, 2, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let rep = c.validate_in(&h);
        assert!(!rep.valid);
        assert!(matches!(rep.violation, Some(Violation::OverlapSize { got: 4, expected: 2, .. })));
    }

    #[test]
    fn loose_cycle_on_complete_graph() {
        let h = Hypergraph::complete(3, 8).unwrap();
        let c = EllCycle::new(3, 1, vec![0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let rep = c.validate_in(&h);
        assert!(rep.valid, "{:?}", rep.violation);
        assert_eq!(c.edge_len(), 4);
        assert!(c.is_hamilton(&h));
    }

    #[test]
    fn tight_cycle_accepted_when_l_exceeds_half() {
        // k=3, l=2 tight cycle on 5 vertices: every cyclic triple an edge.
        let h = Hypergraph::complete(3, 5).unwrap();
        let c = EllCycle::new(3, 2, vec![0, 1, 2, 3, 4]).unwrap();
        let rep = c.validate_in(&h);
        assert!(rep.valid, "{:?}", rep.violation);
        assert_eq!(c.edge_len(), 5);
    }

    #[test]
    fn cycle_too_short_laps_itself() {
        let h = Hypergraph::complete(3, 5).unwrap();
        let c = EllCycle::new(3, 2, vec![0, 1]).unwrap();
        let rep = c.validate_in(&h);
        assert!(matches!(rep.violation, Some(Violation::WindowRepeat { .. })));
    }

    #[test]
    fn canonical_form_collapses_rotation_and_reflection() {
        let base = EllCycle::new(3, 1, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let rotated = EllCycle::new(3, 1, vec![2, 3, 4, 5, 0, 1]).unwrap();
        assert_eq!(base.canonical_form(), rotated.canonical_form());
        let mut rev = base.order.clone();
        rev.reverse();
        rev.rotate_left(1);
        let reflected = EllCycle::new(3, 1, rev).unwrap();
        assert_eq!(base.canonical_form(), reflected.canonical_form());
        let other = EllCycle::new(3, 1, vec![0, 2, 1, 3, 4, 5]).unwrap();
        assert_ne!(base.canonical_form(), other.canonical_form());
    }

    #[test]
    fn canonical_form_reflection_keeps_windows_aligned() {
        // k=5, l=2, stride 3: realignment shift is 1, not k mod stride.
        let h = Hypergraph::complete(5, 9).unwrap();
        let c = EllCycle::new(5, 2, vec![0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert!(c.validate_in(&h).valid);
        let canon = EllCycle::new(5, 2, c.canonical_form()).unwrap();
        assert!(canon.validate_in(&h).valid, "canonical form must stay a valid cycle");
        let mut rev = c.order.clone();
        rev.reverse();
        rev.rotate_left(1);
        let reflected = EllCycle::new(5, 2, rev).unwrap();
        assert!(reflected.validate_in(&h).valid);
        assert_eq!(c.canonical_form(), reflected.canonical_form());
    }

    #[test]
    fn witness_json_shape() {
        let c = EllCycle::new(3, 1, vec![0, 1, 2, 3]).unwrap();
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(js, r#"{"type":"ell_cycle","k":3,"ell":1,"order":[0,1,2,3]}"#);
        let back: EllCycle = serde_json::from_str(&js).unwrap();
        assert_eq!(c, back);
        let p = EllPath::new(3, 1, vec![0, 1, 2]).unwrap();
        assert!(serde_json::to_string(&p).unwrap().contains(r#""type":"ell_path""#));
    }

    #[test]
    fn connect_complete_graph_any_ends() {
        let h = Hypergraph::complete(5, 14).unwrap();
        let p = connect(&h, &[0, 1], &[2, 3], &VertexSet::empty(), 2)
            .unwrap()
            .expect("complete graph connects everything");
        assert!(p.validate_in(&h).valid);
        assert_eq!(p.begin(), &[0, 1]);
        assert_eq!(p.end(), &[2, 3]);
        assert!(p.edge_len() <= 2);
    }

    #[test]
    fn connect_two_edge_fixture_returns_that_path() {
        let h = graph(3, 5, &[&[0, 1, 2], &[2, 3, 4]]);
        let p = connect(&h, &[0], &[4], &VertexSet::empty(), 2)
            .unwrap()
            .expect("the spliced path exists");
        assert_eq!(p.order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn connect_respects_forbidden_interior() {
        let h = graph(3, 5, &[&[0, 1, 2], &[2, 3, 4]]);
        let banned = VertexSet::singleton(1);
        assert_eq!(connect(&h, &[0], &[4], &banned, 2).unwrap(), None);
        // ends listed in forbidden are still usable as ends
        let lax = VertexSet::from_members([0, 4]);
        assert!(connect(&h, &[0], &[4], &lax, 2).unwrap().is_some());
    }

    #[test]
    fn connect_deepens_past_length_two() {
        let h = graph(3, 7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert_eq!(connect(&h, &[0], &[6], &VertexSet::empty(), 2).unwrap(), None);
        let p = connect(&h, &[0], &[6], &VertexSet::empty(), 3)
            .unwrap()
            .expect("three edges reach the far end");
        assert_eq!(p.order, vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(p.edge_len(), 3);
    }

    #[test]
    fn connect_prefers_fewer_edges() {
        let h = Hypergraph::complete(4, 10).unwrap();
        let p = connect(&h, &[0], &[1], &VertexSet::empty(), 3).unwrap().unwrap();
        assert_eq!(p.edge_len(), 1);
        assert_eq!(p.order.len(), 4);
    }

    #[test]
    fn connect_rejects_bad_ends() {
        let h = Hypergraph::complete(4, 10).unwrap();
        assert_eq!(
            connect(&h, &[0, 1], &[1, 2], &VertexSet::empty(), 2),
            Err(ConnectError::Overlap)
        );
        assert_eq!(
            connect(&h, &[0, 0], &[1, 2], &VertexSet::empty(), 2),
            Err(ConnectError::BadEnds)
        );
        assert_eq!(
            connect(&h, &[0], &[1, 2], &VertexSet::empty(), 2),
            Err(ConnectError::BadEnds)
        );
        assert_eq!(
            connect(&h, &[0, 1, 2], &[3, 4, 5], &VertexSet::empty(), 2),
            Err(ConnectError::WideEnds { k: 4, ell: 3 })
        );
        assert_eq!(
            connect(&h, &[0], &[99], &VertexSet::empty(), 2),
            Err(ConnectError::VertexRange { v: 99, n: 10 })
        );
    }

    #[test]
    fn connect_matches_witness_on_dense_random_graphs() {
        // edge-pair enumeration, the shadow witness, and connect itself
        // must agree on two-window reachability
        use crate::rng::SplitMix64;
        use crate::shadows::shadow_intersection_witness;
        let zero = crate::combin::rational(0, 1);
        let mut rng = SplitMix64::new(2024);
        for trial in 0..40u32 {
            let h = Hypergraph::random(4, 10, 4, 5, &mut rng).unwrap();
            let s = [trial % 5, 5 + trial % 3];
            let t = [2 + trial % 3, 8 + trial % 2];
            if s.iter().any(|v| t.contains(v)) {
                continue;
            }
            let s_set = VertexSet::from_members(s);
            let t_set = VertexSet::from_members(t);
            let pairwise = h.edges().iter().any(|e1| {
                s_set.is_subset_of(e1)
                    && e1.is_disjoint(&t_set)
                    && h.edges().iter().any(|e2| {
                        t_set.is_subset_of(e2)
                            && e2.is_disjoint(&s_set)
                            && e1.intersect_len(e2) == 2
                    })
            });
            let witnessed = shadow_intersection_witness(&h, &s, &t, &zero)
                .unwrap()
                .is_some();
            assert_eq!(pairwise, witnessed, "trial {trial}");
            if witnessed {
                let p = connect(&h, &s, &t, &VertexSet::empty(), 2)
                    .unwrap()
                    .expect("witness implies a connection");
                assert!(p.validate_in(&h).valid);
                assert_eq!((p.begin(), p.end()), (&s[..], &t[..]));
            }
        }
    }
}
