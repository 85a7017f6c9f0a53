//! k-uniform hypergraphs on vertex set {0..n-1}.
//!
//! Edges are stored as bit masks in ascending numeric (= colex) order, so
//! membership is a binary search and the serialized form is canonical:
//! equal graphs produce byte-identical `.hg` files.
//!
//! The `.hg` text format: a header line `k n m`, then exactly `m` lines,
//! each holding `k` strictly increasing 0-based vertex indices.

use crate::bitset::VertexSet;
use crate::combin::binom_big;
use crate::rng::SplitMix64;
use num::BigInt;
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("need at least k={k} vertices, got n={n}")]
    TooFewVertices { k: usize, n: usize },
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    BadArity { edge: Vec<u32>, got: usize, expected: usize },
    #[error("vertex {v} out of range 0..{n}")]
    VertexRange { v: u32, n: usize },
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<u32> },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(k: usize, n: usize, mut edges: Vec<VertexSet>) -> Result<Self, GraphError> {
        if k < 2 {
            return Err(GraphError::BadUniformity(k));
        }
        if n < k {
            return Err(GraphError::TooFewVertices { k, n });
        }
        for e in &edges {
            let got = e.len();
            if got != k {
                return Err(GraphError::BadArity { edge: e.members(), got, expected: k });
            }
            if let Some(v) = e.iter().find(|&v| v as usize >= n) {
                return Err(GraphError::VertexRange { v, n });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { edge: w[0].members() });
        }
        Ok(Hypergraph { k, n, edges })
    }

    pub fn from_edge_lists(
        k: usize,
        n: usize,
        lists: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self, GraphError> {
        let edges = lists
            .into_iter()
            .map(|l| VertexSet::from_members(l))
            .collect();
        Hypergraph::new(k, n, edges)
    }

    pub fn complete(k: usize, n: usize) -> Result<Self, GraphError> {
        if k < 2 {
            return Err(GraphError::BadUniformity(k));
        }
        if n < k {
            return Err(GraphError::TooFewVertices { k, n });
        }
        let edges = crate::combin::colex_subsets(n as u32, k).collect();
        Ok(Hypergraph { k, n, edges })
    }

    /// Keeps each k-set independently with probability `num/den`,
    /// deterministically from the generator state.
    pub fn random(
        k: usize,
        n: usize,
        num: u64,
        den: u64,
        rng: &mut SplitMix64,
    ) -> Result<Self, GraphError> {
        if k < 2 {
            return Err(GraphError::BadUniformity(k));
        }
        if n < k {
            return Err(GraphError::TooFewVertices { k, n });
        }
        let edges = crate::combin::colex_subsets(n as u32, k)
            .filter(|_| rng.hit(num, den))
            .collect();
        Ok(Hypergraph { k, n, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &VertexSet) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Number of edges containing S. |S| may be anything up to k.
    pub fn degree(&self, s: &VertexSet) -> u64 {
        debug_assert!(s.len() <= self.k);
        self.edges.iter().filter(|e| s.is_subset_of(e)).count() as u64
    }

    /// deg(S) for every d-set S with positive degree.
    /// One pass over edges: each edge contributes to its C(k,d) subsets.
    pub fn degree_census(&self, d: usize) -> HashMap<VertexSet, u64> {
        assert!(d >= 1 && d < self.k, "census wants 1 <= d < k");
        let mut census: HashMap<VertexSet, u64> = HashMap::new();
        let mut scratch = Vec::with_capacity(self.k);
        for e in &self.edges {
            scratch.clear();
            scratch.extend(e.iter());
            for sub in subset_indices(self.k, d) {
                let s = VertexSet::from_members(sub.iter().map(|&i| scratch[i]));
                *census.entry(s).or_insert(0) += 1;
            }
        }
        census
    }

    /// Minimum d-degree over all C(n,d) d-sets.
    pub fn min_degree(&self, d: usize) -> u64 {
        assert!(d >= 1 && d < self.k, "min_degree wants 1 <= d < k");
        let census = self.degree_census(d);
        if BigInt::from(census.len()) < binom_big(self.n as u64, d as u64) {
            return 0;
        }
        census.values().copied().min().unwrap_or(0)
    }

    /// Link of S: the (k-|S|)-graph {e \ S : e an edge, S subset of e}
    /// on the same vertex set.
    pub fn link(&self, s: &VertexSet) -> Result<Hypergraph, GraphError> {
        let sz = s.len();
        if sz == 0 || sz + 2 > self.k {
            // need uniformity k-|S| >= 2
            return Err(GraphError::BadUniformity(self.k.saturating_sub(sz)));
        }
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| s.is_subset_of(e))
            .map(|e| e.difference(s))
            .collect();
        Hypergraph::new(self.k - sz, self.n, edges)
    }

    pub fn to_hg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.k, self.n, self.edges.len());
        for e in &self.edges {
            let mut first = true;
            for v in e.iter() {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
                first = false;
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_hg(text: &str) -> Result<Hypergraph, ParseError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| ParseError { line: 1, msg: "empty input".into() })?;
        let hdr: Vec<&str> = header.split_whitespace().collect();
        if hdr.len() != 3 {
            return Err(ParseError {
                line: 1,
                msg: format!("header must be `k n m`, got {} fields", hdr.len()),
            });
        }
        let parse_field = |s: &str, what: &str| -> Result<usize, ParseError> {
            s.parse().map_err(|_| ParseError {
                line: 1,
                msg: format!("bad {what} {s:?} in header"),
            })
        };
        let k = parse_field(hdr[0], "uniformity")?;
        let n = parse_field(hdr[1], "vertex count")?;
        let m = parse_field(hdr[2], "edge count")?;
        if k < 2 {
            return Err(ParseError { line: 1, msg: format!("uniformity {k} below 2") });
        }
        if n < k {
            return Err(ParseError {
                line: 1,
                msg: format!("vertex count {n} below uniformity {k}"),
            });
        }

        let mut edges = Vec::with_capacity(m);
        let mut seen: HashMap<VertexSet, usize> = HashMap::new();
        let mut got = 0usize;
        for (idx, raw) in lines {
            let lineno = idx + 1;
            if raw.trim().is_empty() {
                if got < m {
                    return Err(ParseError {
                        line: lineno,
                        msg: format!("blank line, expected edge {} of {m}", got + 1),
                    });
                }
                continue;
            }
            if got == m {
                return Err(ParseError {
                    line: lineno,
                    msg: format!("unexpected extra line, header promised {m} edges"),
                });
            }
            got += 1;
            let mut vs = Vec::with_capacity(k);
            for tok in raw.split_whitespace() {
                let v: u32 = tok.parse().map_err(|_| ParseError {
                    line: lineno,
                    msg: format!("bad vertex index {tok:?}"),
                })?;
                vs.push(v);
            }
            if vs.len() != k {
                return Err(ParseError {
                    line: lineno,
                    msg: format!("edge has {} vertices, expected {k}", vs.len()),
                });
            }
            if let Some(w) = vs.windows(2).find(|w| w[0] >= w[1]) {
                return Err(ParseError {
                    line: lineno,
                    msg: format!("vertices must be strictly increasing, saw {} then {}", w[0], w[1]),
                });
            }
            if let Some(&v) = vs.iter().find(|&&v| v as usize >= n) {
                return Err(ParseError {
                    line: lineno,
                    msg: format!("vertex {v} out of range 0..{n}"),
                });
            }
            let e = VertexSet::from_members(vs);
            if let Some(prev) = seen.insert(e.clone(), lineno) {
                return Err(ParseError {
                    line: lineno,
                    msg: format!("duplicate of edge on line {prev}"),
                });
            }
            edges.push(e);
        }
        if got < m {
            return Err(ParseError {
                line: text.lines().count() + 1,
                msg: format!("header promised {m} edges, found {got}"),
            });
        }
        edges.sort_unstable();
        Ok(Hypergraph { k, n, edges })
    }
}

/// All d-element index subsets of {0..k-1}, lexicographic. Small and hot:
/// used to fan edges out to their sub-tuples in the census.
fn subset_indices(k: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, k: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, d, cur, out);
            cur.pop();
        }
    }
    rec(0, k, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binom_u64;

    #[test]
    fn complete_graph_counts() {
        let h = Hypergraph::complete(3, 6).unwrap();
        assert_eq!(h.edge_count() as u64, binom_u64(6, 3));
        // every pair lies in n-2 edges
        assert_eq!(h.min_degree(1), binom_u64(5, 2));
        assert_eq!(h.min_degree(2), 4);
    }

    #[test]
    fn degree_census_agrees_with_direct_degree() {
        let mut rng = SplitMix64::new(11);
        let h = Hypergraph::random(3, 9, 1, 2, &mut rng).unwrap();
        let census = h.degree_census(2);
        for s in crate::combin::colex_subsets(9, 2) {
            let direct = h.degree(&s);
            assert_eq!(census.get(&s).copied().unwrap_or(0), direct);
        }
    }

    #[test]
    fn min_degree_zero_when_some_set_uncovered() {
        let h = Hypergraph::from_edge_lists(3, 6, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(h.min_degree(1), 0);
        assert_eq!(h.min_degree(2), 0);
    }

    #[test]
    fn link_edges_match_degree() {
        let mut rng = SplitMix64::new(5);
        let h = Hypergraph::random(4, 10, 2, 3, &mut rng).unwrap();
        let s = VertexSet::from_members([1, 4]);
        let link = h.link(&s).unwrap();
        assert_eq!(link.k(), 2);
        assert_eq!(link.edge_count() as u64, h.degree(&s));
        assert!(link.edges().iter().all(|e| e.is_disjoint(&s)));
    }

    #[test]
    fn hg_roundtrip_is_canonical() {
        let h = Hypergraph::from_edge_lists(3, 6, vec![vec![1, 2, 5], vec![0, 1, 2]]).unwrap();
        let text = h.to_hg();
        assert_eq!(text, "3 6 2\n0 1 2\n1 2 5\n");
        let back = Hypergraph::parse_hg(&text).unwrap();
        assert_eq!(h, back);
        assert_eq!(back.to_hg(), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Hypergraph::parse_hg("3 6 2\n0 1 2\n0 2 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.msg.contains("strictly increasing"));

        let err = Hypergraph::parse_hg("3 6 2\n0 1 2\n").unwrap_err();
        assert!(err.msg.contains("promised 2"));

        let err = Hypergraph::parse_hg("3 6 1\n0 1 9\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.msg.contains("out of range"));

        let err = Hypergraph::parse_hg("3 6 2\n0 1 2\n0 1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.msg.contains("duplicate"));

        let err = Hypergraph::parse_hg("3 6\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = Hypergraph::parse_hg("3 6 1\n0 1\n").unwrap_err();
        assert!(err.msg.contains("expected 3"));
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 6, vec![vec![0, 1]]),
            Err(GraphError::BadArity { .. })
        ));
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 6, vec![vec![0, 1, 6]]),
            Err(GraphError::VertexRange { v: 6, .. })
        ));
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 6, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(Hypergraph::complete(1, 5).is_err());
    }

    #[test]
    fn random_graph_is_seed_deterministic() {
        let a = Hypergraph::random(3, 10, 9, 10, &mut SplitMix64::new(77)).unwrap();
        let b = Hypergraph::random(3, 10, 9, 10, &mut SplitMix64::new(77)).unwrap();
        assert_eq!(a, b);
        let c = Hypergraph::random(3, 10, 9, 10, &mut SplitMix64::new(78)).unwrap();
        assert_ne!(a, c);
    }
}
