//! Tilings by two-edge patterns: copy enumeration, exact fractional
//! relaxation with dual certificates, branch-and-bound for the integral
//! optimum, and edge index-vector statistics over vertex partitions.

use crate::bitset::VertexSet;
use crate::combin::{gen_binom, rational_int, Rational};
use crate::hypergraph::Hypergraph;
use crate::lp;
use num::{BigInt, One};
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TilingError {
    #[error("intersection size must satisfy 0 <= b < k, got b={b} k={k}")]
    BadIntersection { k: usize, b: usize },
    #[error("parts must partition the vertex set")]
    BadPartition,
    #[error(transparent)]
    Lp(#[from] lp::LpError),
}

/// Vertex sets spanning two edges that share exactly b vertices,
/// deduplicated and ascending. Only the union matters for tilings, so
/// each (2k-b)-set appears once however many edge pairs realize it.
pub fn y_copies(h: &Hypergraph, b: usize) -> Result<Vec<VertexSet>, TilingError> {
    let k = h.k();
    if b >= k {
        return Err(TilingError::BadIntersection { k, b });
    }
    let edges = h.edges();
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    for (i, e1) in edges.iter().enumerate() {
        for e2 in edges.iter().skip(i + 1) {
            if e1.intersect_len(e2) == b {
                seen.insert(e1.union(e2));
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalTiling {
    pub copies: Vec<VertexSet>,
    pub weights: Vec<Rational>,
    pub value: Rational,
    /// vertex weights certifying optimality: sum equals value and every
    /// copy collects at least 1
    pub dual: Vec<Rational>,
}

/// Exact maximum of sum(w) over copy weights w >= 0 with total weight
/// at most 1 at every vertex.
pub fn max_fractional_y_tiling(
    h: &Hypergraph,
    b: usize,
) -> Result<FractionalTiling, TilingError> {
    let copies = y_copies(h, b)?;
    let n = h.n();
    let costs = vec![rational_int(1); copies.len()];
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
    for (ci, c) in copies.iter().enumerate() {
        for v in c.iter() {
            rows[v as usize].push((ci, rational_int(1)));
        }
    }
    let rhs = vec![rational_int(1); n];
    let sol = lp::maximize(&costs, &rows, &rhs)?;
    Ok(FractionalTiling {
        copies,
        weights: sol.primal,
        value: sol.value,
        dual: sol.dual,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingOutcome {
    pub tiles: Vec<VertexSet>,
    /// true when the search tree was exhausted (or the fractional bound
    /// pinched), so |tiles| is the true maximum
    pub optimal: bool,
    pub nodes: u64,
}

/// Maximum number of vertex-disjoint copies, by branch and bound:
/// branch on the lowest undecided vertex (cover it by some copy or
/// leave it uncovered forever), prune with the counting bound and the
/// fractional optimum at the root.
pub fn max_y_tiling(h: &Hypergraph, b: usize, budget: u64) -> Result<TilingOutcome, TilingError> {
    let copies = y_copies(h, b)?;
    let p = 2 * h.k() - b;
    let n = h.n();
    let frac = max_fractional_y_tiling(h, b)?;
    let root_bound: u64 = frac.value.floor().to_integer().try_into().unwrap_or(u64::MAX);

    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in copies.iter().enumerate() {
        for v in c.iter() {
            by_vertex[v as usize].push(ci);
        }
    }

    // greedy incumbent
    let mut best: Vec<usize> = Vec::new();
    {
        let mut covered = VertexSet::empty();
        for (ci, c) in copies.iter().enumerate() {
            if c.is_disjoint(&covered) {
                covered = covered.union(c);
                best.push(ci);
            }
        }
    }

    struct Search<'a> {
        copies: &'a [VertexSet],
        by_vertex: &'a [Vec<usize>],
        n: usize,
        p: usize,
        budget: u64,
        nodes: u64,
        aborted: bool,
        best: Vec<usize>,
        root_bound: u64,
    }
    impl Search<'_> {
        fn rec(&mut self, covered: &VertexSet, skipped: &VertexSet, cur: &mut Vec<usize>) {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.aborted = true;
                return;
            }
            if cur.len() > self.best.len() {
                self.best = cur.clone();
            }
            if self.best.len() as u64 >= self.root_bound {
                return;
            }
            let decided = covered.union(skipped);
            let Some(v) = (0..self.n as u32).find(|&v| !decided.contains(v)) else {
                return;
            };
            let free = self.n - decided.len();
            if cur.len() + free / self.p <= self.best.len() {
                return;
            }
            for &ci in &self.by_vertex[v as usize] {
                let c = &self.copies[ci];
                if c.is_disjoint(&decided) {
                    cur.push(ci);
                    let covered2 = covered.union(c);
                    self.rec(&covered2, skipped, cur);
                    cur.pop();
                    if self.aborted || self.best.len() as u64 >= self.root_bound {
                        return;
                    }
                }
            }
            let mut skipped2 = skipped.clone();
            skipped2.insert(v);
            self.rec(covered, &skipped2, cur);
        }
    }

    let mut s = Search {
        copies: &copies,
        by_vertex: &by_vertex,
        n,
        p,
        budget,
        nodes: 0,
        aborted: false,
        best,
        root_bound,
    };
    if (s.best.len() as u64) < root_bound {
        let mut cur = Vec::new();
        s.rec(&VertexSet::empty(), &VertexSet::empty(), &mut cur);
    }
    let optimal = !s.aborted;
    Ok(TilingOutcome {
        tiles: s.best.iter().map(|&ci| copies[ci].clone()).collect(),
        optimal,
        nodes: s.nodes,
    })
}

// ---------------------------------------------------------------------
// index vectors

fn check_partition(n: usize, parts: &[VertexSet]) -> Result<(), TilingError> {
    let mut union = VertexSet::empty();
    let mut total = 0;
    for p in parts {
        total += p.len();
        union = union.union(p);
    }
    if total != n || union != VertexSet::from_members(0..n as u32) {
        return Err(TilingError::BadPartition);
    }
    Ok(())
}

/// How many edges realize each composition of k over the parts.
pub fn edge_vector_census(
    h: &Hypergraph,
    parts: &[VertexSet],
) -> Result<HashMap<Vec<usize>, u64>, TilingError> {
    check_partition(h.n(), parts)?;
    let mut census: HashMap<Vec<usize>, u64> = HashMap::new();
    for e in h.edges() {
        let vec: Vec<usize> = parts.iter().map(|p| e.intersect_len(p)).collect();
        *census.entry(vec).or_insert(0) += 1;
    }
    Ok(census)
}

/// Index vectors realized by more than mu * n^k edges, sorted.
pub fn robust_edge_vectors(
    h: &Hypergraph,
    parts: &[VertexSet],
    mu: &Rational,
) -> Result<Vec<Vec<usize>>, TilingError> {
    let census = edge_vector_census(h, parts)?;
    let threshold_num = mu.numer() * BigInt::from(h.n()).pow(h.k() as u32);
    let mut out: Vec<Vec<usize>> = census
        .into_iter()
        .filter(|(_, count)| BigInt::from(*count) * mu.denom() > threshold_num)
        .map(|(v, _)| v)
        .collect();
    out.sort();
    Ok(out)
}

/// The robust vector with the largest census, ties to the
/// lexicographically smallest vector.
pub fn dominant_edge_vector(
    h: &Hypergraph,
    parts: &[VertexSet],
    mu: &Rational,
) -> Result<Option<Vec<usize>>, TilingError> {
    let census = edge_vector_census(h, parts)?;
    let threshold_num = mu.numer() * BigInt::from(h.n()).pow(h.k() as u32);
    let mut entries: Vec<(Vec<usize>, u64)> = census
        .into_iter()
        .filter(|(_, count)| BigInt::from(*count) * mu.denom() > threshold_num)
        .collect();
    entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(entries.into_iter().next().map(|(v, _)| v))
}

// ---------------------------------------------------------------------
// degree bounds for pair-pattern tilings of 3-graphs

/// Extremal vertex-degree curve: the larger of a clique of 4*alpha*n
/// vertices and everything meeting a set of alpha*n vertices, padded by
/// gamma * n^3. Generalized binomials keep fractional arguments exact.
pub fn y_tiling_degree_bound(n: u64, alpha: &Rational, gamma: &Rational) -> Rational {
    let nn = rational_int(n as i64);
    let four_alpha_n = Rational::from(BigInt::from(4)) * alpha * &nn;
    let clique = gen_binom(&four_alpha_n, 3);
    let keep = &nn - alpha * &nn;
    let meeting = gen_binom(&nn, 3) - gen_binom(&keep, 3);
    let base = if clique >= meeting { clique } else { meeting };
    base + gamma * &nn * &nn * &nn
}

/// Limit of the bound over C(n,3): max{(4 alpha)^3, 1 - (1 - alpha)^3}.
pub fn y_tiling_degree_limit(alpha: &Rational) -> Rational {
    let four_alpha = Rational::from(BigInt::from(4)) * alpha;
    let clique = &four_alpha * &four_alpha * &four_alpha;
    let rest = Rational::one() - alpha;
    let meeting = Rational::one() - &rest * &rest * &rest;
    if clique >= meeting {
        clique
    } else {
        meeting
    }
}
