//! Exact Hamilton l-cycle search.
//!
//! A spanning l-cycle on n = q(k-l) vertices decomposes into q blocks of
//! k-l vertices; window j is block j plus the first l vertices of block
//! j+1. The solver extends block by block, tracking only the data future
//! windows can see. For l <= k/2 that is (used set, pending overlap set):
//! states that failed once are memoized, which collapses the orderings
//! that plague the naive permutation search and lets exhaustion proofs
//! finish. For l > k/2 windows straddle several blocks, so an ordered
//! variant keeps the visible prefix and suffix tuples in the state.
//!
//! Search is complete: `NoneProven` is returned only after the whole
//! (memoized) tree is exhausted within budget. Budget counts decision
//! nodes, not time, so runs are reproducible.

use crate::bitset::VertexSet;
use crate::hypergraph::Hypergraph;
use crate::paths::EllCycle;
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonOutcome {
    Found(EllCycle),
    NoneProven { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("overlap must satisfy 1 <= l < k, got l={ell} k={k}")]
    BadOverlap { k: usize, ell: usize },
}

pub fn find_hamilton_cycle(
    h: &Hypergraph,
    ell: usize,
    budget: u64,
) -> Result<HamiltonOutcome, SolverError> {
    let k = h.k();
    if ell < 1 || ell >= k {
        return Err(SolverError::BadOverlap { k, ell });
    }
    let stride = k - ell;
    let n = h.n();
    if n % stride != 0 {
        // q = n/(k-l) edges would be needed; impossible off the lattice.
        return Ok(HamiltonOutcome::NoneProven { nodes: 0 });
    }
    let q = n / stride;
    // q = 1 laps a window around itself, q = 2 forces the two windows to
    // share 2l > l vertices (or lap); both are structurally impossible.
    if q < 3 || n < k {
        return Ok(HamiltonOutcome::NoneProven { nodes: 0 });
    }
    if h.edge_count() < q {
        return Ok(HamiltonOutcome::NoneProven { nodes: 0 });
    }
    if 2 * ell <= k {
        Ok(BlockSolver::new(h, ell, budget).run())
    } else {
        Ok(OrderedSolver::new(h, ell, budget).run())
    }
}

fn ell_subsets(set: &VertexSet, ell: usize) -> Vec<VertexSet> {
    let members = set.members();
    let mut out = Vec::new();
    let mut idx = vec![0usize; ell];
    fn rec(
        members: &[u32],
        ell: usize,
        start: usize,
        depth: usize,
        idx: &mut [usize],
        out: &mut Vec<VertexSet>,
    ) {
        if depth == ell {
            out.push(VertexSet::from_members(idx.iter().map(|&i| members[i])));
            return;
        }
        for i in start..members.len() {
            idx[depth] = i;
            rec(members, ell, i + 1, depth + 1, idx, out);
        }
    }
    rec(&members, ell, 0, 0, &mut idx, &mut out);
    out
}

// ---------------------------------------------------------------------
// l <= k/2: set-state solver

struct BlockSolver<'a> {
    h: &'a Hypergraph,
    ell: usize,
    q: usize,
    full: VertexSet,
    /// l-set -> indices of edges containing it
    ell_index: HashMap<VertexSet, Vec<u32>>,
    edges_by_vertex: Vec<Vec<u32>>,
    budget: u64,
    nodes: u64,
    aborted: bool,
    memo: HashSet<(VertexSet, VertexSet)>,
    anchor: VertexSet,
    /// (F_j, L_{j+1}) per extension, for witness reconstruction
    trail: Vec<(VertexSet, VertexSet)>,
}

impl<'a> BlockSolver<'a> {
    fn new(h: &'a Hypergraph, ell: usize, budget: u64) -> Self {
        let mut ell_index: HashMap<VertexSet, Vec<u32>> = HashMap::new();
        for (i, e) in h.edges().iter().enumerate() {
            for s in ell_subsets(e, ell) {
                ell_index.entry(s).or_default().push(i as u32);
            }
        }
        let mut edges_by_vertex = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            for v in e.iter() {
                edges_by_vertex[v as usize].push(i as u32);
            }
        }
        BlockSolver {
            h,
            ell,
            q: h.n() / (h.k() - ell),
            full: VertexSet::from_members(0..h.n() as u32),
            ell_index,
            edges_by_vertex,
            budget,
            nodes: 0,
            aborted: false,
            memo: HashSet::new(),
            anchor: VertexSet::empty(),
            trail: Vec::new(),
        }
    }

    fn run(mut self) -> HamiltonOutcome {
        // Anchor on a window through vertex 0: every spanning cycle has
        // one. A window splits as A0 | middle | L1 (first l / last l of
        // its k slots); reversal swaps A0 and L1, so demanding A0 < L1
        // fixes the orientation without losing any cycle.
        let anchors: Vec<u32> = self.edges_by_vertex[0].clone();
        for ei in anchors {
            let e0 = self.h.edges()[ei as usize].clone();
            for a0 in ell_subsets(&e0, self.ell) {
                let rest = e0.difference(&a0);
                for l1 in ell_subsets(&rest, self.ell) {
                    if a0 >= l1 {
                        continue;
                    }
                    self.anchor = a0.clone();
                    self.memo.clear();
                    self.trail.clear();
                    if let Some(cyc) = self.dfs(&e0, &l1, &e0, &l1) {
                        return HamiltonOutcome::Found(cyc);
                    }
                    if self.aborted {
                        return HamiltonOutcome::BudgetExhausted { nodes: self.nodes };
                    }
                }
            }
        }
        HamiltonOutcome::NoneProven { nodes: self.nodes }
    }

    /// used: all placed vertices; overlap: the l-set the next window must
    /// contain; e0/l1 ride along for reconstruction.
    fn dfs(
        &mut self,
        used: &VertexSet,
        overlap: &VertexSet,
        e0: &VertexSet,
        l1: &VertexSet,
    ) -> Option<EllCycle> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return None;
        }
        let k = self.h.k();
        let placed = 1 + self.trail.len();
        let remaining = self.q - placed;

        if remaining == 1 {
            let r = self.full.difference(used);
            debug_assert_eq!(r.len(), k - 2 * self.ell);
            let w = overlap.union(&r).union(&self.anchor);
            debug_assert_eq!(w.len(), k);
            if self.h.contains_edge(&w) {
                return Some(self.reconstruct(e0, l1, &r));
            }
            return None;
        }

        let key = (used.clone(), overlap.clone());
        if self.memo.contains(&key) {
            return None;
        }

        // Every unplaced vertex still needs a window, and all future
        // windows live inside unused + overlap + anchor. A vertex with
        // no edge in that pool kills the branch.
        let unused = self.full.difference(used);
        let avail = unused.union(overlap).union(&self.anchor);
        for v in unused.iter() {
            let ok = self.edges_by_vertex[v as usize]
                .iter()
                .any(|&ei| self.h.edges()[ei as usize].is_subset_of(&avail));
            if !ok {
                self.memo.insert(key);
                return None;
            }
        }

        // Candidates: edges through the overlap whose other k-l vertices
        // are fresh, each with a choice of next overlap inside the fresh
        // part. Fewest onward extensions first.
        let mut cands: Vec<(usize, VertexSet, VertexSet)> = Vec::new();
        if let Some(edge_ids) = self.ell_index.get(overlap) {
            for &ei in edge_ids {
                let e = &self.h.edges()[ei as usize];
                let fresh = e.difference(overlap);
                if !fresh.is_disjoint(used) {
                    continue;
                }
                for lnext in ell_subsets(&fresh, self.ell) {
                    let onward = self
                        .ell_index
                        .get(&lnext)
                        .map(|ids| {
                            ids.iter()
                                .filter(|&&oi| {
                                    let oe = &self.h.edges()[oi as usize];
                                    oe.difference(&lnext).is_disjoint(used)
                                        && oe.difference(&lnext).is_disjoint(&fresh)
                                })
                                .count()
                        })
                        .unwrap_or(0);
                    cands.push((onward, fresh.clone(), lnext));
                }
            }
        }
        cands.sort_unstable_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.cmp(&b.2)));

        for (_, fresh, lnext) in cands {
            let used2 = used.union(&fresh);
            self.trail.push((fresh, lnext.clone()));
            let hit = self.dfs(&used2, &lnext, e0, l1);
            if hit.is_some() || self.aborted {
                return hit;
            }
            self.trail.pop();
        }
        self.memo.insert(key);
        None
    }

    fn reconstruct(&self, e0: &VertexSet, l1: &VertexSet, rest: &VertexSet) -> EllCycle {
        let k = self.h.k();
        let stride = k - self.ell;
        let mut order: Vec<u32> = Vec::with_capacity(self.h.n());
        // Block 0: anchor tuple, then the window's private middle.
        order.extend(self.anchor.members());
        order.extend(e0.difference(&self.anchor).difference(l1).members());
        // Block j >= 1 starts with the overlap L_j it was entered on and
        // ends with the fresh vertices not promised to the next window.
        let mut l_cur = l1.clone();
        for (fresh, lnext) in &self.trail {
            order.extend(l_cur.members());
            order.extend(fresh.difference(lnext).members());
            l_cur = lnext.clone();
        }
        order.extend(l_cur.members());
        order.extend(rest.members());
        debug_assert_eq!(order.len(), self.q * stride);
        let cyc = EllCycle::new(k, self.ell, order).expect("reconstructed cycle shape");
        debug_assert!(cyc.validate_in(self.h).valid, "reconstructed cycle must validate");
        cyc
    }
}

// ---------------------------------------------------------------------
// l > k/2: ordered-state solver

struct OrderedSolver<'a> {
    h: &'a Hypergraph,
    ell: usize,
    stride: usize,
    budget: u64,
    nodes: u64,
    aborted: bool,
    /// (used, visible suffix, prefix) states that cannot complete
    memo: HashSet<(VertexSet, Vec<u32>, Vec<u32>)>,
    suffix_len: usize,
}

impl<'a> OrderedSolver<'a> {
    fn new(h: &'a Hypergraph, ell: usize, budget: u64) -> Self {
        let stride = h.k() - ell;
        OrderedSolver {
            h,
            ell,
            stride,
            budget,
            nodes: 0,
            aborted: false,
            memo: HashSet::new(),
            // Longest placed stretch an unfinished window can still see:
            // the largest multiple of the stride below k.
            suffix_len: (h.k() - 1) / stride * stride,
        }
    }

    fn run(mut self) -> HamiltonOutcome {
        let n = self.h.n();
        let k = self.h.k();
        if n < k {
            return HamiltonOutcome::NoneProven { nodes: self.nodes };
        }
        // First block holds vertex 0 in some rotation of any cycle.
        let verts: Vec<u32> = (0..n as u32).collect();
        let blocks = ordered_tuples(&verts, self.stride);
        for b in blocks {
            if !b.contains(&0) {
                continue;
            }
            let used = VertexSet::from_members(b.iter().copied());
            let mut seq = b.clone();
            if let Some(c) = self.dfs(&mut seq, &used) {
                return HamiltonOutcome::Found(c);
            }
            if self.aborted {
                return HamiltonOutcome::BudgetExhausted { nodes: self.nodes };
            }
        }
        HamiltonOutcome::NoneProven { nodes: self.nodes }
    }

    fn window_ok(&self, seq: &[u32], start: usize) -> bool {
        let n = self.h.n();
        let w: VertexSet = (0..self.h.k()).map(|t| seq[(start + t) % n]).collect();
        w.len() == self.h.k() && self.h.contains_edge(&w)
    }

    fn dfs(&mut self, seq: &mut Vec<u32>, used: &VertexSet) -> Option<EllCycle> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return None;
        }
        let n = self.h.n();
        let k = self.h.k();
        let len = seq.len();

        // Check every window that just became fully placed.
        if len >= k {
            let lo = len - self.stride;
            for start in (0..=(len - k)).step_by(self.stride) {
                if start + k > lo {
                    let w: VertexSet = seq[start..start + k].iter().copied().collect();
                    if !self.h.contains_edge(&w) {
                        return None;
                    }
                }
            }
        }

        if len == n {
            // wrap-around windows
            for start in (0..n).step_by(self.stride) {
                if start + k > n && !self.window_ok(seq, start) {
                    return None;
                }
            }
            let cyc = EllCycle::new(k, self.ell, seq.clone()).expect("shape");
            debug_assert!(cyc.validate_in(self.h).valid);
            return Some(cyc);
        }

        let suffix: Vec<u32> = seq[len.saturating_sub(self.suffix_len)..].to_vec();
        let prefix: Vec<u32> = seq[..self.ell.min(len)].to_vec();
        let key = (used.clone(), suffix, prefix);
        if self.memo.contains(&key) {
            return None;
        }

        let unused: Vec<u32> = (0..n as u32).filter(|&v| !used.contains(v)).collect();
        for tup in ordered_tuples(&unused, self.stride) {
            let mut used2 = used.clone();
            for &v in &tup {
                used2.insert(v);
            }
            seq.extend_from_slice(&tup);
            let hit = self.dfs(seq, &used2);
            if hit.is_some() || self.aborted {
                return hit;
            }
            seq.truncate(len);
        }
        self.memo.insert(key);
        None
    }
}

/// All ordered tuples of `size` distinct entries drawn from `pool`
/// (lexicographic in pool order).
fn ordered_tuples(pool: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    let mut taken = vec![false; pool.len()];
    fn rec(pool: &[u32], size: usize, cur: &mut Vec<u32>, taken: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            if !taken[i] {
                taken[i] = true;
                cur.push(pool[i]);
                rec(pool, size, cur, taken, out);
                cur.pop();
                taken[i] = false;
            }
        }
    }
    rec(pool, size, &mut cur, &mut taken, &mut out);
    out
}
